"""
Counting families: difference conditions vs congruence conditions
=================================================================

The headline equalities: for each k > i >= 1 the number of overpartitions
of n satisfying the difference conditions equals the number whose
non-overlined parts avoid certain residues.
"""

from ggmark import (
    ClassId,
    count_class,
    count_congruence,
    enumerate_overpartitions,
    identity_lhs_multisum,
    identity_rhs,
    is_member,
    profile_class_closed_form,
    profile_class_gf,
    profile_of,
)

cell = ClassId("O", 3, 2)
print(f"family O, k={cell.k}, i={cell.i} (non-overlined parts avoid 0, +-3 mod 8)")
print(" n  class  congruence")
for n in range(0, 13):
    print(f"{n:3d} {count_class(cell, n):6d} {count_congruence(cell, n):11d}")

# the members of weight 4 and their profiles
print("\nmembers of weight 4 with their marking profiles:")
for lam in enumerate_overpartitions(4):
    if is_member(lam, cell):
        print("  ", lam.serialize().ljust(10), profile_of(lam, cell))

# each profile class has a closed-form generating function
profile = (2, 1)
enum = profile_class_gf("O", profile, 2, 13)
closed = profile_class_closed_form("O", profile, 2, 13)
print(f"\nprofile {profile} class: enumeration == closed form:", enum.matches(closed, 13))

# summing the closed forms over all profiles gives the full multisum,
# which matches the congruence-side product
lhs = identity_lhs_multisum("O=P", 3, 2, 30)
rhs = identity_rhs("O=P", 3, 2, 30)
print("multisum == product to q^30:", lhs.matches(rhs, 30))
