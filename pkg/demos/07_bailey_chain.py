"""
Bailey pairs and the proof chains
=================================

A Bailey pair is a pair of sequences (alpha_n, beta_n) tied by a triangular
relation.  Chains of transformations turn a seed pair into the identity
between the multisum and the product side, one verified step at a time.
"""

from ggmark import (
    EVEN_MODULUS,
    ODD_MODULUS,
    bailey_lift,
    gap0_seed,
    run_chain,
    slater_E4,
    template_shift,
    verify_pair,
)

# the classical seed and its relation check
e4 = slater_E4()
print("E(4): alpha_1 =", e4.alpha(1, 12), " beta_1 =", e4.beta(1, 12))
print("E(4) verifies:", verify_pair(e4, 6, 40))

# transformations compose; every output is again a verified pair
lifted = bailey_lift(e4)
print("lift(E(4)) verifies:", verify_pair(lifted, 6, 40),
      " alpha template:", lifted.alpha_form)
print("template shift applies:", template_shift(lifted).alpha_form)

# the seed one template-shift below E(4); chains start here so the
# boundary case k - i = 1 needs no special pleading
print("gap-0 seed verifies:", verify_pair(gap0_seed(), 6, 40))

# full chains: every intermediate pair verified, then the assembled series
# is compared against the triple product and the congruence-side product
for variant in (ODD_MODULUS, EVEN_MODULUS):
    report = run_chain(3, 2, variant, 40, n_max=6)
    print(f"\nchain k=3 i=2 {variant}:")
    for step in report.steps:
        print(f"  {step.step:22s} {'ok' if step.verified else 'FAIL'}")
    print("  theta == triple product   :", report.theta_equals_triple_product)
    print("  multisum == theta assembly:", report.multisum_equals_theta_assembly)
    print("  multisum == product side  :", report.multisum_equals_product)
