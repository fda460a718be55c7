"""
Overpartitions: representation, statistics, enumeration
========================================================

An overpartition is a partition in which the first occurrence of a part
size may carry an overline.  The text format marks overlines with '~'.
"""

from ggmark import Overpartition, enumerate_overpartitions

# parts are kept in the canonical ascending order: ~1 < 1 < ~2 < 2 < ...
lam = Overpartition.parse("3,~2,1,2")
print("canonical form:", lam.serialize())
print("weight:", lam.weight, " length:", lam.length)

# at most one overlined copy per size; the parser enforces it
try:
    Overpartition.parse("~2,~2")
except Exception as exc:
    print("duplicate overline ->", type(exc).__name__)

# multiplicities and the cumulative overline counter V
st = lam.stats()
print("f(2) =", st.f(2), " fbar(2) =", st.fbar(2), " V(3) =", st.V(3))

# enumeration is exhaustive and lexicographic, so runs are reproducible
print("\noverpartitions of 3:")
for item in enumerate_overpartitions(3):
    print("  ", item.serialize() or "(empty)")

counts = [sum(1 for _ in enumerate_overpartitions(n)) for n in range(9)]
print("\ncounts for n = 0..8:", counts)
