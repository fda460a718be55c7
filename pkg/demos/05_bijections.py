"""
Structural bijections
=====================

Cascades of moves strip every overline (or every odd part) out of an
overpartition, recording one negative marker part per cascade so that
weights balance exactly.
"""

from ggmark import (
    Overpartition,
    double_parts,
    gg_mark,
    gordon_mark,
    halve_parts,
    odd_merge,
    odd_split,
    overline_merge,
    overline_split,
    shift_overline,
    switch_smallest,
)

lam = Overpartition.parse("1,3,~5,~8")
tau, mu = overline_split(lam)
print("input            :", lam.serialize(), " weight", lam.weight)
print("markers          :", tau.serialize(), " weight", tau.weight)
print("overline-free    :", mu.serialize(), " weight", mu.weight)
print("weights balance  :", tau.weight + mu.weight == lam.weight)
print("profile preserved:", gordon_mark(lam).row_counts == gordon_mark(mu).row_counts)
print("inverse restores :", overline_merge(tau, mu) == lam)

nu = Overpartition.parse("1,~2,3,6")
xi, omega = odd_split(nu)
print("\ninput            :", nu.serialize(), " weight", nu.weight)
print("odd markers      :", xi.serialize(), " weight", xi.weight)
print("even-part residue:", omega.serialize(), " weight", omega.weight)
print("inverse restores :", odd_merge(xi, omega) == nu)

# doubling each part turns the plain marking into the even/odd one
delta = Overpartition.parse("~1,2,2")
omega = double_parts(delta)
print("\ndoubling", delta.serialize(), "->", omega.serialize())
print("marks coincide:", gordon_mark(delta).marks() == gg_mark(omega).marks())
print("halving back  :", halve_parts(omega) == delta)

# the two small auxiliary maps between smallest-part families
print("\nswitch:", switch_smallest(Overpartition.parse("~1,3"), "to_plain").serialize())
print("shift :", shift_overline(Overpartition.parse("2,3"), "down").serialize())
