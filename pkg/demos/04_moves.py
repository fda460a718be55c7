"""
Dilations and reductions
========================

Four local moves change the weight by +-1 or +-2 while preserving the row
profile of the marking.  Each pair is mutually inverse at the same
position, which is what powers the bijections in the next demo.
"""

from ggmark import Overpartition, apply_move, gg_mark, gordon_mark

# first kind: acts through the plain marking, weight +-1
lam = Overpartition.parse("1,2,2,~4,5,5,~6,6,7,~8,8,8,~10,11,12,12,13,~15")
print("before:", lam.serialize(), " weight", lam.weight)
receipt = apply_move("firstReduction", lam, 2)
print("first reduction at p=2 ->", receipt.after.serialize(), " weight", receipt.after.weight)
back = apply_move("firstDilation", receipt.after, 2)
print("dilating back restores the original:", back.after == lam)
print("profile preserved:", gordon_mark(lam).row_counts == gordon_mark(receipt.after).row_counts)

# second kind: acts through the cluster decomposition, weight +-2 away
# from the top cluster and +-1 at it
nu = Overpartition.parse("1,1,~2,~3,~4,6,7,8,8,~10,10,~11,~12,14")
print("\nbefore:", nu.serialize(), " weight", nu.weight)
receipt = apply_move("secondDilation", nu, 5)
print("second dilation at p=5 ->", receipt.after.serialize(), " weight", receipt.after.weight)
print("profile preserved:", gg_mark(nu).row_counts == gg_mark(receipt.after).row_counts)
print("receipt JSON:", receipt.to_json())

# the top-cluster moves flip a single parity
for text, p in (("~1", 1), ("1", 1)):
    r = apply_move("secondDilation", Overpartition.parse(text), p)
    print(f"secondDilation({text}, p=1) -> {r.after.serialize()}  (delta {r.delta_weight})")
