"""
Exact truncated q-series
========================

Laurent series in q with exact rational coefficients, plus an optional
polynomial marker x that tracks part counts.  Everything is computed by
explicit truncated products; there is no floating point.
"""

from fractions import Fraction

from ggmark import Series, XPoly, poch, triple_product

# basic arithmetic with truncation bookkeeping
a = Series(0, (1, 1), 8)      # 1 + q, known below q^8
b = Series(0, (1, -1), 8)     # 1 - q
print("(1+q)(1-q) =", a * b)

# geometric inversion
print("1/(1-q)    =", b.inverse(8))

# Laurent support: a unit times a power of q inverts across zero
s = Series(1, (1, -1))        # q(1 - q)
print("1/(q(1-q)) =", s.inverse(6))

# Pochhammer products: (q; q)_2 exactly, (q; q)_inf truncated
print("(q;q)_2    =", poch(1, 1, 1, 2))
print("(q;q)_inf  =", poch(1, 1, 1, None, 14), " (pentagonal pattern)")

# negative shifts are fine for finite products
print("(-q^-1;q^2)_1 =", poch(-1, -1, 2, 1))

# the x marker rides along in the coefficients
m = Series.monomial(2, XPoly.monomial(1)) * Series(0, (1, 1))
print("x q^2 (1+q)   =", m)

# the theta-series/product identity, here with half-integral exponents
sum_side, product_side = triple_product(-1, Fraction(3, 2), Fraction(5, 2), 40)
print("\ntheta sum side   :", sum_side)
print("theta product side agrees:", sum_side.matches(product_side, 40))
