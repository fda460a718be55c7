from fractions import Fraction

import pytest
from hypothesis import given, strategies as st

from ggmark.errors import DivergentProduct, FractionalExponent, NotInvertible
from ggmark.series import PochSpec, Series, XPoly, poch, pochhammer, triple_product


def geometric(order):
    return Series(0, [1] * order, order)


class TestXPoly:
    def test_basic_arithmetic(self):
        x = XPoly.monomial(1)
        assert x + x * x == XPoly((0, 1, 1))
        assert (x + 1) * (x - 1) == XPoly((-1, 0, 1))
        assert x - x == XPoly()
        assert not (x - x)
        assert x * 0 == 0

    def test_scalar_comparison(self):
        assert XPoly((3,)) == 3
        assert XPoly(()) == 0
        assert XPoly((0, 1)) != 1

    def test_at_one(self):
        assert XPoly((1, 2, 3)).at_one() == 6

    def test_fraction_coeffs(self):
        half = Fraction(1, 2)
        p = XPoly((half,)) + XPoly((half,))
        assert p == 1


class TestSeriesArithmetic:
    def test_mul_binomials(self):
        one_plus = Series(0, (1, 1), 5)
        one_minus = Series(0, (1, -1), 5)
        assert (one_plus * one_minus).matches(Series(0, (1, 0, -1)), 5)

    def test_shift_negative(self):
        s = Series.one().shift(-3)
        assert s.min_exp == -3 and s.coefficient(-3) == 1

    def test_xpoly_coefficients_accumulate(self):
        s = Series.monomial(0, XPoly.monomial(1)) + Series.monomial(0, XPoly.monomial(2))
        assert s.coefficient(0) == XPoly((0, 1, 1))

    def test_order_tracking_mul(self):
        a = Series(0, (1, 1), 4)       # known below q^4
        b = Series(2, (1,), None)      # exact q^2
        assert (a * b).order == 6
        assert (b * a).order == 6

    def test_truncation_drops_stored(self):
        s = Series(0, (1, 2, 3), None).truncate(2)
        assert s.coeffs == (1, 2) and s.order == 2

    def test_add_respects_min_order(self):
        a = Series(0, (1,), 3)
        b = Series(0, (0, 0, 0, 5), None)  # 5 q^3, exact
        assert (a + b).matches(Series.one(), 3)

    def test_stretch(self):
        s = Series(1, (1, 2), 3).stretch(2)
        assert s.coefficient(2) == 1 and s.coefficient(4) == 2 and s.order == 6

    def test_equality_is_mathematical(self):
        assert Series(0, (1, 0, 0), 7) == Series(0, (1,), 7)


class TestInverse:
    def test_geometric(self):
        inv = Series(0, (1, -1)).inverse(6)
        assert inv.matches(geometric(6), 6)

    def test_alternating(self):
        inv = Series(0, (1, 0, 1)).inverse(7)
        assert inv.matches(Series(0, (1, 0, -1, 0, 1, 0, -1), 7), 7)

    def test_laurent_unit(self):
        s = Series(1, (1, -1))  # q(1-q)
        inv = s.inverse(5)
        assert inv.min_exp == -1
        assert (s * inv).matches(Series.one(), 5)

    def test_two_sided_inverse_property(self):
        for coeffs in ((1, 2, 3), (-1, 0, 5), (2, 1)):
            s = Series(0, coeffs)
            inv = s.inverse(9)
            assert (s * inv).matches(Series.one(), 9)
            assert (inv * s).matches(Series.one(), 9)

    def test_not_invertible(self):
        with pytest.raises(NotInvertible):
            Series.zero(5).inverse(5)
        with pytest.raises(NotInvertible):
            Series(0, (XPoly((0, 1)),)).inverse(4)
        with pytest.raises(NotInvertible):
            Series(0, (1, 1)).inverse()  # exact series, no order given


class TestPochhammer:
    def test_finite_product(self):
        s = poch(1, 1, 1, 2)  # (q; q)_2 = (1-q)(1-q^2)
        assert s.order is None
        assert s == Series(0, (1, -1, -1, 1))

    def test_negative_exponents(self):
        s = poch(-1, -1, 2, 1)  # single factor 1 + q^{-1}
        assert s.min_exp == -1 and s.coefficient(-1) == 1 and s.coefficient(0) == 1

    def test_euler_expansion(self):
        # oracle: exponent j(3j +- 1)/2 carries (-1)^j
        expected = {0: 1}
        for j in range(1, 4):
            for e in (j * (3 * j - 1) // 2, j * (3 * j + 1) // 2):
                if e < 6:
                    expected[e] = -1 if j % 2 else 1
        s = poch(1, 1, 1, None, 6)
        assert all(s.coefficient(e) == expected.get(e, 0) for e in range(6))

    def test_infinite_requires_positive_shift(self):
        with pytest.raises(DivergentProduct):
            PochSpec(1, 0, 1, None)
        with pytest.raises(DivergentProduct):
            pochhammer(PochSpec(1, 1, 1, None))  # no order

    def test_zero_factor(self):
        assert poch(1, 0, 1, 3).matches(Series.zero(), None) is True

    def test_validation(self):
        with pytest.raises(ValueError):
            PochSpec(2, 1, 1, 1)
        with pytest.raises(ValueError):
            PochSpec(1, 1, 0, 1)
        with pytest.raises(ValueError):
            PochSpec(1, 1, 1, -2)

    def test_truncated_matches_exact(self):
        full = poch(-1, 1 - 6, 2, 6)
        cut = poch(-1, 1 - 6, 2, 6, 0)
        assert full.matches(cut, 0)


class TestJsonFormat:
    def test_round_trip_scalar(self):
        s = Series(-1, (1, Fraction(1, 2), 0, 3), 9)
        again = Series.from_json_dict(s.to_json_dict())
        assert again.matches(s, 9) and again.order == 9 and again.min_exp == -1

    def test_round_trip_xpoly(self):
        s = Series(0, (XPoly((1, 2)), 5), 4)
        d = s.to_json_dict()
        assert d["coeffs"][0] == [[1, 1], [2, 1]]
        assert Series.from_json_dict(d).matches(s, 4)

    def test_exact_series_emits_support_bound(self):
        assert Series(0, (1, 1)).to_json_dict()["order"] == 2


class TestTripleProduct:
    def test_trivial_order_one(self):
        s, p = triple_product(-1, 1, 2, 1)
        assert s.matches(Series.one(), 1) and p.matches(Series.one(), 1)

    def test_sum_equals_product_integral(self):
        s, p = triple_product(-1, 3, 6, 70)
        assert s.matches(p, 70)

    def test_sum_equals_product_half_integral(self):
        s, p = triple_product(-1, Fraction(1, 2), Fraction(3, 2), 70)
        assert s.matches(p, 70)

    def test_fractional_exponent_rejected(self):
        with pytest.raises(FractionalExponent):
            triple_product(-1, Fraction(1, 2), 2, 10)

    def test_divergent_rejected(self):
        with pytest.raises(DivergentProduct):
            triple_product(-1, 3, 3, 10)


small_series = st.builds(
    lambda mn, cs: Series(mn, cs, None),
    st.integers(min_value=-3, max_value=3),
    st.lists(st.integers(min_value=-4, max_value=4), max_size=6),
)


@given(small_series, small_series, small_series)
def test_ring_axioms(a, b, c):
    assert ((a + b) + c).matches(a + (b + c))
    assert (a * b).matches(b * a)
    assert ((a + b) * c).matches(a * c + b * c)


@given(small_series)
def test_shift_then_unshift(s):
    assert s.shift(4).shift(-4).matches(s)


@given(st.lists(st.integers(min_value=-5, max_value=5), min_size=0, max_size=5))
def test_inverse_round_trip(tail):
    s = Series(0, [1] + tail)
    inv = s.inverse(8)
    assert (s * inv).matches(Series.one(), 8)
