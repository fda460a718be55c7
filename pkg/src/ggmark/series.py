"""Exact truncated Laurent series in q with coefficients in Q[x].

Coefficients are Python ints, fractions.Fraction, or XPoly (a polynomial in
the part-counting marker x).  There is no floating point anywhere.

A Series stores a dense coefficient block starting at `min_exp` together
with an exclusive truncation bound `order`: coefficients of q^e with
e >= order are unknown.  `order is None` means the series is exact (known
to be zero beyond the stored block), which is what finite products return.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Optional, Union

from .errors import DivergentProduct, FractionalExponent, NotInvertible

Scalar = Union[int, Fraction]


def _as_exact(value) -> Scalar:
    if isinstance(value, Fraction) and value.denominator == 1:
        return int(value)
    return value


class XPoly:
    """Polynomial in x over exact rationals, used to track part counts."""

    __slots__ = ("coeffs",)

    def __init__(self, coeffs: Iterable[Scalar] = ()):
        c = list(coeffs)
        while c and not c[-1]:
            c.pop()
        self.coeffs = tuple(c)

    @classmethod
    def monomial(cls, degree: int, coeff: Scalar = 1) -> "XPoly":
        return cls((0,) * degree + (coeff,))

    def coeff(self, d: int) -> Scalar:
        return self.coeffs[d] if 0 <= d < len(self.coeffs) else 0

    @property
    def degree(self) -> int:
        return len(self.coeffs) - 1

    def at_one(self) -> Scalar:
        return sum(self.coeffs, 0)

    def __bool__(self) -> bool:
        return bool(self.coeffs)

    def __eq__(self, other) -> bool:
        if isinstance(other, XPoly):
            return self.coeffs == other.coeffs
        if isinstance(other, (int, Fraction)):
            if not other:
                return not self.coeffs
            return len(self.coeffs) == 1 and self.coeffs[0] == other
        return NotImplemented

    def __hash__(self):
        if len(self.coeffs) <= 1:
            return hash(self.coeffs[0] if self.coeffs else 0)
        return hash(self.coeffs)

    def __add__(self, other):
        if isinstance(other, (int, Fraction)):
            other = XPoly((other,))
        if not isinstance(other, XPoly):
            return NotImplemented
        n = max(len(self.coeffs), len(other.coeffs))
        return XPoly(
            (self.coeff(d) + other.coeff(d)) for d in range(n)
        )

    __radd__ = __add__

    def __neg__(self):
        return XPoly(tuple(-c for c in self.coeffs))

    def __sub__(self, other):
        return self + (-other if isinstance(other, XPoly) else -XPoly((other,)))

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)):
            if not other:
                return XPoly()
            return XPoly(tuple(c * other for c in self.coeffs))
        if not isinstance(other, XPoly):
            return NotImplemented
        if not self.coeffs or not other.coeffs:
            return XPoly()
        out = [0] * (len(self.coeffs) + len(other.coeffs) - 1)
        for i, a in enumerate(self.coeffs):
            if not a:
                continue
            for j, b in enumerate(other.coeffs):
                if b:
                    out[i + j] += a * b
        return XPoly(out)

    __rmul__ = __mul__

    def __repr__(self):
        if not self.coeffs:
            return "0"
        terms = []
        for d, c in enumerate(self.coeffs):
            if not c:
                continue
            if d == 0:
                terms.append(str(c))
            elif c == 1:
                terms.append("x" if d == 1 else f"x^{d}")
            else:
                terms.append(f"{c}*x" if d == 1 else f"{c}*x^{d}")
        return " + ".join(terms)


Coeff = Union[int, Fraction, XPoly]


def _min_order(*orders: Optional[int]) -> Optional[int]:
    finite = [o for o in orders if o is not None]
    return min(finite) if finite else None


class Series:
    """Truncated Laurent series in q; see module docstring."""

    __slots__ = ("min_exp", "coeffs", "order")

    def __init__(self, min_exp: int = 0, coeffs: Iterable[Coeff] = (), order: Optional[int] = None):
        c = list(coeffs)
        if order is not None:
            keep = order - min_exp
            if keep < len(c):
                c = c[: max(keep, 0)]
        while c and not c[0]:
            c.pop(0)
            min_exp += 1
        while c and not c[-1]:
            c.pop()
        if not c:
            min_exp = 0
        self.min_exp = min_exp
        self.coeffs = tuple(c)
        self.order = order

    # -- constructors ----------------------------------------------------

    @classmethod
    def zero(cls, order: Optional[int] = None) -> "Series":
        return cls(0, (), order)

    @classmethod
    def one(cls, order: Optional[int] = None) -> "Series":
        return cls(0, (1,), order)

    @classmethod
    def monomial(cls, exp: int, coeff: Coeff = 1, order: Optional[int] = None) -> "Series":
        return cls(exp, (coeff,), order)

    # -- basic queries ----------------------------------------------------

    @property
    def end(self) -> int:
        """Exclusive upper bound of the stored block."""
        return self.min_exp + len(self.coeffs)

    def coefficient(self, e: int) -> Coeff:
        """Stored coefficient of q^e (0 outside the block; caller owns order checks)."""
        i = e - self.min_exp
        if 0 <= i < len(self.coeffs):
            return self.coeffs[i]
        return 0

    def items(self):
        for i, c in enumerate(self.coeffs):
            if c:
                yield self.min_exp + i, c

    def is_zero(self, up_to: Optional[int] = None) -> bool:
        if up_to is None:
            return not self.coeffs
        return all(e >= up_to for e, _ in self.items())

    def matches(self, other: "Series", up_to: Optional[int] = None) -> bool:
        """Coefficientwise equality over the commonly known exponent range."""
        bound = _min_order(self.order, other.order, up_to)
        lo = min(self.min_exp, other.min_exp) if (self.coeffs or other.coeffs) else 0
        hi = max(self.end, other.end)
        if bound is not None:
            hi = min(hi, bound)
        return all(self.coefficient(e) == other.coefficient(e) for e in range(lo, hi))

    def __eq__(self, other):
        if isinstance(other, Series):
            return self.matches(other)
        return NotImplemented

    __hash__ = None

    # -- arithmetic -------------------------------------------------------

    def __add__(self, other: "Series") -> "Series":
        if not isinstance(other, Series):
            return NotImplemented
        order = _min_order(self.order, other.order)
        lo = min(self.min_exp, other.min_exp)
        hi = max(self.end, other.end)
        if order is not None:
            hi = min(hi, order)
        coeffs = [self.coefficient(e) + other.coefficient(e) for e in range(lo, hi)]
        return Series(lo, coeffs, order)

    def __neg__(self) -> "Series":
        return Series(self.min_exp, tuple(-c for c in self.coeffs), self.order)

    def __sub__(self, other: "Series") -> "Series":
        return self + (-other)

    def __mul__(self, other: "Series") -> "Series":
        if not isinstance(other, Series):
            return NotImplemented
        orders = []
        if self.order is not None:
            orders.append(self.order + other.min_exp)
        if other.order is not None:
            orders.append(other.order + self.min_exp)
        order = min(orders) if orders else None
        if not self.coeffs or not other.coeffs:
            return Series.zero(order)
        lo = self.min_exp + other.min_exp
        hi = self.end + other.end - 1
        if order is not None:
            hi = min(hi, order)
        if hi <= lo:
            return Series.zero(order)
        out = [0] * (hi - lo)
        for i, a in enumerate(self.coeffs):
            if not a:
                continue
            base = self.min_exp + i + other.min_exp
            if base >= hi:
                break
            jmax = min(len(other.coeffs), hi - base)
            for j in range(jmax):
                b = other.coeffs[j]
                if b:
                    out[base + j - lo] += a * b
        return Series(lo, out, order)

    def scale(self, c: Coeff) -> "Series":
        if not c:
            return Series.zero(self.order)
        return Series(self.min_exp, tuple(c * a for a in self.coeffs), self.order)

    def shift(self, k: int) -> "Series":
        """Multiply by q^k."""
        return Series(
            self.min_exp + k, self.coeffs, None if self.order is None else self.order + k
        )

    def stretch(self, m: int) -> "Series":
        """Substitute q -> q^m (m >= 1)."""
        if m == 1:
            return self
        if not self.coeffs:
            return Series.zero(None if self.order is None else m * self.order)
        out = [0] * ((len(self.coeffs) - 1) * m + 1)
        for i, c in enumerate(self.coeffs):
            out[i * m] = c
        return Series(self.min_exp * m, out, None if self.order is None else m * self.order)

    def truncate(self, order: int) -> "Series":
        return Series(self.min_exp, self.coeffs, _min_order(self.order, order))

    def inverse(self, order: Optional[int] = None) -> "Series":
        """Two-sided inverse up to `order`; leading coefficient must be a unit."""
        if not self.coeffs:
            raise NotInvertible("zero series")
        lead = self.coeffs[0]
        if isinstance(lead, XPoly):
            if lead.degree > 0:
                raise NotInvertible("leading coefficient has positive x-degree")
            lead = lead.coeff(0)
        known = None if self.order is None else self.order - 2 * self.min_exp
        if order is None:
            order = known
        if order is None:
            raise NotInvertible("an exact series needs an explicit inversion order")
        if known is not None:
            order = min(order, known)
        m = self.min_exp
        span = order + m  # coefficients of the unit-part inverse
        if span <= 0:
            return Series.zero(order)
        inv_lead = 1 if lead == 1 else (-1 if lead == -1 else Fraction(1, 1) / Fraction(lead))
        u = self.coeffs
        v = [0] * span
        v[0] = _as_exact(inv_lead)
        for t in range(1, span):
            acc = 0
            for j in range(1, min(t, len(u) - 1) + 1):
                uj = u[j]
                if uj and v[t - j]:
                    acc += uj * v[t - j]
            if acc:
                v[t] = _as_exact(-inv_lead * acc) if not isinstance(acc, XPoly) else -inv_lead * acc
        return Series(-m, v, order)

    # -- serialization ----------------------------------------------------

    def to_json_dict(self) -> dict:
        def enc(c: Coeff) -> list:
            if isinstance(c, XPoly):
                cs = c.coeffs or (0,)
            else:
                cs = (c,)
            out = []
            for v in cs:
                fv = Fraction(v)
                out.append([fv.numerator, fv.denominator])
            return out

        order = self.order if self.order is not None else self.end
        return {"minExp": self.min_exp, "order": order, "coeffs": [enc(c) for c in self.coeffs]}

    @classmethod
    def from_json_dict(cls, d: dict) -> "Series":
        def dec(pairs: list) -> Coeff:
            vals = [_as_exact(Fraction(n, den)) for n, den in pairs]
            if len(vals) == 1:
                return vals[0]
            return XPoly(vals)

        return cls(d["minExp"], [dec(p) for p in d["coeffs"]], d["order"])

    def __repr__(self):
        terms = []
        for e, c in self.items():
            if len(terms) == 8:
                terms.append("...")
                break
            cs = f"({c})" if isinstance(c, XPoly) and len([v for v in c.coeffs if v]) > 1 else str(c)
            if e == 0:
                terms.append(cs)
            elif cs == "1":
                terms.append(f"q^{e}" if e != 1 else "q")
            else:
                terms.append(f"{cs}*q^{e}" if e != 1 else f"{cs}*q")
        body = " + ".join(terms) if terms else "0"
        tail = "" if self.order is None else f" + O(q^{self.order})"
        return f"<{body}{tail}>"


# -- Pochhammer products -----------------------------------------------


@dataclass(frozen=True)
class PochSpec:
    """Denotes the product (sign * q^shift ; q^step)_count, count None = infinite."""

    sign: int
    shift: int
    step: int
    count: Optional[int]

    def __post_init__(self):
        if self.sign not in (1, -1):
            raise ValueError("sign must be +1 or -1")
        if self.step < 1:
            raise ValueError("step must be a positive integer")
        if self.count is not None and self.count < 0:
            raise ValueError("count must be nonnegative (or None for infinite)")
        if self.count is None and self.shift <= 0:
            raise DivergentProduct("infinite product needs shift > 0")


def pochhammer(spec: PochSpec, order: Optional[int] = None) -> "Series":
    """Truncated product for `spec`; finite counts give exact Laurent polynomials."""
    if spec.count is None:
        if order is None:
            raise DivergentProduct("infinite product needs a truncation order")
        exps = []
        e = spec.shift
        while e < order:
            exps.append(e)
            e += spec.step
    else:
        exps = [spec.shift + j * spec.step for j in range(spec.count)]

    # A factor (1 - s*q^e) with e < 0 is rewritten as (-s)*q^e*(1 - s*q^(-e))
    # so that the running product only ever grows upward and can be truncated.
    sign_acc = 1
    total_shift = 0
    pos_exps = []
    for e in exps:
        if e < 0:
            sign_acc *= -spec.sign
            total_shift += e
            pos_exps.append(-e)
        else:
            pos_exps.append(e)
    pos_exps.sort()
    work_order = None if order is None else order - total_shift
    acc = Series.one(work_order)
    for e in pos_exps:
        if work_order is not None and e >= work_order and e > 0:
            continue  # factor == 1 within the window
        acc = acc * Series(0, (1,) + (0,) * (e - 1) + (-spec.sign,) if e > 0 else (1 - spec.sign,))
    acc = acc.shift(total_shift)
    if sign_acc != 1:
        acc = acc.scale(sign_acc)
    if order is not None:
        acc = acc.truncate(order)
    return acc


def poch(sign: int, shift: int, step: int, count: Optional[int], order: Optional[int] = None) -> Series:
    return pochhammer(PochSpec(sign, shift, step, count), order)


def _as_fraction(v) -> Fraction:
    if isinstance(v, tuple):
        return Fraction(v[0], v[1])
    return Fraction(v)


def triple_product(z_sign: int, z_exp, base_exp, order: int) -> tuple[Series, Series]:
    """Jacobi triple product after q -> q^B, z -> z_sign * q^E.

    Returns (sum side, product side), both truncated to `order`:

        1 + sum_{n>=1} sign^n (q^{B n^2 - E n} + q^{B n^2 + E n})
        = (-z q^B; q^{2B})  (-q^B / z; q^{2B})  (q^{2B}; q^{2B})   [all infinite]

    B and E may be half-integral as long as every assembled exponent is an
    integer, which requires 2B, 2E and B + E integral.
    """
    if z_sign not in (1, -1):
        raise ValueError("z_sign must be +1 or -1")
    B = _as_fraction(base_exp)
    E = _as_fraction(z_exp)
    if E < 0:
        E = -E
    for v in (2 * B, 2 * E, B + E):
        if v.denominator != 1:
            raise FractionalExponent(f"non-integral exponent {v} in triple product")
    if B <= E:
        raise DivergentProduct("need base exponent strictly larger than |z exponent|")

    acc: dict[int, int] = {0: 1}
    n = 1
    while True:
        lo = B * n * n - E * n
        if lo >= order:
            break
        s = z_sign if n % 2 else 1
        acc[int(lo)] = acc.get(int(lo), 0) + s
        hi = B * n * n + E * n
        if hi < order:
            acc[int(hi)] = acc.get(int(hi), 0) + s
        n += 1
    lo_exp = min(acc)
    coeffs = [0] * (max(acc) - lo_exp + 1)
    for e, c in acc.items():
        coeffs[e - lo_exp] = c
    sum_side = Series(lo_exp, coeffs, order)

    step = int(2 * B)
    prod_side = (
        poch(-z_sign, int(B + E), step, None, order)
        * poch(-z_sign, int(B - E), step, None, order)
        * poch(1, step, step, None, order)
    ).truncate(order)
    return sum_side, prod_side
