"""Bailey pairs, their transformations, and the two proof chains.

A pair holds programs n -> alpha_n, n -> beta_n producing truncated series,
a fixed parameter a = 1, and the base (1 for q, 2 for q^2) its relation is
stated in:

    beta_n = sum_{r=0}^{n} alpha_r / ((Q; Q)_{n-r} (Q; Q)_{n+r}),  Q = q^base.

Transformations:

* ``bailey_lift``          alpha'_n = Q^{n^2} alpha_n            (iterating step)
* ``bailey_lift_negated``  the variant picking up (-1; Q)_j factors
* ``template_shift``       beta'_n = Q^n beta_n for alpha of the two-sided
                           theta template (swaps the template's wings)
* ``change_base``          consumes a base-2 pair, emits a base-1 pair
* ``combine``              linear combination of two pairs over one base

``run_chain`` executes the seed-to-identity pipeline for parameters (k, i)
in either the odd-modulus or the even-modulus variant, verifying every
intermediate pair, and compares the assembled series against the product
side and the triple-product specialization.
"""

from __future__ import annotations

import json
from dataclasses import dataclass, field
from fractions import Fraction
from functools import lru_cache
from typing import Callable, Optional

from .errors import ChainBroken, InvalidInput, NotApplicable
from .identities import identity_lhs_multisum, identity_rhs, overpartition_gf, _inv_qpoch
from .series import Series, poch, triple_product

ODD_MODULUS = "oddModulus"
EVEN_MODULUS = "evenModulus"


@dataclass
class BaileyPair:
    name: str
    base: int
    alpha_fn: Callable[[int, int], Series]
    beta_fn: Callable[[int, int], Series]
    # (A, gap) when alpha_n = (-1)^n Q^{A n^2} (Q^{gap n} + Q^{-gap n}), n >= 1
    alpha_form: Optional[tuple[int, int]] = None
    _alpha_memo: dict = field(default_factory=dict, repr=False)
    _beta_memo: dict = field(default_factory=dict, repr=False)

    def alpha(self, n: int, order: int) -> Series:
        key = (n, order)
        if key not in self._alpha_memo:
            self._alpha_memo[key] = self.alpha_fn(n, order)
        return self._alpha_memo[key]

    def beta(self, n: int, order: int) -> Series:
        key = (n, order)
        if key not in self._beta_memo:
            self._beta_memo[key] = self.beta_fn(n, order)
        return self._beta_memo[key]


def verify_pair(pair: BaileyPair, n_max: int, order: int) -> bool:
    """Check the defining relation coefficientwise for all n <= n_max."""
    Q = pair.base
    for n in range(n_max + 1):
        rhs = Series.zero(order)
        for r in range(n + 1):
            term = pair.alpha(r, order) * _inv_qpoch(Q, n - r, order) * _inv_qpoch(Q, n + r, order)
            rhs = rhs + term.truncate(order)
        if not pair.beta(n, order).matches(rhs, order):
            return False
    return True


def _two_sided_alpha(base: int, A: int, gap: int) -> Callable[[int, int], Series]:
    def alpha(n: int, order: int) -> Series:
        if n == 0:
            return Series.one(order)
        sign = -1 if n % 2 else 1
        lead = base * (A * n * n - gap * n)
        coeffs: dict[int, int] = {lead: sign}
        hi = base * (A * n * n + gap * n)
        coeffs[hi] = coeffs.get(hi, 0) + sign
        lo = min(coeffs)
        out = [0] * (max(coeffs) - lo + 1)
        for e, c in coeffs.items():
            out[e - lo] = c
        return Series(lo, out, order)

    return alpha


def gap0_seed(base: int = 1) -> BaileyPair:
    """alpha_n = 2 (-1)^n Q^{n^2} (n >= 1), beta_n = 1 / (Q^2; Q^2)_n."""
    def beta(n: int, order: int) -> Series:
        return _inv_qpoch(2 * base, n, order)

    return BaileyPair("seed", base, _two_sided_alpha(base, 1, 0), beta, alpha_form=(1, 0))


def slater_E4(base: int = 1) -> BaileyPair:
    """alpha_n = (-1)^n Q^{n^2} (Q^n + Q^{-n}), beta_n = Q^n / (Q^2; Q^2)_n."""
    def beta(n: int, order: int) -> Series:
        return _inv_qpoch(2 * base, n, order).shift(base * n).truncate(order + base * n)

    return BaileyPair("E(4)", base, _two_sided_alpha(base, 1, 1), beta, alpha_form=(1, 1))


def bailey_lift(pair: BaileyPair) -> BaileyPair:
    """alpha'_n = Q^{n^2} alpha_n; beta'_n = sum_j Q^{j^2}/(Q;Q)_{n-j} beta_j."""
    Q = pair.base

    def alpha(n: int, order: int) -> Series:
        return pair.alpha(n, order) .shift(Q * n * n).truncate(order + Q * n * n)

    def beta(n: int, order: int) -> Series:
        acc = Series.zero(order)
        for j in range(n + 1):
            term = pair.beta(j, order).shift(Q * j * j) * _inv_qpoch(Q, n - j, order)
            acc = acc + term.truncate(order)
        return acc

    form = (pair.alpha_form[0] + 1, pair.alpha_form[1]) if pair.alpha_form else None
    return BaileyPair(f"lift({pair.name})", Q, alpha, beta, alpha_form=form)


def bailey_lift_negated(pair: BaileyPair) -> BaileyPair:
    """The limiting form that introduces (-1; Q)_j: divides out (1 + Q^n)."""
    Q = pair.base

    def alpha(n: int, order: int) -> Series:
        if n == 0:
            return Series.one(order)
        shift = Q * (n * n + n) // 2
        inv = Series(0, (1,) + (0,) * (Q * n - 1) + (1,)).inverse(order)
        return (pair.alpha(n, order) * inv).shift(shift).scale(2).truncate(order)

    def beta(n: int, order: int) -> Series:
        acc = Series.zero(order)
        for j in range(n + 1):
            fac = poch(-1, 0, Q, j)  # (-1; Q)_j
            term = pair.beta(j, order) * fac * _inv_qpoch(Q, n - j, order)
            acc = acc + term.shift(Q * (j * j + j) // 2).truncate(order)
        inv_head = poch(-1, Q, Q, n).inverse(order)  # 1 / (-Q; Q)_n
        return (acc * inv_head).truncate(order)

    return BaileyPair(f"lift-neg({pair.name})", Q, alpha, beta, alpha_form=None)


def change_base(pair: BaileyPair) -> BaileyPair:
    """Turn a base-2 pair into a base-1 pair (the q^2 -> q step)."""
    if pair.base != 2:
        raise NotApplicable("change_base consumes a base-2 pair")

    def alpha(n: int, order: int) -> Series:
        if n == 0:
            return Series.one(order)
        inv = Series(0, (1,) + (0,) * (2 * n - 1) + (1,)).inverse(order)  # 1/(1+q^{2n})
        return (pair.alpha(n, order) * inv).shift(n).scale(2).truncate(order)

    def beta(n: int, order: int) -> Series:
        acc = Series.zero(order)
        for j in range(n + 1):
            fac = poch(-1, 0, 1, 2 * j)  # (-1; q)_{2j}
            term = pair.beta(j, order) * fac * _inv_qpoch(2, n - j, order)
            acc = acc + term.shift(j).truncate(order)
        return acc

    return BaileyPair(f"change-base({pair.name})", 1, alpha, beta, alpha_form=None)


def template_shift(pair: BaileyPair) -> BaileyPair:
    """For alpha of template (A, A-1), emit the (A, A) pair with beta'_n = Q^n beta_n."""
    if pair.alpha_form is None:
        raise NotApplicable("pair carries no two-sided alpha template")
    A, gap = pair.alpha_form
    if gap != A - 1:
        raise NotApplicable(f"template requires gap = A - 1, got (A, gap) = {pair.alpha_form}")
    Q = pair.base

    def beta(n: int, order: int) -> Series:
        return pair.beta(n, order).shift(Q * n).truncate(order + Q * n)

    return BaileyPair(
        f"template-shift({pair.name})", Q, _two_sided_alpha(Q, A, A), beta, alpha_form=(A, A)
    )


def combine(p1: BaileyPair, p2: BaileyPair, c1, c2) -> BaileyPair:
    """Linear combination; the relation is linear in (alpha, beta)."""
    if p1.base != p2.base:
        raise NotApplicable("cannot combine pairs over different bases")

    def alpha(n: int, order: int) -> Series:
        return p1.alpha(n, order).scale(c1) + p2.alpha(n, order).scale(c2)

    def beta(n: int, order: int) -> Series:
        return p1.beta(n, order).scale(c1) + p2.beta(n, order).scale(c2)

    return BaileyPair(f"combine({p1.name},{p2.name})", p1.base, alpha, beta, alpha_form=None)


# -- the chain executor --------------------------------------------------


@dataclass
class ChainStep:
    step: str
    lemma: str
    verified: bool
    n_max: int
    order: int

    def to_json_dict(self) -> dict:
        return {
            "step": self.step,
            "lemma": self.lemma,
            "verified": self.verified,
            "nMax": self.n_max,
            "order": self.order,
        }


@dataclass
class ChainReport:
    k: int
    i: int
    variant: str
    order: int
    n_max: int
    steps: list[ChainStep]
    theta_equals_triple_product: bool = False
    multisum_equals_theta_assembly: bool = False
    multisum_equals_product: bool = False
    integral_coefficients: bool = False

    @property
    def all_ok(self) -> bool:
        return (
            all(s.verified for s in self.steps)
            and self.theta_equals_triple_product
            and self.multisum_equals_theta_assembly
            and self.multisum_equals_product
            and self.integral_coefficients
        )

    def to_json_dict(self) -> dict:
        return {
            "k": self.k,
            "i": self.i,
            "variant": self.variant,
            "order": self.order,
            "nMax": self.n_max,
            "steps": [s.to_json_dict() for s in self.steps],
            "thetaEqualsTripleProduct": self.theta_equals_triple_product,
            "multisumEqualsThetaAssembly": self.multisum_equals_theta_assembly,
            "multisumEqualsProduct": self.multisum_equals_product,
            "integralCoefficients": self.integral_coefficients,
            "allOk": self.all_ok,
        }

    def to_json(self) -> str:
        return json.dumps(self.to_json_dict(), separators=(",", ":"))


def _assemble_theta(pair: BaileyPair, order: int) -> Series:
    """1 + sum_{n >= 1} alpha_n, summed until the terms leave the window."""
    acc = Series.one(order)
    n = 1
    while True:
        term = pair.alpha(n, order)
        if not term.coeffs:  # entirely beyond the truncation
            break
        acc = acc + term.truncate(order)
        n += 1
    return acc


def run_chain(k: int, i: int, variant: str, order: int, n_max: int = 6) -> ChainReport:
    """Replay the proof chain for (k, i); verify every pair along the way.

    Pipeline: gap-0 seed, then (template_shift, lift) repeated k-i-1 times
    (the first template_shift lands on the classical Slater E(4) pair), one
    more template_shift, the half-half combination, i-1 lifts, and finally
    the negated lift (odd modulus) or the base change (even modulus).
    """
    if variant not in (ODD_MODULUS, EVEN_MODULUS):
        raise InvalidInput(f"unknown variant {variant!r}")
    if not k > i >= 1:
        raise InvalidInput("require k > i >= 1")
    base = 2 if variant == EVEN_MODULUS else 1
    steps: list[ChainStep] = []

    def checked(pair: BaileyPair, label: str) -> BaileyPair:
        ok = verify_pair(pair, n_max, order)
        steps.append(ChainStep(label, pair.name, ok, n_max, order))
        if not ok:
            raise ChainBroken(label)
        return pair

    pair = checked(gap0_seed(base), "seed")
    for rep in range(k - i - 1):
        pair = checked(template_shift(pair), f"template-shift[{rep + 1}]")
        pair = checked(bailey_lift(pair), f"lift[{rep + 1}]")
    wide = checked(template_shift(pair), "template-shift[final]")
    pair = checked(combine(pair, wide, Fraction(1, 2), Fraction(1, 2)), "average")
    for rep in range(i - 1):
        pair = checked(bailey_lift(pair), f"lift-tail[{rep + 1}]")
    if variant == ODD_MODULUS:
        final = checked(bailey_lift_negated(pair), "final-lift-negated")
        b_exp, z_exp = Fraction(2 * k - 1, 2), Fraction(2 * k - 2 * i - 1, 2)
        name = "E=F"
    else:
        final = checked(change_base(pair), "final-change-base")
        b_exp, z_exp = Fraction(2 * (k - 1)), Fraction(2 * k - 2 * i - 1)
        name = "O=P"

    theta = _assemble_theta(final, order)
    tp_sum, tp_prod = triple_product(-1, z_exp, b_exp, order)
    theta_ok = theta.matches(tp_sum, order) and theta.matches(tp_prod, order)

    lhs = identity_lhs_multisum(name, k, i, order)
    assembled = (overpartition_gf(order) * theta).truncate(order)
    assembly_ok = lhs.matches(assembled, order)
    rhs = identity_rhs(name, k, i, order)
    product_ok = lhs.matches(rhs, order)
    integral = all(
        isinstance(c, int) or (isinstance(c, Fraction) and c.denominator == 1)
        for _, c in list(lhs.items()) + list(rhs.items())
    )
    return ChainReport(
        k, i, variant, order, n_max, steps, theta_ok, assembly_ok, product_ok, integral
    )
