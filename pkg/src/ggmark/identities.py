"""Product sides and multisum sides of the counting identities.

Two families are implemented, named by the equalities they encode:

* ``E=F``: the odd-modulus family.  Product side has modulus 2k-1; the
  multisum runs over N_1 >= ... >= N_{k-1} >= 0 with a Laurent prefactor
  (-q^{1-N_1}; q)_{N_1-1} against base q.
* ``O=P``: the even-modulus family.  Product side has modulus 4k-4; the
  multisum carries (-q^{2-2N_1}; q^2)_{N_1-1} (-q^{1-2N_1}; q^2)_{N_1}
  against base q^2.

The bivariate versions additionally track x^(number of parts).
"""

from __future__ import annotations

from functools import lru_cache
from typing import Optional

from .errors import InvalidInput
from .series import Series, XPoly, poch

_ALIASES = {
    "E=F": "EF",
    "R-R-BB1-e-1": "EF",
    "GENERATING-nwe2": "EF",
    "odd-modulus": "EF",
    "O=P": "OP",
    "over4": "OP",
    "Gollnitz-evene1": "OP",
    "even-modulus": "OP",
}

_BIVARIATE_NAMES = {"GENERATING-nwe2", "Gollnitz-evene1"}


def _family(name: str) -> str:
    try:
        return _ALIASES[name]
    except KeyError:
        raise InvalidInput(f"unknown identity name {name!r}") from None


def _check_ki(k: int, i: int):
    if not (k > i >= 1):
        raise InvalidInput(f"require k > i >= 1, got k={k}, i={i}")


@lru_cache(maxsize=None)
def overpartition_gf(order: int) -> Series:
    """(-q; q)_inf / (q; q)_inf, the overpartition counting series."""
    return (poch(-1, 1, 1, None, order) * poch(1, 1, 1, None, order).inverse(order)).truncate(order)


@lru_cache(maxsize=None)
def _inv_qpoch(step: int, count: int, order: int) -> Series:
    """1 / (q^step; q^step)_count truncated at `order`."""
    return poch(1, step, step, count).inverse(order)


def identity_rhs(name: str, k: int, i: int, order: int) -> Series:
    """Product side: (-q)_inf (q^a, q^b, q^M; q^M)_inf / (q)_inf truncated."""
    fam = _family(name)
    _check_ki(k, i)
    if fam == "EF":
        modulus = 2 * k - 1
        a = i
    else:
        modulus = 4 * k - 4
        a = 2 * i - 1
    triple = (
        poch(1, a, modulus, None, order)
        * poch(1, modulus - a, modulus, None, order)
        * poch(1, modulus, modulus, None, order)
    )
    return (overpartition_gf(order) * triple).truncate(order)


def _prefactor(fam: str, n1: int, order: int) -> Series:
    """Laurent prefactor of the N_1 block, truncated where the term needs it."""
    if fam == "EF":
        bound = order - n1 * n1
        return poch(-1, 1 - n1, 1, n1 - 1, bound)
    bound = order - 2 * n1 * n1
    m1 = -n1 * (n1 - 1)  # min exponent of the first factor
    m2 = -n1 * n1  # min exponent of the second factor
    f1 = poch(-1, 2 - 2 * n1, 2, n1 - 1, bound - m2)
    f2 = poch(-1, 1 - 2 * n1, 2, n1, bound - m1)
    return (f1 * f2).truncate(bound)


def identity_lhs_multisum(
    name: str, k: int, i: int, order: int, with_x: bool = False
) -> Series:
    """Multisum side truncated to `order`, optionally tracking x^(part count).

    A tuple (N_1, ..., N_{k-1}) is included iff the exact minimal q-exponent
    of its term lies below `order`.  The Laurent prefactor cancels most of
    the quadratic in N_1, so that minimum is N_1(N_1+1)/2 for base q and
    plain N_1 for base q^2 - far below the quadratic form itself.
    """
    fam = _family(name)
    _check_ki(k, i)
    if name in _BIVARIATE_NAMES:
        with_x = True
    b = 1 if fam == "EF" else 2

    def head_min(n1: int) -> int:
        return n1 * (n1 + 1) // 2 if fam == "EF" else n1

    def tail_min(j: int, nj: int) -> int:
        lin = nj if j >= i + 1 else 0
        return b * (nj * nj + lin)

    prefactors: dict[int, Series] = {}
    total = Series.zero(order)

    def emit(tup: tuple[int, ...]):
        nonlocal total
        n1 = tup[0]
        if n1 == 0:
            total = total + Series.one(order)
            return
        if n1 not in prefactors:
            prefactors[n1] = _prefactor(fam, n1, order)
        exponent = b * (sum(nj * nj for nj in tup) + sum(tup[i:]))
        term = prefactors[n1].shift(exponent)
        ni = tup[i - 1]
        if ni == 0:
            term = term.scale(2)
        else:
            term = term * Series(0, (1,) + (0,) * (b * ni - 1) + (1,))
        for j in range(k - 2):
            m = tup[j] - tup[j + 1]
            if m:
                term = term * _inv_qpoch(b, m, order)
        if tup[-1]:
            term = term * _inv_qpoch(2 * b, tup[-1], order)
        if with_x:
            term = term.scale(XPoly.monomial(sum(tup)))
        total = total + term.truncate(order)

    def rec(j: int, prefix: tuple[int, ...], partial: int):
        if j > k - 1:
            emit(prefix)
            return
        cap = prefix[-1] if prefix else None
        nj = 0
        while cap is None or nj <= cap:
            add = head_min(nj) if j == 1 else tail_min(j, nj)
            if partial + add >= order and nj > 0:
                break
            if partial + add < order:
                rec(j + 1, prefix + (nj,), partial + add)
            nj += 1

    rec(1, (), 0)
    return total.truncate(order)
