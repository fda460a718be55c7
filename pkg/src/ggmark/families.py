"""Difference-condition families, congruence counters, and profile classes.

Four families of counting classes, each parametrized by k > i >= 1
(Bclassic allows k >= i >= 1):

* ``O``  - overpartitions under the even-modulus difference conditions;
  congruence side: non-overlined parts not congruent to 0, +-(2i-1)
  modulo 4k-4.
* ``E``  - overpartitions under the odd-modulus difference conditions;
  congruence side: non-overlined parts not congruent to 0, +-i mod 2k-1.
* ``C``  - ordinary partitions, the even-modulus classic; congruence side:
  parts not congruent to 2 mod 4 nor 0, +-(2i-1) mod 4k-2.
* ``Bclassic`` - ordinary partitions, the classic odd case; parts not
  congruent to 0, +-i mod 2k+1.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Optional, Sequence

from .errors import InvalidInput
from .identities import identity_lhs_multisum
from .marking import gg_mark, gordon_mark
from .overpartitions import (
    Overpartition,
    PartitionStats,
    enumerate_overpartitions,
    enumerate_partitions,
)
from .series import Series, XPoly, poch

FAMILIES = ("O", "E", "C", "Bclassic")
_OVERPARTITION_FAMILIES = ("O", "E")


@dataclass(frozen=True)
class ClassId:
    family: str
    k: int
    i: int

    def __post_init__(self):
        if self.family not in FAMILIES:
            raise InvalidInput(f"unknown family {self.family!r}")
        if self.family == "Bclassic":
            if not self.k >= self.i >= 1:
                raise InvalidInput("Bclassic requires k >= i >= 1")
        elif not self.k > self.i >= 1:
            raise InvalidInput(f"family {self.family} requires k > i >= 1")

    @property
    def is_ordinary(self) -> bool:
        return self.family in ("C", "Bclassic")


def _member_O(st: PartitionStats, k: int, i: int) -> bool:
    if st.fbar(1) + st.f(2) > i - 1:
        return False
    for t in range(0, st.max_size // 2 + 2):
        even, odd_next = 2 * t, 2 * t + 1
        window = st.f(even) + st.fbar(even) + st.fbar(odd_next) + st.f(even + 2)
        if window > k - 1:
            return False
        odd_mult = st.f(odd_next)
        if odd_mult >= 1 and st.f(even + 2) > k - 2:
            return False
        parity = (st.V(odd_next) + i - 1) % 2
        if window == k - 1:
            total = t * (st.f(even) + st.fbar(even) + st.fbar(odd_next)) + (t + 1) * st.f(even + 2)
            if total % 2 != parity:
                return False
        if odd_mult >= 1 and st.f(even + 2) == k - 2:
            if (t + (t + 1) * st.f(even + 2)) % 2 != parity:
                return False
    return True


def _member_E(st: PartitionStats, k: int, i: int) -> bool:
    if st.f(1) > i - 1:
        return False
    for t in range(0, st.max_size + 2):
        window = st.f(t) + st.fbar(t) + st.f(t + 1)
        if window > k - 1:
            return False
        if window == k - 1:
            total = t * (st.f(t) + st.fbar(t)) + (t + 1) * st.f(t + 1)
            if total % 2 != (st.V(t) + i - 1) % 2:
                return False
    return True


def _member_C(st: PartitionStats, k: int, i: int) -> bool:
    if st.f(1) + st.f(2) > i - 1:
        return False
    for t in range(0, st.max_size // 2 + 2):
        if st.f(2 * t + 1) > 1:
            return False
        window = st.f(2 * t) + st.f(2 * t + 1) + st.f(2 * t + 2)
        if window > k - 1:
            return False
        if window == k - 1:
            total = t * (st.f(2 * t) + st.f(2 * t + 1)) + (t + 1) * st.f(2 * t + 2)
            if total % 2 != (st.O_odd(2 * t + 1) + i - 1) % 2:
                return False
    return True


def _member_B(st: PartitionStats, k: int, i: int) -> bool:
    if st.f(1) > i - 1:
        return False
    for t in range(1, st.max_size + 1):
        if st.f(t) + st.f(t + 1) > k - 1:
            return False
    return True


_MEMBERS = {"O": _member_O, "E": _member_E, "C": _member_C, "Bclassic": _member_B}


def member_from_stats(st: PartitionStats, c: ClassId) -> bool:
    if c.is_ordinary and st.V(st.max_size) > 0:
        raise InvalidInput(f"family {c.family} requires an ordinary partition")
    return _MEMBERS[c.family](st, c.k, c.i)


def is_member(lam: Overpartition, c: ClassId) -> bool:
    return member_from_stats(lam.stats(), c)


def forbidden_residues(c: ClassId) -> tuple[int, set[int]]:
    """(modulus, residues barred for non-overlined parts)."""
    if c.family == "O":
        m = 4 * c.k - 4
        r = 2 * c.i - 1
    elif c.family == "E":
        m = 2 * c.k - 1
        r = c.i
    elif c.family == "C":
        m = 4 * c.k - 2
        r = 2 * c.i - 1
    else:
        m = 2 * c.k + 1
        r = c.i
    return m, {0, r % m, (m - r) % m}


def satisfies_congruence(lam: Overpartition, c: ClassId) -> bool:
    if c.is_ordinary and lam.has_overline:
        raise InvalidInput(f"family {c.family} requires an ordinary partition")
    modulus, barred = forbidden_residues(c)
    for p in lam.parts:
        if not p.overlined:
            if p.size % modulus in barred:
                return False
            if c.family == "C" and p.size % 4 == 2:
                return False
    return True


def _enumerate_for(c: ClassId, n: int):
    if c.is_ordinary:
        return enumerate_partitions(n)
    return enumerate_overpartitions(n)


def count_class(c: ClassId, n: int, m: Optional[int] = None) -> int:
    """Members of weight n (and exactly m parts when given)."""
    total = 0
    for lam in _enumerate_for(c, n):
        if m is not None and lam.length != m:
            continue
        if is_member(lam, c):
            total += 1
    return total


def count_congruence(c: ClassId, n: int, m: Optional[int] = None) -> int:
    total = 0
    for lam in _enumerate_for(c, n):
        if m is not None and lam.length != m:
            continue
        if satisfies_congruence(lam, c):
            total += 1
    return total


def profile_of(lam: Overpartition, c: ClassId) -> tuple[int, ...]:
    """Row counts of the appropriate marking, padded to k-1 entries.

    Membership of `lam` in the class is assumed, not checked; the only
    structural requirement is that the marking fits in k-1 rows.
    """
    if c.is_ordinary and lam.has_overline:
        raise InvalidInput(f"family {c.family} requires an ordinary partition")
    marked = gordon_mark(lam) if c.family in ("E", "Bclassic") else gg_mark(lam)
    rows = _padded_rows(marked.row_counts, c.k)
    if rows is None:
        raise InvalidInput("marking uses more rows than the class allows")
    return rows


# -- profile-class generating functions ---------------------------------

PROFILE_FAMILIES = ("E", "G", "H", "B", "O", "W")


def _padded_rows(rows: tuple[int, ...], k: int) -> Optional[tuple[int, ...]]:
    if len(rows) > k - 1:
        return None
    return rows + (0,) * (k - 1 - len(rows))


def _profile_member(lam: Overpartition, family: str, k: int, i: int, profile) -> bool:
    if family in ("E", "G", "H", "B"):
        if not is_member(lam, ClassId("E", k, i)):
            return False
        if _padded_rows(gordon_mark(lam).row_counts, k) != tuple(profile):
            return False
        if family == "G":
            return not lam.parts or not lam.parts[0].overlined
        if family == "H":
            return bool(lam.parts) and lam.parts[0].overlined
        if family == "B":
            return not lam.has_overline
        return True
    if not is_member(lam, ClassId("O", k, i)):
        return False
    if _padded_rows(gg_mark(lam).row_counts, k) != tuple(profile):
        return False
    if family == "W":
        return not lam.has_odd
    return True


def profile_class_gf(family: str, profile: Sequence[int], i: int, order: int) -> Series:
    """Sum of x^length q^weight over the profile class, by enumeration."""
    profile = tuple(profile)
    k = len(profile) + 1
    total = Series.zero(order)
    for n in range(order):
        acc = {}
        for lam in enumerate_overpartitions(n):
            if _profile_member(lam, family, k, i, profile):
                acc[lam.length] = acc.get(lam.length, 0) + 1
        if acc:
            coeff = XPoly([acc.get(d, 0) for d in range(max(acc) + 1)])
            total = total + Series.monomial(n, coeff, order)
    return total


def profile_class_closed_form(family: str, profile: Sequence[int], i: int, order: int) -> Series:
    """Closed form for the same sum: Laurent prefactor times a q-power over
    the difference Pochhammers, with x^(N_1 + ... + N_{k-1})."""
    profile = tuple(profile)
    if family not in PROFILE_FAMILIES:
        raise InvalidInput(f"unknown profile family {family!r}")
    if any(a < b for a, b in zip(profile, profile[1:])):
        raise InvalidInput("profile must be nonincreasing")
    k = len(profile) + 1
    if not 1 <= i < k:
        raise InvalidInput("need 1 <= i < k")
    n1 = profile[0] if profile else 0
    if n1 == 0:
        return Series.zero(order) if family == "H" else Series.one(order)
    base = 1 if family in ("E", "G", "H", "B") else 2
    quad = sum(nj * nj for nj in profile)
    lin_from_i = sum(profile[i:])  # N_{i+1} + ... + N_{k-1}
    ni = profile[i - 1]

    if family in ("G", "B"):
        exponent = base * (quad + ni + lin_from_i)
        tail = Series.one()
    elif family == "H":
        exponent = base * (quad + lin_from_i)
        tail = Series.one()
    else:  # E, O, W carry the split factor (1 + q^{base*N_i})
        exponent = base * (quad + lin_from_i)
        tail = Series(0, (2,)) if ni == 0 else Series(0, (1,) + (0,) * (base * ni - 1) + (1,))

    if family == "B":
        pref = Series.one()
    elif family == "W":
        pref = poch(-1, 2 - 2 * n1, 2, n1 - 1, order - exponent + n1 * (n1 - 1))
    elif base == 1:
        pref = poch(-1, 1 - n1, 1, n1 - 1, order - exponent + n1 * (n1 - 1) // 2)
    else:
        m1, m2 = -n1 * (n1 - 1), -n1 * n1
        f1 = poch(-1, 2 - 2 * n1, 2, n1 - 1, order - exponent - m2)
        f2 = poch(-1, 1 - 2 * n1, 2, n1, order - exponent - m1)
        pref = (f1 * f2).truncate(order - exponent)

    acc = pref.shift(exponent) * tail
    for j in range(k - 2):
        m = profile[j] - profile[j + 1]
        if m:
            acc = acc * poch(1, base, base, m).inverse(order)
    if profile[-1]:
        acc = acc * poch(1, 2 * base, 2 * base, profile[-1]).inverse(order)
    return acc.scale(XPoly.monomial(sum(profile))).truncate(order)


def profile_gf_check(family: str, profile: Sequence[int], i: int, order: int) -> bool:
    """Coefficientwise comparison of enumeration against the closed form."""
    return profile_class_gf(family, profile, i, order).matches(
        profile_class_closed_form(family, profile, i, order), order
    )


# -- grid verification helpers ------------------------------------------


def grid_cells(family: str, ks: Iterable[int]) -> list[ClassId]:
    out = []
    for k in ks:
        top = k + 1 if family == "Bclassic" else k
        for i in range(1, top):
            out.append(ClassId(family, k, i))
    return out


def count_cells(family: str, ks: Sequence[int], n: int) -> list[tuple[ClassId, int, int]]:
    """One enumeration pass computing both counts for every (k, i) cell."""
    cells = grid_cells(family, ks)
    member_counts = [0] * len(cells)
    cong_counts = [0] * len(cells)
    ordinary = cells[0].is_ordinary if cells else False
    source = enumerate_partitions(n) if ordinary else enumerate_overpartitions(n)
    for lam in source:
        st = lam.stats()
        for idx, c in enumerate(cells):
            if _MEMBERS[c.family](st, c.k, c.i):
                member_counts[idx] += 1
            if satisfies_congruence(lam, c):
                cong_counts[idx] += 1
    return [(c, member_counts[idx], cong_counts[idx]) for idx, c in enumerate(cells)]


def bivariate_class_gf(c: ClassId, order: int) -> Series:
    """Sum of x^length q^weight over all class members below `order`."""
    total = Series.zero(order)
    for n in range(order):
        acc = {}
        for lam in _enumerate_for(c, n):
            if is_member(lam, c):
                acc[lam.length] = acc.get(lam.length, 0) + 1
        if acc:
            coeff = XPoly([acc.get(d, 0) for d in range(max(acc) + 1)])
            total = total + Series.monomial(n, coeff, order)
    return total


def drop_odd_overlines(lam: Overpartition) -> Overpartition:
    """Specialization map: overlined odd parts become plain (input must have
    no overlined even nor plain odd parts)."""
    for p in lam.parts:
        if p.overlined and p.size % 2 == 0:
            raise InvalidInput("no overlined even parts allowed")
        if not p.overlined and p.size % 2 == 1:
            raise InvalidInput("no non-overlined odd parts allowed")
    return Overpartition(
        (p.size, False) if p.size % 2 else p for p in lam.parts
    )
