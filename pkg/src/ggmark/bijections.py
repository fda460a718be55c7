"""Weight-preserving structural bijections built from the local moves.

* ``overline_split`` strips the overlines of an overpartition whose smallest
  part is plain, one cascade of first dilations per overlined part, and
  records each stripped overline as a negative marker part.  Its inverse
  ``overline_merge`` replays first reductions.
* ``odd_split`` / ``odd_merge`` do the same for odd parts via the second
  moves; markers are negative odd numbers.
* ``double_parts`` / ``halve_parts`` relate the two marking schemes.
* ``switch_smallest`` and ``shift_overline`` are the small auxiliary maps
  between the smallest-part-plain and smallest-part-overlined families.
"""

from __future__ import annotations

from dataclasses import dataclass

from .errors import InvalidInput
from .marking import clusters, gg_mark, gordon_mark
from .moves import first_dilation, first_reduction, second_dilation, second_reduction
from .overpartitions import Overpartition, Part


@dataclass(frozen=True)
class NegativeDistinctPartition:
    """Strictly decreasing negative parts inside a bounded window."""

    parts: tuple[int, ...]

    def __post_init__(self):
        if any(p >= 0 for p in self.parts):
            raise InvalidInput("parts must be negative")
        if list(self.parts) != sorted(set(self.parts), reverse=True):
            raise InvalidInput("parts must be strictly decreasing")

    @property
    def weight(self) -> int:
        return sum(self.parts)

    def check_window(self, low: int):
        """All parts must lie in [low, -1]."""
        if any(p < low for p in self.parts):
            raise InvalidInput(f"parts must lie in [{low}, -1]")

    def check_odd(self):
        if any(p % 2 == 0 for p in self.parts):
            raise InvalidInput("parts must be odd")

    def serialize(self) -> str:
        return ",".join(str(p) for p in self.parts)

    @classmethod
    def parse(cls, text: str) -> "NegativeDistinctPartition":
        text = text.strip()
        if not text:
            return cls(())
        return cls(tuple(sorted((int(t) for t in text.split(",")), reverse=True)))


def _overline_positions(lam: Overpartition) -> list[int]:
    """Positions (1 = largest) of the overlined parts among the 1-marked ones."""
    marked = gordon_mark(lam)
    ones = [marked.entries[i][0] for i in marked.one_marked()]
    n1 = len(ones)
    return sorted(n1 - idx for idx, part in enumerate(ones) if part.overlined)


def overline_split(lam: Overpartition) -> tuple[NegativeDistinctPartition, Overpartition]:
    """Map an overpartition with plain smallest part to (markers, overline-free).

    Each overlined part sits at some position j among the 1-marked parts
    (counted from the largest).  Working topmost first, a cascade of first
    dilations at p = j, ..., 1 pushes the overline out, raising the weight
    by j; the marker -j keeps the books balanced.
    """
    if lam.parts and lam.parts[0].overlined:
        raise InvalidInput("smallest part must be non-overlined")
    positions = _overline_positions(lam)
    work = lam
    for j in positions:
        current = _overline_positions(work)
        if not current or current[0] != j:
            raise InvalidInput(f"overline expected at position {j}, found {current}")
        for p in range(j, 0, -1):
            work = first_dilation(work, p)
    if work.has_overline:
        raise InvalidInput("stripping did not terminate")
    return NegativeDistinctPartition(tuple(-j for j in positions)), work


def overline_merge(tau: NegativeDistinctPartition, mu: Overpartition) -> Overpartition:
    """Inverse of overline_split: replant each recorded overline bottom-up."""
    if mu.has_overline:
        raise InvalidInput("residue overpartition must be overline-free")
    n1 = len(gordon_mark(mu).one_marked())
    tau.check_window(1 - n1)
    work = mu
    for neg in sorted(tau.parts):  # deepest marker first
        j = -neg
        for p in range(1, j + 1):
            work = first_reduction(work, p)
    return work


def _odd_cluster_positions(nu: Overpartition) -> list[int]:
    decomp = clusters(gg_mark(nu))
    return sorted(j for j in range(1, decomp.n1 + 1) if decomp.odd_entries(j))


def odd_split(nu: Overpartition) -> tuple[NegativeDistinctPartition, Overpartition]:
    """Map an overpartition to (odd markers, even-part overpartition).

    The odd parts occupy distinct clusters j_1 < ... < j_s; clearing the one
    in cluster j by second dilations at p = j, ..., 1 adds 2j - 1 to the
    weight, recorded as the marker 1 - 2j.
    """
    positions = _odd_cluster_positions(nu)
    work = nu
    for j in positions:
        current = _odd_cluster_positions(work)
        if not current or current[0] != j:
            raise InvalidInput(f"odd part expected in cluster {j}, found {current}")
        for p in range(j, 0, -1):
            work = second_dilation(work, p)
    if work.has_odd:
        raise InvalidInput("clearing odd parts did not terminate")
    return NegativeDistinctPartition(tuple(1 - 2 * j for j in positions)), work


def odd_merge(xi: NegativeDistinctPartition, omega: Overpartition) -> Overpartition:
    """Inverse of odd_split: reintroduce odds deepest-first by reductions."""
    if omega.has_odd:
        raise InvalidInput("residue overpartition must have even parts only")
    xi.check_odd()
    n1 = len(gg_mark(omega).one_marked())
    xi.check_window(1 - 2 * n1)
    work = omega
    for neg in sorted(xi.parts):
        j = (1 - neg) // 2
        for p in range(1, j + 1):
            work = second_reduction(work, p)
    return work


def double_parts(delta: Overpartition) -> Overpartition:
    """Double every part size, preserving overlines."""
    return Overpartition(Part(2 * p.size, p.overlined) for p in delta.parts)


def halve_parts(omega: Overpartition) -> Overpartition:
    """Inverse of double_parts; every part must be even."""
    if omega.has_odd:
        raise InvalidInput("all parts must be even")
    return Overpartition(Part(p.size // 2, p.overlined) for p in omega.parts)


def switch_smallest(lam: Overpartition, direction: str) -> Overpartition:
    """Toggle the overline of the smallest part.

    direction 'to_plain' requires the smallest part overlined;
    direction 'to_overlined' requires it plain.
    """
    if not lam.parts:
        raise InvalidInput("empty overpartition has no smallest part")
    smallest = lam.parts[0]
    if direction == "to_plain":
        if not smallest.overlined:
            raise InvalidInput("smallest part is not overlined")
        new = Part(smallest.size, False)
    elif direction == "to_overlined":
        if smallest.overlined:
            raise InvalidInput("smallest part is already overlined")
        new = Part(smallest.size, True)
    else:
        raise InvalidInput(f"unknown direction {direction!r}")
    rest = list(lam.parts[1:])
    return Overpartition(rest + [new])


def shift_overline(lam: Overpartition, direction: str) -> Overpartition:
    """Shift all part sizes by one and trade the overline of the smallest.

    direction 'down': every part >= 2 and the smallest plain; subtract one
    from each part and overline one smallest part (weight drops by the part
    count).  direction 'up' is the inverse.
    """
    if not lam.parts:
        return lam
    smallest = lam.parts[0]
    if direction == "down":
        if smallest.overlined:
            raise InvalidInput("smallest part must be non-overlined")
        if smallest.size < 2:
            raise InvalidInput("every part must be at least 2")
        shifted = [Part(p.size - 1, p.overlined) for p in lam.parts]
        shifted[0] = Part(shifted[0].size, True)
        return Overpartition(shifted)
    if direction == "up":
        if not smallest.overlined:
            raise InvalidInput("smallest part must be overlined")
        shifted = [Part(p.size + 1, p.overlined) for p in lam.parts]
        shifted[0] = Part(shifted[0].size, False)
        return Overpartition(shifted)
    raise InvalidInput(f"unknown direction {direction!r}")
