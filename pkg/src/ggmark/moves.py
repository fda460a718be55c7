"""The four weight-changing local moves on marked overpartitions.

First dilation/reduction act through the plain marking and change the weight
by +1/-1; second dilation/reduction act through the cluster decomposition of
the even/odd marking and change the weight by +2/-2 (or +1/-1 at the top
cluster).  All four preserve the row-count profile.  Every move re-derives
the marking of its input from scratch; nothing is patched incrementally.
"""

from __future__ import annotations

import json
from dataclasses import dataclass

from .errors import DuplicateOverline, InvalidMove
from .overpartitions import Overpartition, Part
from .marking import alpha_set, clusters, gg_mark, gordon_mark

FIRST_DILATION = "firstDilation"
FIRST_REDUCTION = "firstReduction"
SECOND_DILATION = "secondDilation"
SECOND_REDUCTION = "secondReduction"


@dataclass(frozen=True)
class MoveReceipt:
    kind: str
    p: int
    before: Overpartition
    after: Overpartition
    delta_weight: int

    def to_json_dict(self) -> dict:
        return {
            "kind": self.kind,
            "p": self.p,
            "before": self.before.serialize(),
            "after": self.after.serialize(),
            "deltaWeight": self.delta_weight,
        }

    def to_json(self) -> str:
        return json.dumps(self.to_json_dict(), separators=(",", ":"))


def _rebuild(parts: list[Part], context: str) -> Overpartition:
    try:
        return Overpartition(parts)
    except DuplicateOverline as exc:
        raise InvalidMove(f"{context} would duplicate an overline: {exc}") from exc


def _one_marked_desc(lam: Overpartition):
    """1-marked parts indexed from the largest: position p=1 is the largest."""
    marked = gordon_mark(lam)
    ones = [marked.entries[i][0] for i in marked.one_marked()]
    return marked, ones[::-1]


def first_dilation(lam: Overpartition, p: int) -> Overpartition:
    """Raise the overlined 1-marked part at position p by one, moving its
    overline one position up (positions count 1-marked parts from the top)."""
    marked, ones = _one_marked_desc(lam)
    n1 = len(ones)
    if not 1 <= p < n1:
        raise InvalidMove(f"p must satisfy 1 <= p < {n1}, got {p}")
    target = ones[p - 1]
    if not target.overlined:
        raise InvalidMove(f"1-marked part at position {p} is not overlined")
    if p > 1 and ones[p - 2].overlined:
        raise InvalidMove(f"1-marked part at position {p-1} must be non-overlined")
    t = target.size
    parts = list(lam.parts)
    parts.remove(target)
    # Whether a mark is shared between sizes t and t-1 (the exemption was
    # used) or not, the net multiset edit is the same: the overlined t
    # becomes a plain t+1.
    parts.append(Part(t + 1, False))
    if p > 1:
        neighbour = ones[p - 2]
        parts.remove(neighbour)
        parts.append(Part(neighbour.size, True))
    return _rebuild(parts, "first dilation")


def first_reduction(lam: Overpartition, p: int) -> Overpartition:
    """Inverse of first_dilation at the same position: weight -1."""
    marked, ones = _one_marked_desc(lam)
    n1 = len(ones)
    if not 1 <= p < n1:
        raise InvalidMove(f"p must satisfy 1 <= p < {n1}, got {p}")
    target = ones[p - 1]
    if target.overlined:
        raise InvalidMove(f"1-marked part at position {p} is not non-overlined")
    if p > 1 and not ones[p - 2].overlined:
        raise InvalidMove(f"1-marked part at position {p-1} must be overlined")
    t = target.size
    has_plain_t1 = any(q.size == t + 1 and not q.overlined for q in lam.parts)
    has_over_t1 = any(q.size == t + 1 and q.overlined for q in lam.parts)
    parts = list(lam.parts)
    if has_plain_t1 and not has_over_t1:
        # the smallest-marked plain t+1 drops to t; the freed overline lands on t
        parts.remove(Part(t + 1, False))
        parts.append(Part(t, True))
        parts.remove(target)
        parts.append(Part(t, False))
    else:
        if t == 1:
            raise InvalidMove("cannot reduce a part of size 1 at the bottom")
        parts.remove(target)
        parts.append(Part(t - 1, True))
    if p > 1:
        neighbour = ones[p - 2]
        parts.remove(neighbour)
        parts.append(Part(neighbour.size, False))
    return _rebuild(parts, "first reduction")


def _cluster_state(nu: Overpartition):
    return clusters(gg_mark(nu))


def _odd_entry(decomp, j):
    odds = decomp.odd_entries(j)
    if len(odds) > 1:  # ruled out structurally; guards corrupted input
        raise InvalidMove(f"cluster {j} holds more than one odd part")
    return odds[0] if odds else None


def _toggle(part: Part, delta: int) -> Part:
    return Part(part.size + delta, not part.overlined)


def second_dilation(nu: Overpartition, p: int) -> Overpartition:
    """Push the odd part of cluster p one cluster up, adding 2 to the weight
    (or make it even in place when p = 1, adding 1)."""
    decomp = _cluster_state(nu)
    if not 1 <= p <= decomp.n1:
        raise InvalidMove(f"p must satisfy 1 <= p <= {decomp.n1}, got {p}")
    odd = _odd_entry(decomp, p)
    if odd is None:
        raise InvalidMove(f"cluster {p} holds no odd part")
    odd_part, _ = odd
    parts = list(nu.parts)
    parts.remove(odd_part)
    parts.append(_toggle(odd_part, +1))
    if p > 1:
        if _odd_entry(decomp, p - 1) is not None:
            raise InvalidMove(f"cluster {p-1} must hold no odd part")
        near = alpha_set(decomp, p - 1)
        if near:
            (b,) = near
            target = decomp.row_entry(p - 1, b)
        else:
            chain = decomp.cluster(p - 1)
            smallest = min(q.size for q, _ in chain)
            target = max((pm for pm in chain if pm[0].size == smallest), key=lambda pm: pm[1])[0]
        parts.remove(target)
        parts.append(_toggle(target, +1))
    return _rebuild(parts, "second dilation")


def second_reduction(nu: Overpartition, p: int) -> Overpartition:
    """Inverse of second_dilation at the same position: weight -2 (or -1)."""
    decomp = _cluster_state(nu)
    if not 1 <= p <= decomp.n1:
        raise InvalidMove(f"p must satisfy 1 <= p <= {decomp.n1}, got {p}")
    parts = list(nu.parts)
    if p == 1:
        if _odd_entry(decomp, 1) is not None:
            raise InvalidMove("cluster 1 must hold no odd part")
        chain = decomp.cluster(1)
        largest = max(q.size for q, _ in chain)
        target = min((pm for pm in chain if pm[0].size == largest), key=lambda pm: pm[1])[0]
        parts.remove(target)
        parts.append(_toggle(target, -1))
        return _rebuild(parts, "second reduction")
    odd = _odd_entry(decomp, p - 1)
    if odd is None:
        raise InvalidMove(f"cluster {p-1} holds no odd part")
    if _odd_entry(decomp, p) is not None:
        raise InvalidMove(f"cluster {p} must hold no odd part")
    odd_part, _ = odd
    parts.remove(odd_part)
    parts.append(_toggle(odd_part, -1))
    near = alpha_set(decomp, p - 1)
    if near:
        (b,) = near
        target = decomp.row_entry(p, b)
        if target is None:
            raise InvalidMove(f"cluster {p} has no part of mark {b}")
        parts.remove(target)
        parts.append(_toggle(target, -1))
        return _rebuild(parts, "second reduction")
    # The far-cluster branch: the written tie rule does not invert the
    # dilation on size ties, so locate the unique target whose lowering
    # the dilation sends back to `nu` (exhaustively unique; see tests).
    tried: set[Part] = set()
    for target, _mark in decomp.cluster(p):
        if target in tried:
            continue
        tried.add(target)
        cand = list(parts)
        cand.remove(target)
        cand.append(_toggle(target, -1))
        try:
            result = Overpartition(cand)
        except DuplicateOverline:
            continue
        try:
            if second_dilation(result, p) == nu:
                return result
        except InvalidMove:
            continue
    raise InvalidMove(f"state is not a dilation image at position {p}")


_MOVES = {
    FIRST_DILATION: (first_dilation, +1),
    FIRST_REDUCTION: (first_reduction, -1),
    SECOND_DILATION: (second_dilation, None),
    SECOND_REDUCTION: (second_reduction, None),
}


def apply_move(kind: str, lam: Overpartition, p: int) -> MoveReceipt:
    if kind not in _MOVES:
        raise InvalidMove(f"unknown move kind {kind!r}")
    fn, _ = _MOVES[kind]
    after = fn(lam, p)
    return MoveReceipt(kind, p, lam, after, after.weight - lam.weight)
