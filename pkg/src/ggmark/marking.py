"""Greedy mark assignment for overpartitions and the cluster decomposition.

Two schemes are implemented, both single left-to-right passes over the parts
in canonical order, always taking the smallest admissible mark:

* ``gordon_mark`` - parts of size t conflict with parts of sizes t and t-1
  (both flavors); when the overlined copy of t is present, the smallest mark
  used at size t-1 is exempt and may be reused once at size t.
* ``gollnitz_gordon_mark`` - the even/odd refinement: non-overlined odd and
  overlined even parts are pinned to mark 1; overlined odd parts avoid the
  marks of the preceding even size; non-overlined even parts follow a
  three-way case split with its own single-use exemption.

``clusters`` tiles a Gollnitz-Gordon-marked overpartition into chains of
increasing mark anchored at the 1-marked parts, built from the smallest
anchor upward.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from typing import Optional

from .errors import InvalidInput
from .overpartitions import Overpartition, Part


@dataclass(frozen=True)
class MarkedOverpartition:
    """Parts in canonical order, each with a positive integer mark."""

    entries: tuple[tuple[Part, int], ...]
    row_counts: tuple[int, ...]
    scheme: str

    def underlying(self) -> Overpartition:
        return Overpartition(p for p, _ in self.entries)

    def marks(self) -> tuple[int, ...]:
        return tuple(m for _, m in self.entries)

    def row(self, r: int) -> tuple[Part, ...]:
        return tuple(p for p, m in self.entries if m == r)

    def one_marked(self) -> tuple[int, ...]:
        """Indices (into entries) of the 1-marked parts, ascending."""
        return tuple(idx for idx, (_, m) in enumerate(self.entries) if m == 1)

    @property
    def max_mark(self) -> int:
        return len(self.row_counts)

    def to_json_dict(self) -> dict:
        return {
            "entries": [
                {"size": p.size, "overlined": p.overlined, "mark": m}
                for p, m in self.entries
            ],
            "rows": list(self.row_counts),
        }

    def to_json(self) -> str:
        return json.dumps(self.to_json_dict(), separators=(",", ":"))


def _finish(parts, marks, scheme) -> MarkedOverpartition:
    rows: dict[int, int] = {}
    for m in marks:
        rows[m] = rows.get(m, 0) + 1
    row_counts = tuple(rows.get(r, 0) for r in range(1, max(rows) + 1)) if rows else ()
    return MarkedOverpartition(tuple(zip(parts, marks)), row_counts, scheme)


def _mex(forbidden) -> int:
    m = 1
    while m in forbidden:
        m += 1
    return m


def gordon_mark(lam: Overpartition) -> MarkedOverpartition:
    parts = lam.parts
    overlined_sizes = {p.size for p in parts if p.overlined}
    marks_at: dict[int, set[int]] = {}
    marks = []
    for p in parts:
        same = marks_at.get(p.size, set())
        prev = marks_at.get(p.size - 1, set())
        if p.size in overlined_sizes and prev:
            # single-use exemption; reuse is blocked afterwards by `same`
            forbidden = same | (prev - {min(prev)})
        else:
            forbidden = same | prev
        m = _mex(forbidden)
        marks.append(m)
        marks_at.setdefault(p.size, set()).add(m)
    return _finish(parts, marks, "gordon")


def gollnitz_gordon_mark(lam: Overpartition) -> MarkedOverpartition:
    parts = lam.parts
    overlined_sizes = {p.size for p in parts if p.overlined}
    plain_sizes = {p.size for p in parts if not p.overlined}
    marks_at: dict[int, set[int]] = {}
    ov_odd_mark: dict[int, int] = {}
    even_plain_marks: dict[int, set[int]] = {}
    marks = []
    for p in parts:
        s = p.size
        odd = s % 2 == 1
        if (odd and not p.overlined) or (not odd and p.overlined):
            m = 1
        elif odd:  # overlined odd: differ from every mark at the even size below
            m = _mex(marks_at.get(s - 1, set()))
            ov_odd_mark[s] = m
        else:  # non-overlined even, size s = 2j+2
            prev = set(marks_at.get(s - 2, set()))
            if s - 1 in ov_odd_mark:
                prev.add(ov_odd_mark[s - 1])
            equal = even_plain_marks.get(s, set())
            plain_odd_below = (s - 1) in plain_sizes
            overlined_twin = s in overlined_sizes
            if 1 in prev or (not plain_odd_below and not overlined_twin):
                m = _mex(prev | equal)
            else:
                # mark 1 is barred; the smallest neighbouring mark is exempt once
                exempt = {min(prev)} if prev else set()
                m = _mex({1} | (prev - exempt) | equal)
            even_plain_marks.setdefault(s, set()).add(m)
        marks.append(m)
        marks_at.setdefault(s, set()).add(m)
    return _finish(parts, marks, "gollnitz-gordon")


gg_mark = gollnitz_gordon_mark


@dataclass(frozen=True)
class ClusterDecomposition:
    """Tiling of a marked overpartition into chains anchored at 1-marked parts.

    ``chains[0]`` holds entry indices of the chain anchored at the smallest
    1-marked part; conventional indices count the other way, so
    ``cluster(j)`` with j = 1 .. n1 returns the (part, mark) list of the
    chain whose anchor is the j-th largest.
    """

    marked: MarkedOverpartition
    chains: tuple[tuple[int, ...], ...]

    @property
    def n1(self) -> int:
        return len(self.chains)

    def cluster(self, j: int) -> tuple[tuple[Part, int], ...]:
        if not 1 <= j <= self.n1:
            raise InvalidInput(f"cluster index {j} out of range 1..{self.n1}")
        return tuple(self.marked.entries[idx] for idx in self.chains[self.n1 - j])

    def cluster_indices(self, j: int) -> tuple[int, ...]:
        if not 1 <= j <= self.n1:
            raise InvalidInput(f"cluster index {j} out of range 1..{self.n1}")
        return self.chains[self.n1 - j]

    def row_entry(self, j: int, r: int) -> Optional[Part]:
        """Part of mark r in cluster j, or None."""
        for part, mark in self.cluster(j):
            if mark == r:
                return part
        return None

    def odd_entries(self, j: int) -> tuple[tuple[Part, int], ...]:
        return tuple((p, m) for p, m in self.cluster(j) if p.size % 2)

    def to_json_dict(self) -> dict:
        return {
            "marked": self.marked.to_json_dict(),
            "clusters": [list(chain) for chain in self.chains],
        }


def clusters(marked: MarkedOverpartition) -> ClusterDecomposition:
    if marked.scheme != "gollnitz-gordon":
        raise InvalidInput("cluster decomposition requires a gollnitz-gordon marking")
    entries = marked.entries
    by_mark: dict[int, list[int]] = {}
    for idx, (_, m) in enumerate(entries):
        by_mark.setdefault(m, []).append(idx)
    anchors = by_mark.get(1, [])
    n1 = len(anchors)
    sizes_by_mark = {
        m: {entries[idx][0].size for idx in idxs} for m, idxs in by_mark.items()
    }
    consumed: set[int] = set()
    chains: list[tuple[int, ...]] = []
    for pos, anchor_idx in enumerate(anchors):  # smallest anchor first
        anchor = entries[anchor_idx][0]
        nxt = entries[anchors[pos + 1]][0] if pos + 1 < n1 else None
        consumed.add(anchor_idx)
        chain = [anchor_idx]
        singleton = nxt is not None and (
            anchor.size == nxt.size
            or (anchor.size % 2 == 1 and nxt.size - anchor.size == 1)
        )
        if not singleton:
            prev = anchor
            b = 2
            while True:
                best = None
                for idx in by_mark.get(b, ()):
                    if idx in consumed:
                        continue
                    cand = entries[idx][0]
                    d = cand.size - prev.size
                    if prev.size % 2 == 1:
                        ok = d == 1
                    elif prev.size + 2 in sizes_by_mark.get(b - 1, ()):
                        ok = 0 <= d <= 1
                    else:
                        ok = 0 <= d <= 2
                    if ok and (best is None or cand.key < entries[best][0].key):
                        best = idx
                if best is None:
                    break
                consumed.add(best)
                chain.append(best)
                prev = entries[best][0]
                b += 1
        chains.append(tuple(chain))
    return ClusterDecomposition(marked, tuple(chains))


def alpha_set(decomp: ClusterDecomposition, j: int) -> set[int]:
    """Rows where clusters j and j+1 sit within distance two of each other.

    A row r qualifies when both clusters have an r-marked part and the size
    gap is at most 2, strictly less when either part is odd.
    """
    if not 1 <= j < decomp.n1:
        raise InvalidInput(f"need 1 <= j < {decomp.n1}, got {j}")
    upper = {m: p for p, m in decomp.cluster(j)}
    lower = {m: p for p, m in decomp.cluster(j + 1)}
    out = set()
    for r in upper.keys() & lower.keys():
        gap = upper[r].size - lower[r].size
        limit = 2
        if upper[r].size % 2 or lower[r].size % 2:
            limit = 1
        if gap <= limit:
            out.add(r)
    return out
