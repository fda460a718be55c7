"""Overpartitions: canonical representation, statistics, text format, enumeration.

An overpartition is a partition in which the first occurrence of each part
size may additionally be overlined.  Parts are kept in the canonical
ascending order

    1bar < 1 < 2bar < 2 < 3bar < ...

i.e. the overlined copy of a size precedes the plain copies.  Ordinary
partitions are overpartitions with no overlined part.
"""

from __future__ import annotations

import json
from bisect import bisect_right
from typing import Callable, Iterator, NamedTuple, Optional

from .errors import DuplicateOverline, InvalidInput, ParseError


class Part(NamedTuple):
    size: int
    overlined: bool = False

    @property
    def key(self) -> tuple[int, int]:
        """Sort key realizing the canonical order (overlined first per size)."""
        return (self.size, 0 if self.overlined else 1)

    def __str__(self) -> str:
        return f"~{self.size}" if self.overlined else str(self.size)


class Overpartition:
    """Immutable overpartition with parts in canonical ascending order."""

    __slots__ = ("parts", "weight", "length")

    def __init__(self, parts=()):
        norm = []
        for p in parts:
            if not isinstance(p, Part):
                p = Part(int(p[0]), bool(p[1]))
            if p.size < 1:
                raise ParseError(f"part size must be >= 1, got {p.size}")
            norm.append(p)
        norm.sort(key=lambda p: p.key)
        for a, b in zip(norm, norm[1:]):
            if a.overlined and b.overlined and a.size == b.size:
                raise DuplicateOverline(f"two overlined parts of size {a.size}")
        object.__setattr__(self, "parts", tuple(norm))
        object.__setattr__(self, "weight", sum(p.size for p in norm))
        object.__setattr__(self, "length", len(norm))

    def __setattr__(self, *a):  # pragma: no cover
        raise AttributeError("Overpartition is immutable")

    # -- text format ---------------------------------------------------

    @classmethod
    def parse(cls, text: str) -> "Overpartition":
        """Parse comma-separated parts; '~' prefixes an overlined part."""
        text = text.strip()
        if not text:
            return cls()
        parts = []
        for tok in text.split(","):
            tok = tok.strip()
            overlined = tok.startswith("~")
            body = tok[1:] if overlined else tok
            if not body.isdigit():
                raise ParseError(f"bad token {tok!r}")
            size = int(body)
            if size < 1:
                raise ParseError(f"bad token {tok!r}: size must be >= 1")
            parts.append(Part(size, overlined))
        return cls(parts)

    def serialize(self) -> str:
        return ",".join(str(p) for p in self.parts)

    # -- JSON ----------------------------------------------------------

    def to_json_dict(self) -> dict:
        return {"parts": [{"size": p.size, "overlined": p.overlined} for p in self.parts]}

    @classmethod
    def from_json_dict(cls, d: dict) -> "Overpartition":
        return cls(Part(e["size"], bool(e["overlined"])) for e in d["parts"])

    def to_json(self) -> str:
        return json.dumps(self.to_json_dict(), separators=(",", ":"))

    @classmethod
    def from_json(cls, s: str) -> "Overpartition":
        return cls.from_json_dict(json.loads(s))

    # -- queries -------------------------------------------------------

    def stats(self) -> "PartitionStats":
        return PartitionStats(self.parts)

    @property
    def has_overline(self) -> bool:
        return any(p.overlined for p in self.parts)

    @property
    def has_odd(self) -> bool:
        return any(p.size % 2 for p in self.parts)

    @property
    def smallest(self) -> Optional[Part]:
        return self.parts[0] if self.parts else None

    def sizes(self) -> tuple[int, ...]:
        return tuple(p.size for p in self.parts)

    # -- protocol ------------------------------------------------------

    def __iter__(self):
        return iter(self.parts)

    def __len__(self):
        return self.length

    def __eq__(self, other):
        if isinstance(other, Overpartition):
            return self.parts == other.parts
        return NotImplemented

    def __hash__(self):
        return hash(self.parts)

    def __repr__(self):
        return f"Overpartition({self.serialize()!r})"


class PartitionStats:
    """Part multiplicities and the cumulative overline/odd counters."""

    __slots__ = ("_f", "_fbar", "_ov_sizes", "_odd_sizes", "weight", "length")

    def __init__(self, parts):
        f: dict[int, int] = {}
        fbar: dict[int, int] = {}
        ov, odd = [], []
        w = n = 0
        for p in parts:
            if p.overlined:
                fbar[p.size] = fbar.get(p.size, 0) + 1
                ov.append(p.size)
            else:
                f[p.size] = f.get(p.size, 0) + 1
            if p.size % 2:
                odd.append(p.size)
            w += p.size
            n += 1
        self._f, self._fbar = f, fbar
        self._ov_sizes = sorted(ov)
        self._odd_sizes = sorted(odd)
        self.weight, self.length = w, n

    def f(self, t: int) -> int:
        """Multiplicity of the non-overlined part t."""
        return self._f.get(t, 0)

    def fbar(self, t: int) -> int:
        """Multiplicity (0 or 1) of the overlined part t."""
        return self._fbar.get(t, 0)

    def V(self, s: int) -> int:
        """Number of overlined parts of size at most s."""
        return bisect_right(self._ov_sizes, s)

    def O_odd(self, s: int) -> int:
        """Number of odd parts of size at most s (ordinary partitions only)."""
        if self._ov_sizes:
            raise InvalidInput("O_odd is defined only for ordinary partitions")
        return bisect_right(self._odd_sizes, s)

    @property
    def max_size(self) -> int:
        m = 0
        if self._f:
            m = max(self._f)
        if self._fbar:
            m = max(m, max(self._fbar))
        return m


# -- enumeration -------------------------------------------------------


def _gen_raw(remaining: int, min_size: int, ov_at_min: bool, overlines: bool):
    """Yield canonical raw part tuples of total weight `remaining`.

    Output order is lexicographic on the canonical key sequence, which makes
    every enumeration below deterministic and reproducible.
    """
    if remaining == 0:
        yield ()
        return
    for size in range(min_size, remaining + 1):
        if overlines and (size > min_size or ov_at_min):
            head = ((size, True),)
            for tail in _gen_raw(remaining - size, size, False, overlines):
                yield head + tail
        head = ((size, False),)
        for tail in _gen_raw(remaining - size, size, False, overlines):
            yield head + tail


def iter_raw_overpartitions(n: int, overlines: bool = True) -> Iterator[tuple]:
    """Raw ((size, overlined), ...) tuples of weight n, canonical-lex order."""
    if n < 0:
        raise InvalidInput("weight must be nonnegative")
    return _gen_raw(n, 1, True, overlines)


def enumerate_overpartitions(
    n: int, predicate: Optional[Callable[[Overpartition], bool]] = None
) -> Iterator[Overpartition]:
    """Yield each overpartition of n exactly once, lexicographic order."""
    for raw in iter_raw_overpartitions(n, overlines=True):
        lam = Overpartition(Part(s, o) for s, o in raw)
        if predicate is None or predicate(lam):
            yield lam


def enumerate_partitions(
    n: int, predicate: Optional[Callable[[Overpartition], bool]] = None
) -> Iterator[Overpartition]:
    """Yield ordinary partitions of n (no overlined parts)."""
    for raw in iter_raw_overpartitions(n, overlines=False):
        lam = Overpartition(Part(s, o) for s, o in raw)
        if predicate is None or predicate(lam):
            yield lam
