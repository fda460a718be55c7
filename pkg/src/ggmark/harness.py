"""Run configuration, report assembly, and the verification grid runner.

Verification cells (family, k, i, n) are independent; the runner can fan
them out over a process pool (one task per weight n, all cells of that
weight computed in a single enumeration pass).  Reports are assembled in a
deterministic order so identical configurations produce identical bytes.
"""

from __future__ import annotations

import json
import os
from dataclasses import dataclass, field
from typing import Optional, Sequence

from .errors import InvalidInput
from .families import ClassId, count_cells, grid_cells
from .identities import identity_lhs_multisum, identity_rhs

CSV_SCHEMA = "# ggmark-csv v1 family,k,i,n,m,class_count,congruence_count,match"

HARD_N_MAX = 32
HARD_ORDER = 120


@dataclass
class RunConfig:
    command: str
    family: str = "O"
    k_values: Sequence[int] = (2,)
    n_max: int = 12
    order: int = 40
    output: Optional[str] = None
    fmt: str = "json"
    workers: int = 1
    unsafe: bool = False
    by_parts: bool = False

    def validate(self):
        if self.fmt not in ("json", "csv"):
            raise InvalidInput(f"unknown format {self.fmt!r}")
        if not self.unsafe:
            if self.n_max > HARD_N_MAX:
                raise InvalidInput(
                    f"n_max {self.n_max} exceeds the cap {HARD_N_MAX}; pass --unsafe to override"
                )
            if self.order > HARD_ORDER:
                raise InvalidInput(
                    f"order {self.order} exceeds the cap {HARD_ORDER}; pass --unsafe to override"
                )
        if self.workers < 1:
            raise InvalidInput("workers must be >= 1")


def workers_from_env(default: int = 1) -> int:
    raw = os.environ.get("GGMARK_WORKERS", "")
    if raw.strip():
        try:
            return max(1, int(raw))
        except ValueError:
            raise InvalidInput(f"GGMARK_WORKERS must be an integer, got {raw!r}") from None
    return default


def parse_k_range(text: str) -> tuple[int, ...]:
    """'3' -> (3,); '2..4' -> (2, 3, 4)."""
    text = text.strip()
    if ".." in text:
        lo, hi = text.split("..", 1)
        values = tuple(range(int(lo), int(hi) + 1))
    else:
        values = (int(text),)
    if not values or min(values) < 1:
        raise InvalidInput(f"bad k range {text!r}")
    return values


def _count_task(args) -> tuple[int, list]:
    family, ks, n, by_parts = args
    rows = []
    for cell, members, cong in count_cells(family, ks, n):
        rows.append((cell.family, cell.k, cell.i, n, None, members, cong))
    if by_parts:
        from .families import count_class, count_congruence

        for cell in grid_cells(family, ks):
            for m in range(0, n + 1):
                a = count_class(cell, n, m)
                b = count_congruence(cell, n, m)
                if a or b:
                    rows.append((cell.family, cell.k, cell.i, n, m, a, b))
    return n, rows


def run_count_grid(config: RunConfig) -> list[tuple]:
    """Rows (family, k, i, n, m, class_count, congruence_count), sorted."""
    tasks = [(config.family, tuple(config.k_values), n, config.by_parts) for n in range(config.n_max + 1)]
    if config.workers > 1:
        from multiprocessing import Pool

        with Pool(config.workers) as pool:
            results = pool.map(_count_task, tasks)
    else:
        results = [_count_task(t) for t in tasks]
    rows: list[tuple] = []
    for _, chunk in sorted(results, key=lambda item: item[0]):
        rows.extend(chunk)
    rows.sort(key=lambda r: (r[0], r[1], r[2], r[3], -1 if r[4] is None else r[4]))
    return rows


def rows_to_csv(rows: list[tuple]) -> str:
    lines = [CSV_SCHEMA]
    for family, k, i, n, m, a, b in rows:
        lines.append(
            f"{family},{k},{i},{n},{'' if m is None else m},{a},{b},{1 if a == b else 0}"
        )
    return "\n".join(lines) + "\n"


def rows_to_json(rows: list[tuple]) -> str:
    payload = [
        {
            "family": family,
            "k": k,
            "i": i,
            "n": n,
            "m": m,
            "classCount": a,
            "congruenceCount": b,
            "match": a == b,
        }
        for family, k, i, n, m, a, b in rows
    ]
    return json.dumps(payload, indent=1, sort_keys=True) + "\n"


def first_mismatch(rows: list[tuple]) -> Optional[tuple]:
    for row in rows:
        if row[4] is None and row[5] != row[6]:
            return row
    return None


def run_identity_check(name: str, k: int, i: int, order: int) -> dict:
    lhs = identity_lhs_multisum(name, k, i, order)
    rhs = identity_rhs(name, k, i, order)
    ok = lhs.matches(rhs, order)
    first_bad = None
    if not ok:
        for e in range(order):
            if lhs.coefficient(e) != rhs.coefficient(e):
                first_bad = e
                break
    return {
        "identity": name,
        "k": k,
        "i": i,
        "order": order,
        "match": ok,
        "firstMismatch": first_bad,
    }
