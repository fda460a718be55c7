"""Command-line front end.

Exit status: 0 = all checks passed, 1 = a mathematical mismatch was found,
2 = usage or configuration error.
"""

from __future__ import annotations

import argparse
import json
import sys

from .bailey import EVEN_MODULUS, ODD_MODULUS, run_chain
from .bijections import (
    NegativeDistinctPartition,
    double_parts,
    halve_parts,
    odd_merge,
    odd_split,
    overline_merge,
    overline_split,
    shift_overline,
    switch_smallest,
)
from .errors import ChainBroken, GGMarkError
from .harness import (
    RunConfig,
    first_mismatch,
    parse_k_range,
    rows_to_csv,
    rows_to_json,
    run_count_grid,
    run_identity_check,
    workers_from_env,
)
from .marking import clusters, gg_mark, gordon_mark
from .moves import apply_move
from .overpartitions import Overpartition

EXIT_OK = 0
EXIT_MISMATCH = 1
EXIT_USAGE = 2


def _write(text: str, path):
    if path:
        with open(path, "w", encoding="utf-8") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)


def _build_parser() -> argparse.ArgumentParser:
    top = argparse.ArgumentParser(prog="ggmark", description=__doc__)
    sub = top.add_subparsers(dest="command", required=True)

    def common(p):
        p.add_argument("--output", default=None, help="write the report here instead of stdout")
        p.add_argument("--format", dest="fmt", default="json", choices=("json", "csv"))
        p.add_argument("--workers", type=int, default=None, help="worker processes (default: GGMARK_WORKERS or 1)")
        p.add_argument("--unsafe", action="store_true", help="lift the n/order caps")

    p = sub.add_parser("verify", help="check counting equalities or series identities")
    p.add_argument("--family", default=None, choices=("O", "E", "C", "Bclassic"))
    p.add_argument("--k", default="2", help="k value or range, e.g. 3 or 2..4")
    p.add_argument("--i", type=int, default=None)
    p.add_argument("--n-max", type=int, default=12)
    p.add_argument("--identity", default=None, help="identity name, e.g. O=P, E=F, over4, R-R-BB1-e-1")
    p.add_argument("--order", type=int, default=40)
    common(p)

    p = sub.add_parser("count", help="emit class and congruence counts per cell")
    p.add_argument("--family", required=True, choices=("O", "E", "C", "Bclassic"))
    p.add_argument("--k", default="2")
    p.add_argument("--i", type=int, default=None, help="restrict to one i (default: all i < k)")
    p.add_argument("--n-max", type=int, default=12)
    p.add_argument("--by-parts", action="store_true", help="also emit per-part-count rows")
    common(p)

    p = sub.add_parser("mark", help="print the marking of an overpartition")
    p.add_argument("--scheme", required=True, choices=("gordon", "gg"))
    p.add_argument("--input", required=True, help="overpartition text, e.g. '1,2,~4'")
    p.add_argument("--clusters", action="store_true", help="include the cluster decomposition (gg only)")
    common(p)

    p = sub.add_parser("biject", help="apply one of the structural bijections")
    p.add_argument("--theorem", required=True, choices=("N1", "final", "double", "switch", "shift"))
    p.add_argument("--direction", required=True, choices=("fwd", "inv"))
    p.add_argument("--input", required=True, help="overpartition text")
    p.add_argument("--aux", default="", help="marker parts for inverse maps, e.g. '-1,-3'")
    common(p)

    p = sub.add_parser("move", help="apply a dilation or reduction")
    p.add_argument("--kind", required=True,
                   choices=("firstDilation", "firstReduction", "secondDilation", "secondReduction"))
    p.add_argument("--p", type=int, required=True)
    p.add_argument("--input", required=True)
    common(p)

    p = sub.add_parser("bailey", help="run a transformation chain and report verdicts")
    p.add_argument("--k", type=int, required=True)
    p.add_argument("--i", type=int, required=True)
    p.add_argument("--variant", required=True, choices=(ODD_MODULUS, EVEN_MODULUS))
    p.add_argument("--order", type=int, default=40)
    p.add_argument("--n-max", type=int, default=6)
    common(p)
    return top


def _cmd_verify(args) -> int:
    if args.identity:
        config = RunConfig("verify", order=args.order, unsafe=args.unsafe)
        config.validate()
        ks = parse_k_range(args.k)
        reports = []
        for k in ks:
            i_values = (args.i,) if args.i else range(1, k)
            for i in i_values:
                reports.append(run_identity_check(args.identity, k, i, args.order))
        _write(json.dumps(reports, indent=1, sort_keys=True) + "\n", args.output)
        return EXIT_OK if all(r["match"] for r in reports) else EXIT_MISMATCH
    if not args.family:
        raise GGMarkError("verify needs --family or --identity")
    config = RunConfig(
        "verify",
        family=args.family,
        k_values=parse_k_range(args.k),
        n_max=args.n_max,
        workers=args.workers or workers_from_env(),
        unsafe=args.unsafe,
        fmt=args.fmt,
    )
    config.validate()
    rows = run_count_grid(config)
    text = rows_to_csv(rows) if args.fmt == "csv" else rows_to_json(rows)
    _write(text, args.output)
    bad = first_mismatch(rows)
    if bad:
        sys.stderr.write(f"mismatch at family={bad[0]} k={bad[1]} i={bad[2]} n={bad[3]}: {bad[5]} != {bad[6]}\n")
        return EXIT_MISMATCH
    return EXIT_OK


def _cmd_count(args) -> int:
    config = RunConfig(
        "count",
        family=args.family,
        k_values=parse_k_range(args.k),
        n_max=args.n_max,
        workers=args.workers or workers_from_env(),
        unsafe=args.unsafe,
        fmt=args.fmt,
        by_parts=args.by_parts,
    )
    config.validate()
    rows = run_count_grid(config)
    if args.i is not None:
        rows = [r for r in rows if r[2] == args.i]
    text = rows_to_csv(rows) if args.fmt == "csv" else rows_to_json(rows)
    _write(text, args.output)
    return EXIT_OK


def _cmd_mark(args) -> int:
    lam = Overpartition.parse(args.input)
    marked = gordon_mark(lam) if args.scheme == "gordon" else gg_mark(lam)
    payload = marked.to_json_dict()
    if args.clusters:
        payload = clusters(marked).to_json_dict()
    _write(json.dumps(payload, indent=1, sort_keys=True) + "\n", args.output)
    return EXIT_OK


def _cmd_biject(args) -> int:
    lam = Overpartition.parse(args.input)
    aux = NegativeDistinctPartition.parse(args.aux)
    if args.theorem == "N1":
        if args.direction == "fwd":
            tau, mu = overline_split(lam)
            payload = {"tau": tau.serialize(), "residue": mu.serialize(),
                       "weights": {"tau": tau.weight, "residue": mu.weight}}
        else:
            payload = {"result": overline_merge(aux, lam).serialize()}
    elif args.theorem == "final":
        if args.direction == "fwd":
            xi, omega = odd_split(lam)
            payload = {"xi": xi.serialize(), "residue": omega.serialize(),
                       "weights": {"xi": xi.weight, "residue": omega.weight}}
        else:
            payload = {"result": odd_merge(aux, lam).serialize()}
    elif args.theorem == "double":
        out = double_parts(lam) if args.direction == "fwd" else halve_parts(lam)
        payload = {"result": out.serialize()}
    elif args.theorem == "switch":
        direction = "to_overlined" if args.direction == "fwd" else "to_plain"
        payload = {"result": switch_smallest(lam, direction).serialize()}
    else:
        direction = "down" if args.direction == "fwd" else "up"
        payload = {"result": shift_overline(lam, direction).serialize()}
    _write(json.dumps(payload, indent=1, sort_keys=True) + "\n", args.output)
    return EXIT_OK


def _cmd_move(args) -> int:
    lam = Overpartition.parse(args.input)
    receipt = apply_move(args.kind, lam, args.p)
    _write(json.dumps(receipt.to_json_dict(), indent=1, sort_keys=True) + "\n", args.output)
    return EXIT_OK


def _cmd_bailey(args) -> int:
    config = RunConfig("bailey", order=args.order, unsafe=args.unsafe)
    config.validate()
    try:
        report = run_chain(args.k, args.i, args.variant, args.order, n_max=args.n_max)
    except ChainBroken as exc:
        sys.stderr.write(f"{exc}\n")
        return EXIT_MISMATCH
    _write(json.dumps(report.to_json_dict(), indent=1, sort_keys=True) + "\n", args.output)
    return EXIT_OK if report.all_ok else EXIT_MISMATCH


_HANDLERS = {
    "verify": _cmd_verify,
    "count": _cmd_count,
    "mark": _cmd_mark,
    "biject": _cmd_biject,
    "move": _cmd_move,
    "bailey": _cmd_bailey,
}


def main(argv=None) -> int:
    parser = _build_parser()
    args = parser.parse_args(argv)
    try:
        return _HANDLERS[args.command](args)
    except GGMarkError as exc:
        sys.stderr.write(f"error: {exc}\n")
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
