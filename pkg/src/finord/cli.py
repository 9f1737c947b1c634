"""Batch command-line front end.

Exit status: 0 on success, 1 if a law check fails, 2 on usage or input errors.
Every error is reported as a single line on stderr.
"""
from __future__ import annotations

import argparse
import json
import os
import sys
from typing import Callable, Sequence

from . import algebra
from .core import (MonMap, OrdError, Tag, compose, format_map, hom_count,
                   hom_poset, parse_map)
from .duality import FUNCTORS, apply_functor
from .laws import SUITES, LawReport, run_suites

PROG = "finord"
BOUND_ENV = "ORD_CHECK_BOUND"

ACTIONS: dict[str, Callable[[MonMap, MonMap], MonMap]] = {
    "covT": algebra.act_cov_t,
    "contraI": algebra.act_contra_i,
    "sigmaT": algebra.sigma_act_t,
    "sigmaI": algebra.sigma_act_i,
    "osum": algebra.osum2_map,
    "join": algebra.join_it_map,
    "glue": algebra.glue,
}

PAIRINGS: dict[str, Callable[[MonMap, MonMap], MonMap]] = {
    "it": algebra.pair_it,
    "sigma": algebra.sigma_pair,
}


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise UsageError(message)


def _natural(text: str) -> int:
    try:
        value = int(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"{text!r} is not a natural number")
    if value < 0:
        raise argparse.ArgumentTypeError(f"{text!r} is negative")
    return value


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog=PROG, description=__doc__.splitlines()[0])
    parser.add_argument("--format", choices=("text", "json"), default="text")
    sub = parser.add_subparsers(dest="command", required=True,
                                parser_class=_Parser)

    p = sub.add_parser("apply", help="apply a named functor to a map")
    p.add_argument("functor", choices=list(FUNCTORS))
    p.add_argument("map")

    p = sub.add_parser("hom", help="enumerate a hom-set")
    p.add_argument("m", type=_natural)
    p.add_argument("n", type=_natural)
    p.add_argument("tag", nargs="?", default="Ord")
    p.add_argument("--order", action="store_true",
                   help="also list the covering relations of the pointwise order")

    p = sub.add_parser("compose", help="first map, then second")
    p.add_argument("first")
    p.add_argument("second")

    p = sub.add_parser("act", help="module actions and monoid products")
    p.add_argument("action", choices=list(ACTIONS))
    p.add_argument("left")
    p.add_argument("right")

    p = sub.add_parser("pair", help="pair an OrdI map with an OrdT map")
    p.add_argument("pairing", choices=list(PAIRINGS))
    p.add_argument("left")
    p.add_argument("right")

    p = sub.add_parser("check", help="run law suites")
    p.add_argument("suite", help="suite name, or 'all'")
    p.add_argument("--bound", type=_natural)
    p.add_argument("--jobs", type=_natural, default=1)

    p = sub.add_parser("table", help="hom-set sizes for every tag")
    p.add_argument("--bound", type=_natural, default=5)
    return parser


def _env_bound() -> int | None:
    raw = os.environ.get(BOUND_ENV)
    if raw is None or raw == "":
        return None
    try:
        return _natural(raw)
    except argparse.ArgumentTypeError as exc:
        raise UsageError(f"{BOUND_ENV}: {exc}") from None


def _dump(obj) -> str:
    return json.dumps(obj, sort_keys=True, separators=(",", ":"))


def _single(args, result: MonMap, **fields) -> tuple[int, str]:
    if args.format == "json":
        return 0, _dump({"command": args.command, **fields,
                         "result": format_map(result)})
    return 0, format_map(result)


def _hom(args) -> tuple[int, str]:
    tag = Tag.parse(args.tag)
    poset = hom_poset(args.m, args.n, tag)
    elements = [format_map(f) for f in poset.elements]
    covers = []
    if args.order:
        idx = range(len(elements))
        for a in idx:
            for b in idx:
                if a == b or not poset.leq[a][b]:
                    continue
                if not any(c not in (a, b) and poset.leq[a][c] and poset.leq[c][b]
                           for c in idx):
                    covers.append((a, b))
    if args.format == "json":
        doc = {"command": "hom", "src": args.m, "dst": args.n,
               "tag": str(tag), "count": len(elements), "elements": elements}
        if args.order:
            doc["covers"] = [list(c) for c in covers]
        return 0, _dump(doc)
    lines = [f"Hom_{tag}({args.m}, {args.n}): {len(elements)} maps"]
    lines += elements
    lines += [f"{elements[a]} < {elements[b]}" for a, b in covers]
    return 0, "\n".join(lines)


def _check(args) -> tuple[int, str]:
    bound = args.bound if args.bound is not None else _env_bound()
    if args.suite == "all":
        names = list(SUITES)
    elif args.suite in SUITES:
        names = [args.suite]
    else:
        raise UsageError(f"unknown suite {args.suite!r}; try 'all' or one of: "
                         + ", ".join(SUITES))
    reports = run_suites(names, bound, jobs=args.jobs)
    status = 0 if all(r.passed for r in reports) else 1
    if args.format == "json":
        return status, _dump({"passed": status == 0,
                              "reports": [r.to_dict() for r in reports]})
    return status, "\n".join(_report_lines(reports))


def _report_lines(reports: Sequence[LawReport]) -> list[str]:
    lines = []
    for r in reports:
        lines.append(r.summary())
        for f in r.failures:
            lines.append(f"  inputs={' '.join(f.inputs)} "
                         f"expected={f.expected} actual={f.actual}")
    return lines


def _table(args) -> tuple[int, str]:
    sizes = range(args.bound + 1)

    def count(m, n, tag):
        return hom_count(m, n, tag) if min(m, n) >= tag.min_size else None

    grid = {str(tag): [[count(m, n, tag) for n in sizes] for m in sizes]
            for tag in Tag}
    if args.format == "json":
        return 0, _dump({"command": "table", "bound": args.bound,
                         "counts": grid})
    width = max(len(str(c)) for rows in grid.values() for row in rows
                for c in row if c is not None) + 1
    cell = lambda c: ("-" if c is None else str(c)).rjust(width)
    lines = []
    for tag, rows in grid.items():
        lines.append(f"{tag}: rows m, columns n")
        lines.append("m\\n " + "".join(cell(n) for n in sizes))
        for m, row in zip(sizes, rows):
            lines.append(f"{m:>3} " + "".join(cell(c) for c in row))
    return 0, "\n".join(lines)


def run_command(args) -> tuple[int, str]:
    """Execute a parsed command, returning the exit status and rendered output."""
    if args.command == "apply":
        f = parse_map(args.map)
        return _single(args, apply_functor(args.functor, f),
                       functor=args.functor, input=format_map(f))
    if args.command == "compose":
        f, g = parse_map(args.first), parse_map(args.second)
        return _single(args, compose(f, g),
                       inputs=[format_map(f), format_map(g)])
    if args.command in ("act", "pair"):
        name = args.action if args.command == "act" else args.pairing
        table = ACTIONS if args.command == "act" else PAIRINGS
        a, b = parse_map(args.left), parse_map(args.right)
        return _single(args, table[name](a, b), name=name,
                       inputs=[format_map(a), format_map(b)])
    if args.command == "hom":
        return _hom(args)
    if args.command == "check":
        return _check(args)
    return _table(args)


def main(argv: Sequence[str] | None = None) -> int:
    try:
        args = build_parser().parse_args(argv)
        status, output = run_command(args)
    except (UsageError, OrdError) as exc:
        message = " ".join(str(exc).split())
        print(f"{PROG}: error: {message}", file=sys.stderr)
        return 2
    print(output)
    return status


if __name__ == "__main__":
    sys.exit(main())
