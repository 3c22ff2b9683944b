"""Command-line front end: ``gendw compute|verify|order|report``."""
from __future__ import annotations

import argparse
import json
import os
import sys
from importlib import resources
from pathlib import Path

from .branching import DEFAULT_MAX_MOVES, SearchExhausted
from .cohomology import (
    FiniteGroup,
    NotACocycle,
    cyclic_generator_cocycle,
    cyclic_group,
    load_cocycle,
    symmetric_group,
)
from .statesum import compute
from .triangulation import EDGES, NonOrientable, Triangulation, parse_triangulation

EXIT_PARSE = 2
EXIT_INVALID = 3
EXIT_EXHAUSTED = 4


def _default_max_moves() -> int:
    raw = os.environ.get("DW_MAX_MOVES")
    if raw is None:
        return DEFAULT_MAX_MOVES
    try:
        return int(raw)
    except ValueError:
        raise ValueError(f"DW_MAX_MOVES must be an integer, got {raw!r}") from None


def _read_triangulation(spec: str) -> Triangulation:
    """A path, or the name of a bundled fixture such as ``m004.json``."""
    path = Path(spec)
    if path.exists():
        return parse_triangulation(path.read_text(encoding="utf-8"))
    bundled = resources.files("gendw") / "data" / "census" / (
        path.name if path.name.endswith(".json") else path.name + ".json")
    if bundled.is_file():
        return parse_triangulation(bundled.read_text(encoding="utf-8"))
    raise FileNotFoundError(f"no triangulation file or bundled fixture named {spec!r}")


def _read_group(spec: str) -> FiniteGroup:
    if spec.startswith("table:"):
        return FiniteGroup.from_json(Path(spec[6:]).read_text(encoding="utf-8"))
    if spec[:1] in "ZS" and spec[1:].isdigit():
        n = int(spec[1:])
        return cyclic_group(n) if spec[0] == "Z" else symmetric_group(n)
    raise ValueError(f"group must be Zm, Sk or table:FILE, got {spec!r}")


def _read_cocycle(spec: str, group: FiniteGroup):
    if spec.startswith("gen:"):
        p = int(spec[4:])
        if group != cyclic_group(group.order):
            raise ValueError("gen:p cocycles are defined for cyclic groups only")
        return cyclic_generator_cocycle(group.order, p)
    if spec.startswith("file:"):
        return load_cocycle(Path(spec[5:]).read_text(encoding="utf-8"), group)
    raise ValueError(f"cocycle must be gen:p or file:FILE, got {spec!r}")


def cmd_compute(args) -> int:
    tri = _read_triangulation(args.triangulation)
    group = _read_group(args.group)
    alpha = _read_cocycle(args.cocycle, group)
    res = compute(tri, group, alpha, args.max_moves)
    if args.json:
        record = {
            "exact": res.value.to_dict(),
            "approx": res.value.approx(),
            "moves_used": len(res.moves),
            "moves": [list(m) for m in res.moves],
            "colorings": res.coloring_count,
        }
        print(json.dumps(record, sort_keys=True))
    else:
        print(res.value)
        print(f"approx: {res.value.approx()}")
        print(f"canonical: {json.dumps(res.value.to_dict())}")
        print(f"moves used: {len(res.moves)}")
        print(f"colorings: {res.coloring_count}")
    return 0


def cmd_verify(args) -> int:
    from .verify import run_suite

    result = run_suite(args.suite, seed=args.seed)
    print(result.report())
    return 0 if result.passed else 1


def cmd_order(args) -> int:
    from .statesum import _ordering

    tri = _read_triangulation(args.triangulation)
    tri.orientation
    ordered, moves, branching = _ordering(tri, args.max_moves)
    if args.json:
        print(json.dumps({
            "moves_used": len(moves),
            "moves": [list(m) for m in moves],
            "tets": ordered.tet_count,
            "edge_orientation": list(branching.edge_orientation),
            "vertex_orders": [list(o) for o in branching.vertex_orders],
            "signs": list(branching.signs),
        }, sort_keys=True))
        return 0
    print(f"moves used: {len(moves)}")
    for i, (t, f) in enumerate(moves, 1):
        print(f"  {i}. (2,3) move on face {f} of tetrahedron {t}")
    print(f"tetrahedra: {ordered.tet_count}")
    print("branching:")
    for c, (cls, d) in enumerate(zip(ordered.edge_classes, branching.edge_orientation)):
        t, e = cls.representative
        a, b = EDGES[e] if d > 0 else EDGES[e][::-1]
        print(f"  edge class {c} (valence {cls.valence}): tet {t} vertex {a} -> {b}")
    print("tetrahedra orders and signs:")
    for t, (order, s) in enumerate(zip(branching.vertex_orders, branching.signs)):
        print(f"  tet {t}: v0..v3 = {' '.join(map(str, order))}  eps = {s:+d}")
    return 0


def cmd_report(args) -> int:
    from .report import format_report, reproduction_report

    print(format_report(reproduction_report(args.manifold or None)))
    return 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="gendw", description=__doc__)
    sub = parser.add_subparsers(dest="command", required=True)
    max_moves = _default_max_moves()

    p = sub.add_parser("compute", help="evaluate the invariant")
    p.add_argument("--triangulation", required=True)
    p.add_argument("--group", required=True, help="Zm, Sk or table:FILE")
    p.add_argument("--cocycle", required=True, help="gen:p or file:FILE")
    p.add_argument("--max-moves", type=int, default=max_moves)
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=cmd_compute)

    p = sub.add_parser("verify", help="run a property suite over the bundled fixtures")
    p.add_argument("--suite", required=True,
                   choices=["moves", "cohomology", "mirror", "oracle", "reference"])
    p.add_argument("--seed", type=int, default=0)
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("order", help="find a branching, adding (2,3) moves if needed")
    p.add_argument("--triangulation", required=True)
    p.add_argument("--max-moves", type=int, default=max_moves)
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=cmd_order)

    p = sub.add_parser("report", help="generator-power sweep against reference values")
    p.add_argument("manifold", nargs="*")
    p.set_defaults(func=cmd_report)
    return parser


def main(argv: list[str] | None = None) -> int:
    try:
        args = build_parser().parse_args(argv)
        return args.func(args)
    except (NonOrientable, NotACocycle) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INVALID
    except SearchExhausted as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_EXHAUSTED
    except (ValueError, KeyError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_PARSE


if __name__ == "__main__":
    sys.exit(main())
