"""Command-line entry point.

Data commands print JSON on stdout; ``render`` prints SVG. Exit status is 0 on
success, 2 for invalid input or usage, 1 when an internal check fails.
"""

from __future__ import annotations

import argparse
import json
import sys
from typing import Optional, Sequence

from . import formulas
from .angulator import construct_combinatorial, recognize, synthesize_coordinates, triangulate_points
from .errors import InvariantViolation, ValidationError
from .geom import convex_hull, load_points, random_points
from .oracle import certify_bound, enumerate_extremal
from .plane_graph import from_json, to_json
from .render import RenderSpec, render


class _UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise _UsageError(f"{self.prog}: {message}")


def _read(path: Optional[str], stdin) -> str:
    if path is None or path == "-":
        return stdin.read()
    with open(path, encoding="utf-8") as fh:
        return fh.read()


def _dump(doc) -> str:
    return json.dumps(doc, indent=2) + "\n"


def _build_parser() -> argparse.ArgumentParser:
    p = _Parser(prog="hullangulation", description="Edge bounds and convex hull g-angulations of plane graphs.")
    sub = p.add_subparsers(dest="command", required=True, parser_class=_Parser)

    s = sub.add_parser("hull", help="convex hull of a point set")
    s.add_argument("--in", dest="inp")
    s.add_argument("--lax", action="store_true", help="allow interior collinear triples")

    for name, text in (("bound", "maximum edge count"), ("feasible", "convex hull g-angulation feasibility")):
        s = sub.add_parser(name, help=text)
        s.add_argument("--n", type=int, required=True)
        s.add_argument("--g", type=int, required=True)
        s.add_argument("--h", type=int, required=True)

    s = sub.add_parser("construct", help="build a convex hull g-angulation")
    s.add_argument("--n", type=int, required=True)
    s.add_argument("--h", type=int, required=True)
    s.add_argument("--g", type=int, required=True)
    s.add_argument("--coords", action="store_true", help="attach an integer straight-line drawing")

    s = sub.add_parser("recognize", help="classify a graph document")
    s.add_argument("--in", dest="inp")

    s = sub.add_parser("triangulate", help="triangulate a point set")
    s.add_argument("--in", dest="inp")

    s = sub.add_parser("oracle", help="exhaustive extremal search on a small point set")
    s.add_argument("--in", dest="inp")
    s.add_argument("--g", type=int, required=True)
    s.add_argument("--h", type=int)
    s.add_argument("--slow", action="store_true", help="disable pruning")
    s.add_argument("--workers", type=int, default=1)

    s = sub.add_parser("render", help="SVG drawing of a graph with coordinates")
    s.add_argument("--in", dest="inp")
    s.add_argument("--width", type=int, default=RenderSpec.width)
    s.add_argument("--height", type=int, default=RenderSpec.height)
    s.add_argument("--stroke", type=float, default=RenderSpec.stroke)
    s.add_argument("--radius", type=float, default=RenderSpec.radius)
    s.add_argument("--no-labels", action="store_true")

    s = sub.add_parser("points", help="seeded random general-position point set")
    s.add_argument("--n", type=int, required=True)
    s.add_argument("--seed", type=int, required=True)
    s.add_argument("--span", type=int, default=1000)
    return p


def _oracle_failures(reports) -> list[str]:
    bad = []
    for r in reports:
        if r.max_edges_found > r.bound:
            bad.append(f"h={r.h}: {r.max_edges_found} edges exceed the bound {r.bound}")
        if r.attained and formulas.feasibility(r.n, r.g, r.h).feasible and not r.all_extremal_are_angulations:
            bad.append(f"h={r.h}: an extremal graph of girth {r.g} has an inner face of another degree")
    return bad


def _dispatch(args, stdin) -> tuple[int, str]:
    cmd = args.command
    if cmd == "hull":
        hull = convex_hull(load_points(_read(args.inp, stdin)), strict=not args.lax)
        return 0, _dump({"h": hull.h, "indices": list(hull.indices)})
    if cmd == "bound":
        return 0, _dump({"max_edges": formulas.edge_bound(args.n, args.g, args.h)})
    if cmd == "feasible":
        return 0, _dump(formulas.feasibility(args.n, args.g, args.h).to_json())
    if cmd == "construct":
        graph = construct_combinatorial(args.n, args.h, args.g)
        if args.coords:
            graph = synthesize_coordinates(graph)
        return 0, _dump(to_json(graph))
    if cmd == "recognize":
        return 0, _dump(recognize(from_json(_read(args.inp, stdin))).to_json())
    if cmd == "triangulate":
        return 0, _dump(to_json(triangulate_points(load_points(_read(args.inp, stdin)))))
    if cmd == "oracle":
        ps = load_points(_read(args.inp, stdin))
        if args.h is not None:
            reports = [enumerate_extremal(ps, args.g, args.h, slow=args.slow, workers=args.workers)]
            doc = reports[0].to_json()
        else:
            reports = certify_bound(ps, args.g, slow=args.slow, workers=args.workers)
            doc = [r.to_json() for r in reports]
        failures = _oracle_failures(reports)
        for msg in failures:
            print(f"certification failed: {msg}", file=sys.stderr)
        return (1 if failures else 0), _dump(doc)
    if cmd == "render":
        spec = RenderSpec(args.width, args.height, args.stroke, args.radius, not args.no_labels)
        return 0, render(from_json(_read(args.inp, stdin)), spec)
    if cmd == "points":
        return 0, _dump(random_points(args.n, args.seed, args.span).to_json())
    raise _UsageError(f"unknown command {cmd}")  # pragma: no cover


def run(argv: Sequence[str], stdin=None) -> tuple[int, str]:
    """Execute one command; returns ``(exit status, stdout text)``."""
    stdin = sys.stdin if stdin is None else stdin
    try:
        args = _build_parser().parse_args(list(argv))
        return _dispatch(args, stdin)
    except _UsageError as exc:
        print(f"usage error: {exc}", file=sys.stderr)
        return 2, ""
    except (ValidationError, json.JSONDecodeError, OSError) as exc:
        print(f"error: {type(exc).__name__}: {exc}", file=sys.stderr)
        return 2, ""
    except InvariantViolation as exc:
        print(f"internal check failed: {exc}", file=sys.stderr)
        return 1, ""


def main(argv: Optional[Sequence[str]] = None) -> int:
    status, out = run(sys.argv[1:] if argv is None else argv)
    sys.stdout.write(out)
    return status


if __name__ == "__main__":
    sys.exit(main())
