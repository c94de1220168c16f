"""Recognising, building and drawing convex hull g-angulations.

A convex hull g-angulation is a connected simple plane graph whose exterior
face is a simple h-cycle and whose inner faces all have degree g.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from typing import Optional

import numpy as np

from .errors import Acyclic, Infeasible, InvariantViolation, LayoutOverflow, ValidationError
from .formulas import AngulationParams, feasibility
from .geom import COORD_LIMIT, Point, as_points, convex_hull, cross
from .plane_graph import (
    PlaneGraph,
    build_geometric,
    census_signature,
    face_census,
    face_walks,
    from_faces,
    girth,
)

CONVEX_HULL = "ConvexHullGAngulation"
CONVEX = "ConvexGAngulation"
CLOSED = "GAngulation"
NOT_ANGULATION = "NotAngulation"


@dataclass
class RecognitionReport:
    is_angulation: bool
    classification: str
    measured: AngulationParams
    classes: list[str] = field(default_factory=list)
    violations: list[dict] = field(default_factory=list)
    flags: list[str] = field(default_factory=list)

    def to_json(self) -> dict:
        return {
            "is_angulation": self.is_angulation,
            "classification": self.classification,
            "classes": list(self.classes),
            "measured": self.measured.to_json(),
            "violations": list(self.violations),
            "flags": list(self.flags),
        }


def recognize(graph: PlaneGraph) -> RecognitionReport:
    """Classify an embedded graph against the three g-angulation definitions.

    ``g`` is the girth found by graph search. ``classification`` is the most
    specific class (GAngulation when h == g, then ConvexGAngulation when
    h == n); ``classes`` lists every class that applies.
    """
    gg = girth(graph)
    if gg is None:
        raise Acyclic("graph has no cycle, so its girth is undefined")
    census = face_census(graph)
    outer = face_walks(graph)[0]
    n, m, h = graph.n, graph.m, census.h
    measured = AngulationParams(n=n, h=h, g=gg, t=m - n, m=m, inner_faces=census.inner_face_count)

    flags = []
    if len(set(outer)) != len(outer):
        flags.append("ExteriorNotSimpleCycle")
    inner = census.degrees[1:]
    violations = [{"face": k + 1, "degree": d} for k, d in enumerate(inner) if d != gg]
    if violations and len(set(inner)) == 1:
        flags.append("GirthMismatch")

    ok = not flags and not violations
    classes = []
    if ok:
        classes.append(CONVEX_HULL)
        if h == n:
            classes.append(CONVEX)
        if h == gg:
            classes.append(CLOSED)
        report = feasibility(n, gg, h)
        if not report.feasible or (report.params.t, report.params.m, report.params.inner_faces) != (
            measured.t, measured.m, measured.inner_faces
        ):
            raise InvariantViolation(f"census {measured} disagrees with the counting formulas: {report}")
        measured = report.params
    classification = classes[-1] if classes else NOT_ANGULATION
    return RecognitionReport(ok, classification, measured, classes, violations, flags)


def triangulate_points(ps, strict: bool = True) -> PlaneGraph:
    """Triangulate a point set: fan the hull, then insert the remaining points one by one.

    An inserted point splits its containing triangle into three. In lax mode
    a point may also land on an existing interior edge, which splits the two
    triangles sharing that edge into four.
    """
    pts = as_points(ps)
    hull = convex_hull(pts, strict=strict).indices
    tris = [(hull[0], hull[k], hull[k + 1]) for k in range(1, len(hull) - 1)]
    on_hull = set(hull)
    for p in range(len(pts)):
        if p in on_hull:
            continue
        for k, (a, b, c) in enumerate(tris):
            sides = [cross(pts[a], pts[b], pts[p]), cross(pts[b], pts[c], pts[p]), cross(pts[c], pts[a], pts[p])]
            if min(sides) < 0:
                continue
            if min(sides) > 0:
                tris[k] = (a, b, p)
                tris.extend([(b, c, p), (c, a, p)])
                break
            # on an edge: rotate so the edge is (a, b), then split both neighbours
            z = sides.index(0)
            a, b, c = (a, b, c)[z:] + (a, b, c)[:z]
            other = next(i for i, t in enumerate(tris) if i != k and _has_dart(t, b, a))
            d = next(v for v in tris[other] if v not in (a, b))
            tris[k] = (a, p, c)
            tris[other] = (b, p, d)
            tris.extend([(p, b, c), (p, a, d)])
            break
        else:  # pragma: no cover - points off the hull are inside some triangle
            raise InvariantViolation(f"point {p} is in no triangle")
    edges = {(min(u, v), max(u, v)) for t in tris for u, v in zip(t, t[1:] + t[:1])}
    return build_geometric(pts, sorted(edges))


def _has_dart(tri, u, v) -> bool:
    return any((tri[i], tri[(i + 1) % 3]) == (u, v) for i in range(3))


@dataclass
class SpiralTrace:
    """Ear parameters and (boundary length, interior budget) before each ear."""

    ears: list[int] = field(default_factory=list)
    states: list[tuple[int, int]] = field(default_factory=list)


def _distance_at_least(adj, a: int, z: int, j: int) -> bool:
    """True if no path shorter than ``j`` joins ``a`` and ``z``."""
    frontier = {a}
    seen = {a}
    for _ in range(j - 1):
        frontier = {w for v in frontier for w in adj[v]} - seen
        if z in frontier:
            return False
        seen |= frontier
    return True


def spiral_faces(n: int, h: int, g: int, trace: Optional[SpiralTrace] = None) -> list[list[int]]:
    """Inner faces of the spiral-fill construction, each with the face on its left.

    Outer vertices are ``0 .. h-1`` counter-clockwise. Each ear consumes ``j``
    consecutive boundary edges and replaces them with a path of ``g - j``
    edges through fresh vertices, where ``j = max(1, g - 1 - budget)``. The ear
    goes at the first boundary position, scanning forward from a cursor that
    trails the previous ear, whose endpoints are exactly ``j`` apart in the
    graph built so far; a shorter connection would close a cycle below g.
    """
    report = feasibility(n, g, h)
    if not report.feasible:
        raise Infeasible(report)
    boundary = list(range(h))
    adj: list[set[int]] = [set() for _ in range(n)]
    for k in range(h):
        adj[k].add((k + 1) % h)
        adj[(k + 1) % h].add(k)
    budget = n - h
    fresh = h
    cursor = 0
    faces = []
    while (len(boundary) + 2 * budget - g) // (g - 2) > 0:
        c = len(boundary)
        j = max(1, g - 1 - budget)
        if trace is not None:
            trace.ears.append(j)
            trace.states.append((c, budget))
        for shift in range(c):
            p = (cursor + shift) % c
            if _distance_at_least(adj, boundary[p], boundary[(p + j) % c], j):
                break
        else:
            raise InvariantViolation(f"no admissible ear with j={j} on a boundary of length {c}")
        boundary = boundary[p:] + boundary[:p]
        arc = boundary[: j + 1]
        path = list(range(fresh, fresh + g - j - 1))
        fresh += len(path)
        budget -= len(path)
        chain = [arc[0]] + path + [arc[-1]]
        for u, v in zip(chain, chain[1:]):
            adj[u].add(v)
            adj[v].add(u)
        faces.append(arc + path[::-1])
        boundary = [arc[0]] + path + boundary[j:]
        cursor = len(path) + 1
    if len(boundary) != g or budget != 0:
        raise InvariantViolation(f"spiral fill ended with boundary {len(boundary)} and budget {budget}")
    if trace is not None:
        trace.states.append((len(boundary), budget))
    faces.append(boundary)
    return faces


def construct_combinatorial(n: int, h: int, g: int, trace: Optional[SpiralTrace] = None) -> PlaneGraph:
    """Build a convex hull g-angulation with ``n`` vertices and exterior degree ``h``."""
    inner = spiral_faces(n, h, g, trace)
    outer = [0] + list(range(h - 1, 0, -1))
    return from_faces(n, [outer] + inner, outer)


def _tutte_positions(graph: PlaneGraph) -> tuple[list[int], np.ndarray]:
    """Barycentric placement of every vertex after stellating each inner face.

    Returns the outer vertices in counter-clockwise order and an ``(n, 2)``
    array of positions, with the outer vertices on the unit circle.
    """
    walks = face_walks(graph)
    outer_ccw = walks[0][::-1]
    if len(set(outer_ccw)) != len(outer_ccw):
        raise ValidationError("exterior face is not a simple cycle")
    for w in walks[1:]:
        if len(set(w)) != len(w):
            raise ValidationError("an inner face is not a simple cycle")

    n = graph.n
    total = n + len(walks) - 1
    neighbours: list[list[int]] = [list(adj) for adj in graph.adjacency] + [[] for _ in walks[1:]]
    for k, w in enumerate(walks[1:]):
        d = n + k
        neighbours[d] = list(w)
        for v in w:
            neighbours[v].append(d)

    pos = np.zeros((total, 2))
    fixed = {}
    h = len(outer_ccw)
    for k, v in enumerate(outer_ccw):
        a = 2 * math.pi * k / h - math.pi / 2
        fixed[v] = (math.cos(a), math.sin(a))
        pos[v] = fixed[v]
    free = [v for v in range(total) if v not in fixed]
    slot = {v: i for i, v in enumerate(free)}
    lap = np.zeros((len(free), len(free)))
    rhs = np.zeros((len(free), 2))
    for v in free:
        i = slot[v]
        lap[i, i] = len(neighbours[v])
        for w in neighbours[v]:
            if w in fixed:
                rhs[i] += fixed[w]
            else:
                lap[i, slot[w]] -= 1.0
    if free:
        pos[free] = np.linalg.solve(lap, rhs)
    return outer_ccw, pos[:n]


def synthesize_coordinates(graph: PlaneGraph) -> PlaneGraph:
    """Integer straight-line drawing reproducing the face structure of ``graph``.

    The exterior cycle goes on a convex polygon; every other vertex sits at the
    barycentre of its neighbours in the graph with each inner face stellated by
    a helper vertex, which is crossing-free before rounding. Coordinates are
    then scaled by increasing powers of two until the rounded drawing
    rebuilds to the same faces.
    """
    outer_ccw, unit = _tutte_positions(graph)
    want = census_signature(graph)
    h = len(outer_ccw)
    start = max(4, math.ceil(math.log2(h)) + 3)
    cap_bits = int(math.log2(COORD_LIMIT))
    for bits in range(start, cap_bits):
        radius = 2**bits
        coords = [Point(int(round(x * radius)), int(round(y * radius))) for x, y in unit]
        if len(set(coords)) != len(coords):
            continue
        try:
            drawn = build_geometric(coords, graph.edges)
        except ValidationError:
            continue
        if census_signature(drawn) == want:
            return drawn
    raise LayoutOverflow(f"no crossing-free integer drawing within |coordinate| <= 2^{cap_bits - 1}")
