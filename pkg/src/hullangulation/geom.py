"""Exact integer geometric predicates, convex hulls and point-set I/O.

All predicates work on integer coordinates only. Coordinates are capped at
``COORD_LIMIT`` in absolute value so every cross product fits comfortably in a
signed 64-bit integer, which keeps the arithmetic portable even though Python
integers would not overflow anyway.
"""

from __future__ import annotations

import enum
import json
import random
from dataclasses import dataclass
from itertools import combinations
from typing import Iterable, NamedTuple, Sequence

from .errors import (
    CollinearBoundary,
    CollinearInput,
    CoordinateOverflow,
    DuplicatePoint,
    ValidationError,
)

COORD_LIMIT = 2**20


class Point(NamedTuple):
    x: int
    y: int


class Orientation(enum.IntEnum):
    RIGHT = -1
    COLLINEAR = 0
    LEFT = 1


class NotInGeneralPosition(CollinearInput):
    """Three input points lie on a common line."""

    def __init__(self, triple):
        self.triple = tuple(triple)
        super().__init__(f"points {self.triple} are collinear")


def cross(p: Point, q: Point, r: Point) -> int:
    return (q[0] - p[0]) * (r[1] - p[1]) - (q[1] - p[1]) * (r[0] - p[0])


def orientation(p: Point, q: Point, r: Point) -> Orientation:
    """Sign of the cross product ``(q - p) x (r - p)``."""
    c = cross(p, q, r)
    if c > 0:
        return Orientation.LEFT
    if c < 0:
        return Orientation.RIGHT
    return Orientation.COLLINEAR


def _between(p: Point, q: Point, r: Point) -> bool:
    # r collinear with p-q; is it on the closed segment?
    return min(p[0], q[0]) <= r[0] <= max(p[0], q[0]) and min(p[1], q[1]) <= r[1] <= max(p[1], q[1])


def segments_cross(a: Sequence[Point], b: Sequence[Point]) -> bool:
    """True if closed segments ``a`` and ``b`` meet anywhere except a shared endpoint.

    Collinear overlap counts as a crossing, as does an endpoint of one segment
    touching the interior of the other.
    """
    p1, p2 = a
    q1, q2 = b
    shared = {p1, p2} & {q1, q2}
    if len(shared) == 2:
        return True
    if len(shared) == 1:
        (s,) = shared
        u = p2 if p1 == s else p1
        v = q2 if q1 == s else q1
        if cross(s, u, v) != 0:
            return False
        # collinear: they overlap iff both point the same way from s
        return (u[0] - s[0]) * (v[0] - s[0]) + (u[1] - s[1]) * (v[1] - s[1]) > 0

    d1 = cross(q1, q2, p1)
    d2 = cross(q1, q2, p2)
    d3 = cross(p1, p2, q1)
    d4 = cross(p1, p2, q2)
    if ((d1 > 0 and d2 < 0) or (d1 < 0 and d2 > 0)) and ((d3 > 0 and d4 < 0) or (d3 < 0 and d4 > 0)):
        return True
    if d1 == 0 and _between(q1, q2, p1):
        return True
    if d2 == 0 and _between(q1, q2, p2):
        return True
    if d3 == 0 and _between(p1, p2, q1):
        return True
    if d4 == 0 and _between(p1, p2, q2):
        return True
    return False


@dataclass(frozen=True)
class PointSet:
    """Ordered, duplicate-free list of integer points; list index is identity."""

    points: tuple[Point, ...]

    def __post_init__(self):
        pts = tuple(Point(*p) for p in self.points)
        object.__setattr__(self, "points", pts)
        seen = set()
        for p in pts:
            if not (isinstance(p.x, int) and isinstance(p.y, int)):
                raise ValidationError(f"non-integer coordinate in {p}")
            if abs(p.x) > COORD_LIMIT or abs(p.y) > COORD_LIMIT:
                raise CoordinateOverflow(f"{p} exceeds the coordinate cap {COORD_LIMIT}")
            if p in seen:
                raise DuplicatePoint(f"point {p} appears twice")
            seen.add(p)

    @classmethod
    def from_pairs(cls, pairs: Iterable[Sequence[int]]) -> "PointSet":
        return cls(tuple(Point(int(x), int(y)) for x, y in pairs))

    def __len__(self):
        return len(self.points)

    def __getitem__(self, i):
        return self.points[i]

    def __iter__(self):
        return iter(self.points)

    def to_json(self) -> dict:
        return {"points": [[p.x, p.y] for p in self.points]}


def as_points(ps) -> tuple[Point, ...]:
    if isinstance(ps, PointSet):
        return ps.points
    return PointSet.from_pairs(ps).points


def load_points(source) -> PointSet:
    """Parse the ``{"points": [[x, y], ...]}`` document (dict, JSON text or file object)."""
    if hasattr(source, "read"):
        source = source.read()
    doc = json.loads(source) if isinstance(source, (str, bytes)) else source
    try:
        pairs = doc["points"]
    except (KeyError, TypeError):
        raise ValidationError('point document needs a "points" list') from None
    for pair in pairs:
        if len(pair) != 2 or not all(isinstance(c, int) and not isinstance(c, bool) for c in pair):
            raise ValidationError(f"bad point entry {pair!r}; expected [x, y] integers")
    return PointSet.from_pairs(pairs)


def collinear_triples(ps) -> list[tuple[int, int, int]]:
    pts = as_points(ps)
    return [
        (i, j, k)
        for i, j, k in combinations(range(len(pts)), 3)
        if cross(pts[i], pts[j], pts[k]) == 0
    ]


def require_general_position(ps) -> None:
    """Raise :class:`NotInGeneralPosition` on the first collinear triple."""
    pts = as_points(ps)
    for i, j, k in combinations(range(len(pts)), 3):
        if cross(pts[i], pts[j], pts[k]) == 0:
            raise NotInGeneralPosition((i, j, k))


@dataclass(frozen=True)
class Hull:
    indices: tuple[int, ...]  # counter-clockwise

    @property
    def h(self) -> int:
        return len(self.indices)


def convex_hull(ps, strict: bool = True) -> Hull:
    """Counter-clockwise hull of a point set (Andrew's monotone chain).

    The hull starts at the lexicographically smallest point. In strict mode
    any collinear triple in the input is rejected; in lax mode only triples on
    the hull boundary are rejected, since a point in the middle of a hull edge
    would make the hull size ambiguous.
    """
    pts = as_points(ps)
    n = len(pts)
    if n < 3:
        raise ValidationError("a hull needs at least three points")
    order = sorted(range(n), key=lambda i: pts[i])

    def chain(seq):
        out: list[int] = []
        for i in seq:
            while len(out) >= 2 and cross(pts[out[-2]], pts[out[-1]], pts[i]) <= 0:
                out.pop()
            out.append(i)
        return out

    lower = chain(order)
    upper = chain(reversed(order))
    hull = lower[:-1] + upper[:-1]
    if len(hull) < 3:
        raise CollinearInput("all points are collinear")

    on_hull = set(hull)
    for a, b in zip(hull, hull[1:] + hull[:1]):
        for i in range(n):
            if i not in on_hull and cross(pts[a], pts[b], pts[i]) == 0 and _between(pts[a], pts[b], pts[i]):
                raise CollinearBoundary(f"point {i} lies on hull edge ({a}, {b})")
    if strict:
        require_general_position(pts)
    return Hull(tuple(hull))


def strictly_inside(polygon: Sequence[Point], p: Point) -> bool:
    """Point strictly inside a counter-clockwise convex polygon."""
    m = len(polygon)
    return all(cross(polygon[k], polygon[(k + 1) % m], p) > 0 for k in range(m))


def random_points(n: int, seed: int, span: int = 1000) -> PointSet:
    """Seeded random point set in strict general position inside ``[0, span]^2``."""
    if n < 1 or (span + 1) ** 2 < n:
        raise ValidationError(f"cannot place {n} points in a {span}x{span} box")
    rng = random.Random(seed)
    pts: list[Point] = []
    seen = set()
    while len(pts) < n:
        p = Point(rng.randint(0, span), rng.randint(0, span))
        if p in seen or any(cross(a, b, p) == 0 for a, b in combinations(pts, 2)):
            continue
        seen.add(p)
        pts.append(p)
    return PointSet(tuple(pts))
