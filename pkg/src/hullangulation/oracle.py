"""Exhaustive extremal search over non-crossing straight-line graphs on small point sets.

Every connected, simple, crossing-free straight-line graph spanning the
point set, with girth at least ``g`` and at least one cycle, is visited by a
depth-first include/exclude search over the candidate segments (all point
pairs in lexicographic order). For each exterior degree the search keeps the
maximum edge count, the lexicographically smallest witness achieving it and
whether every maximum witness of girth exactly ``g`` has all inner faces of
degree ``g``.

Fast mode prunes a branch when the segments still available cannot lift the
edge count up to the best one already seen for the requested exterior degree.
Slow mode visits every graph; both must agree exactly.
"""

from __future__ import annotations

from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass
from functools import cmp_to_key
from itertools import combinations
from typing import Optional

from .errors import NoGraph, TooLarge, ValidationError
from .formulas import edge_bound
from .geom import as_points, require_general_position, segments_cross
from .plane_graph import _angle_cmp

MAX_POINTS = 9


@dataclass(frozen=True)
class ExtremalReport:
    n: int
    g: int
    h: int
    max_edges_found: int
    bound: int
    witness: tuple[tuple[int, int], ...]
    all_extremal_are_angulations: bool
    extremal_count: int
    exact_girth_extremal_count: int

    @property
    def attained(self) -> bool:
        return self.max_edges_found == self.bound

    def to_json(self) -> dict:
        return {
            "point_count": self.n,
            "girth_floor": self.g,
            "exterior_degree": self.h,
            "max_edges_found": self.max_edges_found,
            "bound": self.bound,
            "attained": self.attained,
            "witness": [list(e) for e in self.witness],
            "all_extremal_are_angulations": self.all_extremal_are_angulations,
            "extremal_count": self.extremal_count,
            "exact_girth_extremal_count": self.exact_girth_extremal_count,
        }


class _Tally:
    """Per-exterior-degree aggregate; merging is order independent."""

    __slots__ = ("best", "witness", "all_ang", "count", "exact")

    def __init__(self, best, witness, all_ang, count, exact):
        self.best, self.witness, self.all_ang, self.count, self.exact = best, witness, all_ang, count, exact

    def merge(self, other: "_Tally") -> "_Tally":
        if other.best > self.best:
            return other
        if other.best < self.best:
            return self
        return _Tally(
            self.best,
            min(self.witness, other.witness),
            self.all_ang and other.all_ang,
            self.count + other.count,
            self.exact + other.exact,
        )

    def as_tuple(self):
        return (self.best, self.witness, self.all_ang, self.count, self.exact)


class _Search:
    def __init__(self, pts, g: int, target_h: Optional[int], prune: bool):
        self.pts = pts
        self.n = n = len(pts)
        self.g = g
        self.target = target_h
        self.prune = prune and target_h is not None
        self.edges = list(combinations(range(n), 2))
        self.ends = [(1 << u) | (1 << v) for u, v in self.edges]
        ne = len(self.edges)
        self.cross = [0] * ne
        for a, b in combinations(range(ne), 2):
            (u1, v1), (u2, v2) = self.edges[a], self.edges[b]
            if segments_cross((pts[u1], pts[v1]), (pts[u2], pts[v2])):
                self.cross[a] |= 1 << b
                self.cross[b] |= 1 << a
        # cw[v][u]: other vertices in clockwise order around v, starting just after u
        self.cw = []
        self.order = []
        for v in range(n):
            p = pts[v]
            others = sorted((u for u in range(n) if u != v), key=cmp_to_key(
                lambda a, b: _angle_cmp((pts[a][0] - p[0], pts[a][1] - p[1]), (pts[b][0] - p[0], pts[b][1] - p[1]))))
            self.order.append(others)
            ring = {}
            for k, u in enumerate(others):
                ring[u] = [others[(k - s) % len(others)] for s in range(1, len(others))]
            self.cw.append(ring)
        self.low = min(range(n), key=lambda i: (pts[i][1], pts[i][0]))
        self.tallies: dict[int, _Tally] = {}

    # graph helpers on vertex bitmask adjacency
    def _far_enough(self, adj, u, v) -> bool:
        # no path of length < g - 1 from u to v
        seen = frontier = 1 << u
        for _ in range(self.g - 2):
            nxt = 0
            f = frontier
            while f:
                low = f & -f
                nxt |= adj[low.bit_length() - 1]
                f ^= low
            nxt &= ~seen
            if nxt >> v & 1:
                return False
            if not nxt:
                return True
            seen |= nxt
            frontier = nxt
        return True

    def _connected(self, adj) -> bool:
        full = (1 << self.n) - 1
        seen = frontier = 1
        while frontier:
            nxt = 0
            f = frontier
            while f:
                low = f & -f
                nxt |= adj[low.bit_length() - 1]
                f ^= low
            frontier = nxt & ~seen
            seen |= frontier
        return seen == full

    def _next(self, adj, u, v):
        for w in self.cw[v][u]:
            if adj[v] >> w & 1:
                return w
        return u  # v is a leaf

    def _exterior_degree(self, adj) -> int:
        a = self.low
        b = next(w for w in reversed(self.order[a]) if adj[a] >> w & 1)
        u, v = a, b
        steps = 0
        while True:
            steps += 1
            u, v = v, self._next(adj, u, v)
            if (u, v) == (a, b):
                return steps

    def _inner_degrees(self, adj, chosen):
        seen = set()
        degrees = []
        darts = [(u, v) for u, v in (self.edges[e] for e in _bits(chosen))]
        darts += [(v, u) for u, v in darts]
        a = self.low
        b = next(w for w in reversed(self.order[a]) if adj[a] >> w & 1)
        for start in [(a, b)] + darts:
            if start in seen:
                continue
            d = 0
            u, v = start
            while (u, v) not in seen:
                seen.add((u, v))
                d += 1
                u, v = v, self._next(adj, u, v)
            degrees.append(d)
        return degrees[1:]

    def _girth_is_exactly_g(self, adj) -> bool:
        for s in range(self.n):
            dist = {s: 0}
            parent = {s: -1}
            queue = [s]
            for u in queue:
                for w in _bits(adj[u]):
                    if w not in dist:
                        dist[w] = dist[u] + 1
                        parent[w] = u
                        queue.append(w)
                    elif w != parent[u] and dist[u] + dist[w] + 1 == self.g:
                        return True
        return False

    def _leaf(self, adj, chosen, count):
        if count < self.n or not self._connected(adj):
            return
        if self.target is not None:
            tally = self.tallies.get(self.target)
            if tally is not None and count < tally.best:
                return
        h = self._exterior_degree(adj)
        if self.target is not None and h != self.target:
            return
        tally = self.tallies.get(h)
        if tally is not None and count < tally.best:
            return
        witness = tuple(self.edges[e] for e in _bits(chosen))
        exact = self._girth_is_exactly_g(adj)
        ok = (not exact) or all(d == self.g for d in self._inner_degrees(adj, chosen))
        new = _Tally(count, witness, ok, 1, int(exact))
        self.tallies[h] = new if tally is None else tally.merge(new)

    def run(self, prefix: tuple[bool, ...] = ()):
        ne = len(self.edges)
        adj = [0] * self.n
        allowed = (1 << ne) - 1
        chosen = 0
        count = 0
        # replay forced decisions for a parallel subtree
        for k, take in enumerate(prefix):
            if take:
                u, v = self.edges[k]
                if not (allowed >> k & 1) or not self._far_enough(adj, u, v):
                    return self.tallies
                chosen |= 1 << k
                allowed &= ~self.cross[k]
                adj[u] |= 1 << v
                adj[v] |= 1 << u
                count += 1
        self._dfs(len(prefix), adj, allowed, chosen, count)
        return self.tallies

    def _dfs(self, k, adj, allowed, chosen, count):
        ne = len(self.edges)
        if k == ne:
            self._leaf(adj, chosen, count)
            return
        if self.prune:
            tally = self.tallies.get(self.target)
            if tally is not None and count + bin(allowed >> k).count("1") < tally.best:
                return
        if allowed >> k & 1:
            u, v = self.edges[k]
            if self.g <= 3 or self._far_enough(adj, u, v):
                adj[u] |= 1 << v
                adj[v] |= 1 << u
                self._dfs(k + 1, adj, allowed & ~self.cross[k], chosen | (1 << k), count + 1)
                adj[u] &= ~(1 << v)
                adj[v] &= ~(1 << u)
        self._dfs(k + 1, adj, allowed, chosen, count)


def _bits(mask: int):
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


def _run_subtree(args):
    pts, g, target, prune, prefix = args
    tallies = _Search(pts, g, target, prune).run(prefix)
    return {h: t.as_tuple() for h, t in tallies.items()}


def _search(ps, g: int, target_h: Optional[int], slow: bool, workers: int) -> dict[int, _Tally]:
    if g < 3:
        raise ValidationError(f"girth floor must be at least 3, got {g}")
    pts = as_points(ps)
    if len(pts) > MAX_POINTS:
        raise TooLarge(f"{len(pts)} points exceed the exhaustive-search limit of {MAX_POINTS}")
    if len(pts) < 3:
        raise ValidationError("need at least three points")
    require_general_position(pts)
    prune = not slow
    if workers <= 1:
        return _Search(pts, g, target_h, prune).run()

    depth = 4
    prefixes = [tuple(bool(bits >> i & 1) for i in range(depth)) for bits in range(1 << depth)]
    merged: dict[int, _Tally] = {}
    with ProcessPoolExecutor(max_workers=workers) as pool:
        for part in pool.map(_run_subtree, [(pts, g, target_h, prune, p) for p in prefixes]):
            for h, tup in part.items():
                t = _Tally(*tup)
                merged[h] = t if h not in merged else merged[h].merge(t)
    return merged


def _report(n: int, g: int, h: int, t: _Tally) -> ExtremalReport:
    return ExtremalReport(
        n=n,
        g=g,
        h=h,
        max_edges_found=t.best,
        bound=edge_bound(n, g, h),
        witness=t.witness,
        all_extremal_are_angulations=t.all_ang,
        extremal_count=t.count,
        exact_girth_extremal_count=t.exact,
    )


def enumerate_extremal(ps, g: int, h: int, slow: bool = False, workers: int = 1) -> ExtremalReport:
    """Maximum edge count over all admissible graphs on ``ps`` with exterior degree ``h``."""
    tallies = _search(ps, g, h, slow, workers)
    if h not in tallies:
        raise NoGraph(f"no connected crossing-free graph with girth >= {g} has exterior degree {h}")
    return _report(len(as_points(ps)), g, h, tallies[h])


def certify_bound(ps, g: int, slow: bool = False, workers: int = 1) -> list[ExtremalReport]:
    """One report per exterior degree realised on ``ps``, in increasing order of ``h``."""
    tallies = _search(ps, g, None, slow, workers)
    n = len(as_points(ps))
    return [_report(n, g, h, tallies[h]) for h in sorted(tallies)]
