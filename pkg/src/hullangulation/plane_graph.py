"""Connected plane graphs stored as half-edges with a designated exterior face.

A half-edge ``e`` runs from ``origin[e]`` to ``origin[twin[e]]``; ``next[e]``
is the following half-edge along the boundary of the face lying to the left
of ``e``. Faces are therefore the cycles of ``next`` and a face's degree is the
length of its closed boundary walk, so a bridge is counted twice by the one
face it borders.
"""

from __future__ import annotations

import json
from collections import Counter, deque
from dataclasses import dataclass, field
from functools import cached_property, cmp_to_key
from itertools import combinations
from typing import Optional, Sequence

from .errors import CrossingEdges, Disconnected, MalformedRotationSystem, ValidationError
from .geom import Point, as_points, cross, segments_cross


@dataclass(frozen=True, eq=False)
class PlaneGraph:
    n: int
    origin: tuple[int, ...]
    twin: tuple[int, ...]
    next: tuple[int, ...]
    outer: int  # some half-edge on the exterior face
    coords: Optional[tuple[Point, ...]] = field(default=None)

    @property
    def m(self) -> int:
        return len(self.origin) // 2

    def head(self, e: int) -> int:
        return self.origin[self.twin[e]]

    @cached_property
    def edges(self) -> list[tuple[int, int]]:
        """Undirected edges as sorted ``(u, v)`` pairs, in canonical order."""
        return sorted({(min(u, v), max(u, v)) for u, v in self.darts})

    @cached_property
    def darts(self) -> list[tuple[int, int]]:
        return [(self.origin[e], self.head(e)) for e in range(len(self.origin))]

    @cached_property
    def adjacency(self) -> list[list[int]]:
        adj: list[list[int]] = [[] for _ in range(self.n)]
        for u, v in self.edges:
            adj[u].append(v)
            adj[v].append(u)
        return adj

    @cached_property
    def faces(self) -> list[list[int]]:
        """Boundary walks (half-edge ids); the exterior face comes first."""
        seen = [False] * len(self.origin)
        out = []
        starts = [self.outer] + list(range(len(self.origin)))
        for s in starts:
            if seen[s]:
                continue
            walk = []
            e = s
            while not seen[e]:
                seen[e] = True
                walk.append(e)
                e = self.next[e]
            out.append(walk)
        return out

    def face_vertices(self, walk: Sequence[int]) -> list[int]:
        return [self.origin[e] for e in walk]

    def rotation(self, v: int) -> list[int]:
        """Neighbours of ``v`` in counter-clockwise order."""
        out = [e for e in range(len(self.origin)) if self.origin[e] == v]
        if not out:
            return []
        # next(twin(e)) steps clockwise around the origin of e
        cw = [out[0]]
        e = self.next[self.twin[out[0]]]
        while e != out[0]:
            cw.append(e)
            e = self.next[self.twin[e]]
        return [self.head(e) for e in reversed(cw)]


@dataclass(frozen=True)
class FaceCensus:
    faces: list[list[int]]  # half-edge walks; index 0 is the exterior face
    degrees: list[int]
    exterior_degree: int
    inner_degrees: dict[int, int]  # degree -> number of inner faces of that degree

    @property
    def h(self) -> int:
        return self.exterior_degree

    @property
    def f(self) -> int:
        return len(self.faces)

    @property
    def inner_face_count(self) -> int:
        return self.f - 1


@dataclass(frozen=True)
class EulerAudit:
    n: int
    m: int
    f: int

    @property
    def holds(self) -> bool:
        return self.n - self.m + self.f == 2


@dataclass(frozen=True)
class DegreeSumAudit:
    lhs: int
    rhs: int

    @property
    def holds(self) -> bool:
        return self.lhs == self.rhs


def _angle_cmp(d1, d2) -> int:
    def half(d):
        return 0 if d[1] > 0 or (d[1] == 0 and d[0] > 0) else 1

    h1, h2 = half(d1), half(d2)
    if h1 != h2:
        return h1 - h2
    c = d1[0] * d2[1] - d1[1] * d2[0]
    return -1 if c > 0 else (1 if c < 0 else 0)


def _check_edge_list(n: int, edges) -> list[tuple[int, int]]:
    seen = set()
    out = []
    for e in edges:
        u, v = (int(x) for x in e)
        if not (0 <= u < n and 0 <= v < n):
            raise ValidationError(f"edge {(u, v)} refers to a missing vertex")
        if u == v:
            raise ValidationError(f"loop at vertex {u}")
        key = (min(u, v), max(u, v))
        if key in seen:
            raise ValidationError(f"edge {key} listed twice")
        seen.add(key)
        out.append(key)
    return out


def _require_connected(n: int, edges) -> None:
    adj: list[list[int]] = [[] for _ in range(n)]
    for u, v in edges:
        adj[u].append(v)
        adj[v].append(u)
    seen = {0}
    stack = [0]
    while stack:
        for w in adj[stack.pop()]:
            if w not in seen:
                seen.add(w)
                stack.append(w)
    if len(seen) != n:
        missing = sorted(set(range(n)) - seen)
        raise Disconnected(f"vertices {missing[:5]} are not reachable from vertex 0")


def _from_rotations(n: int, rot: list[list[int]]):
    """Half-edge arrays from counter-clockwise neighbour lists."""
    index = {}
    origin = []
    for u in range(n):
        for v in rot[u]:
            index[(u, v)] = len(origin)
            origin.append(u)
    twin = [0] * len(origin)
    nxt = [0] * len(origin)
    pos = {(u, v): k for u in range(n) for k, v in enumerate(rot[u])}
    for (u, v), e in index.items():
        if (v, u) not in index:
            raise MalformedRotationSystem(f"{v} does not list {u} as a neighbour")
        twin[e] = index[(v, u)]
        ring = rot[v]
        w = ring[pos[(v, u)] - 1]
        nxt[e] = index[(v, w)]
    return index, tuple(origin), tuple(twin), tuple(nxt)


def build_geometric(ps, edges) -> PlaneGraph:
    """Embed a straight-line graph on a point set.

    Rotations come from sorting each vertex's neighbours by angle. The exterior
    face is the one to the left of the half-edge leaving the lowest
    (then leftmost) point along its steepest incident edge.
    """
    pts = as_points(ps)
    n = len(pts)
    edge_list = _check_edge_list(n, edges)
    if not edge_list:
        raise ValidationError("graph has no edges")
    for a, b in combinations(edge_list, 2):
        if segments_cross((pts[a[0]], pts[a[1]]), (pts[b[0]], pts[b[1]])):
            raise CrossingEdges(a, b)
    _require_connected(n, edge_list)

    rot: list[list[int]] = [[] for _ in range(n)]
    for u, v in edge_list:
        rot[u].append(v)
        rot[v].append(u)
    for u in range(n):
        p = pts[u]
        rot[u].sort(key=cmp_to_key(lambda a, b: _angle_cmp(
            (pts[a][0] - p[0], pts[a][1] - p[1]), (pts[b][0] - p[0], pts[b][1] - p[1]))))
    index, origin, twin, nxt = _from_rotations(n, rot)

    low = min(range(n), key=lambda i: (pts[i][1], pts[i][0]))
    outer = index[(low, rot[low][-1])]
    return PlaneGraph(n, origin, twin, nxt, outer, tuple(pts))


def _validate_table(n: int, origin, twin, nxt) -> None:
    k = len(origin)
    if not (len(twin) == k == len(nxt)):
        raise MalformedRotationSystem("origin/twin/next columns differ in length")
    if k == 0 or k % 2:
        raise MalformedRotationSystem("half-edge count must be positive and even")
    for e in range(k):
        if not (0 <= origin[e] < n):
            raise MalformedRotationSystem(f"half-edge {e} has bad origin {origin[e]}")
        if not (0 <= twin[e] < k and 0 <= nxt[e] < k):
            raise MalformedRotationSystem(f"half-edge {e} points outside the table")
        if twin[e] == e or twin[twin[e]] != e:
            raise MalformedRotationSystem(f"twin is not a fixed-point-free involution at {e}")
        if origin[twin[e]] == origin[e]:
            raise MalformedRotationSystem(f"half-edge {e} is a loop")
        if origin[nxt[e]] != origin[twin[e]]:
            raise MalformedRotationSystem(f"next of half-edge {e} does not start at its head")
    if len(set(nxt)) != k:
        raise MalformedRotationSystem("next is not a permutation")
    darts = [(origin[e], origin[twin[e]]) for e in range(k)]
    if len(set(darts)) != k:
        raise MalformedRotationSystem("parallel edges are not allowed")
    # each vertex's darts must form a single rotation cycle
    seen = [False] * k
    for e in range(k):
        if seen[e]:
            continue
        v = origin[e]
        f = e
        size = 0
        while not seen[f]:
            seen[f] = True
            size += 1
            f = nxt[twin[f]]
        if size != sum(1 for o in origin if o == v):
            raise MalformedRotationSystem(f"rotation around vertex {v} splits into several cycles")


def _match_outer(origin, twin, nxt, outer_walk) -> int:
    walk = [int(v) for v in outer_walk]
    if len(walk) < 1:
        raise MalformedRotationSystem("outer face walk is empty")
    darts = {(origin[e], origin[twin[e]]): e for e in range(len(origin))}
    start = darts.get((walk[0], walk[1 % len(walk)]))
    if start is None:
        raise MalformedRotationSystem(f"outer walk {walk} does not follow an edge")
    e = start
    for k in range(len(walk)):
        if origin[e] != walk[k]:
            raise MalformedRotationSystem(f"outer walk {walk} is not a face boundary")
        e = nxt[e]
    if e != start:
        raise MalformedRotationSystem(f"outer walk {walk} is not a complete face boundary")
    return start


def build_combinatorial(n: int, half_edge_table, outer_face_walk) -> PlaneGraph:
    """Plane graph from explicit ``(origin, twin, next)`` rows.

    ``outer_face_walk`` lists the vertices of the exterior face in boundary
    order (exterior on the left, i.e. clockwise in a drawing). The table must
    describe a spherical embedding: ``n - m + f = 2``.
    """
    rows = [tuple(int(c) for c in row) for row in half_edge_table]
    if any(len(r) != 3 for r in rows):
        raise MalformedRotationSystem("each half-edge row needs (origin, twin, next)")
    origin = tuple(r[0] for r in rows)
    twin = tuple(r[1] for r in rows)
    nxt = tuple(r[2] for r in rows)
    _validate_table(n, origin, twin, nxt)
    edge_list = sorted({(min(origin[e], origin[twin[e]]), max(origin[e], origin[twin[e]])) for e in range(len(origin))})
    _require_connected(n, edge_list)
    outer = _match_outer(origin, twin, nxt, outer_face_walk)
    g = PlaneGraph(n, origin, twin, nxt, outer)
    if not euler_audit(g).holds:
        raise MalformedRotationSystem("rotation system is not planar (Euler characteristic is not 2)")
    return g


def from_rotation(n: int, rotation, outer_face_walk) -> PlaneGraph:
    """Plane graph from counter-clockwise neighbour lists."""
    rot = [[int(v) for v in ring] for ring in rotation]
    if len(rot) != n:
        raise MalformedRotationSystem(f"rotation lists {len(rot)} vertices, expected {n}")
    for u, ring in enumerate(rot):
        if len(set(ring)) != len(ring):
            raise MalformedRotationSystem(f"vertex {u} lists a neighbour twice")
        for v in ring:
            if not 0 <= v < n or v == u:
                raise MalformedRotationSystem(f"vertex {u} has bad neighbour {v}")
    _, origin, twin, nxt = _from_rotations(n, rot)
    return build_combinatorial(n, zip(origin, twin, nxt), outer_face_walk)


def from_faces(n: int, faces, outer_face_walk) -> PlaneGraph:
    """Plane graph from face boundary walks, each listed with its face on the left."""
    index: dict[tuple[int, int], int] = {}
    origin: list[int] = []
    for walk in faces:
        for k, u in enumerate(walk):
            v = walk[(k + 1) % len(walk)]
            if (u, v) in index:
                raise MalformedRotationSystem(f"dart {(u, v)} appears in two faces")
            index[(u, v)] = len(origin)
            origin.append(u)
    twin = [0] * len(origin)
    nxt = [0] * len(origin)
    for walk in faces:
        for k, u in enumerate(walk):
            v = walk[(k + 1) % len(walk)]
            w = walk[(k + 2) % len(walk)]
            e = index[(u, v)]
            if (v, u) not in index:
                raise MalformedRotationSystem(f"dart {(v, u)} is missing")
            twin[e] = index[(v, u)]
            nxt[e] = index[(v, w)]
    return build_combinatorial(n, zip(origin, twin, nxt), outer_face_walk)


def face_census(g: PlaneGraph) -> FaceCensus:
    faces = g.faces
    degrees = [len(w) for w in faces]
    return FaceCensus(
        faces=faces,
        degrees=degrees,
        exterior_degree=degrees[0],
        inner_degrees=dict(sorted(Counter(degrees[1:]).items())),
    )


def girth(g: PlaneGraph) -> Optional[int]:
    """Length of a shortest cycle, by breadth-first search from every vertex.

    Returns ``None`` for trees. The embedding is ignored.
    """
    adj = g.adjacency
    best = None
    for s in range(g.n):
        dist = [-1] * g.n
        parent = [-1] * g.n
        dist[s] = 0
        queue = deque([s])
        while queue:
            u = queue.popleft()
            if best is not None and 2 * dist[u] + 1 >= best:
                break
            for w in adj[u]:
                if dist[w] < 0:
                    dist[w] = dist[u] + 1
                    parent[w] = u
                    queue.append(w)
                elif w != parent[u]:
                    c = dist[u] + dist[w] + 1
                    if best is None or c < best:
                        best = c
    return best


def euler_audit(g: PlaneGraph) -> EulerAudit:
    return EulerAudit(g.n, g.m, len(g.faces))


def degree_sum_audit(g: PlaneGraph) -> DegreeSumAudit:
    c = face_census(g)
    return DegreeSumAudit(2 * g.m, c.h + sum(d * k for d, k in c.inner_degrees.items()))


def face_walks(g: PlaneGraph) -> list[list[int]]:
    """Faces as vertex walks, exterior first."""
    return [g.face_vertices(w) for w in g.faces]


def canonical_walk(walk: Sequence[int]) -> tuple[int, ...]:
    """Rotate a cyclic walk to start at its smallest rotation."""
    k = len(walk)
    return min(tuple(walk[i:]) + tuple(walk[:i]) for i in range(k))


def census_signature(g: PlaneGraph):
    """Embedding fingerprint: (exterior walk, sorted inner walks), rotation-normalised."""
    walks = [canonical_walk(w) for w in face_walks(g)]
    return walks[0], tuple(sorted(walks[1:]))


def to_json(g: PlaneGraph, with_faces: bool = True) -> dict:
    doc: dict = {"n": g.n, "edges": [list(e) for e in g.edges]}
    if g.coords is not None:
        doc["coordinates"] = [[p.x, p.y] for p in g.coords]
    else:
        doc["rotation"] = [g.rotation(v) for v in range(g.n)]
    walks = face_walks(g)
    doc["outer_face"] = walks[0]
    if with_faces:
        doc["faces"] = walks
    return doc


def from_json(doc) -> PlaneGraph:
    """Read the graph interchange document (dict or JSON text).

    Graphs with ``coordinates`` are embedded geometrically; otherwise a
    ``rotation`` (counter-clockwise neighbour lists) and ``outer_face`` are
    required.
    """
    if isinstance(doc, (str, bytes)):
        doc = json.loads(doc)
    try:
        n = int(doc["n"])
        edges = doc["edges"]
    except (KeyError, TypeError, ValueError):
        raise ValidationError('graph document needs "n" and "edges"') from None
    if doc.get("coordinates") is not None:
        coords = doc["coordinates"]
        if len(coords) != n:
            raise ValidationError(f"{len(coords)} coordinates for {n} vertices")
        g = build_geometric(coords, edges)
        if doc.get("outer_face") is not None:
            want = canonical_walk([int(v) for v in doc["outer_face"]])
            if canonical_walk(face_walks(g)[0]) != want:
                raise ValidationError("outer_face does not match the unbounded face of the drawing")
        return g
    if doc.get("rotation") is None or doc.get("outer_face") is None:
        raise ValidationError("a graph without coordinates needs rotation and outer_face")
    g = from_rotation(n, doc["rotation"], doc["outer_face"])
    if g.edges != sorted(_check_edge_list(n, edges)):
        raise ValidationError("edge list disagrees with the rotation system")
    return g
