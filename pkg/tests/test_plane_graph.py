import json
import random

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from hullangulation.angulator import triangulate_points
from hullangulation.errors import CrossingEdges, Disconnected, MalformedRotationSystem, ValidationError
from hullangulation.geom import convex_hull, random_points
from hullangulation.plane_graph import (
    build_combinatorial,
    build_geometric,
    census_signature,
    degree_sum_audit,
    euler_audit,
    face_census,
    face_walks,
    from_faces,
    from_json,
    from_rotation,
    girth,
    to_json,
)

from .conftest import CUBE_EDGES, CUBE_POINTS, PENTAGON_POINTS, SQUARE

# one triangle: half-edges 0..2 bound the inner face, 3..5 the outer one
TRIANGLE_TABLE = [(0, 3, 1), (1, 4, 2), (2, 5, 0), (1, 0, 5), (2, 1, 3), (0, 2, 4)]


def table_of(g):
    return list(zip(g.origin, g.twin, g.next))


class TestBuildGeometric:
    def test_square_cycle(self, square_cycle):
        c = face_census(square_cycle)
        assert c.f == 2
        assert c.h == 4

    def test_k4(self, k4):
        c = face_census(k4)
        assert c.f == 4
        assert c.h == 3

    def test_crossing_diagonals(self):
        edges = [(0, 1), (1, 2), (2, 3), (0, 3), (0, 2), (1, 3)]
        with pytest.raises(CrossingEdges) as info:
            build_geometric(SQUARE, edges)
        assert set(info.value.pair) == {(0, 2), (1, 3)}

    def test_disconnected(self):
        with pytest.raises(Disconnected):
            build_geometric(SQUARE, [(0, 1), (2, 3)])

    def test_isolated_vertex_is_disconnected(self):
        with pytest.raises(Disconnected):
            build_geometric(SQUARE, [(0, 1), (1, 2)])

    @pytest.mark.parametrize("edges", [[(0, 0)], [(0, 1), (1, 0)], [(0, 7)], []])
    def test_bad_edge_lists(self, edges):
        with pytest.raises(ValidationError):
            build_geometric(SQUARE, edges)

    def test_rotation_is_counter_clockwise(self, k4):
        # centre vertex 3 sees 1 (lower right), 2 (top), 0 (lower left) counter-clockwise
        ring = k4.rotation(3)
        k = ring.index(1)
        assert ring[k:] + ring[:k] == [1, 2, 0]

    def test_exterior_face_contains_far_point(self):
        # the exterior walk of a triangulation is the hull, traversed clockwise
        g = triangulate_points(random_points(12, seed=4))
        outer = face_walks(g)[0]
        hull = list(convex_hull(g.coords).indices)
        ccw = outer[::-1]
        k = ccw.index(hull[0])
        assert ccw[k:] + ccw[:k] == hull


class TestBuildCombinatorial:
    def test_triangle_table(self):
        g = build_combinatorial(3, TRIANGLE_TABLE, [1, 0, 2])
        assert face_census(g).f == 2
        assert g.m == 3

    def test_outer_walk_picks_the_face(self):
        inner_first = build_combinatorial(3, TRIANGLE_TABLE, [0, 1, 2])
        assert face_walks(inner_first)[0] == [0, 1, 2]

    def test_cube_with_square_outer(self, cube):
        g = build_combinatorial(8, table_of(cube), face_walks(cube)[0])
        c = face_census(g)
        assert (c.f, c.h) == (6, 4)
        assert g.coords is None

    def test_cube_with_another_face_outside(self, cube):
        inner = face_walks(cube)[1]
        g = build_combinatorial(8, table_of(cube), inner)
        c = face_census(g)
        assert (c.f, c.h) == (6, 4)
        assert face_walks(g)[0] == inner

    def test_broken_twin(self):
        bad = list(TRIANGLE_TABLE)
        bad[0] = (0, 4, 1)
        with pytest.raises(MalformedRotationSystem):
            build_combinatorial(3, bad, [1, 0, 2])

    def test_next_must_start_at_head(self):
        bad = list(TRIANGLE_TABLE)
        bad[0] = (0, 3, 2)
        bad[1] = (1, 4, 1)
        with pytest.raises(MalformedRotationSystem):
            build_combinatorial(3, bad, [1, 0, 2])

    def test_outer_walk_must_be_a_face(self):
        with pytest.raises(MalformedRotationSystem):
            build_combinatorial(3, TRIANGLE_TABLE, [0, 2])

    def test_toroidal_rotation_rejected(self):
        # K5 with an arbitrary rotation system cannot be spherical
        rot = [[j for j in range(5) if j != i] for i in range(5)]
        walk = [0, 1]
        while True:  # trace the face left of dart 0 -> 1
            u, v = walk[-2], walk[-1]
            w = rot[v][rot[v].index(u) - 1]
            if (v, w) == (0, 1):
                break
            walk.append(w)
        with pytest.raises(MalformedRotationSystem, match="Euler"):
            from_rotation(5, rot, walk[:-1])

    def test_disconnected_table(self):
        two = TRIANGLE_TABLE + [(a + 3, b + 6, c + 6) for a, b, c in TRIANGLE_TABLE]
        with pytest.raises((Disconnected, MalformedRotationSystem)):
            build_combinatorial(6, two, [1, 0, 2])

    def test_from_faces_matches_geometry(self, cube):
        walks = face_walks(cube)
        g = from_faces(8, walks, walks[0])
        assert census_signature(g) == census_signature(cube)


class TestFaceCensus:
    def test_triangle_with_pendant(self, pendant):
        c = face_census(pendant)
        # exterior walk: 3 -> 0 -> 2 -> 1 -> 0 -> 3 runs the pendant edge twice
        assert c.f == 2
        assert c.h == 5
        assert c.inner_degrees == {3: 1}
        outer = face_walks(pendant)[0]
        assert sorted(outer) == [0, 0, 1, 2, 3]

    def test_k4(self, k4):
        c = face_census(k4)
        assert (c.f, c.h, c.inner_degrees) == (4, 3, {3: 3})

    def test_cube(self, cube):
        c = face_census(cube)
        assert (c.f, c.h, c.inner_degrees) == (6, 4, {4: 5})

    def test_every_half_edge_once(self, cube):
        c = face_census(cube)
        flat = [e for w in c.faces for e in w]
        assert sorted(flat) == list(range(2 * cube.m))
        assert sum(c.degrees) == 2 * cube.m
        assert c.f == 1 + sum(c.inner_degrees.values())


class TestGirth:
    def test_examples(self, k4, cube, pentagon_chord, pendant):
        assert girth(k4) == 3
        assert girth(cube) == 4
        assert girth(pentagon_chord) == 3
        assert girth(pendant) == 3

    def test_tree(self):
        g = build_geometric(SQUARE, [(0, 1), (1, 2), (2, 3)])
        assert girth(g) is None

    def test_pentagon(self):
        g = build_geometric(PENTAGON_POINTS, [(0, 1), (1, 2), (2, 3), (3, 4), (0, 4)])
        assert girth(g) == 5


class TestAudits:
    def test_euler(self, k4, pendant, cube):
        for g, expected in ((k4, (4, 6, 4)), (pendant, (4, 4, 2)), (cube, (8, 12, 6))):
            a = euler_audit(g)
            assert (a.n, a.m, a.f) == expected
            assert a.holds

    def test_degree_sum(self, k4, pendant, square_cycle):
        for g, lhs, rhs in ((k4, 12, 3 + 9), (pendant, 8, 5 + 3), (square_cycle, 8, 4 + 4)):
            a = degree_sum_audit(g)
            assert (a.lhs, a.rhs) == (lhs, rhs)
            assert a.holds


def random_plane_graph(n, seed, keep):
    """A triangulation of seeded random points with a pseudo-random subset of edges removed,
    keeping it connected."""
    full = triangulate_points(random_points(n, seed=seed, span=500))
    rng = random.Random(seed)
    edges = list(full.edges)
    rng.shuffle(edges)
    kept = list(edges)
    for e in edges:
        if len(kept) <= keep:
            break
        trial = [x for x in kept if x != e]
        try:
            build_geometric(full.coords, trial)
        except Disconnected:
            continue
        kept = trial
    return build_geometric(full.coords, kept)


@settings(max_examples=60, deadline=None)
@given(st.integers(3, 14), st.integers(0, 10**6), st.floats(0.0, 1.0))
def test_invariants_on_random_plane_graphs(n, seed, frac):
    full_m = 3 * n  # upper bound on the number of edges kept
    g = random_plane_graph(n, seed, keep=int(frac * full_m))
    assert all(g.twin[g.twin[e]] == e and g.twin[e] != e for e in range(2 * g.m))
    assert sorted(e for w in g.faces for e in w) == list(range(2 * g.m))
    assert euler_audit(g).holds
    assert degree_sum_audit(g).holds
    gg = girth(g)
    c = face_census(g)
    if gg is not None and c.inner_degrees:
        assert gg <= min(c.inner_degrees)


class TestJson:
    def test_geometric_round_trip(self, cube):
        doc = json.loads(json.dumps(to_json(cube)))
        again = from_json(doc)
        assert census_signature(again) == census_signature(cube)
        assert doc["faces"][0] == doc["outer_face"]

    def test_combinatorial_round_trip(self, cube):
        g = build_combinatorial(8, table_of(cube), face_walks(cube)[2])
        doc = to_json(g)
        assert "rotation" in doc and "coordinates" not in doc
        assert census_signature(from_json(json.dumps(doc))) == census_signature(g)

    def test_outer_face_mismatch(self, cube):
        doc = to_json(cube)
        doc["outer_face"] = doc["faces"][1]
        with pytest.raises(ValidationError):
            from_json(doc)

    def test_needs_embedding(self):
        with pytest.raises(ValidationError):
            from_json({"n": 3, "edges": [[0, 1], [1, 2], [0, 2]]})

    def test_graph_from_edges_only_coordinates(self):
        g = from_json({"n": 8, "edges": CUBE_EDGES, "coordinates": CUBE_POINTS})
        assert face_census(g).h == 4
