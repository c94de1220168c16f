"""Edge bounds, feasibility and construction of convex hull g-angulations."""

from .angulator import (
    RecognitionReport,
    construct_combinatorial,
    recognize,
    synthesize_coordinates,
    triangulate_points,
)
from .formulas import (
    AngulationParams,
    FeasibilityReport,
    closed_bound,
    convex_bound,
    convex_counts,
    edge_bound,
    feasibility,
    g_angulation_counts,
    triangulation_counts,
)
from .geom import Hull, Orientation, Point, PointSet, convex_hull, orientation, segments_cross
from .oracle import ExtremalReport, certify_bound, enumerate_extremal
from .plane_graph import (
    FaceCensus,
    PlaneGraph,
    build_combinatorial,
    build_geometric,
    degree_sum_audit,
    euler_audit,
    face_census,
    girth,
)

__version__ = "0.1.0"
