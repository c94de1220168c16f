"""Edge-count calculus for connected simple plane graphs.

Notation used throughout: ``n`` vertices, girth ``g``, exterior face degree
``h`` and, for convex hull g-angulations, ``t = (2n - h - g) / (g - 2)``,
which is both ``m - n`` and the number of inner faces minus one. Everything
is exact integer arithmetic.
"""

from __future__ import annotations

from dataclasses import asdict, dataclass
from typing import Optional

from .errors import InvalidParams, NotDivisible

REASONS = ("NotDivisible", "HTooSmall", "HExceedsN", "BudgetNegative")


@dataclass(frozen=True)
class AngulationParams:
    n: int
    h: int
    g: int
    t: int
    m: int
    inner_faces: int
    t_prime: Optional[int] = None  # only for h == g, where t == 2 * t_prime

    def to_json(self) -> dict:
        d = asdict(self)
        if d["t_prime"] is None:
            del d["t_prime"]
        return d


@dataclass(frozen=True)
class FeasibilityReport:
    feasible: bool
    params: Optional[AngulationParams] = None
    reason: Optional[str] = None

    def to_json(self) -> dict:
        if self.feasible:
            return {"feasible": True, **self.params.to_json()}
        return {"feasible": False, "reason": self.reason}


def _check(n, g, h=None):
    if g < 3:
        raise InvalidParams(f"girth must be at least 3, got g={g}")
    if n < 3:
        raise InvalidParams(f"need at least 3 vertices, got n={n}")
    if h is not None and h < g:
        raise InvalidParams(f"exterior degree h={h} is below the girth g={g}")


def edge_bound(n: int, g: int, h: int) -> int:
    """Largest edge count of a connected simple plane graph with girth g and exterior degree h.

    This is ``floor((g(n-2) - (h-g)) / (g-2))``. ``h`` may exceed ``n`` when the
    exterior walk runs along bridges.
    """
    _check(n, g, h)
    return (g * (n - 2) - (h - g)) // (g - 2)


def feasibility(n: int, g: int, h: int) -> FeasibilityReport:
    """Decide whether a convex hull g-angulation with these parameters exists."""
    if g < 3:
        raise InvalidParams(f"girth must be at least 3, got g={g}")
    if h < g:
        return FeasibilityReport(False, reason="HTooSmall")
    if h > n:
        return FeasibilityReport(False, reason="HExceedsN")
    budget = 2 * n - h - g
    if budget < 0:
        return FeasibilityReport(False, reason="BudgetNegative")
    if budget % (g - 2):
        return FeasibilityReport(False, reason="NotDivisible")
    t = budget // (g - 2)
    return FeasibilityReport(True, AngulationParams(n=n, h=h, g=g, t=t, m=n + t, inner_faces=t + 1))


def convex_bound(n: int, g: int) -> int:
    """Edge bound when every vertex lies on the exterior face (h = n)."""
    _check(n, g)
    if n < g:
        raise InvalidParams(f"n={n} is smaller than g={g}")
    return ((g - 1) * n - g) // (g - 2)


def convex_counts(n: int, g: int) -> AngulationParams:
    _check(n, g)
    if n < g:
        raise InvalidParams(f"n={n} is smaller than g={g}")
    if (n - g) % (g - 2):
        raise NotDivisible(f"g-2={g - 2} does not divide n-g={n - g}")
    t = (n - g) // (g - 2)
    return AngulationParams(n=n, h=n, g=g, t=t, m=n + t, inner_faces=t + 1)


def triangulation_counts(n: int, h: int) -> tuple[int, int]:
    """(edges, inner triangles) of any triangulation of n points with h on the hull."""
    if not (n >= h >= 3):
        raise InvalidParams(f"need n >= h >= 3, got n={n}, h={h}")
    return 3 * n - 3 - h, 2 * n - 2 - h


def closed_bound(n: int, g: int) -> int:
    """The classical bound ``floor(g(n-2)/(g-2))``; the h = g case of :func:`edge_bound`."""
    _check(n, g)
    if n < g:
        raise InvalidParams(f"n={n} is smaller than g={g}")
    return g * (n - 2) // (g - 2)


def g_angulation_counts(n: int, g: int) -> AngulationParams:
    """Counts for a plane graph whose faces, exterior included, are all g-cycles."""
    _check(n, g)
    if n < g:
        raise InvalidParams(f"n={n} is smaller than g={g}")
    if (n - g) % (g - 2):
        raise NotDivisible(f"g-2={g - 2} does not divide n-g={n - g}")
    tp = (n - g) // (g - 2)
    return AngulationParams(n=n, h=g, g=g, t=2 * tp, m=n + 2 * tp, inner_faces=2 * tp + 1, t_prime=tp)
