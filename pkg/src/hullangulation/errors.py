"""Exception hierarchy shared by all modules.

Validation problems (bad input, infeasible parameters) derive from
:class:`ValidationError`; broken internal invariants raise
:class:`InvariantViolation`. The CLI maps the former to exit status 2 and the
latter to exit status 1.
"""


class HullAngulationError(Exception):
    """Base class for every error raised by this package."""


class ValidationError(HullAngulationError, ValueError):
    """Input rejected before any work was done."""


class InvariantViolation(HullAngulationError, AssertionError):
    """An internal consistency check failed."""


# geometry
class CollinearInput(ValidationError):
    pass


class CollinearBoundary(ValidationError):
    pass


class CoordinateOverflow(ValidationError):
    pass


class DuplicatePoint(ValidationError):
    pass


# graphs
class CrossingEdges(ValidationError):
    def __init__(self, first, second):
        self.pair = (tuple(first), tuple(second))
        super().__init__(f"edges {self.pair[0]} and {self.pair[1]} cross")


class Disconnected(ValidationError):
    pass


class MalformedRotationSystem(ValidationError):
    pass


class Acyclic(ValidationError):
    pass


class MissingCoordinates(ValidationError):
    pass


# formulas / construction
class InvalidParams(ValidationError):
    pass


class NotDivisible(ValidationError):
    pass


class Infeasible(ValidationError):
    def __init__(self, report):
        self.report = report
        super().__init__(f"no convex hull angulation: {report.reason}")


class LayoutOverflow(ValidationError):
    pass


# oracle
class TooLarge(ValidationError):
    pass


class NoGraph(ValidationError):
    pass
