"""Exception types raised by the trajcomplex library."""


class TrajComplexError(Exception):
    """Base class for all trajcomplex errors."""


class DegenerateSegmentError(TrajComplexError):
    """Two consecutive waypoints coincide, so the segment has zero length."""


class NonPositiveSpeedError(TrajComplexError):
    """A declared segment speed is zero or negative."""


class NonPositiveSigmaError(TrajComplexError):
    """An along-track or cross-track error sigma is zero or negative."""


class TimeOutOfRangeError(TrajComplexError):
    """A query time lies outside the trajectory's time span."""


class EmptyWindowError(TrajComplexError):
    """A requested time window is empty (no temporal overlap)."""


class SingularCovarianceError(TrajComplexError):
    """A combined covariance matrix is singular or not positive definite."""


class DuplicateIdError(TrajComplexError):
    """Two aircraft in one scenario share the same identifier."""


class FewerThanTwoAircraftError(TrajComplexError):
    """Scenario-level aggregation needs at least two trajectories."""


class ScenarioSyntaxError(TrajComplexError):
    """A scenario document is not well-formed."""


class ScenarioValidationError(TrajComplexError):
    """A scenario document is well-formed but violates a field constraint.

    The message names the offending aircraft and field.
    """
