"""Piecewise-linear 4D trajectory model.

A flight plan declares waypoints, per-segment speeds and position-error
sigmas; from it we derive a timed piecewise-linear trajectory whose
segments carry a constant velocity vector, heading, and world-frame
position-error covariance.

Units are nautical miles (nmi), knots (nmi/h) and hours throughout, so
that the 5 nmi horizontal separation standard needs no conversion.

Example:
    >>> plan = FlightPlan(
    ...     id="AC1",
    ...     waypoints=[Waypoint(0.0, 0.0), Waypoint(3.0, 4.0)],
    ...     speeds=[5.0],
    ...     sigma_along=1.0,
    ...     sigma_cross=0.5,
    ... )
    >>> traj = build_trajectory(plan)
    >>> traj.segments[0].t_end
    1.0
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field

import numpy as np

from .errors import (
    DegenerateSegmentError,
    NonPositiveSigmaError,
    NonPositiveSpeedError,
    TimeOutOfRangeError,
)


@dataclass(frozen=True)
class Waypoint:
    """A 2D position an aircraft must visit, in nautical miles."""

    x: float
    y: float

    def __post_init__(self) -> None:
        if not (math.isfinite(self.x) and math.isfinite(self.y)):
            raise ValueError(f"waypoint coordinates must be finite, got ({self.x}, {self.y})")

    def as_array(self) -> np.ndarray:
        return np.array([self.x, self.y], dtype=float)


@dataclass(frozen=True)
class FlightPlan:
    """Declarative input for one aircraft.

    Attributes:
        id: Opaque aircraft identifier.
        waypoints: Ordered waypoints, length n+1 with n >= 1 segments.
        speeds: Speed magnitude per segment (knots), length n.
        sigma_along: Along-track position-error standard deviation (nmi).
        sigma_cross: Cross-track position-error standard deviation (nmi).
        start_time: Departure time at the first waypoint (hours).

    Velocity vectors are derived, not declared: on segment j the velocity
    points from waypoint j-1 to waypoint j with the declared magnitude,
    which keeps the heading consistent with the segment direction.
    """

    id: str
    waypoints: list[Waypoint]
    speeds: list[float]
    sigma_along: float
    sigma_cross: float
    start_time: float = 0.0

    def __post_init__(self) -> None:
        if len(self.waypoints) < 2:
            raise ValueError(f"plan {self.id!r}: need at least 2 waypoints, got {len(self.waypoints)}")
        if len(self.speeds) != len(self.waypoints) - 1:
            raise ValueError(
                f"plan {self.id!r}: speeds length ({len(self.speeds)}) must be "
                f"waypoints length - 1 ({len(self.waypoints) - 1})"
            )
        for j, (a, b) in enumerate(zip(self.waypoints, self.waypoints[1:])):
            if a.x == b.x and a.y == b.y:
                raise DegenerateSegmentError(
                    f"plan {self.id!r}: waypoints {j} and {j + 1} coincide at ({a.x}, {a.y})"
                )
        for j, v in enumerate(self.speeds):
            if not (v > 0.0):
                raise NonPositiveSpeedError(f"plan {self.id!r}: speed {j} must be > 0, got {v}")
        if not (self.sigma_along > 0.0):
            raise NonPositiveSigmaError(f"plan {self.id!r}: sigma_along must be > 0, got {self.sigma_along}")
        if not (self.sigma_cross > 0.0):
            raise NonPositiveSigmaError(f"plan {self.id!r}: sigma_cross must be > 0, got {self.sigma_cross}")
        if not math.isfinite(self.start_time):
            raise ValueError(f"plan {self.id!r}: start_time must be finite")


@dataclass(frozen=True)
class Segment:
    """One constant-velocity leg of a trajectory.

    Attributes:
        p_start, p_end: Bounding waypoints.
        velocity: Velocity vector (knots), pointing from p_start to p_end.
        heading: Angle of the velocity against the x axis (radians).
        t_start, t_end: Time interval, hours. The segment owns
            [t_start, t_end); the trajectory's final instant is owned by
            its last segment.
        covariance: World-frame 2x2 position-error covariance (nmi^2),
            constant along the segment.
    """

    p_start: Waypoint
    p_end: Waypoint
    velocity: np.ndarray
    heading: float
    t_start: float
    t_end: float
    covariance: np.ndarray

    @property
    def duration(self) -> float:
        return self.t_end - self.t_start


@dataclass(frozen=True)
class Trajectory:
    """A time-contiguous sequence of constant-velocity segments."""

    id: str
    segments: list[Segment] = field(default_factory=list)

    @property
    def t_start(self) -> float:
        return self.segments[0].t_start

    @property
    def t_end(self) -> float:
        return self.segments[-1].t_end

    def breakpoint_times(self) -> list[float]:
        """All segment boundary times, ascending, endpoints included."""
        return [self.segments[0].t_start] + [s.t_end for s in self.segments]


def rotation_matrix(theta: float) -> np.ndarray:
    """Proper 2D rotation matrix [[cos, -sin], [sin, cos]] for angle theta."""
    c, s = math.cos(theta), math.sin(theta)
    return np.array([[c, -s], [s, c]])


def rotate_covariance(sigma_along: float, sigma_cross: float, theta: float) -> np.ndarray:
    """World-frame covariance of a local diag(sigma_along^2, sigma_cross^2) error.

    Rotates the local along/cross-track covariance through the heading
    theta. The result is symmetric positive definite with eigenvalues
    {sigma_along^2, sigma_cross^2}.

    Raises:
        NonPositiveSigmaError: If either sigma is not strictly positive.
    """
    if not (sigma_along > 0.0):
        raise NonPositiveSigmaError(f"sigma_along must be > 0, got {sigma_along}")
    if not (sigma_cross > 0.0):
        raise NonPositiveSigmaError(f"sigma_cross must be > 0, got {sigma_cross}")
    r = rotation_matrix(theta)
    local = np.diag([sigma_along * sigma_along, sigma_cross * sigma_cross])
    cov = r @ local @ r.T
    # Symmetrize away rounding asymmetry so downstream checks see an
    # exactly symmetric matrix.
    return (cov + cov.T) / 2.0


def build_trajectory(plan: FlightPlan) -> Trajectory:
    """Derive the timed piecewise-linear trajectory of a flight plan.

    Segment end times follow the recursion
    ``t_j = |P_j - P_{j-1}| / speed_j + t_{j-1}`` with ``t_0`` the plan's
    start time. Velocity vectors point along each segment with the
    declared speed; covariance per segment comes from rotate_covariance
    at the segment heading.

    Raises:
        DegenerateSegmentError, NonPositiveSpeedError,
        NonPositiveSigmaError: Propagated from plan validation when the
            plan is constructed outside the usual constructors.
    """
    segments: list[Segment] = []
    t_prev = plan.start_time
    for j, speed in enumerate(plan.speeds):
        a, b = plan.waypoints[j], plan.waypoints[j + 1]
        delta = b.as_array() - a.as_array()
        length = float(np.hypot(delta[0], delta[1]))
        heading = math.atan2(delta[1], delta[0])
        t_next = length / speed + t_prev
        segments.append(
            Segment(
                p_start=a,
                p_end=b,
                velocity=delta * (speed / length),
                heading=heading,
                t_start=t_prev,
                t_end=t_next,
                covariance=rotate_covariance(plan.sigma_along, plan.sigma_cross, heading),
            )
        )
        t_prev = t_next
    return Trajectory(id=plan.id, segments=segments)


def segment_at(traj: Trajectory, t: float) -> Segment:
    """The segment owning time t.

    Each segment owns [t_start, t_end); the final instant belongs to the
    last segment.

    Raises:
        TimeOutOfRangeError: If t is outside [traj.t_start, traj.t_end].
    """
    if t < traj.t_start or t > traj.t_end:
        raise TimeOutOfRangeError(
            f"trajectory {traj.id!r}: t={t} outside [{traj.t_start}, {traj.t_end}]"
        )
    for seg in traj.segments:
        if t < seg.t_end:
            return seg
    return traj.segments[-1]


def position_at(traj: Trajectory, t: float) -> np.ndarray:
    """Nominal position at time t by linear interpolation.

    Interior breakpoints and the final instant return the waypoint
    itself, exactly.

    Raises:
        TimeOutOfRangeError: If t is outside the trajectory's time span.
    """
    seg = segment_at(traj, t)
    if t == seg.t_end:
        return seg.p_end.as_array()
    return seg.p_start.as_array() + seg.velocity * (t - seg.t_start)


def velocity_at(traj: Trajectory, t: float) -> np.ndarray:
    """Velocity vector at time t (constant per segment).

    Raises:
        TimeOutOfRangeError: If t is outside the trajectory's time span.
    """
    return segment_at(traj, t).velocity
