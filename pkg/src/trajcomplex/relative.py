"""Relative motion of an aircraft pair.

Two piecewise-linear trajectories combine into a single relative
piecewise-linear trajectory over their common time window: its
breakpoints are the union of both aircrafts' breakpoints, and on each
merged interval the relative position moves with the constant relative
velocity while carrying the sum of the two world-frame covariances.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .errors import EmptyWindowError
from .trajectory import Trajectory, position_at, segment_at

# Breakpoints closer than this (hours) collapse to one, so float-coincident
# times cannot produce zero-duration segments.
TIME_DEDUP_TOL = 1e-9


@dataclass(frozen=True)
class RelativeSegment:
    """Relative motion of one pair over one merged interval.

    The relative position (aircraft A minus aircraft B) moves linearly
    from dp_start to dp_end with constant relative velocity dv, while the
    combined position-error covariance sigma_ab = cov_A + cov_B stays
    constant because both headings are constant on the interval.
    """

    dp_start: np.ndarray
    dp_end: np.ndarray
    dv: np.ndarray
    t_start: float
    t_end: float
    sigma_ab: np.ndarray

    def __post_init__(self) -> None:
        if not (self.t_end > self.t_start):
            raise ValueError(f"t_end ({self.t_end}) must exceed t_start ({self.t_start})")
        predicted = self.dp_start + self.dv * (self.t_end - self.t_start)
        scale = max(
            1.0,
            float(np.linalg.norm(self.dp_start)),
            float(np.linalg.norm(self.dp_end)),
        )
        if float(np.max(np.abs(self.dp_end - predicted))) > 1e-9 * scale:
            raise ValueError("dp_end is inconsistent with dp_start + dv * duration")

    @property
    def duration(self) -> float:
        return self.t_end - self.t_start


@dataclass(frozen=True)
class RelativeTrajectory:
    """Merged-breakpoint relative trajectory of an aircraft pair."""

    pair: tuple[str, str]
    segments: list[RelativeSegment]

    @property
    def duration(self) -> float:
        """Total length of the common time window (hours)."""
        return sum(seg.duration for seg in self.segments)


def merge_breakpoints(
    times_a: list[float], times_b: list[float], window: tuple[float, float]
) -> list[float]:
    """Ascending union of both breakpoint sets clipped to a window.

    Returns the window endpoints plus every breakpoint strictly inside
    the window; values closer than TIME_DEDUP_TOL collapse to one.

    Args:
        times_a: Sorted ascending breakpoint times of aircraft A (hours).
        times_b: Sorted ascending breakpoint times of aircraft B (hours).
        window: (lo, hi) clipping window with lo < hi.

    Raises:
        EmptyWindowError: If the window is empty (lo >= hi).
    """
    lo, hi = window
    if not (lo < hi):
        raise EmptyWindowError(f"window [{lo}, {hi}] is empty")
    merged = [lo]
    for t in sorted(set(times_a) | set(times_b)):
        if lo < t < hi and t - merged[-1] > TIME_DEDUP_TOL and hi - t > TIME_DEDUP_TOL:
            merged.append(t)
    merged.append(hi)
    return merged


def relative_trajectory(traj_a: Trajectory, traj_b: Trajectory) -> RelativeTrajectory:
    """Combine two trajectories into their relative trajectory.

    The common time window is [max of start times, min of end times];
    one RelativeSegment is produced per merged breakpoint interval.

    Raises:
        EmptyWindowError: If the pair has no temporal overlap. Callers
            treat such a pair as zero complexity and flag it.
    """
    lo = max(traj_a.t_start, traj_b.t_start)
    hi = min(traj_a.t_end, traj_b.t_end)
    if not (lo < hi):
        raise EmptyWindowError(
            f"pair ({traj_a.id!r}, {traj_b.id!r}): no temporal overlap "
            f"([{traj_a.t_start}, {traj_a.t_end}] vs [{traj_b.t_start}, {traj_b.t_end}])"
        )
    times = merge_breakpoints(traj_a.breakpoint_times(), traj_b.breakpoint_times(), (lo, hi))

    # One dp per breakpoint, shared by the adjacent segments, so the
    # relative trajectory is position-contiguous by construction.
    dps = [position_at(traj_a, t) - position_at(traj_b, t) for t in times]

    segments: list[RelativeSegment] = []
    for t0, t1, dp0, dp1 in zip(times, times[1:], dps, dps[1:]):
        mid = 0.5 * (t0 + t1)
        seg_a = segment_at(traj_a, mid)
        seg_b = segment_at(traj_b, mid)
        segments.append(
            RelativeSegment(
                dp_start=dp0,
                dp_end=dp1,
                dv=seg_a.velocity - seg_b.velocity,
                t_start=t0,
                t_end=t1,
                sigma_ab=seg_a.covariance + seg_b.covariance,
            )
        )
    return RelativeTrajectory(pair=(traj_a.id, traj_b.id), segments=segments)
