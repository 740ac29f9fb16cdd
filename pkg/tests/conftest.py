"""Shared random-geometry builders for the test suite."""

from __future__ import annotations

import math

import numpy as np

from trajcomplex import FlightPlan, RelativeSegment, Waypoint
from trajcomplex.conflict import build_transform


def rot(theta: float) -> np.ndarray:
    c, s = math.cos(theta), math.sin(theta)
    return np.array([[c, -s], [s, c]])


def random_spd(rng: np.random.Generator, sigma_lo: float = 0.5, sigma_hi: float = 4.0) -> np.ndarray:
    """Random SPD covariance with axis sigmas in [sigma_lo, sigma_hi]."""
    s1, s2 = rng.uniform(sigma_lo, sigma_hi, size=2)
    r = rot(rng.uniform(0.0, 2.0 * math.pi))
    sigma = r @ np.diag([s1 * s1, s2 * s2]) @ r.T
    return (sigma + sigma.T) / 2.0


def random_velocity(rng: np.random.Generator, lo: float = 100.0, hi: float = 900.0) -> np.ndarray:
    ang = rng.uniform(0.0, 2.0 * math.pi)
    return rng.uniform(lo, hi) * np.array([math.cos(ang), math.sin(ang)])


def random_capsule_segment(rng: np.random.Generator) -> RelativeSegment:
    """Random single relative segment with controlled whitened geometry.

    The whitened sweep spans 4..8 times the larger rectangle half-extent
    and the lateral offset v_c lies in [-4, 4], so the analytic value is
    neither saturated at 1 nor lost in the far tail.
    """
    sigma = random_spd(rng)
    dv = random_velocity(rng)
    dp0 = rng.uniform(-50.0, 50.0, size=2)
    frame = build_transform(sigma, dv)
    t = frame.transform
    w = t @ (-dp0)
    span = rng.uniform(4.0, 8.0) * max(frame.du, frame.dv)
    v_target = rng.uniform(-4.0, 4.0)
    delta = np.array([span / 2.0 - w[0], v_target - w[1]])
    dp0 = dp0 - np.linalg.solve(t, delta)
    dt = span / float(np.linalg.norm(t @ dv))
    return RelativeSegment(
        dp_start=dp0,
        dp_end=dp0 + dv * dt,
        dv=dv,
        t_start=0.0,
        t_end=dt,
        sigma_ab=sigma,
    )


def random_plan(rng: np.random.Generator, ac_id: str, n_segments: int | None = None,
                start_time: float = 0.0) -> FlightPlan:
    """Random flight plan with 1..3 legs inside a ~200 nmi box."""
    n = int(n_segments) if n_segments is not None else int(rng.integers(1, 4))
    points = [rng.uniform(-100.0, 100.0, size=2)]
    while len(points) < n + 1:
        step = random_velocity(rng, 20.0, 120.0)
        points.append(points[-1] + step)
    return FlightPlan(
        id=ac_id,
        waypoints=[Waypoint(float(p[0]), float(p[1])) for p in points],
        speeds=[float(v) for v in rng.uniform(200.0, 600.0, size=n)],
        sigma_along=float(rng.uniform(0.5, 4.0)),
        sigma_cross=float(rng.uniform(0.3, 2.0)),
        start_time=start_time,
    )
