"""Independent ground-truth estimators for the analytical approximation.

Two validators that share no code with the whitening pipeline: an
adaptive quadrature of the Gaussian density over the protection disc
(the exact instantaneous conflict probability), and a Monte-Carlo
estimator of the per-segment conflict probability under the model's own
assumption that the position error is one frozen Gaussian draw per
encounter.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np
from scipy.integrate import dblquad

from .conflict import DEFAULT_RHO0
from .errors import SingularCovarianceError
from .relative import RelativeSegment, RelativeTrajectory

_MC_CHUNK = 1_000_000


def cp_instant_exact(
    dp: np.ndarray,
    sigma_ab: np.ndarray,
    rho0: float = DEFAULT_RHO0,
    tol: float = 1e-8,
) -> float:
    """Instantaneous conflict probability by adaptive quadrature.

    Integrates the N(0, sigma_ab) density over the disc of radius rho0
    centered at -dp, in polar coordinates, to absolute accuracy tol.

    Raises:
        SingularCovarianceError: If sigma_ab is singular.
        ValueError: If tol is outside (0, 1e-3].
    """
    if not (0.0 < tol <= 1e-3):
        raise ValueError(f"tol must be in (0, 1e-3], got {tol}")
    sigma = np.asarray(sigma_ab, dtype=float)
    det = float(np.linalg.det(sigma))
    if det < 1e-15:
        raise SingularCovarianceError(f"covariance is singular (det={det:.3e})")
    inv = np.linalg.inv(sigma)
    norm_const = 1.0 / (2.0 * math.pi * math.sqrt(det))
    cx, cy = -float(dp[0]), -float(dp[1])

    def density(r: float, theta: float) -> float:
        x = cx + r * math.cos(theta)
        y = cy + r * math.sin(theta)
        q = inv[0, 0] * x * x + 2.0 * inv[0, 1] * x * y + inv[1, 1] * y * y
        return r * norm_const * math.exp(-0.5 * q)

    value, abserr = dblquad(density, 0.0, 2.0 * math.pi, 0.0, rho0, epsabs=tol * 0.1)
    if abserr > tol:
        raise ArithmeticError(f"quadrature error estimate {abserr:.3e} exceeds tol {tol:.3e}")
    return min(max(value, 0.0), 1.0)


def _dist_to_segment(points: np.ndarray, a: np.ndarray, b: np.ndarray) -> np.ndarray:
    """Distance from each row of points to the segment a-b."""
    ab = b - a
    denom = float(ab @ ab)
    if denom < 1e-30:
        return np.hypot(points[:, 0] - a[0], points[:, 1] - a[1])
    t = np.clip((points - a) @ ab / denom, 0.0, 1.0)
    closest = a + t[:, None] * ab
    return np.hypot(points[:, 0] - closest[:, 0], points[:, 1] - closest[:, 1])


def cp_segment_mc(
    seg: RelativeSegment,
    rho0: float = DEFAULT_RHO0,
    samples: int = 1_000_000,
    seed: int | np.random.SeedSequence = 0,
) -> tuple[float, float]:
    """Monte-Carlo estimate of one segment's conflict probability.

    Each trial draws one position error from N(0, sigma_ab), frozen over
    the encounter, and declares conflict when the moving relative
    position passes within rho0 of it -- equivalently, when the distance
    from the negated error to the dp_start->dp_end segment is below rho0.

    Returns:
        (estimate, binomial standard error). Deterministic for a fixed
        seed regardless of chunking. When every sample hits, the plug-in
        standard error degenerates to 0 even though the estimate only
        resolves p to within ~1/samples; that boundary returns the
        rule-of-three width 1/samples instead. An all-miss run keeps
        standard error 0 (nothing can reach the swept region).
    """
    if samples < 10_000:
        raise ValueError(f"samples must be >= 10000, got {samples}")
    chol = np.linalg.cholesky(seg.sigma_ab)
    rng = np.random.default_rng(seed)
    hits = 0
    remaining = samples
    while remaining > 0:
        n = min(remaining, _MC_CHUNK)
        eps = rng.standard_normal((n, 2)) @ chol.T
        d = _dist_to_segment(-eps, seg.dp_start, seg.dp_end)
        hits += int(np.count_nonzero(d < rho0))
        remaining -= n
    p = hits / samples
    if hits == samples:
        return p, 1.0 / samples
    return p, math.sqrt(p * (1.0 - p) / samples)


@dataclass(frozen=True)
class PairMcResult:
    """Monte-Carlo validation of a pair's segment-independent composition.

    Attributes:
        per_segment: (estimate, stderr) per merged segment.
        combined: 1 - product of (1 - estimate), the Monte-Carlo analogue
            of the cpinvpie indicator.
        combined_stderr: First-order propagated standard error of the
            combined estimate.
    """

    per_segment: list[tuple[float, float]]
    combined: float
    combined_stderr: float


def pair_cp_mc(
    rel_traj: RelativeTrajectory,
    rho0: float = DEFAULT_RHO0,
    samples: int = 1_000_000,
    seed: int | np.random.SeedSequence = 0,
) -> PairMcResult:
    """Per-segment Monte-Carlo estimates with independent draws per segment.

    Segment streams are spawned deterministically from the seed, so the
    result is reproducible and independent of evaluation order.
    """
    root = seed if isinstance(seed, np.random.SeedSequence) else np.random.SeedSequence(seed)
    streams = root.spawn(len(rel_traj.segments))
    per_segment = [
        cp_segment_mc(seg, rho0, samples, stream)
        for seg, stream in zip(rel_traj.segments, streams)
    ]
    survival = 1.0
    for est, _ in per_segment:
        survival *= 1.0 - est
    combined = 1.0 - survival
    var = 0.0
    for est, err in per_segment:
        others = survival / (1.0 - est) if est < 1.0 else 0.0
        var += (others * err) ** 2
    return PairMcResult(
        per_segment=per_segment,
        combined=combined,
        combined_stderr=math.sqrt(var),
    )
