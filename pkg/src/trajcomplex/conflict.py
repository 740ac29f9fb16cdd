"""Whitening transform and per-segment conflict probability.

For one relative segment the combined covariance is whitened to the
identity and the frame rotated so the moving reference point travels
along the negative u axis. The image of the protection disc of radius
rho0 is an ellipse; its axis-aligned bounding rectangle has half-extents
(du, dv) derived from the whitened-frame matrix m = (T^-1)^T (T^-1) =
[[a, b], [b, c]]:

    dv = rho0 * sqrt(a / (a*c - b^2))
    du = rho0 * sqrt(c / (a*c - b^2))

The segment conflict probability is the standard-normal mass of the
rectangle swept by that bounding box while the reference point moves
from u_cs to u_cf at constant lateral offset v_c:

    cp = (Phi(v_c + dv) - Phi(v_c - dv)) * (Phi(u_cs + du) - Phi(u_cf - du))

and the infinite-strip variant drops the along-track factor.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np
from scipy.special import ndtr

from .errors import SingularCovarianceError
from .relative import RelativeSegment
from .trajectory import rotation_matrix

#: Default horizontal separation standard (nmi).
DEFAULT_RHO0 = 5.0

#: Below this relative-speed magnitude (knots) the alignment rotation is
#: taken from the relative position instead of the relative velocity.
SPEED_EPS = 1e-9

#: Covariance determinants below this (nmi^4) count as singular.
DET_EPS = 1e-15


@dataclass(frozen=True)
class WhitenedFrame:
    """Whitened coordinate frame for one relative segment.

    Attributes:
        transform: 2x2 matrix T with T @ sigma_ab @ T.T == I and
            T @ (-relative velocity) pointing along the negative u axis.
        m_matrix: (T^-1)^T (T^-1), symmetric positive definite.
        du: Half-extent of the whitened protection disc along u.
        dv: Half-extent along v.
        degenerate: True when both the relative velocity and the relative
            position were too small to orient the frame, making the
            result frame-dependent.
    """

    transform: np.ndarray
    m_matrix: np.ndarray
    du: float
    dv: float
    degenerate: bool = False


@dataclass(frozen=True)
class SegmentCp:
    """Conflict probability of one relative segment.

    Attributes:
        value: Finite-rectangle probability over the segment's window.
        value_infinite: Infinite-strip probability (time-unbounded).
        u_cs, u_cf: Whitened u coordinate of the moving reference point
            at segment start / end (u_cs >= u_cf).
        v_c: Constant whitened lateral offset of the reference point.
        degenerate: Propagated from the whitened frame.
    """

    value: float
    value_infinite: float
    u_cs: float
    u_cf: float
    v_c: float
    degenerate: bool = False


def phi(x: float) -> float:
    """Standard normal CDF."""
    return float(ndtr(x))


def phi_diff(lo: float, hi: float) -> float:
    """Phi(hi) - Phi(lo) for lo <= hi, accurate in both tails.

    Evaluated through the upper tail when the interval sits right of the
    origin, which avoids cancellation between values near 1 and lets
    far-tail differences underflow cleanly to 0.
    """
    if not lo < hi:
        return 0.0
    if lo + hi > 0.0:
        return float(ndtr(-lo) - ndtr(-hi))
    return float(ndtr(hi) - ndtr(lo))


def _inv_sqrt_spd(sigma: np.ndarray) -> np.ndarray:
    """Symmetric inverse square root of a 2x2 SPD matrix.

    Uses the closed form sqrt(M) = (M + sqrt(det) I) / sqrt(tr + 2 sqrt(det)),
    then inverts the 2x2 result; branch-free and exact for the SPD case.

    Raises:
        SingularCovarianceError: If sigma is not positive definite or its
            determinant falls below DET_EPS.
    """
    a, b = float(sigma[0, 0]), float(sigma[0, 1])
    c = float(sigma[1, 1])
    det = a * c - b * b
    if det < DET_EPS or a <= 0.0 or c <= 0.0:
        raise SingularCovarianceError(
            f"combined covariance is not positive definite (det={det:.3e})"
        )
    s = math.sqrt(det)
    t = math.sqrt(a + c + 2.0 * s)
    # sqrt(sigma) = [[a+s, b], [b, c+s]] / t with determinant s; its
    # closed-form inverse is the whitening matrix.
    return np.array([[c + s, -b], [-b, a + s]]) / (s * t)


def build_transform(
    sigma_ab: np.ndarray,
    dv: np.ndarray,
    rho0: float = DEFAULT_RHO0,
    fallback_dp: np.ndarray | None = None,
) -> WhitenedFrame:
    """Whitening-plus-alignment transform for one relative segment.

    T = R(alpha) @ W where W is the symmetric inverse square root of
    sigma_ab and the rotation alpha sends the whitened moving-point
    velocity W @ (-dv) onto the negative u axis.

    When the relative speed is below SPEED_EPS the alignment is
    undefined; the u axis is then aligned with the whitened -fallback_dp
    direction (the frame still factorizes the probability the same way).
    If that is also near zero the rotation is the identity and the frame
    is flagged degenerate.

    Args:
        sigma_ab: Combined 2x2 covariance (nmi^2), positive definite.
        dv: Relative velocity vector (knots).
        rho0: Protection disc radius (nmi).
        fallback_dp: Relative position used to orient the frame when the
            relative speed vanishes.

    Raises:
        SingularCovarianceError: If sigma_ab is singular.
    """
    w = _inv_sqrt_spd(sigma_ab)
    degenerate = False
    if float(np.hypot(dv[0], dv[1])) >= SPEED_EPS:
        # Moving-point velocity is -dv; rotate its whitened image onto -u.
        wx, wy = w @ (-np.asarray(dv, dtype=float))
        alpha = math.pi - math.atan2(wy, wx)
    elif fallback_dp is not None and float(np.hypot(fallback_dp[0], fallback_dp[1])) >= SPEED_EPS:
        wx, wy = w @ (-np.asarray(fallback_dp, dtype=float))
        alpha = -math.atan2(wy, wx)
    else:
        alpha = 0.0
        degenerate = True

    r = rotation_matrix(alpha)
    transform = r @ w
    m = r @ np.asarray(sigma_ab, dtype=float) @ r.T
    m = (m + m.T) / 2.0
    a, b, c = float(m[0, 0]), float(m[0, 1]), float(m[1, 1])
    det = a * c - b * b
    return WhitenedFrame(
        transform=transform,
        m_matrix=m,
        du=rho0 * math.sqrt(c / det),
        dv=rho0 * math.sqrt(a / det),
        degenerate=degenerate,
    )


def cp_segment(seg: RelativeSegment, rho0: float = DEFAULT_RHO0) -> SegmentCp:
    """Finite-rectangle conflict probability of one relative segment.

    Whitens the segment's covariance, maps the moving reference point's
    start and end positions into the aligned frame, and evaluates both
    the finite-rectangle value and the infinite-strip value.

    Raises:
        SingularCovarianceError: Propagated from the whitening step.
    """
    frame = build_transform(seg.sigma_ab, seg.dv, rho0, fallback_dp=seg.dp_start)
    t = frame.transform
    u_cs, v_cs = t @ (-seg.dp_start)
    u_cf, v_cf = t @ (-seg.dp_end)

    # Relative motion is parallel to the u axis by construction; the v
    # coordinates can differ only by rounding.
    span = max(1.0, abs(u_cs), abs(u_cf))
    assert abs(v_cf - v_cs) <= 1e-9 * span, "whitened motion not parallel to u axis"
    v_c = float(v_cs)
    # The moving point travels toward negative u; any inversion is
    # rounding noise on a (near-)zero-length sweep.
    if u_cf > u_cs:
        u_cs, u_cf = u_cf, u_cs

    lateral = phi_diff(v_c - frame.dv, v_c + frame.dv)
    along = phi_diff(u_cf - frame.du, u_cs + frame.du)
    value = min(max(lateral * along, 0.0), 1.0)
    return SegmentCp(
        value=value,
        value_infinite=lateral,
        u_cs=float(u_cs),
        u_cf=float(u_cf),
        v_c=v_c,
        degenerate=frame.degenerate,
    )
