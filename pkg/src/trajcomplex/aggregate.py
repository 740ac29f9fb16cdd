"""Pairwise and scenario-level complexity aggregation.

Per-segment conflict probabilities roll up into three pairwise
indicators: their plain sum (cpsum), their duration-weighted sum
(cpweight), and the complement of the product of complements (cpinvpie,
the overall conflict probability if the segments were independent).
Pairwise indicators then roll up over all unordered aircraft pairs by
maximum, summation, uniform-weight mean, and inverse product.
"""

from __future__ import annotations

import math
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass, field

from .conflict import DEFAULT_RHO0, cp_segment
from .errors import DuplicateIdError, EmptyWindowError, FewerThanTwoAircraftError
from .relative import RelativeTrajectory, relative_trajectory
from .trajectory import Trajectory

PAIR_FIELDS = ("cpsum", "cpweight", "cpinvpie")


@dataclass(frozen=True)
class PairComplexity:
    """Complexity indicators for one aircraft pair.

    Attributes:
        pair: (id_a, id_b) aircraft identifiers.
        segment_cps: Per merged segment, (t_start, t_end, cp value).
        cpsum: Sum of segment cps; in [0, number of segments].
        cpweight: Duration-weighted sum of segment cps; in [0, 1].
        cpinvpie: 1 - product of (1 - cp); in [0, 1].
        overlap: Length of the pair's common time window (hours).
        empty_overlap: True when the schedules never overlap; all three
            indicators are then zero.
    """

    pair: tuple[str, str]
    segment_cps: list[tuple[float, float, float]] = field(default_factory=list)
    cpsum: float = 0.0
    cpweight: float = 0.0
    cpinvpie: float = 0.0
    overlap: float = 0.0
    empty_overlap: bool = False

    def value(self, pair_field: str) -> float:
        if pair_field not in PAIR_FIELDS:
            raise ValueError(f"unknown pair field {pair_field!r}, expected one of {PAIR_FIELDS}")
        return getattr(self, pair_field)


@dataclass(frozen=True)
class ScenarioComplexity:
    """Scenario-level aggregates over all unordered aircraft pairs.

    Attributes:
        pairs: One PairComplexity per unordered pair, in canonical
            (id-sorted) order.
        pair_field: The pairwise field the aggregates were taken over.
        agg_max, agg_sum, agg_mean: Maximum / sum / uniform-weight mean
            of the selected field over pairs.
        agg_invprod: 1 - product of (1 - value) over pairs; pair values
            are clamped to 1 first when the field is cpsum (which is not
            a probability), in which case invprod_clamped is set.
        invprod_clamped: See agg_invprod.
    """

    pairs: list[PairComplexity]
    pair_field: str
    agg_max: float
    agg_sum: float
    agg_mean: float
    agg_invprod: float
    invprod_clamped: bool = False


def combine_segment_cps(
    cps: list[float], durations: list[float]
) -> tuple[float, float, float]:
    """(cpsum, cpweight, cpinvpie) from per-segment cps and durations.

    cpsum is the plain sum, cpweight the duration-weighted sum, cpinvpie
    the complement of the product of complements. The three satisfy
    cpweight <= max cp <= cpinvpie <= cpsum exactly; the lattice is
    pinned against last-ulp rounding.
    """
    total = math.fsum(durations)
    cpsum = math.fsum(cps)
    cpweight = math.fsum(d * cp for d, cp in zip(durations, cps)) / total
    one_minus = 1.0
    for cp in cps:
        one_minus *= 1.0 - cp
    cpinvpie = 1.0 - one_minus

    peak = max(cps)
    cpweight = min(cpweight, peak)
    cpinvpie = min(max(cpinvpie, peak), cpsum, 1.0)
    return cpsum, cpweight, cpinvpie


def pair_complexity(rel_traj: RelativeTrajectory, rho0: float = DEFAULT_RHO0) -> PairComplexity:
    """Aggregate per-segment conflict probabilities for one pair.

    A relative trajectory with no segments (empty overlap) yields zeros
    with the empty_overlap flag set.
    """
    if not rel_traj.segments:
        return PairComplexity(pair=rel_traj.pair, empty_overlap=True)

    cps = [cp_segment(seg, rho0).value for seg in rel_traj.segments]
    durations = [seg.duration for seg in rel_traj.segments]
    cpsum, cpweight, cpinvpie = combine_segment_cps(cps, durations)

    return PairComplexity(
        pair=rel_traj.pair,
        segment_cps=[(seg.t_start, seg.t_end, cp) for seg, cp in zip(rel_traj.segments, cps)],
        cpsum=cpsum,
        cpweight=cpweight,
        cpinvpie=cpinvpie,
        overlap=math.fsum(durations),
    )


def combine_pair_values(values: list[float]) -> tuple[float, float, float, float]:
    """(max, sum, mean, invprod) over pairwise indicator values.

    The inverse product treats each value as a probability; values above
    1 (possible for cpsum) are clamped to 1 first. Like the segment-level
    combination it is pinned to its true bounds, max clamped value <=
    invprod <= min(sum of clamped values, 1), against last-ulp rounding.
    """
    agg_max = max(values)
    agg_sum = math.fsum(values)
    agg_mean = agg_sum / len(values)
    clamped = [min(v, 1.0) for v in values]
    one_minus = 1.0
    for v in clamped:
        one_minus *= 1.0 - v
    agg_invprod = min(max(1.0 - one_minus, max(clamped), 0.0), math.fsum(clamped), 1.0)
    return agg_max, agg_sum, agg_mean, agg_invprod


def pair_complexity_between(
    traj_a: Trajectory, traj_b: Trajectory, rho0: float = DEFAULT_RHO0
) -> PairComplexity:
    """Pair complexity of two trajectories, zero-flagged on empty overlap."""
    try:
        rel = relative_trajectory(traj_a, traj_b)
    except EmptyWindowError:
        return PairComplexity(pair=(traj_a.id, traj_b.id), empty_overlap=True)
    return pair_complexity(rel, rho0)


def scenario_complexity(
    trajectories: list[Trajectory],
    rho0: float = DEFAULT_RHO0,
    pair_field: str = "cpinvpie",
    max_workers: int = 1,
) -> ScenarioComplexity:
    """Aggregate one pairwise indicator over every unordered pair.

    Pairs are enumerated in canonical id-sorted order, so the result does
    not depend on the ordering of the input list. Pairs without temporal
    overlap contribute zero and stay in the matrix, flagged.

    Args:
        trajectories: At least two trajectories with distinct ids.
        rho0: Protection disc radius (nmi).
        pair_field: Which pairwise indicator to aggregate
            (cpsum | cpweight | cpinvpie).
        max_workers: Thread count for the independent pairwise
            computations; results are assembled in canonical order either
            way, so the output is identical for any width.

    Raises:
        FewerThanTwoAircraftError: If fewer than two trajectories.
        DuplicateIdError: If two trajectories share an id.
        ValueError: If pair_field is not a known field.
    """
    if pair_field not in PAIR_FIELDS:
        raise ValueError(f"unknown pair field {pair_field!r}, expected one of {PAIR_FIELDS}")
    if len(trajectories) < 2:
        raise FewerThanTwoAircraftError(
            f"need at least 2 trajectories, got {len(trajectories)}"
        )
    seen: set[str] = set()
    for traj in trajectories:
        if traj.id in seen:
            raise DuplicateIdError(f"duplicate aircraft id {traj.id!r}")
        seen.add(traj.id)

    ordered = sorted(trajectories, key=lambda t: t.id)
    jobs = [
        (ordered[i], ordered[j])
        for i in range(len(ordered))
        for j in range(i + 1, len(ordered))
    ]
    if max_workers > 1:
        with ThreadPoolExecutor(max_workers=max_workers) as pool:
            pairs = list(pool.map(lambda ab: pair_complexity_between(*ab, rho0), jobs))
    else:
        pairs = [pair_complexity_between(a, b, rho0) for a, b in jobs]

    values = [p.value(pair_field) for p in pairs]
    agg_max, agg_sum, agg_mean, agg_invprod = combine_pair_values(values)

    return ScenarioComplexity(
        pairs=pairs,
        pair_field=pair_field,
        agg_max=agg_max,
        agg_sum=agg_sum,
        agg_mean=agg_mean,
        agg_invprod=agg_invprod,
        invprod_clamped=pair_field == "cpsum",
    )
