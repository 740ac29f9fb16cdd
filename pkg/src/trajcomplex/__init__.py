"""Conflict-probability based complexity indicators for 4D flight trajectories.

Pipeline: declarative flight plans become timed piecewise-linear
trajectories with world-frame error covariance (`trajectory`); pairs
combine into relative trajectories (`relative`); each relative segment
gets an analytical conflict probability through a whitening transform
(`conflict`); segment values aggregate into pairwise and scenario
complexity indicators (`aggregate`). Independent Monte-Carlo and
quadrature validators live in `oracle`; scenario file I/O, canonical
examples, reporting, and the CLI in `scenario`, `report`, and `cli`.
"""

from .aggregate import (
    PAIR_FIELDS,
    PairComplexity,
    ScenarioComplexity,
    combine_pair_values,
    combine_segment_cps,
    pair_complexity,
    pair_complexity_between,
    scenario_complexity,
)
from .conflict import (
    DEFAULT_RHO0,
    SegmentCp,
    WhitenedFrame,
    build_transform,
    cp_segment,
    phi,
)
from .errors import (
    DegenerateSegmentError,
    DuplicateIdError,
    EmptyWindowError,
    FewerThanTwoAircraftError,
    NonPositiveSigmaError,
    NonPositiveSpeedError,
    ScenarioSyntaxError,
    ScenarioValidationError,
    SingularCovarianceError,
    TimeOutOfRangeError,
    TrajComplexError,
)
from .oracle import PairMcResult, cp_instant_exact, cp_segment_mc, pair_cp_mc
from .relative import (
    RelativeSegment,
    RelativeTrajectory,
    merge_breakpoints,
    relative_trajectory,
)
from .report import Report, analyze_scenario, render
from .scenario import Scenario, gen_example, parse_scenario, scenario_to_json
from .trajectory import (
    FlightPlan,
    Segment,
    Trajectory,
    Waypoint,
    build_trajectory,
    position_at,
    rotate_covariance,
    rotation_matrix,
    velocity_at,
)

__version__ = "0.1.0"

__all__ = [
    "DEFAULT_RHO0",
    "PAIR_FIELDS",
    "DegenerateSegmentError",
    "DuplicateIdError",
    "EmptyWindowError",
    "FewerThanTwoAircraftError",
    "FlightPlan",
    "NonPositiveSigmaError",
    "NonPositiveSpeedError",
    "PairComplexity",
    "PairMcResult",
    "RelativeSegment",
    "RelativeTrajectory",
    "Report",
    "Scenario",
    "ScenarioComplexity",
    "ScenarioSyntaxError",
    "ScenarioValidationError",
    "Segment",
    "SegmentCp",
    "SingularCovarianceError",
    "TimeOutOfRangeError",
    "TrajComplexError",
    "Trajectory",
    "Waypoint",
    "WhitenedFrame",
    "analyze_scenario",
    "build_trajectory",
    "build_transform",
    "combine_pair_values",
    "combine_segment_cps",
    "cp_instant_exact",
    "cp_segment",
    "cp_segment_mc",
    "gen_example",
    "merge_breakpoints",
    "pair_complexity",
    "pair_complexity_between",
    "pair_cp_mc",
    "parse_scenario",
    "phi",
    "position_at",
    "relative_trajectory",
    "render",
    "rotate_covariance",
    "rotation_matrix",
    "scenario_complexity",
    "scenario_to_json",
    "velocity_at",
]
