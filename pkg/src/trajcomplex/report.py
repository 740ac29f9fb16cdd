"""Scenario analysis reports and their textual renderings.

A report holds the symmetric pair matrix (each unordered pair once, in
canonical id order) plus the scenario aggregates for the selected
pairwise field, optionally extended with Monte-Carlo comparison columns.
All numbers render with 9 significant digits, and rendering is fully
deterministic so repeated runs are byte-identical.
"""

from __future__ import annotations

import json
from dataclasses import dataclass

import numpy as np

from .aggregate import PairComplexity, ScenarioComplexity, scenario_complexity
from .errors import EmptyWindowError
from .oracle import pair_cp_mc
from .relative import relative_trajectory
from .scenario import Scenario
from .trajectory import Trajectory, build_trajectory

FORMATS = ("table", "csv", "json-lines")

PAIR_COLUMNS = ("id_a", "id_b", "cpsum", "cpweight", "cpinvpie", "overlap_h", "empty_overlap")
ORACLE_COLUMNS = ("mc_estimate", "mc_stderr", "abs_diff")


@dataclass(frozen=True)
class OracleComparison:
    """Monte-Carlo cross-check of one pair's cpinvpie indicator."""

    estimate: float
    stderr: float
    abs_diff: float


@dataclass(frozen=True)
class Report:
    """Analysis output for one scenario."""

    scenario_name: str
    rho0: float
    pair_field: str
    result: ScenarioComplexity
    oracle: list[OracleComparison] | None = None


def analyze_scenario(
    scenario: Scenario,
    pair_field: str = "cpinvpie",
    max_workers: int = 1,
    mc_samples: int = 0,
    mc_seed: int = 0,
) -> Report:
    """Run the full pipeline on a scenario.

    With mc_samples > 0, each pair additionally gets a Monte-Carlo
    estimate of its cpinvpie indicator for comparison.
    """
    trajectories = [build_trajectory(plan) for plan in scenario.aircraft]
    result = scenario_complexity(
        trajectories, scenario.rho0, pair_field=pair_field, max_workers=max_workers
    )
    oracle = None
    if mc_samples > 0:
        by_id = {t.id: t for t in trajectories}
        streams = np.random.SeedSequence(mc_seed).spawn(len(result.pairs))
        oracle = [
            _oracle_for_pair(by_id[p.pair[0]], by_id[p.pair[1]], p, scenario.rho0, mc_samples, stream)
            for p, stream in zip(result.pairs, streams)
        ]
    return Report(
        scenario_name=scenario.name,
        rho0=scenario.rho0,
        pair_field=pair_field,
        result=result,
        oracle=oracle,
    )


def _oracle_for_pair(
    traj_a: Trajectory,
    traj_b: Trajectory,
    pair: PairComplexity,
    rho0: float,
    samples: int,
    seed: int | np.random.SeedSequence,
) -> OracleComparison:
    try:
        rel = relative_trajectory(traj_a, traj_b)
    except EmptyWindowError:
        return OracleComparison(estimate=0.0, stderr=0.0, abs_diff=abs(pair.cpinvpie))
    mc = pair_cp_mc(rel, rho0, samples, seed)
    return OracleComparison(
        estimate=mc.combined,
        stderr=mc.combined_stderr,
        abs_diff=abs(pair.cpinvpie - mc.combined),
    )


def fmt(value: float) -> str:
    """One number, 9 significant digits."""
    return f"{value:.9g}"


def _round9(value: float) -> float:
    """Numeric value rounded to the 9-significant-digit output precision."""
    return float(fmt(value))


def _pair_cells(pair: PairComplexity, comp: OracleComparison | None) -> list[str]:
    cells = [
        pair.pair[0],
        pair.pair[1],
        fmt(pair.cpsum),
        fmt(pair.cpweight),
        fmt(pair.cpinvpie),
        fmt(pair.overlap),
        "yes" if pair.empty_overlap else "no",
    ]
    if comp is not None:
        cells += [fmt(comp.estimate), fmt(comp.stderr), fmt(comp.abs_diff)]
    return cells


def render_csv(report: Report) -> str:
    """Pair matrix as CSV: header row, one pair per line."""
    header = PAIR_COLUMNS + (ORACLE_COLUMNS if report.oracle is not None else ())
    lines = [",".join(header)]
    comps = report.oracle or [None] * len(report.result.pairs)
    for pair, comp in zip(report.result.pairs, comps):
        lines.append(",".join(_pair_cells(pair, comp)))
    return "\n".join(lines) + "\n"


def render_table(report: Report) -> str:
    """Human-readable table with a scenario header and aggregate footer."""
    res = report.result
    header = list(PAIR_COLUMNS + (ORACLE_COLUMNS if report.oracle is not None else ()))
    rows = [
        _pair_cells(pair, comp)
        for pair, comp in zip(res.pairs, report.oracle or [None] * len(res.pairs))
    ]
    widths = [max(len(h), *(len(r[i]) for r in rows)) for i, h in enumerate(header)]
    out = [
        f"scenario: {report.scenario_name or '(unnamed)'}  "
        f"rho0={fmt(report.rho0)} nmi  field={report.pair_field}",
        "  ".join(h.ljust(w) for h, w in zip(header, widths)).rstrip(),
    ]
    for row in rows:
        out.append("  ".join(c.ljust(w) for c, w in zip(row, widths)).rstrip())
    flag = "  (pair values clamped to 1)" if res.invprod_clamped else ""
    out.append(
        f"aggregates[{report.pair_field}]: max={fmt(res.agg_max)}  sum={fmt(res.agg_sum)}  "
        f"mean={fmt(res.agg_mean)}  invprod={fmt(res.agg_invprod)}{flag}"
    )
    return "\n".join(out) + "\n"


def render_json_lines(report: Report) -> str:
    """Line-delimited records: one scenario line, one line per pair, one aggregate line."""
    lines = [
        json.dumps(
            {
                "record": "scenario",
                "name": report.scenario_name,
                "rho0_nmi": report.rho0,
                "field": report.pair_field,
            },
            sort_keys=True,
        )
    ]
    comps = report.oracle or [None] * len(report.result.pairs)
    for pair, comp in zip(report.result.pairs, comps):
        rec = {
            "record": "pair",
            "id_a": pair.pair[0],
            "id_b": pair.pair[1],
            "cpsum": _round9(pair.cpsum),
            "cpweight": _round9(pair.cpweight),
            "cpinvpie": _round9(pair.cpinvpie),
            "overlap_h": _round9(pair.overlap),
            "empty_overlap": pair.empty_overlap,
        }
        if comp is not None:
            rec["mc_estimate"] = _round9(comp.estimate)
            rec["mc_stderr"] = _round9(comp.stderr)
            rec["abs_diff"] = _round9(comp.abs_diff)
        lines.append(json.dumps(rec, sort_keys=True))
    res = report.result
    lines.append(
        json.dumps(
            {
                "record": "aggregates",
                "field": report.pair_field,
                "max": _round9(res.agg_max),
                "sum": _round9(res.agg_sum),
                "mean": _round9(res.agg_mean),
                "invprod": _round9(res.agg_invprod),
                "invprod_clamped": res.invprod_clamped,
            },
            sort_keys=True,
        )
    )
    return "\n".join(lines) + "\n"


def render(report: Report, fmt_name: str) -> str:
    if fmt_name == "table":
        return render_table(report)
    if fmt_name == "csv":
        return render_csv(report)
    if fmt_name == "json-lines":
        return render_json_lines(report)
    raise ValueError(f"unknown format {fmt_name!r}, expected one of {FORMATS}")
