"""Command-line interface.

Subcommands:
    analyze <scenario-file>      print the complexity report
    oracle <scenario-file>       report with Monte-Carlo comparison columns
    sweep                        (offset, cp) rows for a parametric family
    gen-example <1..5>           write a canonical example scenario

Exit codes: 0 success, 1 validation failure, 2 usage error. Diagnostics
go to stderr. The optional TRAJCOMPLEX_THREADS environment variable sets
the width used for the independent pairwise computations; output is
identical for any width.
"""

from __future__ import annotations

import argparse
import os
import sys
from typing import Sequence, TextIO

from .aggregate import PAIR_FIELDS
from .conflict import DEFAULT_RHO0, cp_segment
from .errors import TrajComplexError
from .relative import relative_trajectory
from .report import FORMATS, analyze_scenario, fmt, render
from .scenario import EXAMPLE_COUNT, gen_example, parse_scenario, scenario_to_json
from .trajectory import FlightPlan, Waypoint, build_trajectory

SWEEP_FAMILIES = ("parallel-offset",)


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="trajcomplex",
        description="Conflict-probability complexity indicators for 4D flight trajectories.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def add_common(p: argparse.ArgumentParser) -> None:
        p.add_argument("scenario_file", help="path to a scenario JSON document")
        p.add_argument("--field", choices=PAIR_FIELDS, default="cpinvpie",
                       help="pairwise field to aggregate (default: cpinvpie)")
        p.add_argument("--rho0", type=float, default=None, metavar="NMI",
                       help="override the scenario's separation radius")
        p.add_argument("--format", choices=FORMATS, default="table", dest="fmt",
                       help="output format (default: table)")

    p_analyze = sub.add_parser("analyze", help="compute the complexity report for a scenario")
    add_common(p_analyze)

    p_oracle = sub.add_parser("oracle", help="analyze with Monte-Carlo comparison columns")
    add_common(p_oracle)
    p_oracle.add_argument("--samples", type=int, default=1_000_000,
                          help="Monte-Carlo samples per segment (default: 1000000)")
    p_oracle.add_argument("--seed", type=int, default=0, help="Monte-Carlo seed (default: 0)")

    p_sweep = sub.add_parser("sweep", help="emit (parameter, cp) rows for a geometry family")
    p_sweep.add_argument("--family", choices=SWEEP_FAMILIES, required=True)
    p_sweep.add_argument("--min", type=float, default=0.0, help="first offset (nmi)")
    p_sweep.add_argument("--max", type=float, default=50.0, help="last offset (nmi)")
    p_sweep.add_argument("--steps", type=int, default=51, help="number of rows")
    p_sweep.add_argument("--rho0", type=float, default=DEFAULT_RHO0, metavar="NMI")

    p_gen = sub.add_parser("gen-example", help="write one of the canonical example scenarios")
    p_gen.add_argument("index", type=int, help=f"example number, 1..{EXAMPLE_COUNT}")
    p_gen.add_argument("-o", "--output", default=None, help="output path (default: stdout)")
    return parser


def _threads() -> int:
    raw = os.environ.get("TRAJCOMPLEX_THREADS", "1")
    try:
        return max(1, int(raw))
    except ValueError:
        return 1


def _load_scenario(path: str, rho0_override: float | None):
    with open(path, "rb") as fh:
        scenario = parse_scenario(fh.read())
    if rho0_override is not None:
        scenario = type(scenario)(
            aircraft=scenario.aircraft,
            rho0=rho0_override,
            name=scenario.name,
            description=scenario.description,
        )
    return scenario


def _cmd_analyze(args: argparse.Namespace, out: TextIO) -> int:
    scenario = _load_scenario(args.scenario_file, args.rho0)
    report = analyze_scenario(scenario, pair_field=args.field, max_workers=_threads())
    out.write(render(report, args.fmt))
    return 0


def _cmd_oracle(args: argparse.Namespace, out: TextIO) -> int:
    scenario = _load_scenario(args.scenario_file, args.rho0)
    report = analyze_scenario(
        scenario,
        pair_field=args.field,
        max_workers=_threads(),
        mc_samples=args.samples,
        mc_seed=args.seed,
    )
    out.write(render(report, args.fmt))
    return 0


def _sweep_pair(offset: float, rho0: float) -> float:
    """cp of one head-on pair on parallel tracks separated by `offset` nmi."""
    east = FlightPlan(
        id="A",
        waypoints=[Waypoint(-100.0, 0.0), Waypoint(100.0, 0.0)],
        speeds=[480.0],
        sigma_along=1.0,
        sigma_cross=1.0,
    )
    west = FlightPlan(
        id="B",
        waypoints=[Waypoint(100.0, offset), Waypoint(-100.0, offset)],
        speeds=[480.0],
        sigma_along=1.0,
        sigma_cross=1.0,
    )
    rel = relative_trajectory(build_trajectory(east), build_trajectory(west))
    return cp_segment(rel.segments[0], rho0).value


def _cmd_sweep(args: argparse.Namespace, out: TextIO) -> int:
    if args.steps < 1:
        raise TrajComplexError(f"sweep needs at least 1 step, got {args.steps}")
    if args.max < args.min:
        raise TrajComplexError(f"sweep range is empty ({args.min} > {args.max})")
    out.write("offset_nmi,cp\n")
    for k in range(args.steps):
        frac = k / (args.steps - 1) if args.steps > 1 else 0.0
        offset = args.min + (args.max - args.min) * frac
        out.write(f"{fmt(offset)},{fmt(_sweep_pair(offset, args.rho0))}\n")
    return 0


def _cmd_gen_example(args: argparse.Namespace, out: TextIO) -> int:
    try:
        scenario = gen_example(args.index)
    except IndexError as exc:
        raise TrajComplexError(str(exc)) from exc
    text = scenario_to_json(scenario)
    if args.output is None:
        out.write(text)
    else:
        with open(args.output, "w", encoding="utf-8") as fh:
            fh.write(text)
    return 0


def run_cli(
    argv: Sequence[str] | None = None,
    out: TextIO | None = None,
    err: TextIO | None = None,
) -> int:
    """Run one CLI invocation; returns the process exit code."""
    out = out if out is not None else sys.stdout
    err = err if err is not None else sys.stderr
    parser = _build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)

    handlers = {
        "analyze": _cmd_analyze,
        "oracle": _cmd_oracle,
        "sweep": _cmd_sweep,
        "gen-example": _cmd_gen_example,
    }
    try:
        return handlers[args.command](args, out)
    except TrajComplexError as exc:
        err.write(f"error: {exc}\n")
        return 1
    except OSError as exc:
        err.write(f"error: {exc}\n")
        return 1


def main() -> None:
    sys.exit(run_cli())


if __name__ == "__main__":
    main()
