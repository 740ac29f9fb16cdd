"""Acceptance suite: one test per criterion, each printing a verdict line.

Run with ``pytest tests/test_acceptance.py -v -s`` to see the per-criterion
lines. Every tolerance is pinned here; the random families are frozen by
explicit seeds so each criterion is deterministic.
"""

from __future__ import annotations

import io
import json
import math
import time

import numpy as np

from trajcomplex import (
    EmptyWindowError,
    FlightPlan,
    RelativeSegment,
    Waypoint,
    analyze_scenario,
    build_trajectory,
    build_transform,
    cp_instant_exact,
    cp_segment,
    cp_segment_mc,
    gen_example,
    pair_complexity,
    relative_trajectory,
    scenario_complexity,
)
from trajcomplex.cli import run_cli
from conftest import random_capsule_segment, random_plan, random_spd, random_velocity, rot


def verdict(n: int, text: str) -> None:
    print(f"[acceptance] criterion {n}: PASS — {text}")


def pair_indicators(scenario, field):
    report = analyze_scenario(scenario, pair_field=field)
    return report.result


def test_criterion_1_two_aircraft_ordering():
    """cpsum/cpweight/cpinvpie strictly decreasing FP1 -> FP2 -> FP3."""
    t0 = time.perf_counter()
    values = {}
    for field in ("cpsum", "cpweight", "cpinvpie"):
        values[field] = [
            pair_indicators(gen_example(i), field).pairs[0].value(field) for i in (1, 2, 3)
        ]
        v1, v2, v3 = values[field]
        assert v1 > v2 > v3, f"{field}: {values[field]}"
        assert v1 / v2 >= 1.5
    elapsed = time.perf_counter() - t0
    assert elapsed < 1.0
    verdict(1, f"FP1 > FP2 > FP3 on all three indicators, FP1/FP2 >= 1.5 ({elapsed:.3f} s)")


def test_criterion_2_three_aircraft_ordering():
    """All four scenario aggregates of cpinvpie strictly higher for FP4 than FP5."""
    t0 = time.perf_counter()
    r4 = pair_indicators(gen_example(4), "cpinvpie")
    r5 = pair_indicators(gen_example(5), "cpinvpie")
    assert r4.agg_max > r5.agg_max
    assert r4.agg_sum > r5.agg_sum
    assert r4.agg_mean > r5.agg_mean
    assert r4.agg_invprod > r5.agg_invprod
    elapsed = time.perf_counter() - t0
    assert elapsed < 1.0
    verdict(2, f"FP4 > FP5 for max/sum/mean/invprod ({elapsed:.3f} s)")


def test_criterion_3_oracle_agreement():
    """50 seeded geometries: MC within max(0.02, 4*stderr); analytic upper-bounds."""
    t0 = time.perf_counter()
    master_seed = 1701
    rng = np.random.default_rng(master_seed)
    worst_gap = 0.0
    for i in range(50):
        seg = random_capsule_segment(rng)
        analytic = cp_segment(seg).value
        est, err = cp_segment_mc(seg, samples=1_000_000, seed=master_seed * 1000 + i)
        gap = abs(analytic - est)
        assert gap <= max(0.02, 4.0 * err), f"geometry {i}: gap {gap}"
        assert analytic >= est - 3.0 * err, f"geometry {i}: upper bound violated"
        worst_gap = max(worst_gap, gap)
    elapsed = time.perf_counter() - t0
    assert elapsed < 60.0
    verdict(3, f"50/50 within tolerance (worst gap {worst_gap:.2e}), upper bound holds ({elapsed:.1f} s)")


def test_criterion_4_exact_instant_isotropic():
    """Quadrature matches 1 - exp(-rho0^2/(2 sigma^2)) to 1e-6 absolute."""
    for sigma in (1.0, 2.0, 5.0, 20.0):
        expected = 1.0 - math.exp(-25.0 / (2.0 * sigma * sigma))
        got = cp_instant_exact(np.zeros(2), sigma * sigma * np.eye(2), 5.0, tol=1e-8)
        assert abs(got - expected) <= 1e-6, f"sigma={sigma}: {got} vs {expected}"
    verdict(4, "isotropic closed form reproduced to 1e-6 for sigma in {1, 2, 5, 20}")


def test_criterion_5_bound_chain():
    """500 random multi-segment pairs: indicator lattice holds exactly."""
    rng = np.random.default_rng(500)
    checked = 0
    while checked < 500:
        a = build_trajectory(random_plan(rng, "A", n_segments=int(rng.integers(1, 4))))
        b = build_trajectory(random_plan(rng, "B", n_segments=int(rng.integers(1, 4))))
        try:
            rel = relative_trajectory(a, b)
        except EmptyWindowError:
            continue
        cps = []
        for seg in rel.segments:
            r = cp_segment(seg)
            assert 0.0 <= r.value <= r.value_infinite <= 1.0
            cps.append(r.value)
        pc = pair_complexity(rel)
        assert pc.cpweight <= max(cps) <= pc.cpinvpie <= pc.cpsum
        checked += 1
    verdict(5, f"lattice exact on {checked} multi-segment pairs")


def test_criterion_6_rigid_motion_invariance():
    """100 random scenarios: common rotation+translation moves indicators < 1e-9."""
    rng = np.random.default_rng(600)
    worst = 0.0
    for _ in range(100):
        n_aircraft = int(rng.integers(2, 4))
        plans = [random_plan(rng, f"AC{k}") for k in range(n_aircraft)]
        r = rot(rng.uniform(0.0, 2.0 * math.pi))
        shift = rng.uniform(-500.0, 500.0, size=2)
        moved = []
        for plan in plans:
            pts = [r @ w.as_array() + shift for w in plan.waypoints]
            moved.append(
                FlightPlan(
                    id=plan.id,
                    waypoints=[Waypoint(float(p[0]), float(p[1])) for p in pts],
                    speeds=plan.speeds,
                    sigma_along=plan.sigma_along,
                    sigma_cross=plan.sigma_cross,
                    start_time=plan.start_time,
                )
            )
        base = scenario_complexity([build_trajectory(p) for p in plans])
        turned = scenario_complexity([build_trajectory(p) for p in moved])
        for p0, p1 in zip(base.pairs, turned.pairs):
            for field in ("cpsum", "cpweight", "cpinvpie"):
                delta = abs(p0.value(field) - p1.value(field))
                worst = max(worst, delta)
                assert delta < 1e-9
    verdict(6, f"100 scenarios invariant under rigid motion (worst delta {worst:.2e})")


def test_criterion_7_whitening_contract():
    """1000 random SPD + velocities: whitening, alignment, and extents."""
    rng = np.random.default_rng(700)
    worst = 0.0
    for _ in range(1000):
        sigma = random_spd(rng)
        vel = random_velocity(rng)
        frame = build_transform(sigma, vel)
        t = frame.transform
        dev = float(np.max(np.abs(t @ sigma @ t.T - np.eye(2))))
        worst = max(worst, dev)
        assert dev < 1e-9
        moved = t @ (-vel)
        assert abs(moved[1]) < 1e-9 * float(np.linalg.norm(vel))
        assert moved[0] <= 0.0
        a, b = frame.m_matrix[0, 0], frame.m_matrix[0, 1]
        c = frame.m_matrix[1, 1]
        det = a * c - b * b
        assert math.isclose(frame.dv, 5.0 * math.sqrt(a / det), rel_tol=1e-12)
        assert math.isclose(frame.du, 5.0 * math.sqrt(c / det), rel_tol=1e-12)
    verdict(7, f"1000 frames whitened to identity (worst deviation {worst:.2e})")


def test_criterion_8_head_on_and_far_parallel_limits():
    """Head-on cp >= 0.999999; 200 nmi parallel tracks with unit sigmas <= 1e-12."""
    head_on = RelativeSegment(
        dp_start=np.array([-100.0, 0.0]),
        dp_end=np.array([100.0, 0.0]),
        dv=np.array([800.0, 0.0]),
        t_start=0.0,
        t_end=0.25,
        sigma_ab=np.eye(2),
    )
    high = cp_segment(head_on).value
    assert high >= 0.999999

    east = FlightPlan(id="A", waypoints=[Waypoint(0, 0), Waypoint(200, 0)],
                      speeds=[480.0], sigma_along=1.0, sigma_cross=1.0)
    west = FlightPlan(id="B", waypoints=[Waypoint(200, 200), Waypoint(0, 200)],
                      speeds=[480.0], sigma_along=1.0, sigma_cross=1.0)
    rel = relative_trajectory(build_trajectory(east), build_trajectory(west))
    low = max(cp_segment(s).value for s in rel.segments)
    assert low <= 1e-12
    verdict(8, f"head-on cp={high:.9f}; 200 nmi parallel cp={low:.3g}")


def test_criterion_9_cli_contract(tmp_path):
    """gen-example -> analyze round trip; exit codes; byte-stable CSV."""
    for index in range(1, 6):
        path = tmp_path / f"fp{index}.json"
        out, err = io.StringIO(), io.StringIO()
        assert run_cli(["gen-example", str(index), "-o", str(path)], out=out, err=err) == 0
        out2, err2 = io.StringIO(), io.StringIO()
        assert run_cli(["analyze", str(path)], out=out2, err=err2) == 0, err2.getvalue()

    # malformed input: field-addressed diagnostic, exit 1
    bad = tmp_path / "bad.json"
    doc = json.loads((tmp_path / "fp1.json").read_text())
    doc["aircraft"][0]["sigma_cross_nmi"] = -1.0
    bad.write_text(json.dumps(doc))
    out, err = io.StringIO(), io.StringIO()
    assert run_cli(["analyze", str(bad)], out=out, err=err) == 1
    message = err.getvalue()
    assert "AC1" in message and "sigma_cross_nmi" in message

    # CSV byte-identical across repeated runs
    runs = []
    for _ in range(3):
        out, err = io.StringIO(), io.StringIO()
        assert run_cli(["analyze", str(tmp_path / "fp4.json"), "--format", "csv"], out=out, err=err) == 0
        runs.append(out.getvalue())
    assert runs[0] == runs[1] == runs[2]
    verdict(9, "round trip for all 5 examples; exit codes and CSV stability verified")
