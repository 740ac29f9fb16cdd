"""Tests for scenario parsing, serialization, and the canonical examples."""

from __future__ import annotations

import json

import numpy as np
import pytest
from numpy.testing import assert_allclose

from trajcomplex import (
    DuplicateIdError,
    ScenarioSyntaxError,
    ScenarioValidationError,
    build_trajectory,
    gen_example,
    parse_scenario,
    position_at,
    scenario_to_json,
)

MINIMAL = {
    "rho0_nmi": 5.0,
    "aircraft": [
        {
            "id": "A",
            "sigma_along_nmi": 1.0,
            "sigma_cross_nmi": 0.5,
            "start_time_h": 0.0,
            "waypoints": [{"x_nmi": 0.0, "y_nmi": 0.0}, {"x_nmi": 100.0, "y_nmi": 0.0}],
            "speeds_kn": [400.0],
        },
        {
            "id": "B",
            "sigma_along_nmi": 1.0,
            "sigma_cross_nmi": 0.5,
            "start_time_h": 0.0,
            "waypoints": [{"x_nmi": 100.0, "y_nmi": 0.0}, {"x_nmi": 0.0, "y_nmi": 0.0}],
            "speeds_kn": [400.0],
        },
    ],
}


def doc(**overrides):
    base = json.loads(json.dumps(MINIMAL))
    base.update(overrides)
    return base


class TestParseScenario:
    def test_minimal_document(self):
        scenario = parse_scenario(json.dumps(MINIMAL))
        assert len(scenario.aircraft) == 2
        assert scenario.rho0 == 5.0
        assert scenario.aircraft[0].id == "A"
        assert scenario.aircraft[0].waypoints[1].x == 100.0

    def test_accepts_bytes(self):
        scenario = parse_scenario(json.dumps(MINIMAL).encode())
        assert len(scenario.aircraft) == 2

    def test_rho0_defaults_when_absent(self):
        d = doc()
        del d["rho0_nmi"]
        assert parse_scenario(json.dumps(d)).rho0 == 5.0

    def test_malformed_json(self):
        with pytest.raises(ScenarioSyntaxError, match="malformed"):
            parse_scenario("{not json")

    def test_non_object_document(self):
        with pytest.raises(ScenarioSyntaxError):
            parse_scenario("[1, 2, 3]")

    def test_zero_sigma_names_aircraft_and_field(self):
        d = doc()
        d["aircraft"][0]["sigma_along_nmi"] = 0.0
        with pytest.raises(ScenarioValidationError, match=r"'A'.*sigma_along_nmi"):
            parse_scenario(json.dumps(d))

    def test_speed_arity_mismatch(self):
        d = doc()
        d["aircraft"][1]["speeds_kn"] = [400.0, 400.0]
        with pytest.raises(ScenarioValidationError, match=r"'B'.*speeds_kn"):
            parse_scenario(json.dumps(d))

    def test_negative_speed_names_index(self):
        d = doc()
        d["aircraft"][0]["speeds_kn"] = [-10.0]
        with pytest.raises(ScenarioValidationError, match=r"speeds_kn\[0\]"):
            parse_scenario(json.dumps(d))

    def test_duplicate_ids(self):
        d = doc()
        d["aircraft"][1]["id"] = "A"
        with pytest.raises(DuplicateIdError, match="'A'"):
            parse_scenario(json.dumps(d))

    def test_coincident_waypoints(self):
        d = doc()
        d["aircraft"][0]["waypoints"] = [
            {"x_nmi": 1.0, "y_nmi": 1.0},
            {"x_nmi": 1.0, "y_nmi": 1.0},
        ]
        with pytest.raises(ScenarioValidationError, match=r"'A'.*coincide"):
            parse_scenario(json.dumps(d))

    def test_single_waypoint_rejected(self):
        d = doc()
        d["aircraft"][0]["waypoints"] = [{"x_nmi": 0.0, "y_nmi": 0.0}]
        with pytest.raises(ScenarioValidationError, match="waypoints"):
            parse_scenario(json.dumps(d))

    def test_missing_aircraft_list(self):
        with pytest.raises(ScenarioValidationError, match="aircraft"):
            parse_scenario(json.dumps({"rho0_nmi": 5.0}))

    def test_non_finite_coordinate_rejected(self):
        d = doc()
        d["aircraft"][0]["waypoints"][0]["x_nmi"] = float("nan")
        # json.dumps would emit NaN; write the token directly
        text = json.dumps(d).replace("NaN", "1e999")
        with pytest.raises(ScenarioValidationError, match="finite"):
            parse_scenario(text)

    def test_bad_rho0(self):
        with pytest.raises(ScenarioValidationError, match="rho0_nmi"):
            parse_scenario(json.dumps(doc(rho0_nmi=-1.0)))


class TestRoundTrip:
    @pytest.mark.parametrize("index", [1, 2, 3, 4, 5])
    def test_generator_output_round_trips_losslessly(self, index):
        scenario = gen_example(index)
        parsed = parse_scenario(scenario_to_json(scenario))
        assert parsed.rho0 == scenario.rho0
        assert parsed.name == scenario.name
        assert len(parsed.aircraft) == len(scenario.aircraft)
        for p0, p1 in zip(scenario.aircraft, parsed.aircraft):
            assert p0.id == p1.id
            assert p0.speeds == p1.speeds
            assert p0.sigma_along == p1.sigma_along
            assert p0.sigma_cross == p1.sigma_cross
            assert p0.start_time == p1.start_time
            assert [(w.x, w.y) for w in p0.waypoints] == [(w.x, w.y) for w in p1.waypoints]

    def test_serialization_is_stable(self):
        s = gen_example(2)
        assert scenario_to_json(s) == scenario_to_json(s)


class TestGenExample:
    def test_out_of_range(self):
        with pytest.raises(IndexError):
            gen_example(0)
        with pytest.raises(IndexError):
            gen_example(6)

    def test_crossing_example_shares_mid_waypoint(self):
        scenario = gen_example(1)
        assert len(scenario.aircraft) == 2
        mids = [plan.waypoints[1] for plan in scenario.aircraft]
        assert mids[0] == mids[1]
        # reached simultaneously
        trajs = [build_trajectory(p) for p in scenario.aircraft]
        assert trajs[0].segments[0].t_end == trajs[1].segments[0].t_end

    def test_displaced_example_minimum_separation(self):
        scenario = gen_example(2)
        trajs = [build_trajectory(p) for p in scenario.aircraft]
        times = np.linspace(trajs[0].t_start, trajs[0].t_end, 2001)
        dist = [
            float(np.linalg.norm(position_at(trajs[0], t) - position_at(trajs[1], t)))
            for t in times
        ]
        assert min(dist) == pytest.approx(15.0, abs=0.1)

    def test_parallel_example_constant_separation(self):
        scenario = gen_example(3)
        trajs = [build_trajectory(p) for p in scenario.aircraft]
        for t in np.linspace(trajs[0].t_start, trajs[0].t_end, 50):
            gap = position_at(trajs[0], t) - position_at(trajs[1], t)
            assert_allclose(gap, [0.0, 60.0], atol=1e-9)

    def test_converging_example_meets_at_origin(self):
        scenario = gen_example(4)
        assert len(scenario.aircraft) == 3
        trajs = [build_trajectory(p) for p in scenario.aircraft]
        t_cross = trajs[0].t_end / 2.0
        for traj in trajs:
            assert traj.segments[0].t_end == trajs[0].segments[0].t_end
            assert_allclose(position_at(traj, t_cross), [0.0, 0.0], atol=1e-9)

    def test_separated_example_keeps_40_nmi(self):
        scenario = gen_example(5)
        trajs = [build_trajectory(p) for p in scenario.aircraft]
        times = np.linspace(trajs[0].t_start, trajs[0].t_end, 500)
        for i in range(3):
            for j in range(i + 1, 3):
                for t in times:
                    gap = float(
                        np.linalg.norm(position_at(trajs[i], t) - position_at(trajs[j], t))
                    )
                    assert gap >= 40.0
