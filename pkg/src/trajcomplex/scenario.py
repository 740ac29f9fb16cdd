"""Scenario documents: parsing, validation, serialization, generators.

A scenario is a JSON document with top-level keys ``rho0_nmi`` and
``aircraft`` plus optional ``name`` / ``description`` metadata. Each
aircraft entry carries ``id``, ``sigma_along_nmi``, ``sigma_cross_nmi``,
``start_time_h``, ``waypoints`` (list of ``{x_nmi, y_nmi}``) and
``speeds_kn`` (one speed per leg)::

    {
      "name": "two aircraft head-on",
      "rho0_nmi": 5.0,
      "aircraft": [
        {
          "id": "A",
          "sigma_along_nmi": 1.0,
          "sigma_cross_nmi": 0.5,
          "start_time_h": 0.0,
          "waypoints": [{"x_nmi": 0.0, "y_nmi": 0.0}, {"x_nmi": 100.0, "y_nmi": 0.0}],
          "speeds_kn": [480.0]
        }
      ]
    }

Validation failures carry the offending aircraft id (or list index) and
field name in the message.

Five canonical example scenarios reproduce the qualitative two-aircraft
and three-aircraft study geometries: crossing trajectories, a laterally
displaced crossing, widely separated parallel tracks, a three-way
simultaneous convergence, and three mutually separated flows. Their
exact distances are reconstruction choices frozen here for reproducible
ordering experiments.
"""

from __future__ import annotations

import json
import math
from dataclasses import dataclass

from .conflict import DEFAULT_RHO0
from .errors import DuplicateIdError, ScenarioSyntaxError, ScenarioValidationError
from .trajectory import FlightPlan, Waypoint

EXAMPLE_COUNT = 5


@dataclass(frozen=True)
class Scenario:
    """A named set of flight plans sharing one separation standard."""

    aircraft: list[FlightPlan]
    rho0: float = DEFAULT_RHO0
    name: str = ""
    description: str = ""

    def __post_init__(self) -> None:
        if not self.aircraft:
            raise ScenarioValidationError("scenario has no aircraft")
        seen: set[str] = set()
        for plan in self.aircraft:
            if plan.id in seen:
                raise DuplicateIdError(f"duplicate aircraft id {plan.id!r}")
            seen.add(plan.id)
        if not (self.rho0 > 0.0):
            raise ScenarioValidationError(f"rho0 must be > 0, got {self.rho0}")


def _check_number(value: object, label: str, positive: bool = False) -> float:
    if isinstance(value, bool) or not isinstance(value, (int, float)):
        raise ScenarioValidationError(f"{label} must be a number, got {value!r}")
    value = float(value)
    if not math.isfinite(value):
        raise ScenarioValidationError(f"{label} must be finite, got {value}")
    if positive and not value > 0.0:
        raise ScenarioValidationError(f"{label} must be > 0, got {value}")
    return value


def _require_number(obj: dict, key: str, where: str, positive: bool = False) -> float:
    if key not in obj:
        raise ScenarioValidationError(f"{where}: missing field {key!r}")
    return _check_number(obj[key], f"{where}: field {key!r}", positive)


def _parse_aircraft(entry: object, index: int) -> FlightPlan:
    where = f"aircraft[{index}]"
    if not isinstance(entry, dict):
        raise ScenarioValidationError(f"{where}: entry must be an object")
    ac_id = entry.get("id")
    if not isinstance(ac_id, str) or not ac_id:
        raise ScenarioValidationError(f"{where}: field 'id' must be a non-empty string")
    where = f"aircraft {ac_id!r}"

    sigma_along = _require_number(entry, "sigma_along_nmi", where, positive=True)
    sigma_cross = _require_number(entry, "sigma_cross_nmi", where, positive=True)
    start_time = _require_number(entry, "start_time_h", where) if "start_time_h" in entry else 0.0

    raw_wps = entry.get("waypoints")
    if not isinstance(raw_wps, list) or len(raw_wps) < 2:
        raise ScenarioValidationError(f"{where}: field 'waypoints' must be a list of at least 2 points")
    waypoints = []
    for k, wp in enumerate(raw_wps):
        if not isinstance(wp, dict):
            raise ScenarioValidationError(f"{where}: waypoints[{k}] must be an object")
        x = _require_number(wp, "x_nmi", f"{where} waypoints[{k}]")
        y = _require_number(wp, "y_nmi", f"{where} waypoints[{k}]")
        waypoints.append(Waypoint(x, y))
    for k, (a, b) in enumerate(zip(waypoints, waypoints[1:])):
        if a.x == b.x and a.y == b.y:
            raise ScenarioValidationError(
                f"{where}: waypoints[{k}] and waypoints[{k + 1}] coincide at ({a.x}, {a.y})"
            )

    raw_speeds = entry.get("speeds_kn")
    if not isinstance(raw_speeds, list):
        raise ScenarioValidationError(f"{where}: field 'speeds_kn' must be a list")
    if len(raw_speeds) != len(waypoints) - 1:
        raise ScenarioValidationError(
            f"{where}: field 'speeds_kn' has {len(raw_speeds)} entries, "
            f"expected {len(waypoints) - 1} (waypoints - 1)"
        )
    speeds = [
        _check_number(v, f"{where}: speeds_kn[{k}]", positive=True)
        for k, v in enumerate(raw_speeds)
    ]

    return FlightPlan(
        id=ac_id,
        waypoints=waypoints,
        speeds=speeds,
        sigma_along=sigma_along,
        sigma_cross=sigma_cross,
        start_time=start_time,
    )


def parse_scenario(text: str | bytes) -> Scenario:
    """Parse and fully validate a scenario document.

    Raises:
        ScenarioSyntaxError: If the document is not well-formed JSON or
            not a JSON object.
        ScenarioValidationError: If any field violates its constraint;
            the message names the aircraft and field.
        DuplicateIdError: If two aircraft share an id.
    """
    if isinstance(text, bytes):
        text = text.decode("utf-8", errors="replace")
    try:
        doc = json.loads(text)
    except json.JSONDecodeError as exc:
        raise ScenarioSyntaxError(f"malformed scenario document: {exc}") from exc
    if not isinstance(doc, dict):
        raise ScenarioSyntaxError("scenario document must be a JSON object")

    rho0 = _require_number(doc, "rho0_nmi", "scenario", positive=True) if "rho0_nmi" in doc else DEFAULT_RHO0
    raw_aircraft = doc.get("aircraft")
    if not isinstance(raw_aircraft, list) or not raw_aircraft:
        raise ScenarioValidationError("scenario: field 'aircraft' must be a non-empty list")

    plans = [_parse_aircraft(entry, i) for i, entry in enumerate(raw_aircraft)]
    name = doc.get("name", "")
    description = doc.get("description", "")
    if not isinstance(name, str) or not isinstance(description, str):
        raise ScenarioValidationError("scenario: 'name' and 'description' must be strings")
    return Scenario(aircraft=plans, rho0=rho0, name=name, description=description)


def scenario_to_json(scenario: Scenario) -> str:
    """Serialize a scenario losslessly to the documented JSON format."""
    doc: dict = {}
    if scenario.name:
        doc["name"] = scenario.name
    if scenario.description:
        doc["description"] = scenario.description
    doc["rho0_nmi"] = scenario.rho0
    doc["aircraft"] = [
        {
            "id": plan.id,
            "sigma_along_nmi": plan.sigma_along,
            "sigma_cross_nmi": plan.sigma_cross,
            "start_time_h": plan.start_time,
            "waypoints": [{"x_nmi": wp.x, "y_nmi": wp.y} for wp in plan.waypoints],
            "speeds_kn": list(plan.speeds),
        }
        for plan in scenario.aircraft
    ]
    return json.dumps(doc, indent=2) + "\n"


def _plan(ac_id: str, points: list[tuple[float, float]], speed: float,
          sigma_along: float, sigma_cross: float) -> FlightPlan:
    return FlightPlan(
        id=ac_id,
        waypoints=[Waypoint(x, y) for x, y in points],
        speeds=[speed] * (len(points) - 1),
        sigma_along=sigma_along,
        sigma_cross=sigma_cross,
        start_time=0.0,
    )


def gen_example(index: int) -> Scenario:
    """Canonical example scenario number 1..5.

    All examples use a 480 kn speed on every leg. The two-aircraft
    examples give one aircraft sigmas (3.0, 1.5) nmi and the other
    (1.5, 0.75) nmi; the three-aircraft examples use (3.0, 1.5) for all.

    1: two 2-leg trajectories crossing at a shared mid waypoint reached
       simultaneously.
    2: the same shapes with the second aircraft displaced 15 nmi
       laterally, so the paths miss by 15 nmi.
    3: parallel same-direction tracks 60 nmi apart.
    4: three 1-leg trajectories converging on one point at the same time.
    5: three 1-leg trajectories mutually separated by at least 40 nmi at
       all times.

    Raises:
        IndexError: If index is outside 1..5.
    """
    speed = 480.0
    big, small = (3.0, 1.5), (1.5, 0.75)
    if index == 1:
        plans = [
            _plan("AC1", [(0.0, 40.0), (60.0, 0.0), (120.0, 40.0)], speed, *big),
            _plan("AC2", [(0.0, -40.0), (60.0, 0.0), (120.0, -40.0)], speed, *small),
        ]
        meta = ("flight plan 1", "two trajectories crossing at a shared waypoint, reached simultaneously")
    elif index == 2:
        plans = [
            _plan("AC1", [(0.0, 40.0), (60.0, 0.0), (120.0, 40.0)], speed, *big),
            _plan("AC2", [(0.0, -55.0), (60.0, -15.0), (120.0, -55.0)], speed, *small),
        ]
        meta = ("flight plan 2", "the crossing displaced: closest approach 15 nmi")
    elif index == 3:
        plans = [
            _plan("AC1", [(0.0, 30.0), (60.0, 30.0), (120.0, 30.0)], speed, *big),
            _plan("AC2", [(0.0, -30.0), (60.0, -30.0), (120.0, -30.0)], speed, *small),
        ]
        meta = ("flight plan 3", "parallel tracks 60 nmi apart")
    elif index == 4:
        radius = 80.0
        plans = []
        for k, ac_id in enumerate(("AC1", "AC2", "AC3")):
            heading = 2.0 * math.pi * k / 3.0
            dx, dy = radius * math.cos(heading), radius * math.sin(heading)
            plans.append(_plan(ac_id, [(-dx, -dy), (dx, dy)], speed, *big))
        meta = ("flight plan 4", "three trajectories converging on one point at the same time")
    elif index == 5:
        plans = [
            _plan("AC1", [(-80.0, 50.0), (80.0, 50.0)], speed, *big),
            _plan("AC2", [(-80.0, 0.0), (80.0, 0.0)], speed, *big),
            _plan("AC3", [(80.0, -50.0), (-80.0, -50.0)], speed, *big),
        ]
        meta = ("flight plan 5", "three flows mutually separated by at least 40 nmi")
    else:
        raise IndexError(f"example index must be 1..{EXAMPLE_COUNT}, got {index}")
    return Scenario(aircraft=plans, rho0=DEFAULT_RHO0, name=meta[0], description=meta[1])
