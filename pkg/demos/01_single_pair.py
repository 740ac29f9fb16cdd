"""
Conflict probability for a single aircraft pair
===============================================

Two aircraft fly crossing flight plans. We build their trajectories,
combine them into a relative trajectory, and look at the per-segment
conflict probabilities plus the three pairwise indicators.
"""

import numpy as np

from trajcomplex import (
    FlightPlan,
    Waypoint,
    build_trajectory,
    build_transform,
    cp_segment,
    pair_complexity,
    relative_trajectory,
)

# A climbs through the crossing point from the southwest, B from the
# northwest; both arrive at (60, 0) at the same instant.
plan_a = FlightPlan(
    id="A",
    waypoints=[Waypoint(0.0, 40.0), Waypoint(60.0, 0.0), Waypoint(120.0, 40.0)],
    speeds=[480.0, 480.0],
    sigma_along=3.0,
    sigma_cross=1.5,
)
plan_b = FlightPlan(
    id="B",
    waypoints=[Waypoint(0.0, -40.0), Waypoint(60.0, 0.0), Waypoint(120.0, -40.0)],
    speeds=[480.0, 480.0],
    sigma_along=1.5,
    sigma_cross=0.75,
)

traj_a = build_trajectory(plan_a)
traj_b = build_trajectory(plan_b)
print("segment end times (h):", [round(s.t_end, 6) for s in traj_a.segments])

# The relative trajectory merges both breakpoint sets; each merged
# segment carries the summed covariance of the two aircraft.
rel = relative_trajectory(traj_a, traj_b)
print(f"\nrelative trajectory has {len(rel.segments)} segments")

for k, seg in enumerate(rel.segments):
    frame = build_transform(seg.sigma_ab, seg.dv)
    r = cp_segment(seg)
    print(
        f"  segment {k}: [{seg.t_start:.4f}, {seg.t_end:.4f}] h  "
        f"|dp_start|={np.linalg.norm(seg.dp_start):6.1f} nmi  "
        f"du={frame.du:.3f} dv={frame.dv:.3f}  v_c={r.v_c:+.3f}  cp={r.value:.6f}"
    )

# Three ways to aggregate the segment values into one pair indicator.
pc = pair_complexity(rel)
print(f"\ncpsum    = {pc.cpsum:.9g}   (sum of segment cps)")
print(f"cpweight = {pc.cpweight:.9g}   (duration-weighted)")
print(f"cpinvpie = {pc.cpinvpie:.9g}   (1 - product of complements)")
