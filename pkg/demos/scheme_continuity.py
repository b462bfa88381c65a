"""Walk through the six blend schemes and show what each one guarantees
at its via points.

Every scheme is generated from the same sinusoidal gait reference, so the
only thing that differs is the constraint allocation. The jump table makes
the pattern obvious: 434 and 545 keep position and velocity continuous but
let acceleration jump; 656 carries acceleration through every via point
and only jerk is free to jump.

Run:  python3 demos/scheme_continuity.py
"""

from pspb import (
    DEFAULT_STANCE_TIMES,
    DEFAULT_SWING_TIMES,
    SCHEME_NAMES,
    SinusoidReference,
    builtin_scheme,
    continuity_report,
    generate_gait,
    waypoints_from_reference,
)

reference = SinusoidReference(amplitude=30.0, period=1.0)
stance = waypoints_from_reference(reference, DEFAULT_STANCE_TIMES)
swing = waypoints_from_reference(reference, DEFAULT_SWING_TIMES)
midpoints = lambda t: reference(t, 0)

print(f"{'scheme':<8}{'via':>6}  {'pos':>10}{'vel':>10}{'accel':>10}{'jerk':>10}")
for name in SCHEME_NAMES:
    traj = generate_gait(builtin_scheme(name), stance, swing, midpoints, midpoints)
    report = continuity_report(traj)
    for via in traj.via_times:
        jumps = [report.at(via, order).jump for order in range(4)]
        cells = "".join(
            f"{j:>10.2e}" if j > 1e-9 else f"{'~0':>10}" for j in jumps
        )
        print(f"{name:<8}{via:>6.2f}  {cells}")
    print()
