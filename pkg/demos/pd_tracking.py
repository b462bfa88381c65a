"""Track a generated hip trajectory with the PD-driven thigh pendulum.

The thigh swings about a fixed hip; a PD controller follows the smoothest
scheme (6-5-6 variant 2). Doubling the proportional gain shows the
tracking error shrinking, and the same trajectory run open loop shows
what the controller is actually buying.

Run:  python3 demos/pd_tracking.py
"""

from pspb import (
    DEFAULT_STANCE_TIMES,
    DEFAULT_SWING_TIMES,
    PDGains,
    SinusoidReference,
    builtin_scheme,
    generate_gait,
    simulate_tracking,
    waypoints_from_reference,
)

reference = SinusoidReference(amplitude=15.0, period=1.0)
stance = waypoints_from_reference(reference, DEFAULT_STANCE_TIMES)
swing = waypoints_from_reference(reference, DEFAULT_SWING_TIMES)
midpoints = lambda t: reference(t, 0)

traj = generate_gait(builtin_scheme("656-2"), stance, swing, midpoints, midpoints)

print("open loop (zero gains):")
result = simulate_tracking(traj, gains=PDGains(0, 0), dt=1e-3)
print(f"  tracking RMSE {result.rmse:.5f} rad\n")

print("PD tracking, kp doubling:")
for kp in (250, 500, 1000, 2000):
    result = simulate_tracking(traj, gains=PDGains(kp, 50), dt=1e-3)
    print(f"  kp={kp:<6} kd=50   RMSE {result.rmse:.6f} rad")

print("\nwith inertial feedforward:")
result = simulate_tracking(traj, gains=PDGains(500, 50), dt=1e-3, feedforward=True)
print(f"  kp=500  kd=50   RMSE {result.rmse:.6f} rad")
