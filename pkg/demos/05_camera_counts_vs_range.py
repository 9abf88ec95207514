"""How the required camera count falls as sensing radius grows.

The spot spacing scales linearly with the radius, so a 100 m barrier
needs fewer cameras the farther each camera can see.  Also prints the
mean size of extracted barriers as more cameras rain down on a region.
"""

import math

from cambarrier import ScenarioConfig, barrier_camera_count_sweep, fig3_sweep

print("cameras needed for a 100 m barrier, by sensing radius")
print(f"{'r (m)':>6} {'cameras':>8}")
for row in fig3_sweep(100.0, range(2, 11)).rows:
    print(f"{row.x:>6.0f} {row.successes:>8}")

config = ScenarioConfig(
    width=40.0,
    height=40.0,
    r=20.0,
    theta=math.pi / 3,
    phi=2 * math.pi / 3,
    counts=(10, 20, 40, 80, 160),
    trials=30,
    seed=5,
    mode="mobile",
    samples=101,
)
print("\nextracted barrier size vs deployed count "
      f"({config.width:.0f} x {config.height:.0f} m, r = {config.r:.0f} m)")
print(f"{'deployed':>9} {'barriers':>9} {'mean cameras in barrier':>24}")
for row in barrier_camera_count_sweep(config).rows:
    mean = f"{row.estimate:.2f}" if not math.isnan(row.estimate) else "-"
    print(f"{row.x:>9} {row.successes:>9} {mean:>24}")
