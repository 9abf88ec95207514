"""Monte Carlo coverage probability: mobile relocation vs static luck.

Sweeps the number of deployed cameras on a small region and prints the
barrier-existence estimates side by side.  The mobile pipeline relocates
cameras onto the lattice; the static baseline checks the cells with the
cameras exactly as they landed.
"""

import math
from dataclasses import replace

from cambarrier import ScenarioConfig, coverage_probability_sweep

config = ScenarioConfig(
    width=40.0,
    height=60.0,
    r=25.0,
    theta=math.pi / 3,
    phi=2 * math.pi / 3,
    counts=tuple(range(0, 161, 20)),
    trials=40,
    seed=11,
    mode="mobile",
    samples=101,
)

mobile = coverage_probability_sweep(config)
static = coverage_probability_sweep(replace(config, mode="static"))

print(f"region {config.width:.0f} x {config.height:.0f} m, r = {config.r:.0f} m, "
      f"{config.trials} trials per point, seed {config.seed}")
print(f"{'cameras':>8} {'mobile':>8} {'static':>8}")
for mrow, srow in zip(mobile.rows, static.rows):
    print(f"{mrow.x:>8} {mrow.estimate:>8.2f} {srow.estimate:>8.2f}")

print("\nmobile relocation turns the same hardware into a barrier far earlier;")
print("on every shared draw a static success is also a mobile success.")
