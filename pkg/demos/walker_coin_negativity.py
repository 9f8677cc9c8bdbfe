"""Logarithmic negativity between walker and coin.

After tracing out the vertex register, the walker-coin state is mixed, so
entanglement between walker and coin is measured by the logarithmic
negativity of the partial transpose over the coin.  On the path graph the
two stay noticeably entangled at many steps; on the cycle the negativity
vanishes at every step for the standard coin sets.
"""

import numpy as np

from iqwalk import GraphTopology, STANDARD_COINS, WalkConfig, run_metric_series

STEPS = 100

for kind in ("cycle", "path"):
    print(f"=== {kind} graph ===")
    for coin in STANDARD_COINS:
        series = run_metric_series(WalkConfig(GraphTopology(kind, 4), coin, STEPS),
                                   "logneg(PC)")
        values = np.array(series.values)
        nonzero = int((values > 1e-9).sum())
        print(f"coin (theta={coin.theta:.3f}, phi2={coin.phi2:.3f}):  "
              f"nonzero at {nonzero:3d}/{STEPS + 1} steps,  max {values.max():.4f}")
    print()

print("nonzero stretch for the path graph, fourth coin set:")
series = run_metric_series(WalkConfig(GraphTopology("path", 4), STANDARD_COINS[3], 60),
                           "logneg(PC)")
for t, value in zip(series.times, series.values):
    if value > 1e-9:
        print(f"  t={t:2d}  {value:.4f}  {'#' * int(round(200 * value))}")
