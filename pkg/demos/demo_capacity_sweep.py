#!/usr/bin/env python3
"""Measure how many memories a 100-neuron network actually holds.

Sweeps the memory load and prints both capacity readings: the per-bit
stability of one recall pass, and the stricter fraction of trials where
every memory is an exact fixed point. The per-bit curve tracks the
Gaussian signal-to-noise estimate Phi(-sqrt((n-1)/(m-1))) closely, and its
99% threshold lands near m/n = 0.15; the all-exact reading collapses much
earlier, which is why the two definitions must be kept apart.
"""

import math

from assocmem import capacity_experiment


def phi(z):
    return 0.5 * (1.0 + math.erf(z / math.sqrt(2.0)))


n = 100
report = capacity_experiment(n, [5, 10, 15, 20, 25, 30, 35, 40], trials=200, seed=42)

print(f"n = {n}, 200 trials per load, seed {report.seed}\n")
print(f"{'m':>4} {'m/n':>6} {'per-bit instability':>20} {'gaussian est.':>14} {'all memories exact':>20}")
for row in report.rows:
    estimate = phi(-math.sqrt((n - 1) / (row.m - 1))) if row.m > 1 else 0.0
    print(
        f"{row.m:>4} {row.m / n:>6.2f} {row.per_bit_instability:>17.5f} +- {row.stderr:.5f}"
        f" {estimate:>13.5f} {row.all_stable_fraction:>20.3f}"
    )

print(
    f"\nlargest load with per-bit stability >= 99%: m/n = {report.threshold_capacity_ratio:.2f}"
)
print("the all-exact reading is already near zero there; quote capacity only with its definition")
