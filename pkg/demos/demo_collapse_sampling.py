#!/usr/bin/env python3
"""Count discretized collapse cases and sample outcomes by squared amplitude.

A binary outcome from a two-amplitude state hides n^2 distinct internal
configurations once each amplitude is discretized to n grid values (2*n^2
raw cases, halved by the mutual constraint between the amplitudes).
Outcome statistics themselves follow the squared-amplitude rule, sampled
here reproducibly and presented as a network settling on one of its
outputs.
"""

import numpy as np

from assocmem import (
    collapse_as_selection,
    collapse_sample,
    enumerate_reorganizations,
    reorg_count,
)

print("--- internal configuration counts ---")
for n in (1, 2, 4, 10, 37):
    table = enumerate_reorganizations(n)
    print(f"  grid {n:>3}: raw cases {table.raw_count:>5}, distinct {table.distinct_count:>5} (= {n}^2 = {reorg_count(n)})")

table = enumerate_reorganizations(2)
print("  grid 2 representatives (a index, b index, outcome):", list(table.cases))

print("\n--- a lopsided qubit, amplitudes (0.6, 0.8) ---")
amps = [0.6, 0.8]
samples = collapse_sample(amps, seed=11, count=100_000)
counts = np.bincount(samples, minlength=2)
for idx, a in enumerate(amps):
    print(f"  outcome {idx}: frequency {counts[idx] / samples.size:.4f}, squared amplitude {a * a:.4f}")

print("\nsign flips never show up in the statistics:")
flipped = collapse_sample([-0.6, 0.8], seed=11, count=100_000)
print("  (0.6, 0.8) and (-0.6, 0.8) with one seed give identical sequences:",
      bool(np.array_equal(samples, flipped)))

print("\n--- four equal outputs ---")
uniform = [0.5, 0.5, 0.5, 0.5]
draws = collapse_sample(uniform, seed=3, count=100_000)
print("  frequencies:", [float(round(c / draws.size, 4)) for c in np.bincount(draws, minlength=4)])

print("\n--- one collapse, read as a network choosing an output ---")
for seed in range(5):
    print(" ", collapse_as_selection(uniform, seed=seed).note)
print("  (same seed, same choice, every time)")
