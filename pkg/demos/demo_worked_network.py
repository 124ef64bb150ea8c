#!/usr/bin/env python3
"""Walk through the 4-neuron example network end to end.

Two memories are trained with the outer-product rule, recalled through the
threshold dynamics, censused exhaustively, and rebuilt from single-neuron
seeds by the triangular-generator spread.
"""

from assocmem import (
    classify,
    decompose,
    energy,
    enumerate_fixed_points,
    recall_async,
    recall_sync,
    retrieve_report,
    spread_full,
    train,
)

memories = [(1, 1, 1, 1), (1, -1, 1, -1)]
weights = train(memories)

print("memories:", memories)
print("trained weights:\n", weights)
print("generator (strict lower triangle, G + G^T = W):\n", decompose(weights))

print("\n--- threshold recall ---")
for x in memories:
    print(f"  {x} -> {[int(v) for v in recall_sync(weights, x)]}  (energy {energy(weights, x)})")

print("\n--- exhaustive census of all 16 states ---")
points = enumerate_fixed_points(weights)
census = classify(points, memories)
for p, label in zip(census.fixed_points, census.labels):
    print(f"  {[int(v) for v in p]}  {label}")
print(f"  stored={census.stored_count} complement={census.complement_count} spurious={census.spurious_count}")

print("\n--- spreading activity from fragments ---")
for start in ({0: 1}, {0: 1, 1: -1}, {0: -1}):
    trace = spread_full(weights, start)
    path = ", ".join(f"neuron {s.neuron + 1}: field {s.field} -> {s.value}" for s in trace.steps)
    print(f"  seed {start} -> {[int(v) for v in trace.final]}   [{path}]")

report = retrieve_report(weights, {0: -1}, memories)
print(
    f"\nseeding neuron 1 with -1 lands on {[int(v) for v in report.trace.final]}: "
    f"matches no memory, Hamming {report.nearest_distance} from memory {report.nearest_index + 1}, "
    f"fixed point: {report.is_fixed_point} (a complement-family attractor)"
)

print("\n--- asynchronous repair of a damaged memory ---")
damaged = (1, 1, -1, 1)
cyclic = recall_async(weights, damaged, schedule="cyclic")
print(f"  {damaged} under cyclic order -> {[int(v) for v in cyclic.state]} (energy {cyclic.energy_trace[0]} -> {cyclic.energy_trace[-1]})")
other = recall_async(weights, damaged, schedule=[2, 0, 1, 3])
print(f"  same start, neuron 3 first  -> {[int(v) for v in other.state]}  (update order decides the basin)")
