"""Ground truth and statistics: attractor censuses and capacity experiments.

enumerate_fixed_points is the brute-force oracle for the recall rule: it
walks all 2^n bipolar states and keeps the fixed points, so everything the
recall dynamics claim can be checked against exhaustive truth for small n.
classify splits those fixed points into stored memories, complements of
stored memories, and spurious attractors.

capacity_experiment measures, by Monte Carlo over random memory sets, how
loading a network degrades recall. Capacity has no single agreed
operationalization, so the report carries two readings side by side:

* per-bit instability, the fraction of memory components a single
  synchronous pass flips (the headline threshold asks where per-bit
  stability drops below 99%), and
* the all-exact rate, the fraction of trials in which every memory is an
  exact fixed point, which collapses to zero at much lighter loading.

Reproducibility contract: the per-trial generators are derived from
(seed, m, trial) through SeedSequence spawn keys, and aggregation sums
integer counters in a fixed order, so the report is bit-identical no
matter how trials are scheduled or parallelized.
"""

from __future__ import annotations

import math
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass

import numpy as np

from .core import DimensionMismatch, ParameterError, validate_memory_set, validate_weights
from .hebbian import is_stored

ENUMERATION_LIMIT = 20

_CHUNK = 1 << 16


def _states_chunk(start: int, stop: int, n: int) -> np.ndarray:
    """Bipolar states for integers [start, stop): bit 0 -> -1, MSB first.

    Integer order is exactly lexicographic order with -1 sorted before +1.
    """
    ints = np.arange(start, stop, dtype=np.uint64)[:, None]
    shifts = np.arange(n - 1, -1, -1, dtype=np.uint64)
    bits = (ints >> shifts) & np.uint64(1)
    return np.where(bits == 1, 1, -1).astype(np.int8)


def enumerate_fixed_points(weights, limit_n: int = ENUMERATION_LIMIT) -> list[np.ndarray]:
    """All states with sgn(W x) = x, in lexicographic order (-1 before +1).

    Exhaustive over 2^n states; refuses n above ``limit_n`` (default 20,
    about a million states) unless the caller raises the limit explicitly.
    """
    w = validate_weights(weights)
    n = w.shape[0]
    if n > limit_n:
        raise ParameterError(f"enumeration over 2^{n} states exceeds the limit n <= {limit_n}")
    found: list[np.ndarray] = []
    total = 1 << n
    for lo in range(0, total, _CHUNK):
        states = _states_chunk(lo, min(lo + _CHUNK, total), n)
        fields = states @ w
        fixed = np.all((fields >= 0) == (states > 0), axis=1)
        for row in states[fixed]:
            row.setflags(write=False)
            found.append(row)
    return found


@dataclass(frozen=True)
class AttractorCensus:
    """Fixed points labeled stored / complement / spurious.

    A fixed point equal to some memory counts as stored even when it is
    also the complement of another memory; complement only applies to
    negations of memories that are not themselves in the memory list.
    """

    fixed_points: tuple[np.ndarray, ...]
    labels: tuple[str, ...]
    stored_count: int
    complement_count: int
    spurious_count: int


def classify(fixed_points, memories) -> AttractorCensus:
    """Label each fixed point as stored, complement, or spurious."""
    points = [np.asarray(p) for p in fixed_points]
    mem = validate_memory_set(memories).vectors if len(memories) else None
    labels = []
    for p in points:
        if mem is not None and p.size != mem.shape[1]:
            raise DimensionMismatch(f"fixed point has {p.size} neurons, memories have {mem.shape[1]}")
        if mem is not None and bool(np.any(np.all(mem == p, axis=1))):
            labels.append("stored")
        elif mem is not None and bool(np.any(np.all(mem == -p, axis=1))):
            labels.append("complement")
        else:
            labels.append("spurious")
    return AttractorCensus(
        fixed_points=tuple(points),
        labels=tuple(labels),
        stored_count=labels.count("stored"),
        complement_count=labels.count("complement"),
        spurious_count=labels.count("spurious"),
    )


@dataclass(frozen=True)
class CapacityRow:
    """Monte Carlo estimates at one memory load m."""

    m: int
    trials: int
    per_bit_instability: float
    all_stable_fraction: float
    stderr: float


@dataclass(frozen=True)
class CapacityReport:
    """Capacity sweep over memory loads at fixed network size."""

    n: int
    rows: tuple[CapacityRow, ...]
    seed: int
    threshold_capacity_ratio: float


def _capacity_trial(n: int, m: int, seed: int, trial: int) -> tuple[int, int]:
    """One trial: draw m random memories, train, count unstable bits.

    Returns (unstable bit count, 1 if every memory was an exact fixed
    point). The generator stream depends only on (seed, m, trial), never on
    scheduling.
    """
    rng = np.random.default_rng(np.random.SeedSequence(entropy=seed, spawn_key=(m, trial)))
    x = (rng.integers(0, 2, size=(m, n), dtype=np.int8) * 2 - 1).astype(np.int64)
    weights = x.T @ x
    np.fill_diagonal(weights, 0)
    fields = x @ weights
    unstable = int(np.count_nonzero((fields >= 0) != (x > 0)))
    if m == 1 and unstable != 0:
        raise AssertionError("a single memory must always be an exact fixed point")
    return unstable, int(unstable == 0)


def capacity_experiment(n: int, m_values, trials: int, seed: int, workers: int = 1) -> CapacityReport:
    """Monte Carlo capacity sweep.

    For each memory count m in ``m_values``, draws ``trials`` independent
    sets of m uniform bipolar memories, trains the outer-product weights,
    and records the per-bit instability (fraction of memory components one
    synchronous pass flips) plus the fraction of trials where every memory
    is exact. ``threshold_capacity_ratio`` is the largest m/n whose per-bit
    stability is at least 99%, or 0.0 if no load in the sweep qualifies.

    ``workers`` > 1 runs trials in a thread pool; results are bit-identical
    to the serial run by construction.
    """
    if n < 10:
        raise ParameterError(f"capacity experiment needs n >= 10, got {n}")
    if trials < 50:
        raise ParameterError(f"capacity experiment needs trials >= 50, got {trials}")
    ms = [int(m) for m in m_values]
    if not ms:
        raise ParameterError("m_values is empty")
    if any(m < 1 for m in ms):
        raise ParameterError("every m must be at least 1")
    if int(seed) < 0:
        raise ParameterError("seed must be a nonnegative integer")
    if workers < 1:
        raise ParameterError("workers must be at least 1")
    seed = int(seed)

    unstable = np.zeros((len(ms), trials), dtype=np.int64)
    stable = np.zeros((len(ms), trials), dtype=np.int64)
    tasks = [(mi, t) for mi in range(len(ms)) for t in range(trials)]
    if workers == 1:
        for mi, t in tasks:
            unstable[mi, t], stable[mi, t] = _capacity_trial(n, ms[mi], seed, t)
    else:
        def run(task):
            mi, t = task
            return mi, t, _capacity_trial(n, ms[mi], seed, t)

        with ThreadPoolExecutor(max_workers=workers) as pool:
            for mi, t, (u, s) in pool.map(run, tasks):
                unstable[mi, t] = u
                stable[mi, t] = s

    rows = []
    for mi, m in enumerate(ms):
        bits = trials * m * n
        fraction = int(unstable[mi].sum()) / bits
        per_trial = unstable[mi] / (m * n)
        se = float(np.std(per_trial, ddof=1) / math.sqrt(trials))
        rows.append(
            CapacityRow(
                m=m,
                trials=trials,
                per_bit_instability=float(fraction),
                all_stable_fraction=int(stable[mi].sum()) / trials,
                stderr=se,
            )
        )
    qualifying = [row.m for row in rows if row.per_bit_instability <= 0.01]
    threshold = max(qualifying) / n if qualifying else 0.0
    return CapacityReport(n=n, rows=tuple(rows), seed=seed, threshold_capacity_ratio=float(threshold))


@dataclass(frozen=True)
class ComplementFailure:
    """A stored memory whose complement is not a fixed point, with the
    zero-field components that break it."""

    memory_index: int
    zero_field_components: tuple[int, ...]


@dataclass(frozen=True)
class ComplementAsymmetryReport:
    """Which complements fail, and why.

    For a fixed-point memory x, negating the state negates every field, so
    -x can only fail to be a fixed point at components where the field of x
    is exactly zero and the +1 tie rule points the wrong way.
    """

    fixed_memory_indices: tuple[int, ...]
    failures: tuple[ComplementFailure, ...]


def complement_asymmetry_probe(weights, memories) -> ComplementAsymmetryReport:
    """Test the complement of every stored fixed-point memory."""
    w = validate_weights(weights)
    mset = validate_memory_set(memories)
    if mset.n != w.shape[0]:
        raise DimensionMismatch(f"memories have {mset.n} neurons, weights have {w.shape[0]}")
    fixed_indices = []
    failures = []
    for k, x in enumerate(mset.vectors):
        if not is_stored(w, x):
            continue
        fixed_indices.append(k)
        if is_stored(w, -x):
            continue
        zeros = tuple(int(i) for i in np.flatnonzero(w @ x.astype(np.int64) == 0))
        failures.append(ComplementFailure(memory_index=k, zero_field_components=zeros))
    return ComplementAsymmetryReport(
        fixed_memory_indices=tuple(fixed_indices), failures=tuple(failures)
    )
