"""Hebbian outer-product training and threshold recall dynamics.

Training sums the outer products of the memory vectors and zeroes the
diagonal: W[i, j] = sum_k x^k[i] * x^k[j] for i != j. The sum stays in
integer arithmetic and is not normalized by the number of memories; the
sgn threshold is invariant under positive scaling, so normalization would
only discard exactness.

A memory x counts as stored when one synchronous pass reproduces it,
x == sgn(W x). Iterated synchronous recall and asynchronous (one neuron at
a time) recall are provided on top of that definition, together with the
quadratic energy E(s) = -1/2 s^T W s used to check that asynchronous
updates only ever descend (Hopfield 1982 dynamics).
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .core import (
    DimensionMismatch,
    ParameterError,
    as_bipolar,
    sgn,
    validate_memory_set,
    validate_weights,
)

SCHEDULES = ("cyclic", "random")


def train(memories) -> np.ndarray:
    """Build the weight matrix from a memory set via the outer-product rule.

    Returns a frozen int64 matrix, symmetric with a zero diagonal.
    """
    mset = validate_memory_set(memories)
    x = mset.vectors.astype(np.int64)
    weights = x.T @ x
    np.fill_diagonal(weights, 0)
    weights.setflags(write=False)
    return weights


def _check_dims(weights: np.ndarray, state: np.ndarray) -> None:
    if state.size != weights.shape[0]:
        raise DimensionMismatch(
            f"state has {state.size} neurons, weight matrix has {weights.shape[0]}"
        )


def recall_sync(weights, state) -> np.ndarray:
    """One synchronous update pass: sgn applied componentwise to W x."""
    w = validate_weights(weights)
    x = as_bipolar(state)
    _check_dims(w, x)
    return sgn(w @ x)


def is_stored(weights, state) -> bool:
    """True when the state is a fixed point of one synchronous pass."""
    return bool(np.array_equal(recall_sync(weights, state), as_bipolar(state)))


def energy(weights, state) -> float:
    """Quadratic energy E(s) = -1/2 s^T W s (an exact integer for valid inputs)."""
    w = validate_weights(weights)
    x = as_bipolar(state).astype(np.int64)
    _check_dims(w, x)
    return float(-0.5 * (x @ w @ x)) + 0.0


@dataclass(frozen=True)
class RecallResult:
    """Trajectory metadata for an iterated recall.

    ``energy_trace`` records E before any update and after every single
    neuron update (asynchronous) or every pass (synchronous). ``cycle`` is
    only populated by iterated synchronous recall, which can settle into a
    2-cycle instead of a fixed point; in that case ``converged`` is False
    and the alternating pair is attached.
    """

    state: np.ndarray
    iterations: int
    converged: bool
    energy_trace: tuple[float, ...]
    cycle: tuple[np.ndarray, np.ndarray] | None = None


def _repeat(order):
    while True:
        yield order


def _seeded_permutations(n, seed):
    rng = np.random.default_rng(int(seed))
    while True:
        yield rng.permutation(n)


def _resolve_orders(schedule, n: int, seed):
    """Validate the schedule and return an iterator of per-pass update orders."""
    if isinstance(schedule, str):
        if schedule == "cyclic":
            return _repeat(np.arange(n))
        if schedule == "random":
            if seed is None:
                raise ParameterError("schedule 'random' needs an explicit seed")
            return _seeded_permutations(n, seed)
        raise ParameterError(f"unknown schedule {schedule!r}, expected one of {SCHEDULES} or an explicit order")
    order = np.asarray(list(schedule), dtype=np.int64)
    if not np.array_equal(np.sort(order), np.arange(n)):
        raise ParameterError(f"explicit schedule must be a permutation of 0..{n - 1}")
    return _repeat(order)


def recall_async(weights, state, schedule="cyclic", max_passes: int | None = None, seed=None) -> RecallResult:
    """Asynchronous recall: update one neuron at a time until a fixed point.

    ``schedule`` is "cyclic" (index order every pass), "random" (a fresh
    seeded permutation per pass, seed required), or an explicit permutation
    reused every pass. A pass with no flips certifies a fixed point. The
    energy trace is extended after every single-neuron update; with a zero
    diagonal each update can only keep energy equal or lower it, including
    the tie case where a zero field pulls a -1 neuron up to +1.
    """
    w = validate_weights(weights)
    x = np.array(as_bipolar(state))
    _check_dims(w, x)
    n = x.size
    if max_passes is None:
        max_passes = 10 * n
    if max_passes < 1:
        raise ParameterError(f"max_passes must be at least 1, got {max_passes}")

    orders = _resolve_orders(schedule, n, seed)
    xl = x.astype(np.int64)
    e = float(-0.5 * (xl @ w @ xl)) + 0.0
    trace = [e]
    converged = False
    passes = 0
    for _ in range(max_passes):
        order = next(orders)
        flips = 0
        for i in order:
            h = int(w[i] @ x)
            v = 1 if h >= 0 else -1
            if v != x[i]:
                e = (e - (v - int(x[i])) * h) + 0.0
                x[i] = v
                flips += 1
            trace.append(e)
        passes += 1
        if flips == 0:
            converged = True
            break
    final = as_bipolar(x)
    if not converged:
        converged = bool(np.array_equal(sgn(w @ final), final))
    return RecallResult(state=final, iterations=passes, converged=converged, energy_trace=tuple(trace))


def recall_sync_iterated(weights, state, max_passes: int | None = None) -> RecallResult:
    """Iterate synchronous passes until the state repeats.

    Symmetric zero-diagonal weights make synchronous dynamics settle into a
    fixed point or a 2-cycle. A fixed point reports converged; a 2-cycle
    reports non-converged with the alternating pair attached.
    """
    w = validate_weights(weights)
    cur = as_bipolar(state)
    _check_dims(w, cur)
    if max_passes is None:
        max_passes = 10 * cur.size
    if max_passes < 1:
        raise ParameterError(f"max_passes must be at least 1, got {max_passes}")

    trace = [energy(w, cur)]
    prev = None
    for t in range(1, max_passes + 1):
        nxt = sgn(w @ cur)
        trace.append(energy(w, nxt))
        if np.array_equal(nxt, cur):
            return RecallResult(state=cur, iterations=t, converged=True, energy_trace=tuple(trace))
        if prev is not None and np.array_equal(nxt, prev):
            return RecallResult(
                state=nxt,
                iterations=t,
                converged=False,
                energy_trace=tuple(trace),
                cycle=(nxt, cur),
            )
        prev = cur
        cur = nxt
    return RecallResult(state=cur, iterations=max_passes, converged=False, energy_trace=tuple(trace))
