"""Spreading-activity retrieval through a triangular generator matrix.

The symmetric weight matrix W splits exactly and uniquely into
W = G + G^T with G strictly lower triangular (the zero diagonal leaves
nothing to halve). Retrieval then mimics activity spreading through the
network from a seed fragment: neurons are ordered by proximity to the
start sites, the weights are relabeled into that order, and the fragment
grows one neuron per step, the new neuron taking sgn of its generator-row
field. Values already in the fragment, whether seeded or spread-computed,
are left unchanged for the rest of the spread.

Because G is strictly lower triangular in spread coordinates, the field of
the neuron being assigned depends only on neurons assigned before it; the
prefix shape of the fragment is what makes "grow by one neuron" well
defined, and the proximity permutation is what makes arbitrary start sets
legal.

A completed spread need not be self-consistent: recomputing an assigned
neuron's value from the full symmetric field over the final state can
disagree with the value it holds (a noisy seed, for instance). Such
neurons are surfaced in ``consistency_flags`` rather than resolved; an
empty flag set is exactly the statement that the final state is a fixed
point of one synchronous pass.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .core import (
    BIPOLAR_DTYPE,
    DimensionMismatch,
    Fragment,
    ParameterError,
    ValidationError,
    normalize_start,
    sgn,
    validate_memory_set,
    validate_proximity,
    validate_weights,
)
from .hebbian import recall_sync


def decompose(weights) -> np.ndarray:
    """Strictly lower-triangular generator G with G + G^T equal to the weights."""
    w = validate_weights(weights)
    gen = np.tril(w, -1)
    gen.setflags(write=False)
    return gen


def validate_generator(gen) -> np.ndarray:
    """Validate a strictly lower-triangular integer generator matrix."""
    arr = np.asarray(gen)
    if arr.ndim != 2 or arr.shape[0] != arr.shape[1]:
        raise DimensionMismatch(f"generator matrix must be square, got shape {arr.shape}")
    if arr.dtype.kind == "f":
        if not np.all(np.isfinite(arr)) or not np.all(arr == np.round(arr)):
            raise ValidationError("generator entries must be integers")
    elif arr.dtype.kind not in "iu":
        raise ValidationError(f"generator entries must be numeric, got dtype {arr.dtype}")
    out = arr.astype(np.int64)
    if np.any(np.triu(out) != 0):
        i, j = np.argwhere(np.triu(out) != 0)[0]
        raise ValidationError(
            f"generator must be strictly lower triangular, ({int(i) + 1}, {int(j) + 1}) is nonzero"
        )
    out.setflags(write=False)
    return out


@dataclass(frozen=True)
class SpreadOrder:
    """The order in which activity reaches the neurons.

    ``permutation[k]`` is the original index of the neuron in position k of
    the spread; every start neuron comes before every non-start neuron.
    """

    permutation: np.ndarray
    start_set: frozenset[int]

    def __post_init__(self):
        perm = np.asarray(self.permutation, dtype=np.int64)
        n = perm.size
        if not np.array_equal(np.sort(perm), np.arange(n)):
            raise ValidationError("spread order must be a permutation of the neuron indices")
        start = frozenset(int(i) for i in self.start_set)
        if not start:
            raise ParameterError("start set is empty")
        if any(not 0 <= i < n for i in start):
            raise ParameterError(f"start set has an index out of range for {n} neurons")
        head = {int(i) for i in perm[: len(start)]}
        if head != start:
            raise ValidationError("spread order must place the start set first")
        perm = perm.copy()
        perm.setflags(write=False)
        object.__setattr__(self, "permutation", perm)
        object.__setattr__(self, "start_set", start)

    @property
    def n(self) -> int:
        return int(self.permutation.size)


def index_order(n: int, start_set) -> SpreadOrder:
    """Spread order with no proximity information: plain index order.

    Start neurons first (by index), remaining neurons by index. Equivalent
    to order_from_proximity on an all-equal distance matrix.
    """
    start = sorted(int(i) for i in start_set)
    if not start:
        raise ParameterError("start set is empty")
    for i in start:
        if not 0 <= i < n:
            raise ParameterError(f"start index {i} out of range for {n} neurons")
    rest = [j for j in range(n) if j not in set(start)]
    return SpreadOrder(np.array(start + rest, dtype=np.int64), frozenset(start))


def order_from_proximity(proximity, start_set) -> SpreadOrder:
    """Order the neurons by increasing distance from the start set.

    The distance of a neuron to the start set is the minimum over start
    members, modeling activity arriving from the nearest active site. Ties
    break toward the smaller neuron index; start members head the order,
    sorted by index.
    """
    p = validate_proximity(proximity)
    n = p.shape[0]
    start = sorted(int(i) for i in start_set)
    if not start:
        raise ParameterError("start set is empty")
    for i in start:
        if not 0 <= i < n:
            raise ParameterError(f"start index {i} out of range for {n} neurons")
    members = set(start)
    rest = [j for j in range(n) if j not in members]
    rest.sort(key=lambda j: (min(float(p[s, j]) for s in start), j))
    return SpreadOrder(np.array(start + rest, dtype=np.int64), frozenset(start))


def spread_step(gen, fragment: Fragment) -> Fragment:
    """Grow a prefix-shaped fragment by one neuron.

    The fragment must assign exactly the first k neurons in spread
    coordinates. Neuron k receives sgn of its generator-row field, which by
    strict lower-triangularity involves only the k assigned neurons;
    nothing already assigned changes.
    """
    g = validate_generator(gen)
    n = g.shape[0]
    if fragment.n != n:
        raise DimensionMismatch(f"fragment has {fragment.n} neurons, generator has {n}")
    if fragment.complete:
        raise ParameterError("fragment is already complete")
    k = fragment.assigned_count
    if not bool(fragment.assigned[:k].all()):
        raise ParameterError("fragment must assign a prefix of the spread order")
    field = int(g[k, :k] @ fragment.values[:k].astype(np.int64)) if k else 0
    return fragment.with_assignment(k, sgn(field), clamp=False)


def consistency_flags(weights, fragment: Fragment) -> frozenset[int]:
    """Assigned neurons whose value disagrees with their recomputed sgn.

    Recomputation uses the full symmetric field restricted to assigned
    neurons. On a complete fragment this is exactly the set of components
    where one synchronous pass would change the state.
    """
    w = validate_weights(weights)
    if fragment.n != w.shape[0]:
        raise DimensionMismatch(f"fragment has {fragment.n} neurons, weights have {w.shape[0]}")
    mask = fragment.assigned
    fields = w[:, mask] @ fragment.values[mask].astype(np.int64)
    idx = np.flatnonzero(mask)
    disagree = sgn(fields[idx]) != fragment.values[idx]
    return frozenset(int(i) for i in idx[disagree])


@dataclass(frozen=True)
class SpreadStep:
    """One assignment during a spread: the neuron (original index), its
    integer field before thresholding, and the resulting value."""

    neuron: int
    field: int
    value: int


@dataclass(frozen=True)
class SpreadTrace:
    """Full record of a spread: per-step assignments, the completed state in
    original coordinates, the final consistency flags, the order used, and
    the seed assignment."""

    steps: tuple[SpreadStep, ...]
    final: np.ndarray
    consistency_flags: frozenset[int]
    order: SpreadOrder
    start: tuple[tuple[int, int], ...]


def spread_full(weights, start, proximity=None, order=None) -> SpreadTrace:
    """Run a complete spread from a seed assignment.

    ``start`` maps neuron indices to clamped values. The spread order comes
    from ``order`` (an explicit SpreadOrder), from ``proximity`` distances,
    or falls back to index order. The weights are relabeled into spread
    coordinates, decomposed into the triangular generator, and grown one
    neuron per step; exactly n - len(start) steps are performed.
    """
    w = validate_weights(weights)
    n = w.shape[0]
    seed = normalize_start(start, n)
    if proximity is not None and order is not None:
        raise ParameterError("give either a proximity matrix or an explicit order, not both")
    if order is None:
        if proximity is not None:
            order = order_from_proximity(proximity, seed.keys())
        else:
            order = index_order(n, seed.keys())
    else:
        if order.n != n:
            raise DimensionMismatch(f"order covers {order.n} neurons, weights have {n}")
        if order.start_set != frozenset(seed):
            raise ParameterError("explicit order was built for a different start set")

    perm = order.permutation
    w_spread = w[np.ix_(perm, perm)]
    gen = decompose(w_spread)
    fragment = Fragment.from_assignments(
        n, {pos: seed[int(perm[pos])] for pos in range(len(seed))}, clamp=True
    )

    steps: list[SpreadStep] = []
    while not fragment.complete:
        k = fragment.assigned_count
        field = int(gen[k, :k] @ fragment.values[:k].astype(np.int64)) if k else 0
        grown = spread_step(gen, fragment)
        assert np.array_equal(grown.values[:k], fragment.values[:k]), "spread changed an assigned value"
        assert grown.assigned[: k + 1].all() and not grown.assigned[k + 1 :].any()
        steps.append(SpreadStep(neuron=int(perm[k]), field=field, value=int(grown.values[k])))
        fragment = grown

    final = np.empty(n, dtype=BIPOLAR_DTYPE)
    final[perm] = fragment.values
    final.setflags(write=False)
    flags_spread = consistency_flags(w_spread, fragment)
    flags = frozenset(int(perm[j]) for j in flags_spread)
    return SpreadTrace(
        steps=tuple(steps),
        final=final,
        consistency_flags=flags,
        order=order,
        start=tuple(sorted(seed.items())),
    )


@dataclass(frozen=True)
class RetrievalReport:
    """Outcome quality of a spread against a memory list."""

    trace: SpreadTrace
    matched_index: int | None
    nearest_index: int | None
    nearest_distance: int | None
    is_fixed_point: bool


def retrieve_report(weights, start, memories=None, proximity=None, order=None) -> RetrievalReport:
    """Spread from a seed and report what was retrieved.

    Reports the index of the stored memory the final state equals (if any),
    the Hamming distance to the nearest memory (ties to the lower index),
    and whether the final state is a fixed point of one synchronous pass.
    """
    w = validate_weights(weights)
    trace = spread_full(w, start, proximity=proximity, order=order)
    is_fp = len(trace.consistency_flags) == 0
    # cross-check the flag semantics: empty flags iff synchronous fixed point
    assert is_fp == bool(np.array_equal(recall_sync(w, trace.final), trace.final))

    matched = nearest = distance = None
    if memories is not None and len(memories) > 0:
        mset = validate_memory_set(memories)
        if mset.n != w.shape[0]:
            raise DimensionMismatch(f"memories have {mset.n} neurons, weights have {w.shape[0]}")
        dists = np.count_nonzero(mset.vectors != trace.final, axis=1)
        nearest = int(np.argmin(dists))
        distance = int(dists[nearest])
        if distance == 0:
            matched = nearest
    return RetrievalReport(
        trace=trace,
        matched_index=matched,
        nearest_index=nearest,
        nearest_distance=distance,
        is_fixed_point=is_fp,
    )
