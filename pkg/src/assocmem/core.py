"""Shared domain types and validation for bipolar feedback networks.

Network states are bipolar vectors (entries +1/-1, kept as read-only int8
numpy arrays), weights are symmetric integer matrices with a zero diagonal,
neuron separations live in a proximity matrix, and partial states are
Fragment values that carry an explicit assignment mask so an unassigned
neuron is never mistaken for one with zero activity.

Every function here is pure and every returned array is frozen, so values
can be shared freely across threads or processes.

Indices are 0-based throughout the library; error messages and reports
speak of "neuron 1" like a person would.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Mapping

import numpy as np

BIPOLAR_DTYPE = np.int8

PROXIMITY_TOL = 1e-9


class ValidationError(ValueError):
    """A domain value breaks its invariants (non-bipolar entry, asymmetry, ...)."""


class DimensionMismatch(ValueError):
    """Operands disagree on the number of neurons."""


class ParameterError(ValueError):
    """A parameter is missing or outside its allowed range."""


def _frozen(arr: np.ndarray) -> np.ndarray:
    arr.setflags(write=False)
    return arr


def sgn(v):
    """Hard threshold: +1 where v >= 0, -1 where v < 0.

    Accepts a scalar or an array (applied elementwise); non-finite input is
    rejected. Zero maps to +1, which biases the dynamics toward +1 wherever
    a field cancels exactly; see analysis.complement_asymmetry_probe for
    where that bias becomes visible.
    """
    arr = np.asarray(v)
    if arr.dtype.kind not in "iuf":
        raise ValidationError(f"sgn expects real input, got dtype {arr.dtype}")
    if arr.dtype.kind == "f" and not np.all(np.isfinite(arr)):
        raise ValidationError("sgn expects finite input")
    out = np.where(arr >= 0, 1, -1).astype(BIPOLAR_DTYPE)
    if arr.ndim == 0:
        return int(out)
    return _frozen(out)


def as_bipolar(values) -> np.ndarray:
    """Validate a state vector with entries in {+1, -1}; returns a frozen int8 copy."""
    arr = np.asarray(values)
    if arr.ndim != 1:
        raise ValidationError(f"expected a 1-d state vector, got shape {arr.shape}")
    if arr.size < 1:
        raise ValidationError("a state needs at least one neuron")
    if arr.dtype.kind not in "iuf":
        raise ValidationError(f"state entries must be numeric, got dtype {arr.dtype}")
    ok = np.isin(arr, (-1, 1))
    if not np.all(ok):
        i = int(np.flatnonzero(~ok)[0])
        raise ValidationError(f"state entries must be +1 or -1, neuron {i + 1} has {arr[i]!r}")
    return _frozen(arr.astype(BIPOLAR_DTYPE))


def hamming(a, b) -> int:
    """Number of positions where two states disagree."""
    av, bv = as_bipolar(a), as_bipolar(b)
    if av.shape != bv.shape:
        raise DimensionMismatch(f"states have {av.size} and {bv.size} neurons")
    return int(np.count_nonzero(av != bv))


@dataclass(frozen=True)
class MemorySet:
    """A validated collection of memories, all of the same dimension.

    ``duplicates`` groups row indices of repeated vectors. Duplicates are
    legal (they just weight the Hebbian sum) but worth surfacing.
    """

    vectors: np.ndarray
    duplicates: tuple[tuple[int, ...], ...] = ()

    @property
    def m(self) -> int:
        return int(self.vectors.shape[0])

    @property
    def n(self) -> int:
        return int(self.vectors.shape[1])

    def __iter__(self):
        return iter(self.vectors)

    def __len__(self) -> int:
        return self.m


def validate_memory_set(memories) -> MemorySet:
    """Check that all memories are bipolar and share one dimension.

    Accepts a MemorySet (returned unchanged), a 2-d array, or an iterable of
    vectors. Raises ParameterError on an empty set, DimensionMismatch on
    ragged input, and ValidationError on non-bipolar entries.
    """
    if isinstance(memories, MemorySet):
        return memories
    if isinstance(memories, np.ndarray) and memories.ndim == 2:
        rows = list(memories)
    else:
        rows = [np.asarray(r) for r in memories]
    if len(rows) == 0:
        raise ParameterError("memory set is empty")
    widths = {int(np.asarray(r).size) for r in rows}
    if len(widths) != 1:
        raise DimensionMismatch(f"memories have mixed dimensions {sorted(widths)}")
    vectors = np.stack([as_bipolar(r) for r in rows])
    _, inverse = np.unique(vectors, axis=0, return_inverse=True)
    groups = []
    for g in range(int(inverse.max()) + 1):
        members = tuple(int(i) for i in np.flatnonzero(inverse == g))
        if len(members) > 1:
            groups.append(members)
    groups.sort()
    return MemorySet(vectors=_frozen(vectors), duplicates=tuple(groups))


def validate_weights(weights) -> np.ndarray:
    """Validate a symmetric, zero-diagonal, integer weight matrix.

    Returns a frozen int64 copy so downstream arithmetic cannot overflow
    int8 accumulations.
    """
    arr = np.asarray(weights)
    if arr.ndim != 2 or arr.shape[0] != arr.shape[1]:
        raise DimensionMismatch(f"weight matrix must be square, got shape {arr.shape}")
    if arr.shape[0] < 1:
        raise ValidationError("weight matrix needs at least one neuron")
    if arr.dtype.kind == "f":
        if not np.all(np.isfinite(arr)) or not np.all(arr == np.round(arr)):
            raise ValidationError("weight entries must be integers")
    elif arr.dtype.kind not in "iu":
        raise ValidationError(f"weight entries must be numeric, got dtype {arr.dtype}")
    out = arr.astype(np.int64)
    if not np.array_equal(out, out.T):
        i, j = np.argwhere(out != out.T)[0]
        raise ValidationError(f"weight matrix is asymmetric at ({int(i) + 1}, {int(j) + 1})")
    diag = np.diag(out)
    if np.any(diag != 0):
        i = int(np.flatnonzero(diag != 0)[0])
        raise ValidationError(f"weight diagonal must be zero, neuron {i + 1} has {diag[i]}")
    return _frozen(out)


def validate_proximity(proximity) -> np.ndarray:
    """Validate a pairwise-distance matrix.

    Symmetric within 1e-9, zero diagonal, strictly positive off-diagonal.
    Distances are not required to obey the triangle inequality; coiled or
    twisted pathways make neuron separations non-Cartesian.
    """
    arr = np.asarray(proximity, dtype=np.float64)
    if arr.ndim != 2 or arr.shape[0] != arr.shape[1]:
        raise DimensionMismatch(f"proximity matrix must be square, got shape {arr.shape}")
    if not np.all(np.isfinite(arr)):
        raise ValidationError("proximity entries must be finite")
    asym = np.abs(arr - arr.T) > PROXIMITY_TOL
    if np.any(asym):
        i, j = np.argwhere(asym)[0]
        raise ValidationError(f"proximity matrix is asymmetric at ({int(i) + 1}, {int(j) + 1})")
    if np.any(np.abs(np.diag(arr)) > PROXIMITY_TOL):
        i = int(np.flatnonzero(np.abs(np.diag(arr)) > PROXIMITY_TOL)[0])
        raise ValidationError(f"proximity diagonal must be zero, neuron {i + 1} has {arr[i, i]}")
    off = ~np.eye(arr.shape[0], dtype=bool)
    if np.any(arr[off] <= 0):
        i, j = [(int(a), int(b)) for a, b in np.argwhere(off & (arr <= 0))][0]
        raise ValidationError(
            f"off-diagonal proximity must be positive, ({i + 1}, {j + 1}) has {arr[i, j]}"
        )
    return _frozen(arr.copy())


@dataclass(frozen=True)
class Fragment:
    """A partial bipolar state.

    ``values`` holds +1/-1 for assigned neurons and a 0 placeholder
    elsewhere; the placeholder is never read as activity, the ``assigned``
    mask is authoritative. ``clamped`` marks the subset of assigned values
    fixed by the caller (the seed of a spread). Assigned values, clamped or
    spread-computed, are never overwritten.
    """

    values: np.ndarray
    assigned: np.ndarray
    clamped: np.ndarray

    def __post_init__(self):
        values = np.asarray(self.values)
        assigned = np.asarray(self.assigned, dtype=bool)
        clamped = np.asarray(self.clamped, dtype=bool)
        if values.ndim != 1 or values.size < 1:
            raise ValidationError(f"fragment values must be a nonempty 1-d vector, got shape {values.shape}")
        if assigned.shape != values.shape or clamped.shape != values.shape:
            raise DimensionMismatch("fragment masks must match the value vector length")
        if np.any(clamped & ~assigned):
            i = int(np.flatnonzero(clamped & ~assigned)[0])
            raise ValidationError(f"neuron {i + 1} is clamped but not assigned")
        if values.dtype.kind not in "iuf":
            raise ValidationError(f"fragment values must be numeric, got dtype {values.dtype}")
        if not np.all(np.isin(values[assigned], (-1, 1))):
            bad = np.flatnonzero(assigned & ~np.isin(values, (-1, 1)))
            raise ValidationError(f"assigned neuron {int(bad[0]) + 1} must hold +1 or -1")
        normalized = np.zeros(values.shape, dtype=BIPOLAR_DTYPE)
        normalized[assigned] = values[assigned]
        object.__setattr__(self, "values", _frozen(normalized))
        object.__setattr__(self, "assigned", _frozen(assigned.copy()))
        object.__setattr__(self, "clamped", _frozen(clamped.copy()))

    @classmethod
    def from_assignments(cls, n: int, assignments: Mapping[int, int], clamp: bool = True) -> "Fragment":
        """Build a fragment of ``n`` neurons from an index -> value mapping."""
        if n < 1:
            raise ParameterError("fragment needs at least one neuron")
        values = np.zeros(n, dtype=BIPOLAR_DTYPE)
        assigned = np.zeros(n, dtype=bool)
        for idx, val in assignments.items():
            i = int(idx)
            if not 0 <= i < n:
                raise ParameterError(f"neuron index {i} out of range for {n} neurons")
            if val not in (-1, 1):
                raise ValidationError(f"neuron {i + 1} must be assigned +1 or -1, got {val!r}")
            values[i] = val
            assigned[i] = True
        clamped = assigned if clamp else np.zeros(n, dtype=bool)
        return cls(values=values, assigned=assigned, clamped=clamped)

    @property
    def n(self) -> int:
        return int(self.values.size)

    @property
    def assigned_count(self) -> int:
        return int(np.count_nonzero(self.assigned))

    @property
    def complete(self) -> bool:
        return bool(self.assigned.all())

    @property
    def assigned_indices(self) -> tuple[int, ...]:
        return tuple(int(i) for i in np.flatnonzero(self.assigned))

    @property
    def clamped_indices(self) -> tuple[int, ...]:
        return tuple(int(i) for i in np.flatnonzero(self.clamped))

    def value_at(self, i: int) -> int:
        if not 0 <= i < self.n:
            raise ParameterError(f"neuron index {i} out of range for {self.n} neurons")
        if not self.assigned[i]:
            raise KeyError(f"neuron {i + 1} is unassigned")
        return int(self.values[i])

    def with_assignment(self, i: int, value: int, clamp: bool = False) -> "Fragment":
        """Return a copy with one more neuron assigned; existing values are immutable."""
        if not 0 <= i < self.n:
            raise ParameterError(f"neuron index {i} out of range for {self.n} neurons")
        if self.assigned[i]:
            raise ValidationError(f"neuron {i + 1} is already assigned and cannot be overwritten")
        values = np.array(self.values)
        assigned = np.array(self.assigned)
        clamped = np.array(self.clamped)
        values[i] = value
        assigned[i] = True
        clamped[i] = clamp
        return Fragment(values=values, assigned=assigned, clamped=clamped)


def normalize_start(start, n: int) -> dict[int, int]:
    """Normalize a start assignment (mapping or (index, value) pairs) to a dict.

    Validates indices against ``n`` neurons and values against {+1, -1};
    a start must name at least one neuron.
    """
    if isinstance(start, Mapping):
        items: Iterable = start.items()
    else:
        items = list(start)
    out: dict[int, int] = {}
    for idx, val in items:
        i = int(idx)
        if not 0 <= i < n:
            raise ParameterError(f"start index {i} out of range for {n} neurons")
        if i in out and out[i] != int(val):
            raise ParameterError(f"start assigns neuron {i + 1} twice with different values")
        if val not in (-1, 1):
            raise ValidationError(f"start value for neuron {i + 1} must be +1 or -1, got {val!r}")
        out[i] = int(val)
    if not out:
        raise ParameterError("start assignment is empty")
    return out
