import numpy as np
import pytest
from hypothesis import given, strategies as st

from assocmem import (
    DimensionMismatch,
    Fragment,
    MemorySet,
    ParameterError,
    ValidationError,
    as_bipolar,
    hamming,
    normalize_start,
    sgn,
    validate_memory_set,
    validate_proximity,
    validate_weights,
)


class TestSgn:
    def test_positive(self):
        assert sgn(3.2) == 1

    def test_zero_maps_to_plus_one(self):
        assert sgn(0) == 1
        assert sgn(0.0) == 1
        assert sgn(-0.0) == 1

    def test_strictly_negative(self):
        assert sgn(-0.0001) == -1

    def test_elementwise_on_arrays(self):
        out = sgn(np.array([2.0, 0.0, -3.5]))
        assert out.dtype == np.int8
        assert list(out) == [1, 1, -1]

    @pytest.mark.parametrize("bad", [float("nan"), float("inf"), float("-inf")])
    def test_rejects_non_finite(self, bad):
        with pytest.raises(ValidationError):
            sgn(bad)

    def test_rejects_non_numeric(self):
        with pytest.raises(ValidationError):
            sgn("3")

    @given(st.floats(min_value=-1e9, max_value=1e9))
    def test_idempotent_on_own_range(self, v):
        assert sgn(sgn(v)) == sgn(v)

    @given(
        st.floats(min_value=-1e6, max_value=1e6),
        st.floats(min_value=1e-3, max_value=1e3),
    )
    def test_positive_scale_invariance(self, v, c):
        assert sgn(c * v) == sgn(v)


class TestMemoryValidation:
    def test_well_formed(self):
        mset = validate_memory_set([(1, 1, 1, 1), (1, -1, 1, -1)])
        assert isinstance(mset, MemorySet)
        assert (mset.m, mset.n) == (2, 4)
        assert mset.duplicates == ()

    def test_dimension_mismatch(self):
        with pytest.raises(DimensionMismatch):
            validate_memory_set([(1, 1), (1, 1, 1)])

    def test_empty_list(self):
        with pytest.raises(ParameterError):
            validate_memory_set([])

    def test_non_bipolar_entry(self):
        with pytest.raises(ValidationError):
            validate_memory_set([(1, 2, 1)])

    def test_duplicates_reported_but_permitted(self):
        mset = validate_memory_set([(1, 1), (1, -1), (1, 1)])
        assert mset.m == 3
        assert mset.duplicates == ((0, 2),)

    def test_memoryset_passthrough(self):
        mset = validate_memory_set([(1, -1)])
        assert validate_memory_set(mset) is mset

    def test_accepts_2d_array(self):
        arr = np.array([[1, -1], [-1, 1]])
        assert validate_memory_set(arr).m == 2


class TestBipolar:
    def test_frozen(self):
        v = as_bipolar([1, -1, 1])
        with pytest.raises(ValueError):
            v[0] = -1

    def test_rejects_zero(self):
        with pytest.raises(ValidationError):
            as_bipolar([1, 0, 1])

    def test_rejects_matrix(self):
        with pytest.raises(ValidationError):
            as_bipolar([[1, -1]])

    def test_hamming(self):
        assert hamming([1, 1, -1], [1, -1, -1]) == 1
        with pytest.raises(DimensionMismatch):
            hamming([1, 1], [1, 1, 1])


class TestWeightsValidation:
    def test_asymmetric_named(self):
        w = np.array([[0, 1], [2, 0]])
        with pytest.raises(ValidationError, match=r"\(1, 2\)"):
            validate_weights(w)

    def test_nonzero_diagonal(self):
        w = np.array([[1, 0], [0, 0]])
        with pytest.raises(ValidationError, match="diagonal"):
            validate_weights(w)

    def test_integral_floats_accepted(self):
        w = validate_weights(np.array([[0.0, 2.0], [2.0, 0.0]]))
        assert w.dtype == np.int64

    def test_non_integral_rejected(self):
        with pytest.raises(ValidationError):
            validate_weights(np.array([[0.0, 0.5], [0.5, 0.0]]))

    def test_non_square(self):
        with pytest.raises(DimensionMismatch):
            validate_weights(np.zeros((2, 3)))


class TestProximityValidation:
    def test_identity_distances(self):
        p = np.ones((3, 3)) - np.eye(3)
        out = validate_proximity(p)
        assert out.dtype == np.float64

    def test_asymmetric_named(self):
        p = np.array([[0.0, 1.0], [2.0, 0.0]])
        with pytest.raises(ValidationError, match=r"\(1, 2\)"):
            validate_proximity(p)

    def test_nonzero_diagonal(self):
        p = np.array([[0.5, 1.0], [1.0, 0.0]])
        with pytest.raises(ValidationError):
            validate_proximity(p)

    def test_zero_off_diagonal_rejected(self):
        p = np.array([[0.0, 0.0], [0.0, 0.0]])
        with pytest.raises(ValidationError):
            validate_proximity(p)

    def test_triangle_inequality_not_required(self):
        # d(0,2) far exceeds d(0,1) + d(1,2); still a legal separation table
        p = np.array([[0, 1, 100], [1, 0, 1], [100, 1, 0]], dtype=float)
        validate_proximity(p)


class TestFragment:
    def test_from_assignments(self):
        f = Fragment.from_assignments(4, {0: 1, 2: -1})
        assert f.assigned_indices == (0, 2)
        assert f.clamped_indices == (0, 2)
        assert f.value_at(2) == -1
        assert not f.complete

    def test_unassigned_value_is_not_readable(self):
        f = Fragment.from_assignments(3, {0: 1})
        with pytest.raises(KeyError):
            f.value_at(1)

    def test_clamped_must_be_assigned(self):
        with pytest.raises(ValidationError):
            Fragment(
                values=np.array([1, 0, 0]),
                assigned=np.array([True, False, False]),
                clamped=np.array([True, True, False]),
            )

    def test_assigned_entries_must_be_bipolar(self):
        with pytest.raises(ValidationError):
            Fragment(
                values=np.array([3, 0]),
                assigned=np.array([True, False]),
                clamped=np.array([False, False]),
            )

    def test_no_overwrite(self):
        f = Fragment.from_assignments(2, {0: 1})
        with pytest.raises(ValidationError):
            f.with_assignment(0, -1)

    def test_extension_is_a_new_value(self):
        f = Fragment.from_assignments(2, {0: 1})
        g = f.with_assignment(1, -1)
        assert not f.assigned[1]
        assert g.value_at(1) == -1
        assert g.clamped_indices == (0,)


class TestNormalizeStart:
    def test_mapping(self):
        assert normalize_start({1: -1, 0: 1}, 4) == {0: 1, 1: -1}

    def test_out_of_range(self):
        with pytest.raises(ParameterError):
            normalize_start({4: 1}, 4)

    def test_empty(self):
        with pytest.raises(ParameterError):
            normalize_start({}, 4)

    def test_bad_value(self):
        with pytest.raises(ValidationError):
            normalize_start({0: 2}, 4)
