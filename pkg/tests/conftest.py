import numpy as np
import pytest

from assocmem import train

X1 = (1, 1, 1, 1)
X2 = (1, -1, 1, -1)

# hand-computed outer-product sum for X1, X2 with a zero diagonal
WORKED_WEIGHTS = np.array(
    [
        [0, 0, 2, 0],
        [0, 0, 0, 2],
        [2, 0, 0, 0],
        [0, 2, 0, 0],
    ]
)


@pytest.fixture
def two_memories():
    return [list(X1), list(X2)]


@pytest.fixture
def worked_weights(two_memories):
    w = train(two_memories)
    assert np.array_equal(w, WORKED_WEIGHTS)
    return w


def random_symmetric_weights(rng, n, lo=-3, hi=4):
    """A random valid weight matrix: symmetric, integer, zero diagonal."""
    a = rng.integers(lo, hi, size=(n, n))
    w = a + a.T
    np.fill_diagonal(w, 0)
    return w


def random_memories(rng, m, n):
    return rng.integers(0, 2, size=(m, n), dtype=np.int8) * 2 - 1
