from __future__ import annotations

from fractions import Fraction

from hypothesis import given
from hypothesis import strategies as st

from spex.majorization import is_majorized, is_weakly_majorized

vecs = st.lists(st.integers(0, 20), min_size=1, max_size=8)


def test_examples():
    assert is_majorized([2, 2, 2], [3, 2, 1])
    assert not is_majorized([3, 2, 1], [2, 2, 2])
    assert is_weakly_majorized([1, 1], [3, 0])
    assert not is_majorized([1, 1], [3, 0])  # sums differ


@given(vecs)
def test_reflexive(x):
    assert is_majorized(x, x)
    assert is_weakly_majorized(x, x)


@given(vecs)
def test_mean_vector_is_minimal(x):
    m = Fraction(sum(x), len(x))
    assert is_majorized([m] * len(x), x)


@given(vecs, vecs)
def test_majorized_implies_weak(x, y):
    if len(x) == len(y) and is_majorized(x, y):
        assert is_weakly_majorized(x, y)


@given(vecs)
def test_order_irrelevant(x):
    assert is_majorized(list(reversed(x)), sorted(x))


def test_tolerance():
    assert not is_weakly_majorized([1.0 + 1e-12], [1.0])
    assert is_weakly_majorized([1.0 + 1e-12], [1.0], tol=1e-9)
