"""Majorization and weak majorization of real vectors.

Both predicates sort their arguments into non-increasing order first, so
degree sequences and raw vectors can be passed directly.
"""

from __future__ import annotations

from collections.abc import Sequence
from itertools import accumulate

from .errors import DomainError


def _sorted_desc(x: Sequence[float]) -> list[float]:
    return sorted(x, reverse=True)


def is_weakly_majorized(x: Sequence[float], y: Sequence[float], tol: float = 0.0) -> bool:
    """True iff ``x`` is weakly majorized by ``y``.

    Every prefix sum of sorted ``x`` is at most the matching prefix sum of
    sorted ``y`` (up to ``tol``, which is zero for integer input).
    """
    if len(x) != len(y):
        raise DomainError(f"length mismatch: {len(x)} vs {len(y)}")
    px = accumulate(_sorted_desc(x))
    py = accumulate(_sorted_desc(y))
    return all(a <= b + tol for a, b in zip(px, py))


def is_majorized(x: Sequence[float], y: Sequence[float], tol: float = 0.0) -> bool:
    """True iff ``x`` is majorized by ``y``: weakly majorized with equal totals."""
    if not is_weakly_majorized(x, y, tol):
        return False
    return abs(sum(x) - sum(y)) <= tol


# short aliases
weak_majorizes = is_weakly_majorized
majorizes = is_majorized
