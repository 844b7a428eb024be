from __future__ import annotations

from fractions import Fraction

import sympy
from hypothesis import given
from hypothesis import strategies as st

from spex.polynomials import (
    divexact,
    evaluate,
    poly_gcd,
    roots_above,
    sign,
    squarefree,
    taylor_shift,
)

x = sympy.symbols("x")
small_polys = st.lists(st.integers(-6, 6), min_size=1, max_size=6).map(lambda c: [1] + c)


def _sym(p):
    return sympy.Poly(p, x)


def test_evaluate_and_sign():
    p = [1, 0, -2]  # x^2 - 2
    assert evaluate(p, Fraction(3, 2)) == Fraction(1, 4)
    assert sign(p, 1, 0) == -1
    assert sign(p, 3, 1) == 1


@given(small_polys, st.integers(-5, 5))
def test_taylor_shift(p, a):
    q = taylor_shift(p, a)
    for v in (-2, 0, 3):
        assert evaluate(q, v) == evaluate(p, v + a)


@given(small_polys, small_polys)
def test_gcd_matches_sympy(a, b):
    g = poly_gcd(a, b)
    ref = sympy.gcd(_sym(a), _sym(b))
    assert _sym(g).monic() == ref.monic() or (ref.degree() == 0 and len(g) == 1)


@given(small_polys, small_polys)
def test_divexact(a, b):
    prod = (_sym(a) * _sym(b)).all_coeffs()
    assert divexact([int(c) for c in prod], b) == a


def test_squarefree():
    p = [int(c) for c in sympy.Poly((x - 1) ** 3 * (x + 2) ** 2 * (x - 5), x).all_coeffs()]
    assert squarefree(p) == [1, -4, -7, 10]  # (x-1)(x+2)(x-5)


@given(st.lists(st.integers(-8, 8), min_size=1, max_size=6), st.integers(-9, 9))
def test_roots_above_counts_distinct_real_roots(roots, c):
    p = [int(v) for v in sympy.Poly(sympy.prod([x - r for r in roots]), x).all_coeffs()]
    assert roots_above(squarefree(p), c) == len({r for r in roots if r > c})
