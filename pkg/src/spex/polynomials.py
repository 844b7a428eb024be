"""Exact integer polynomial helpers.

Polynomials are lists of Python ints, highest degree first. Root counting
uses Descartes' rule of signs on a shifted polynomial, which is exact for
real-rooted input (characteristic polynomials of symmetric matrices and
their factors).
"""

from __future__ import annotations

from fractions import Fraction
from math import gcd

Poly = list[int]


def trim(p: Poly) -> Poly:
    i = 0
    while i < len(p) - 1 and p[i] == 0:
        i += 1
    return p[i:]


def degree(p: Poly) -> int:
    p = trim(p)
    return -1 if p == [0] or not p else len(p) - 1


def evaluate(p: Poly, x: Fraction | int) -> Fraction:
    acc = Fraction(0)
    for c in p:
        acc = acc * x + c
    return acc


def sign(p: Poly, num: int, k: int) -> int:
    """Sign of ``p(num / 2**k)`` using integer arithmetic only."""
    acc = 0
    d = len(p) - 1
    # 2**(k d) p(num/2**k) = sum c_i num^(d-i) 2^(k i)
    for i, c in enumerate(p):
        acc = acc * num + (c << (k * i))
    return (acc > 0) - (acc < 0)


def taylor_shift(p: Poly, a: int) -> Poly:
    """Coefficients of ``p(x + a)``."""
    q = list(p)
    n = len(q)
    for i in range(n - 1):
        for j in range(1, n - i):
            q[j] += a * q[j - 1]
    return q


def scale(p: Poly, k: int) -> Poly:
    """Coefficients of ``2**(k d) * p(x / 2**k)``."""
    return [c << (k * i) for i, c in enumerate(p)]


def sign_variations(coeffs) -> int:
    last = 0
    count = 0
    for c in coeffs:
        if c == 0:
            continue
        s = 1 if c > 0 else -1
        if last and s != last:
            count += 1
        last = s
    return count


def roots_above(p: Poly, num: int, k: int = 0) -> int:
    """Number of roots greater than ``num / 2**k`` (with multiplicity), for real-rooted ``p``."""
    return sign_variations(taylor_shift(scale(p, k), num))


def derivative(p: Poly) -> Poly:
    d = len(p) - 1
    return [c * (d - i) for i, c in enumerate(p[:-1])] or [0]


def content(p: Poly) -> int:
    g = 0
    for c in p:
        g = gcd(g, c)
    return g


def primitive(p: Poly) -> Poly:
    p = trim(p)
    g = content(p)
    if g == 0:
        return [0]
    if p[0] < 0:
        g = -g
    return [c // g for c in p]


def _prem(a: Poly, b: Poly) -> Poly:
    """Pseudo-remainder of ``a`` by ``b``."""
    a = list(a)
    db = len(b) - 1
    lead = b[0]
    while len(a) - 1 >= db and any(a):
        f = a[0]
        a = [lead * x for x in a]
        for i in range(len(b)):
            a[i] -= f * b[i]
        a = a[1:]
    return trim(a) if a else [0]


def poly_gcd(a: Poly, b: Poly) -> Poly:
    """Primitive gcd with positive leading coefficient (primitive PRS)."""
    a, b = primitive(a), primitive(b)
    if degree(a) < degree(b):
        a, b = b, a
    while degree(b) > 0:
        r = _prem(a, b)
        a, b = b, primitive(r)
    if degree(b) == 0 and b[0] != 0:
        return [1]
    return a


def divexact(a: Poly, b: Poly) -> Poly:
    """Quotient ``a / b`` when ``b`` divides ``a`` over the rationals, made primitive."""
    a = [Fraction(x) for x in trim(a)]
    b = trim(b)
    q = []
    while len(a) >= len(b):
        f = a[0] / b[0]
        q.append(f)
        for i in range(len(b)):
            a[i] -= f * b[i]
        a = a[1:]
    if any(a):
        raise ValueError("divexact: non-zero remainder")
    den = 1
    for x in q:
        den = den * x.denominator // gcd(den, x.denominator)
    return primitive([int(x * den) for x in q])


def squarefree(p: Poly) -> Poly:
    """``p / gcd(p, p')``: same distinct roots, each simple."""
    p = primitive(p)
    if degree(p) <= 0:
        return p
    g = poly_gcd(p, derivative(p))
    return divexact(p, g) if degree(g) > 0 else p
