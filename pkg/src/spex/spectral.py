"""Spectral radius enclosures, characteristic polynomials and certified comparisons.

Floating enclosures come from Collatz-Wielandt bounds on a positive vector:
for a connected graph, min (Ax)_i/x_i <= rho <= max (Ax)_i/x_i for every x > 0.
The bounds are widened by a rounding-error allowance, so they stay valid
even though Ax is computed in floating point. Exact results use the integer
characteristic polynomial and Descartes root counts on dyadic shifts.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from fractions import Fraction

import numpy as np

from .errors import CapacityError, DomainError, PrecisionError, ValidationError
from .graphs import FAST_TIER_MAX, Graph, component_masks, iter_bits
from .polynomials import (
    degree,
    poly_gcd,
    roots_above,
    sign,
    squarefree,
)

DEFAULT_WIDTH = 1e-9
MAX_ITER = 1_000_000
_EPS = np.finfo(float).eps

CharPoly = tuple[int, ...]

# primes just below 2**55; a 0/1 row times residues stays below 2**61
_PRIMES = (
    36028797018963913, 36028797018963901, 36028797018963869, 36028797018963841,
    36028797018963821, 36028797018963799, 36028797018963797, 36028797018963769,
    36028797018963761, 36028797018963701, 36028797018963689, 36028797018963647,
)


@dataclass(frozen=True)
class RootInterval:
    """``lo <= rho <= hi``. Exact endpoints are kept when known."""

    lo: float
    hi: float
    method: str
    lo_exact: Fraction | None = field(default=None, compare=False)
    hi_exact: Fraction | None = field(default=None, compare=False)

    @property
    def width(self) -> float:
        return self.hi - self.lo

    @property
    def mid(self) -> float:
        return (self.lo + self.hi) / 2

    def contains(self, x: float) -> bool:
        return self.lo <= x <= self.hi

    def to_dict(self) -> dict:
        return {"lo": repr(self.lo), "hi": repr(self.hi), "method": self.method}


@dataclass(frozen=True)
class PerronVector:
    """Weights normalized to max 1 on ``component``; zero elsewhere.

    ``partial`` is set when the graph is disconnected, so other components
    carry zeros rather than their own eigenvectors.
    """

    values: tuple[float, ...]
    component: tuple[int, ...]
    partial: bool
    residual: float


def _down(x: Fraction) -> float:
    f = float(x)
    return math.nextafter(f, -math.inf) if Fraction(f) > x else f


def _up(x: Fraction) -> float:
    f = float(x)
    return math.nextafter(f, math.inf) if Fraction(f) < x else f


# ---- floating enclosures --------------------------------------------------


def _matrix(g: Graph, verts: list[int]):
    k = len(verts)
    index = {v: i for i, v in enumerate(verts)}
    if k <= 2000:
        a = np.zeros((k, k))
        for v in verts:
            i = index[v]
            for u in iter_bits(g.adj[v]):
                a[i, index[u]] = 1.0
        return a
    from scipy.sparse import csr_matrix

    rows, cols = [], []
    for v in verts:
        for u in iter_bits(g.adj[v]):
            rows.append(index[v])
            cols.append(index[u])
    return csr_matrix((np.ones(len(rows)), (rows, cols)), shape=(k, k))


def _start_vector(a) -> np.ndarray:
    k = a.shape[0]
    try:
        if isinstance(a, np.ndarray):
            _, vecs = np.linalg.eigh(a)
            x = np.abs(vecs[:, -1])
        else:
            from scipy.sparse.linalg import eigsh

            _, vecs = eigsh(a.astype(float), k=1, which="LA")
            x = np.abs(vecs[:, 0])
    except Exception:
        x = np.ones(k)
    top = x.max()
    if not np.isfinite(top) or top <= 0:
        return np.ones(k)
    x = np.maximum(x / top, 1e-12)
    return x


def _component_enclosure(a, width: float, max_iter: int):
    """Padded Collatz-Wielandt bounds for a connected component's matrix."""
    k = a.shape[0]
    if k == 1:
        return 0.0, 0.0, np.ones(1)
    slack = 2.0 * (k + 2) * _EPS
    x = _start_vector(a)
    for _ in range(max_iter):
        y = a @ x
        r = y / x
        lo = float(r.min()) * (1 - slack)
        hi = float(r.max()) * (1 + slack)
        lo, hi = float(lo), float(hi)
        if hi - lo <= width:
            return lo, hi, x
        x = y + x
        x = x / x.max()
    return None


def rho_enclosure(g: Graph, width: float = DEFAULT_WIDTH, max_iter: int = MAX_ITER):
    """Return ``(RootInterval, PerronVector)`` with ``hi - lo <= width``.

    Disconnected graphs are handled per component; the interval encloses the
    maximum and the vector lives on the component that attains it.
    """
    if not width > 0:
        raise DomainError(f"width must be positive, got {width}")
    n = g.n
    if n == 0:
        return RootInterval(0.0, 0.0, "collatz_wielandt"), PerronVector((), (), False, 0.0)
    dmax = max(g.max_degree, 1)
    floor_width = 4.0 * (n + 2) * _EPS * dmax
    if width < floor_width:
        raise PrecisionError(
            f"width {width:g} is below the floating-point floor {floor_width:.1e}; use rho_exact"
        )
    comps = component_masks(g)
    best = None
    for comp in comps:
        verts = list(iter_bits(comp))
        a = _matrix(g, verts)
        res = _component_enclosure(a, width, max_iter)
        if res is None:
            if n > FAST_TIER_MAX:
                raise PrecisionError("power iteration did not reach the requested width")
            sub = g.induced(verts)
            ex = rho_exact(sub, width)
            res = (ex.lo, ex.hi, _start_vector(a))
        lo, hi, x = res
        if best is None or hi > best[1] or (hi == best[1] and lo > best[0]):
            best = (lo, hi, x, verts, a)
    lo, hi, x, verts, a = best
    lo = max(lo, 0.0)
    rho_mid = (lo + hi) / 2
    residual = float(np.max(np.abs(a @ x - rho_mid * x))) if len(verts) > 1 else 0.0
    values = [0.0] * n
    for i, v in enumerate(verts):
        values[v] = float(x[i])
    pv = PerronVector(tuple(values), tuple(verts), len(comps) > 1, residual)
    return RootInterval(lo, hi, "collatz_wielandt"), pv


def rho(g: Graph, width: float = DEFAULT_WIDTH) -> float:
    """Midpoint of the enclosure; a convenience for reporting."""
    return rho_enclosure(g, width)[0].mid


# ---- characteristic polynomial --------------------------------------------


def _coefficient_bound(n: int, dmax: int) -> int:
    return max(math.comb(n, k) * dmax**k for k in range(n + 1))


def _charpoly_mod(a: np.ndarray, p: int) -> list[int]:
    n = a.shape[0]
    coeffs = [1]
    m = np.zeros((n, n), dtype=np.int64)
    eye = np.eye(n, dtype=np.int64)
    for k in range(1, n + 1):
        m = (a @ m) % p
        m = (m + coeffs[k - 1] * eye) % p
        am = (a * m.T).sum(axis=1) % p
        tr = int(am.sum()) % p
        coeffs.append((-tr * pow(k, -1, p)) % p)
    return coeffs


def char_poly(g: Graph) -> CharPoly:
    """Integer coefficients of det(xI - A), highest degree first (monic).

    Faddeev-LeVerrier modulo several 55-bit primes, combined by CRT; the
    number of primes follows from the bound |c_k| <= C(n,k) * maxdeg^k.
    """
    n = g.n
    if n > FAST_TIER_MAX:
        raise CapacityError(f"exact characteristic polynomials need n <= {FAST_TIER_MAX}, got {n}")
    if n == 0:
        return (1,)
    a = np.zeros((n, n), dtype=np.int64)
    for v in range(n):
        for u in iter_bits(g.adj[v]):
            a[v, u] = 1
    need = 2 * _coefficient_bound(n, g.max_degree) + 1
    modulus = 1
    result = [0] * (n + 1)
    for p in _PRIMES:
        residues = _charpoly_mod(a, p)
        if modulus == 1:
            result = residues
        else:
            inv = pow(modulus, -1, p)
            result = [r + modulus * (((s - r) * inv) % p) for r, s in zip(result, residues)]
        modulus *= p
        if modulus > need:
            break
    half = modulus // 2
    return tuple(c - modulus if c > half else c for c in result)


# ---- exact isolation ------------------------------------------------------


def _bisect_top(poly, lo: int, hi: int, k: int, stop):
    """Shrink ``(lo, hi] / 2**k`` around the largest root until ``stop(lo, hi, k)``."""
    while not stop(lo, hi, k):
        lo, hi, k = 2 * lo, 2 * hi, k + 1
        mid = (lo + hi) // 2
        if roots_above(poly, mid, k) >= 1:
            lo = mid
        else:
            hi = mid
    return lo, hi, k


def _interval(lo: int, hi: int, k: int) -> RootInterval:
    flo, fhi = Fraction(lo, 1 << k), Fraction(hi, 1 << k)
    return RootInterval(_down(flo), _up(fhi), "charpoly_bisection", flo, fhi)


def rho_exact(g: Graph, width: float = DEFAULT_WIDTH, poly: CharPoly | None = None) -> RootInterval:
    """Enclosure of the largest adjacency eigenvalue from the exact characteristic polynomial."""
    if not width > 0:
        raise DomainError(f"width must be positive, got {width}")
    p = list(poly if poly is not None else char_poly(g))
    if g.n == 0:
        return RootInterval(0.0, 0.0, "charpoly_bisection", Fraction(0), Fraction(0))
    top = g.max_degree
    if sign(p, top, 0) == 0:
        return _interval(top, top, 0)
    w = Fraction(width)

    lo, hi, k = -1, top, 0
    while Fraction(hi - lo, 1 << k) > w:
        lo, hi, k = 2 * lo, 2 * hi, k + 1
        mid = (lo + hi) // 2
        if roots_above(p, mid, k) >= 1:
            lo = mid
        elif sign(p, mid, k) == 0:
            return _interval(mid, mid, k)
        else:
            hi = mid
    return _interval(lo, hi, k)


# ---- comparison -----------------------------------------------------------


@dataclass(frozen=True)
class Comparison:
    """Outcome of :func:`compare_rho`.

    ``verdict`` is ``"less"``, ``"equal"`` or ``"greater"`` (first graph
    against second). ``gap`` is a rigorous lower bound on |rho1 - rho2|
    (zero for equality). ``method`` says how the verdict was certified.
    """

    verdict: str
    gap: float
    method: str
    first: RootInterval
    second: RootInterval

    def to_dict(self) -> dict:
        return {
            "verdict": self.verdict,
            "gap": repr(self.gap),
            "method": self.method,
            "first": self.first.to_dict(),
            "second": self.second.to_dict(),
        }


def _isolate(q, top: int):
    """Dyadic ``(lo, hi, k)`` such that q's largest root is its only root in ``(lo, hi] / 2**k``."""
    return _bisect_top(q, -1, top, 0, lambda lo, hi, k: roots_above(q, lo, k) == 1)


def _align(iv, k):
    lo, hi, k0 = iv
    return lo << (k - k0), hi << (k - k0)


def compare_rho(g1: Graph, g2: Graph, exact: bool = False, width: float = DEFAULT_WIDTH) -> Comparison:
    """Certified comparison of rho(g1) and rho(g2).

    Disjoint floating enclosures settle a strict verdict unless ``exact`` is
    set. Otherwise the squarefree characteristic polynomials isolate both
    largest roots; they are equal iff the gcd of the two has a root in the
    overlap of the isolating intervals, and unequal roots are separated by
    bisection.
    """
    if not exact:
        e1, _ = rho_enclosure(g1, width)
        e2, _ = rho_enclosure(g2, width)
        if e1.lo > e2.hi:
            return Comparison("greater", _down(Fraction(e1.lo) - Fraction(e2.hi)), "enclosure", e1, e2)
        if e2.lo > e1.hi:
            return Comparison("less", _down(Fraction(e2.lo) - Fraction(e1.hi)), "enclosure", e1, e2)
    # rho of the order-0 graph is taken as 0, the same as K_1
    g1 = g1 if g1.n else Graph.empty(1)
    g2 = g2 if g2.n else Graph.empty(1)
    q1 = squarefree(list(char_poly(g1)))
    q2 = squarefree(list(char_poly(g2)))
    i1 = _isolate(q1, max(g1.max_degree, 1))
    i2 = _isolate(q2, max(g2.max_degree, 1))
    k = max(i1[2], i2[2])
    lo1, hi1 = _align(i1, k)
    lo2, hi2 = _align(i2, k)
    L, H = max(lo1, lo2), min(hi1, hi2)
    if L < H:
        g = poly_gcd(q1, q2)
        if degree(g) > 0 and roots_above(g, L, k) - roots_above(g, H, k) >= 1:
            return Comparison("equal", 0.0, "exact", _interval(lo1, hi1, k), _interval(lo2, hi2, k))
    # distinct roots: refine both until the intervals separate strictly and
    # are narrow enough that the gap bound is close to the true gap
    limit = Fraction(width)

    def settled():
        if not (lo1 > hi2 or lo2 > hi1):
            return False
        scale = Fraction(1, 1 << k)
        return (hi1 - lo1) * scale <= limit and (hi2 - lo2) * scale <= limit

    while not settled():
        lo1, hi1, lo2, hi2, k = 2 * lo1, 2 * hi1, 2 * lo2, 2 * hi2, k + 1
        m1 = (lo1 + hi1) // 2
        if roots_above(q1, m1, k) >= 1:
            lo1 = m1
        else:
            hi1 = m1
        m2 = (lo2 + hi2) // 2
        if roots_above(q2, m2, k) >= 1:
            lo2 = m2
        else:
            hi2 = m2
    a, b = _interval(lo1, hi1, k), _interval(lo2, hi2, k)
    if lo1 > hi2:
        return Comparison("greater", _down(Fraction(lo1 - hi2, 1 << k)), "exact", a, b)
    return Comparison("less", _down(Fraction(lo2 - hi1, 1 << k)), "exact", a, b)


# ---- closed forms ---------------------------------------------------------


def tait_bound(n: int, s: int, t: int) -> float:
    """The closed-form upper bound on rho for K_{s,t}-minor-free graphs of order n."""
    if not 2 <= s <= t:
        raise DomainError(f"need 2 <= s <= t, got s={s}, t={t}")
    if n < s + t:
        raise DomainError(f"need n >= s + t, got n={n}")
    c = s + t - 3
    disc = c * c + 4 * (s - 1) * (n - s + 1) - 4 * (s - 2) * (t - 1)
    return 0.5 * (c + math.sqrt(disc))


def quotient_matrix(g: Graph, partition) -> np.ndarray:
    """Quotient matrix of an equitable partition; raises if it is not equitable."""
    classes = [list(c) for c in partition]
    owner = {}
    for i, cls in enumerate(classes):
        if not cls:
            raise ValidationError(f"class {i} is empty")
        for v in cls:
            if not 0 <= v < g.n:
                raise ValidationError(f"vertex {v} is out of range")
            if v in owner:
                raise ValidationError(f"vertex {v} appears in classes {owner[v]} and {i}")
            owner[v] = i
    if len(owner) != g.n:
        missing = min(set(range(g.n)) - set(owner))
        raise ValidationError(f"vertex {missing} is in no class")
    masks = []
    for cls in classes:
        m = 0
        for v in cls:
            m |= 1 << v
        masks.append(m)
    k = len(classes)
    b = np.zeros((k, k))
    for i, cls in enumerate(classes):
        ref = [(g.adj[cls[0]] & mj).bit_count() for mj in masks]
        for v in cls[1:]:
            for j, mj in enumerate(masks):
                if (g.adj[v] & mj).bit_count() != ref[j]:
                    raise ValidationError(
                        f"partition is not equitable: vertex {v} of class {i} has "
                        f"{(g.adj[v] & mj).bit_count()} neighbours in class {j}, expected {ref[j]}"
                    )
        b[i] = ref
    return b


def quotient_rho(g: Graph, partition) -> float:
    """Largest eigenvalue of the quotient matrix of an equitable partition.

    The quotient is similar to a symmetric matrix (scale by square roots of
    class sizes), so a symmetric eigensolver applies.
    """
    b = quotient_matrix(g, partition)
    sizes = np.array([len(list(c)) for c in partition], dtype=float)
    root = np.sqrt(sizes)
    sym = b * root[:, None] / root[None, :]
    sym = (sym + sym.T) / 2
    return float(np.linalg.eigvalsh(sym)[-1])


def h1t_cubic_root(t: int, a0: int, a1: int) -> float:
    """Largest root of x^3 - (t-3) x^2 - (2t-2) x + a0*a1, by bisection."""
    if t < 4:
        raise DomainError(f"need t >= 4, got {t}")
    if a0 < 0 or a1 < 0 or a0 + a1 != t - 1:
        raise DomainError(f"need a0, a1 >= 0 with a0 + a1 = t - 1, got a0={a0}, a1={a1}")
    if a1 % 2:
        raise DomainError(f"a1 must be even, got {a1}")
    c2, c1, c0 = -(t - 3), -(2 * t - 2), a0 * a1

    def f(x):
        return ((x + c2) * x + c1) * x + c0

    # f increases to the right of its larger critical point
    crit = ((t - 3) + math.sqrt((t - 3) ** 2 + 3 * (2 * t - 2))) / 3
    lo = crit
    hi = 1 + max(abs(c2), abs(c1), abs(c0))
    if f(lo) > 0:
        raise DomainError("cubic has no root right of its critical point")
    for _ in range(200):
        mid = (lo + hi) / 2
        if mid in (lo, hi):
            break
        if f(mid) > 0:
            hi = mid
        else:
            lo = mid
    return (lo + hi) / 2


def _dyadic(x: float) -> tuple[int, int]:
    f = Fraction(x)
    k = f.denominator.bit_length() - 1
    return f.numerator, k


def encloses_top_root(poly, lo: float, hi: float) -> bool:
    """Exact check that ``[lo, hi]`` contains the largest root of the real-rooted ``poly``."""
    p = list(poly)
    num, k = _dyadic(hi)
    if roots_above(p, num, k) != 0:
        return False
    num, k = _dyadic(lo)
    return roots_above(p, num, k) >= 1 or sign(p, num, k) == 0
