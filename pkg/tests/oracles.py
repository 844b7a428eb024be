"""Independent counting oracles for graph enumeration."""

from __future__ import annotations

from fractions import Fraction
from itertools import combinations, permutations
from math import factorial, gcd

from spex.canonical import canonical_code
from spex.graphs import Graph, is_connected


def _cycle_type(perm):
    seen, out = set(), []
    for i in range(len(perm)):
        if i in seen:
            continue
        k, j = 0, i
        while j not in seen:
            seen.add(j)
            j = perm[j]
            k += 1
        out.append(k)
    return out


def burnside_count(n: int) -> int:
    """Unlabeled graphs on n vertices: average of 2^(pair cycles) over S_n."""
    total = 0
    for perm in permutations(range(n)):
        c = _cycle_type(perm)
        cycles = sum(k // 2 for k in c)
        cycles += sum(gcd(a, b) for a, b in combinations(c, 2))
        total += 2**cycles
    return total // factorial(n)


def connected_counts(totals: list[int]) -> list[int]:
    """Inverse Euler transform: totals[n] (n >= 1) -> connected counts."""
    N = len(totals) - 1
    b = [0] + totals[1:]
    # log of the generating function via the standard recurrence
    c = [0] * (N + 1)
    for n in range(1, N + 1):
        c[n] = n * b[n] - sum(c[k] * b[n - k] for k in range(1, n))
    a = [0] * (N + 1)
    for n in range(1, N + 1):
        s = sum(_mobius(n // d) * c[d] for d in range(1, n + 1) if n % d == 0)
        a[n] = int(Fraction(s, n))
    return a


def _mobius(n: int) -> int:
    out, p = 1, 2
    while p * p <= n:
        if n % p == 0:
            n //= p
            if n % p == 0:
                return 0
            out = -out
        p += 1
    return -out if n > 1 else out


def labeled_classes(n: int) -> tuple[int, int]:
    """(all, connected) class counts by deduplicating every labeled graph."""
    pairs = list(combinations(range(n), 2))
    seen: dict[bytes, bool] = {}
    for mask in range(1 << len(pairs)):
        g = Graph.from_edges(n, [pairs[i] for i in range(len(pairs)) if mask >> i & 1])
        code = canonical_code(g)
        if code not in seen:
            seen[code] = is_connected(g)
    return len(seen), sum(seen.values())
