"""Non-isomorphic graph enumeration by vertex augmentation.

Level ``n`` is built from the complete level ``n-1``: a new vertex is
attached to every admissible neighbourhood and children are deduplicated by
canonical code. Two rules shrink the work without losing classes:

* the new vertex must be a minimum-degree vertex of the child (every graph
  arises from deleting one of its minimum-degree vertices);
* with the hereditary filter off, only classes with at most half of all
  possible edges are generated directly; the rest are their complements.

A *hereditary* filter (a property closed under vertex deletion, such as any
minor-closed property) may be supplied; then every level only contains
filtered graphs, which is still complete because the parent of a filtered
graph is filtered.

The output order is ascending canonical code and does not depend on the
worker count.
"""

from __future__ import annotations

import os
from collections.abc import Callable, Iterator
from functools import lru_cache
from itertools import combinations

from .canonical import canonical_labeling
from .errors import CapacityError
from .graphs import Graph, complement, is_connected

ENUMERATION_CAP = 10

Filter = Callable[[Graph], bool]


def worker_count() -> int:
    """Worker processes for enumeration; ``SPEX_THREADS`` overrides the CPU count."""
    env = os.environ.get("SPEX_THREADS")
    if env:
        return max(1, int(env))
    return os.cpu_count() or 1


def _canon(g: Graph) -> tuple[int, Graph]:
    code, lab = canonical_labeling(g)
    perm = [0] * g.n
    for i, v in enumerate(lab):
        perm[v] = i
    return code, g.relabel(perm)


def _children(parent: Graph, max_edges: int | None):
    """Admissible one-vertex extensions of ``parent`` (labeled, may repeat classes)."""
    m = parent.n
    deg = parent.degrees()
    e0 = parent.num_edges
    mindeg = min(deg, default=m)
    for k in range(0, m + 1):
        if m and mindeg < k - 1:
            break
        if max_edges is not None and e0 + k > max_edges:
            break
        forced = [u for u in range(m) if deg[u] == k - 1]
        if len(forced) > k:
            continue
        free = [u for u in range(m) if deg[u] >= k]
        fmask = 0
        for u in forced:
            fmask |= 1 << u
        for extra in combinations(free, k - len(forced)):
            mask = fmask
            for u in extra:
                mask |= 1 << u
            adj = list(parent.adj)
            bit = 1 << m
            for u in range(m):
                if mask >> u & 1:
                    adj[u] |= bit
            adj.append(mask)
            yield Graph._trusted(m + 1, tuple(adj))


def _extend_chunk(args):
    parents, n, hereditary, max_edges = args
    found: dict[int, Graph] = {}
    for p in parents:
        for child in _children(p, max_edges):
            if hereditary is not None and not hereditary(child):
                continue
            code, rep = _canon(child)
            if code not in found:
                found[code] = rep
    return found


def _next_level(prev: list[Graph], n: int, hereditary: Filter | None) -> list[Graph]:
    total = n * (n - 1) // 2
    max_edges = total // 2 if hereditary is None else None
    workers = worker_count()
    if workers > 1 and len(prev) >= 64:
        import multiprocessing as mp

        chunks = [prev[i::workers] for i in range(workers)]
        with mp.get_context("fork").Pool(workers) as pool:
            parts = pool.map(_extend_chunk, [(c, n, hereditary, max_edges) for c in chunks])
        found: dict[int, Graph] = {}
        for part in parts:
            for code, rep in part.items():
                found.setdefault(code, rep)
    else:
        found = _extend_chunk((prev, n, hereditary, max_edges))
    if hereditary is None:
        extra = {}
        for g in found.values():
            if 2 * g.num_edges < total:
                code, rep = _canon(complement(g))
                extra[code] = rep
        found.update(extra)
    return [found[c] for c in sorted(found)]


@lru_cache(maxsize=None)
def _levels(n: int, hereditary: Filter | None) -> tuple[Graph, ...]:
    if n == 0:
        return (Graph.empty(0),)
    if n == 1:
        g = Graph.empty(1)
        return (g,) if hereditary is None or hereditary(g) else ()
    prev = list(_levels(n - 1, hereditary))
    return tuple(_next_level(prev, n, hereditary))


def enumerate_graphs(
    n: int,
    connected_only: bool = False,
    hereditary: Filter | None = None,
    cap: int = ENUMERATION_CAP,
) -> Iterator[Graph]:
    """Yield one canonically labeled representative per isomorphism class of order ``n``.

    ``hereditary`` must be closed under vertex deletion; pass the same callable
    object across calls to reuse cached levels.
    """
    if n < 0:
        raise CapacityError("order must be non-negative")
    if n > cap:
        raise CapacityError(f"enumeration is capped at n={cap}, got {n}")
    for g in _levels(n, hereditary):
        if connected_only and not is_connected(g):
            continue
        yield g


def count_graphs(n: int, connected_only: bool = False) -> int:
    return sum(1 for _ in enumerate_graphs(n, connected_only))


def clear_cache() -> None:
    _levels.cache_clear()
