"""Simple undirected graphs on vertices ``0..n-1`` with bitset adjacency rows.

Row ``adj[v]`` is a Python int whose bit ``u`` is set iff ``uv`` is an edge.
Graphs of order at most :data:`FAST_TIER_MAX` form the *fast* tier, on which
canonical forms, brute-force minor search and enumeration operate; larger
graphs (up to :data:`MAX_ORDER`) are the *general* tier and support the
structural operators and spectral routines only.
"""

from __future__ import annotations

from collections.abc import Iterable, Sequence

from .errors import CapacityError, DomainError

FAST_TIER_MAX = 64
MAX_ORDER = 10_000


def _bits(mask: int):
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


class Graph:
    """Immutable simple graph.

    Equality and hashing are *labeled*: two graphs are equal iff they have
    the same order and the same edge set. Use
    :func:`spex.canonical.canonical_code` for isomorphism.
    """

    __slots__ = ("_n", "_adj", "_hash")

    def __init__(self, n: int, adj: Sequence[int]):
        if n < 0:
            raise DomainError("graph order must be non-negative")
        if n > MAX_ORDER:
            raise CapacityError(f"order {n} exceeds the cap of {MAX_ORDER} vertices")
        if len(adj) != n:
            raise DomainError(f"expected {n} adjacency rows, got {len(adj)}")
        full = (1 << n) - 1
        rows = tuple(int(r) for r in adj)
        for v, row in enumerate(rows):
            if row & ~full or row >> v & 1:
                raise DomainError(f"row {v} has a self-loop or an out-of-range neighbor")
            for u in _bits(row):
                if not rows[u] >> v & 1:
                    raise DomainError(f"adjacency is not symmetric at ({v}, {u})")
        self._n = n
        self._adj = rows
        self._hash = None

    @classmethod
    def _trusted(cls, n: int, adj: tuple[int, ...]) -> Graph:
        # skips validation; callers guarantee symmetric, loopless rows
        g = object.__new__(cls)
        g._n = n
        g._adj = adj
        g._hash = None
        return g

    # ---- constructors -------------------------------------------------

    @classmethod
    def from_edges(cls, n: int, edges: Iterable[tuple[int, int]]) -> Graph:
        if n > MAX_ORDER:
            raise CapacityError(f"order {n} exceeds the cap of {MAX_ORDER} vertices")
        adj = [0] * n
        for u, v in edges:
            if u == v:
                raise DomainError(f"self-loop at vertex {u}")
            if not (0 <= u < n and 0 <= v < n):
                raise DomainError(f"edge ({u}, {v}) out of range for n={n}")
            adj[u] |= 1 << v
            adj[v] |= 1 << u
        return cls._trusted(n, tuple(adj))

    @classmethod
    def empty(cls, n: int) -> Graph:
        if n > MAX_ORDER:
            raise CapacityError(f"order {n} exceeds the cap of {MAX_ORDER} vertices")
        return cls._trusted(n, (0,) * n)

    @classmethod
    def complete(cls, n: int) -> Graph:
        if n > MAX_ORDER:
            raise CapacityError(f"order {n} exceeds the cap of {MAX_ORDER} vertices")
        full = (1 << n) - 1
        return cls._trusted(n, tuple(full ^ (1 << v) for v in range(n)))

    @classmethod
    def path(cls, n: int) -> Graph:
        return cls.from_edges(n, ((i, i + 1) for i in range(n - 1)))

    @classmethod
    def cycle(cls, n: int) -> Graph:
        if n < 3:
            raise DomainError("a cycle needs at least 3 vertices")
        return cls.from_edges(n, ((i, (i + 1) % n) for i in range(n)))

    @classmethod
    def star(cls, leaves: int) -> Graph:
        """K_{1,leaves} with the center at vertex 0."""
        return cls.from_edges(leaves + 1, ((0, i) for i in range(1, leaves + 1)))

    @classmethod
    def complete_bipartite(cls, a: int, b: int) -> Graph:
        return cls.from_edges(a + b, ((i, a + j) for i in range(a) for j in range(b)))

    # ---- basic accessors ----------------------------------------------

    @property
    def n(self) -> int:
        return self._n

    @property
    def adj(self) -> tuple[int, ...]:
        return self._adj

    @property
    def tier(self) -> str:
        return "fast" if self._n <= FAST_TIER_MAX else "general"

    def __len__(self) -> int:
        return self._n

    def __eq__(self, other) -> bool:
        if not isinstance(other, Graph):
            return NotImplemented
        return self._n == other._n and self._adj == other._adj

    def __hash__(self) -> int:
        if self._hash is None:
            self._hash = hash((self._n, self._adj))
        return self._hash

    def __repr__(self) -> str:
        return f"Graph(n={self._n}, e={self.num_edges})"

    @property
    def num_edges(self) -> int:
        return sum(r.bit_count() for r in self._adj) // 2

    def edges(self) -> list[tuple[int, int]]:
        """Edges ``(u, v)`` with ``u < v`` in lexicographic order."""
        out = []
        for u, row in enumerate(self._adj):
            for v in _bits(row >> (u + 1)):
                out.append((u, u + 1 + v))
        return out

    def has_edge(self, u: int, v: int) -> bool:
        return bool(self._adj[u] >> v & 1)

    def neighbors(self, v: int) -> list[int]:
        return list(_bits(self._adj[v]))

    def degree(self, v: int) -> int:
        return self._adj[v].bit_count()

    def degrees(self) -> list[int]:
        return [r.bit_count() for r in self._adj]

    @property
    def max_degree(self) -> int:
        return max((r.bit_count() for r in self._adj), default=0)

    @property
    def min_degree(self) -> int:
        return min((r.bit_count() for r in self._adj), default=0)

    def vertex_mask(self) -> int:
        return (1 << self._n) - 1

    def neighborhood(self, mask: int) -> int:
        """Open neighborhood of a vertex set given as a bitmask."""
        out = 0
        adj = self._adj
        for v in _bits(mask):
            out |= adj[v]
        return out & ~mask

    def adjacency_matrix(self):
        import numpy as np

        a = np.zeros((self._n, self._n), dtype=np.int64)
        for u, v in self.edges():
            a[u, v] = a[v, u] = 1
        return a

    # ---- derived graphs -----------------------------------------------

    def relabel(self, perm: Sequence[int]) -> Graph:
        """Graph with vertex ``v`` renamed to ``perm[v]``."""
        n = self._n
        if sorted(perm) != list(range(n)):
            raise DomainError("relabel expects a permutation of 0..n-1")
        adj = [0] * n
        for v, row in enumerate(self._adj):
            r = 0
            for u in _bits(row):
                r |= 1 << perm[u]
            adj[perm[v]] = r
        return Graph._trusted(n, tuple(adj))

    def induced(self, vertices: Sequence[int]) -> Graph:
        """Induced subgraph on ``vertices``, relabeled ``0..k-1`` in the given order."""
        index = {v: i for i, v in enumerate(vertices)}
        adj = []
        for v in vertices:
            r = 0
            for u in _bits(self._adj[v]):
                i = index.get(u)
                if i is not None:
                    r |= 1 << i
            adj.append(r)
        return Graph._trusted(len(vertices), tuple(adj))

    def delete_vertex(self, v: int) -> Graph:
        return self.induced([u for u in range(self._n) if u != v])

    def add_edge(self, u: int, v: int) -> Graph:
        if u == v:
            raise DomainError("cannot add a self-loop")
        adj = list(self._adj)
        adj[u] |= 1 << v
        adj[v] |= 1 << u
        return Graph._trusted(self._n, tuple(adj))

    def remove_edge(self, u: int, v: int) -> Graph:
        if not self.has_edge(u, v):
            raise DomainError(f"({u}, {v}) is not an edge")
        adj = list(self._adj)
        adj[u] &= ~(1 << v)
        adj[v] &= ~(1 << u)
        return Graph._trusted(self._n, tuple(adj))


# ---- structural operators ---------------------------------------------


def complement(g: Graph) -> Graph:
    full = g.vertex_mask()
    return Graph._trusted(g.n, tuple(full & ~row & ~(1 << v) for v, row in enumerate(g.adj)))


def disjoint_union(parts: Sequence[Graph]) -> Graph:
    """Block-diagonal union; part ``i`` occupies the next ``|parts[i]|`` labels."""
    total = sum(p.n for p in parts)
    if total > MAX_ORDER:
        raise CapacityError(f"union of order {total} exceeds the cap of {MAX_ORDER}")
    adj: list[int] = []
    offset = 0
    for p in parts:
        adj.extend(row << offset for row in p.adj)
        offset += p.n
    return Graph._trusted(total, tuple(adj))


def join(g1: Graph, g2: Graph) -> Graph:
    """Disjoint union of ``g1`` (labels first) and ``g2`` plus all cross edges."""
    n1, n2 = g1.n, g2.n
    if n1 + n2 > MAX_ORDER:
        raise CapacityError(f"join of order {n1 + n2} exceeds the cap of {MAX_ORDER}")
    low = (1 << n1) - 1
    high = ((1 << n2) - 1) << n1
    adj = [row | high for row in g1.adj]
    adj.extend((row << n1) | low for row in g2.adj)
    return Graph._trusted(n1 + n2, tuple(adj))


def subdivide_min_edge(g: Graph, k: int) -> Graph:
    """Replace the edge ``uv`` of least degree sum by a path through ``k`` new vertices.

    Ties go to the lexicographically smallest ``(u, v)``, ``u < v``. New vertices
    get labels ``n, ..., n+k-1`` in order from ``u`` towards ``v``.
    """
    if k < 0:
        raise DomainError("subdivision count must be non-negative")
    edges = g.edges()
    if not edges:
        raise DomainError("cannot subdivide an edgeless graph")
    if k == 0:
        return g
    deg = g.degrees()
    u, v = min(edges, key=lambda e: (deg[e[0]] + deg[e[1]], e))
    n = g.n
    if n + k > MAX_ORDER:
        raise CapacityError(f"subdivision of order {n + k} exceeds the cap of {MAX_ORDER}")
    adj = list(g.adj) + [0] * k
    adj[u] &= ~(1 << v)
    adj[v] &= ~(1 << u)
    chain = [u, *range(n, n + k), v]
    for a, b in zip(chain, chain[1:]):
        adj[a] |= 1 << b
        adj[b] |= 1 << a
    return Graph._trusted(n + k, tuple(adj))


def rotate_edge(g: Graph, u: int, v: int, w: int) -> Graph:
    """Return ``g - vw + uw``: the edge at ``w`` moves from ``v`` to ``u``."""
    n = g.n
    if not all(0 <= x < n for x in (u, v, w)):
        raise DomainError("rotation vertices out of range")
    if u == w or u == v:
        raise DomainError("rotation needs u distinct from v and w")
    if not g.has_edge(v, w):
        raise DomainError(f"({v}, {w}) is not an edge")
    if g.has_edge(u, w):
        raise DomainError(f"({u}, {w}) is already an edge")
    adj = list(g.adj)
    adj[v] &= ~(1 << w)
    adj[w] &= ~(1 << v)
    adj[u] |= 1 << w
    adj[w] |= 1 << u
    return Graph._trusted(n, tuple(adj))


def degree_sequence(g: Graph) -> tuple[int, ...]:
    """Non-increasing degree sequence."""
    return tuple(sorted(g.degrees(), reverse=True))


def component_masks(g: Graph) -> list[int]:
    """Vertex bitmasks of the connected components, ordered by least vertex."""
    adj = g.adj
    left = g.vertex_mask()
    comps = []
    while left:
        seed = left & -left
        comp = frontier = seed
        while frontier:
            low = frontier & -frontier
            frontier ^= low
            new = adj[low.bit_length() - 1] & ~comp
            comp |= new
            frontier |= new
        comps.append(comp)
        left &= ~comp
    return comps


def connected_components(g: Graph) -> list[Graph]:
    """Components as graphs, each relabeled in increasing original-label order."""
    return [g.induced(list(_bits(m))) for m in component_masks(g)]


def is_connected(g: Graph) -> bool:
    """True for order 1; the order-0 graph counts as disconnected (no components)."""
    return g.n > 0 and len(component_masks(g)) == 1


def is_connected_mask(adj: Sequence[int], mask: int) -> bool:
    """Whether the vertex set ``mask`` induces a connected subgraph."""
    if not mask:
        return False
    seen = frontier = mask & -mask
    while frontier:
        low = frontier & -frontier
        frontier ^= low
        new = adj[low.bit_length() - 1] & mask & ~seen
        seen |= new
        frontier |= new
    return seen == mask


iter_bits = _bits
