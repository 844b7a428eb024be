"""Minor containment, the (s,t)-property, and branch-set witnesses.

Two independent deciders are provided.

``fast`` (n <= 64): a star pattern K_{1,t} is present iff some connected set
S has at least t outside neighbours, so it reduces to enumerating connected
sets. Other patterns use branch and bound: pattern vertices are placed one at
a time (most constrained first) onto connected sets of still-free vertices,
smallest sets first, with twin symmetry breaking and a component-level
feasibility test for the vertices not yet placed. A biclique K_{a,b} in a
component with only a few more than a+b vertices is instead found by
deleting or contracting down to a+b vertices, where containing K_{a,b} means
the complement's components can be grouped into a part of size exactly a.

``bruteforce`` (n <= 8): every way of choosing k disjoint connected blocks is
tried against every bijection onto the pattern. Slow and obviously correct;
it exists to audit the fast path.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from itertools import permutations

from .errors import CapacityError, DomainError, ParseError, ValidationError
from .families import FamilySpec, build_family
from .graph6 import decode_g6, encode_g6
from .graphs import (
    FAST_TIER_MAX,
    Graph,
    complement,
    component_masks,
    is_connected,
    is_connected_mask,
    iter_bits,
)

BRUTEFORCE_MAX = 8


# ---- patterns -------------------------------------------------------------


@dataclass(frozen=True)
class ExplicitGraph:
    graph: Graph

    def __str__(self) -> str:
        return f"g6:{encode_g6(self.graph)}"


@dataclass(frozen=True)
class Star:
    t: int

    def __post_init__(self):
        if self.t < 1:
            raise DomainError(f"Star needs t >= 1, got {self.t}")

    def __str__(self) -> str:
        return f"star:{self.t}"


@dataclass(frozen=True)
class Biclique:
    a: int
    b: int

    def __post_init__(self):
        if self.a < 1 or self.b < 1:
            raise DomainError(f"Biclique needs a, b >= 1, got ({self.a}, {self.b})")

    def __str__(self) -> str:
        return f"biclique:{self.a},{self.b}"


MinorPattern = ExplicitGraph | Star | Biclique


def pattern_graph(pattern: MinorPattern) -> Graph:
    """The pattern as a graph. Stars put the center at 0; bicliques list the a-side first."""
    if isinstance(pattern, Star):
        return Graph.star(pattern.t)
    if isinstance(pattern, Biclique):
        return Graph.complete_bipartite(pattern.a, pattern.b)
    return pattern.graph


def parse_pattern(text: str) -> MinorPattern:
    """``star:3``, ``biclique:2,3``, ``g6:<code>`` or any family spec such as ``complete:n=5``."""
    kind, _, rest = text.strip().partition(":")
    try:
        if kind == "star":
            return Star(int(rest))
        if kind == "biclique":
            a, b = rest.split(",")
            return Biclique(int(a), int(b))
    except ValueError:
        raise DomainError(f"malformed pattern {text!r}") from None
    if kind == "g6":
        return ExplicitGraph(decode_g6(rest))
    return ExplicitGraph(build_family(FamilySpec.parse(text)))


# ---- witnesses ------------------------------------------------------------


@dataclass(frozen=True)
class BranchModel:
    """``sets[i]`` is the sorted branch set of pattern vertex ``i``."""

    sets: tuple[tuple[int, ...], ...]

    @classmethod
    def from_masks(cls, masks) -> BranchModel:
        return cls(tuple(tuple(iter_bits(m)) for m in masks))

    def masks(self) -> list[int]:
        out = []
        for s in self.sets:
            m = 0
            for v in s:
                m |= 1 << v
            out.append(m)
        return out

    def validate(self, g: Graph, h: Graph) -> None:
        """Raise :class:`ValidationError` unless this is a model of ``h`` in ``g``."""
        if len(self.sets) != h.n:
            raise ValidationError(f"model has {len(self.sets)} branch sets, pattern has {h.n} vertices")
        masks = self.masks()
        seen = 0
        for i, m in enumerate(masks):
            if not m:
                raise ValidationError(f"branch set {i} is empty")
            if m >> g.n:
                raise ValidationError(f"branch set {i} uses a vertex outside the graph")
            if m & seen:
                raise ValidationError(f"branch set {i} overlaps an earlier set")
            seen |= m
            if not is_connected_mask(g.adj, m):
                raise ValidationError(f"branch set {i} is not connected")
        for i, j in h.edges():
            if not g.neighborhood(masks[i]) & masks[j]:
                raise ValidationError(f"no edge between branch sets {i} and {j}")

    def to_json(self) -> str:
        return json.dumps({str(i): list(s) for i, s in enumerate(self.sets)}, sort_keys=False)

    @classmethod
    def from_json(cls, text: str) -> BranchModel:
        try:
            data = json.loads(text)
            k = len(data)
            return cls(tuple(tuple(sorted(int(v) for v in data[str(i)])) for i in range(k)))
        except (ValueError, KeyError, TypeError) as exc:
            raise ParseError(f"bad witness JSON: {exc}", 0) from None


# ---- connected sets -------------------------------------------------------


def _connected_sets(adj, root: int, allowed: int, size: int):
    """Connected subsets of ``allowed`` of exactly ``size`` vertices whose least vertex is ``root``.

    Each set is produced once: a vertex dropped from the extension frontier
    at one level is forbidden in all later siblings.
    """
    allowed &= ~((1 << root) - 1)

    def rec(s, frontier, forbidden, k):
        if k == size:
            yield s
            return
        while frontier:
            low = frontier & -frontier
            frontier ^= low
            v = low.bit_length() - 1
            nxt = (frontier | adj[v]) & allowed & ~(forbidden | s | low)
            yield from rec(s | low, nxt, forbidden, k + 1)
            forbidden |= low

    start = 1 << root
    yield from rec(start, adj[root] & allowed & ~start, start, 1)


def _mask_components(adj, mask: int) -> list[int]:
    comps = []
    rest = mask
    while rest:
        low = rest & -rest
        comp = low
        frontier = low
        while frontier:
            nb = 0
            for v in iter_bits(frontier):
                nb |= adj[v]
            frontier = nb & rest & ~comp
            comp |= frontier
        comps.append(comp)
        rest &= ~comp
    return comps


def _neigh(adj, mask: int) -> int:
    out = 0
    for v in iter_bits(mask):
        out |= adj[v]
    return out & ~mask


# ---- star fast path -------------------------------------------------------


def _star_model(g: Graph, t: int) -> list[int] | None:
    adj = g.adj
    for v in range(g.n):
        if adj[v].bit_count() >= t:
            leaves = list(iter_bits(adj[v]))[:t]
            return [1 << v] + [1 << u for u in leaves]
    for comp in component_masks(g):
        if comp.bit_count() < t + 1:
            continue
        verts = list(iter_bits(comp))
        for size in range(2, len(verts) - t + 1):
            for root in verts:
                for s in _connected_sets(adj, root, comp, size):
                    nb = _neigh(adj, s)
                    if nb.bit_count() >= t:
                        return [s] + [1 << u for u in list(iter_bits(nb))[:t]]
    return None


# ---- general branch and bound ---------------------------------------------


def _placement_order(h: Graph) -> list[int]:
    order: list[int] = []
    placed = 0
    remaining = set(range(h.n))
    while remaining:
        best = max(remaining, key=lambda u: ((h.adj[u] & placed).bit_count(), h.degree(u), -u))
        order.append(best)
        placed |= 1 << best
        remaining.discard(best)
    return order


def _twin_predecessor(h: Graph, order: list[int]) -> dict[int, int]:
    """Map each pattern vertex to the previously placed vertex of its twin class, if any."""
    pos = {u: i for i, u in enumerate(order)}
    prev: dict[int, int] = {}
    last: dict[tuple[int, int], int] = {}
    for u in order:
        open_key = (0, h.adj[u])
        closed_key = (1, h.adj[u] | (1 << u))
        for key in (open_key, closed_key):
            if key in last:
                prev[u] = last[key]
        for key in (open_key, closed_key):
            last[key] = u
    assert all(pos[prev[u]] < pos[u] for u in prev)
    return prev


def _search(g: Graph, h: Graph, region: int) -> list[int] | None:
    adj = g.adj
    k = h.n
    order = _placement_order(h)
    twin_prev = _twin_predecessor(h, order)
    hadj = h.adj
    assign = [0] * k

    def feasible(free: int, depth: int) -> bool:
        if free.bit_count() < k - depth:
            return False
        comps = None
        for u in order[depth:]:
            reqs = [_neigh(adj, assign[w]) for w in iter_bits(hadj[u]) if assign[w]]
            if not reqs:
                continue
            if comps is None:
                comps = _mask_components(adj, free)
            if not any(all(c & r for r in reqs) for c in comps):
                return False
        return True

    def rec(depth: int, free: int) -> bool:
        if depth == k:
            return True
        u = order[depth]
        reqs = [_neigh(adj, assign[w]) for w in iter_bits(hadj[u]) if assign[w]]
        low_bound = -1
        if u in twin_prev:
            low_bound = (assign[twin_prev[u]] & -assign[twin_prev[u]]).bit_length() - 1
        max_size = free.bit_count() - (k - depth - 1)
        # roots must be able to reach every required neighbourhood inside free
        for size in range(1, max_size + 1):
            for root in iter_bits(free):
                if root <= low_bound:
                    continue
                for s in _connected_sets(adj, root, free, size):
                    if not all(s & r for r in reqs):
                        continue
                    assign[u] = s
                    rest = free & ~s
                    if feasible(rest, depth + 1) and rec(depth + 1, rest):
                        return True
                    assign[u] = 0
        return False

    if rec(0, region):
        return assign
    return None


# ---- bicliques with little slack ------------------------------------------

# components at most this many vertices larger than the pattern go through
# the reduction search below instead of the generic branch and bound
REDUCTION_MAX_EXCESS = 2


def _squeeze(x: int, i: int) -> int:
    """Drop bit ``i`` and shift the higher bits down."""
    return (x & ((1 << i) - 1)) | ((x >> (i + 1)) << i)


def _drop(qadj: tuple[int, ...], masks: tuple[int, ...], i: int):
    return (
        tuple(_squeeze(x, i) for j, x in enumerate(qadj) if j != i),
        masks[:i] + masks[i + 1 :],
    )


def _contract(qadj: tuple[int, ...], masks: tuple[int, ...], i: int, j: int):
    """Merge quotient vertex ``j`` into ``i`` (``i < j``)."""
    merged = (qadj[i] | qadj[j]) & ~((1 << i) | (1 << j))
    bi = 1 << i
    new_adj = [(x | bi) if merged >> k & 1 else x for k, x in enumerate(qadj)]
    new_adj[i] = merged
    new_masks = list(masks)
    new_masks[i] |= masks[j]
    return _drop(tuple(new_adj), tuple(new_masks), j)


def _spanning_biclique(qadj: tuple[int, ...], a: int) -> int | None:
    """A vertex set A of size ``a`` fully joined to its complement, as a bitmask."""
    k = len(qadj)
    full = (1 << k) - 1
    comps = []
    rest = full
    while rest:
        low = rest & -rest
        comp = frontier = low
        while frontier:
            nb = 0
            for v in iter_bits(frontier):
                nb |= full & ~qadj[v] & ~(1 << v)
            frontier = nb & rest & ~comp
            comp |= frontier
        comps.append(comp)
        rest &= ~comp
    # subset sum over complement component sizes
    reach = {0: 0}
    for c in comps:
        size = c.bit_count()
        for total, chosen in list(reach.items()):
            if total + size <= a and total + size not in reach:
                reach[total + size] = chosen | c
    return reach.get(a)


def _biclique_reduce(g: Graph, region: int, a: int, b: int) -> list[int] | None:
    """K_{a,b} model inside ``region`` by deleting or contracting down to a+b vertices."""
    verts = list(iter_bits(region))
    index = {v: i for i, v in enumerate(verts)}
    qadj = tuple(sum(1 << index[u] for u in iter_bits(g.adj[v] & region)) for v in verts)
    masks = tuple(1 << v for v in verts)
    need = a * b
    dead: set[tuple[int, ...]] = set()

    def rec(qadj, masks):
        k = len(qadj)
        if sum(x.bit_count() for x in qadj) // 2 < need or qadj in dead:
            return None
        if k == a + b:
            side = _spanning_biclique(qadj, a)
            if side is None:
                dead.add(qadj)
                return None
            A = [masks[i] for i in iter_bits(side)]
            B = [masks[i] for i in range(k) if not side >> i & 1]
            return A + B
        for i in range(k):
            found = rec(*_drop(qadj, masks, i))
            if found is not None:
                return found
        for i in range(k):
            for j in iter_bits(qadj[i] >> (i + 1)):
                found = rec(*_contract(qadj, masks, i, i + 1 + j))
                if found is not None:
                    return found
        dead.add(qadj)
        return None

    return rec(qadj, masks)


def _minimize(g: Graph, h: Graph, masks: list[int]) -> list[int]:
    adj = g.adj
    masks = list(masks)
    changed = True
    while changed:
        changed = False
        for i in range(h.n):
            for v in sorted(iter_bits(masks[i]), reverse=True):
                trial = masks[i] & ~(1 << v)
                if not trial or not is_connected_mask(adj, trial):
                    continue
                nb = _neigh(adj, trial)
                if all(nb & masks[j] for j in iter_bits(h.adj[i])):
                    masks[i] = trial
                    changed = True
    return masks


def _fast(g: Graph, pattern: MinorPattern) -> list[int] | None:
    h = pattern_graph(pattern)
    if h.n == 0:
        return []
    if h.n > g.n or h.num_edges > g.num_edges:
        return None
    if isinstance(pattern, Star) or (isinstance(pattern, Biclique) and min(pattern.a, pattern.b) == 1):
        t = pattern.t if isinstance(pattern, Star) else max(pattern.a, pattern.b)
        model = _star_model(g, t)
        if model is None:
            return None
        if isinstance(pattern, Biclique) and pattern.a != 1:
            # the center is the single vertex on the b-side
            model = model[1:] + model[:1]
        return model
    if is_connected(h):
        for comp in component_masks(g):
            size = comp.bit_count()
            if size < h.n:
                continue
            if isinstance(pattern, Biclique) and size - h.n <= REDUCTION_MAX_EXCESS:
                found = _biclique_reduce(g, comp, pattern.a, pattern.b)
            else:
                found = _search(g, h, comp)
            if found is not None:
                return found
        return None
    return _search(g, h, g.vertex_mask())


# ---- brute force ----------------------------------------------------------


def _block_partitions(verts: list[int], k: int):
    """Partitions of ``verts`` into exactly ``k`` non-empty blocks (as bitmasks)."""
    n = len(verts)
    blocks = [0] * k

    def rec(i: int, used: int):
        if n - i < k - used:
            return
        if i == n:
            yield list(blocks)
            return
        bit = 1 << verts[i]
        for b in range(min(used + 1, k)):
            blocks[b] |= bit
            yield from rec(i + 1, max(used, b + 1))
            blocks[b] &= ~bit

    yield from rec(0, 0)


def _bruteforce(g: Graph, h: Graph) -> list[int] | None:
    n, k = g.n, h.n
    if k == 0:
        return []
    if k > n:
        return None
    hedges = h.edges()
    for subset in range(1, 1 << n):
        if subset.bit_count() < k:
            continue
        verts = [v for v in range(n) if subset >> v & 1]
        for blocks in _block_partitions(verts, k):
            if not all(is_connected_mask(g.adj, b) for b in blocks):
                continue
            touch = [[bool(g.neighborhood(x) & y) for y in blocks] for x in blocks]
            for perm in permutations(range(k)):
                if all(touch[perm[i]][perm[j]] for i, j in hedges):
                    return [blocks[perm[i]] for i in range(k)]
    return None


# ---- public API -----------------------------------------------------------


def find_minor(g: Graph, pattern: MinorPattern, mode: str = "fast") -> BranchModel | None:
    """A branch model of ``pattern`` in ``g``, or ``None`` if there is no such minor."""
    h = pattern_graph(pattern)
    if mode == "fast":
        if g.n > FAST_TIER_MAX:
            raise CapacityError(f"fast minor search needs n <= {FAST_TIER_MAX}, got {g.n}")
        masks = _fast(g, pattern)
    elif mode == "bruteforce":
        if g.n > BRUTEFORCE_MAX:
            raise CapacityError(f"brute-force minor search needs n <= {BRUTEFORCE_MAX}, got {g.n}")
        masks = _bruteforce(g, h)
    else:
        raise DomainError(f"unknown mode {mode!r}; use 'fast' or 'bruteforce'")
    if masks is None:
        return None
    return BranchModel.from_masks(_minimize(g, h, masks))


def has_minor(g: Graph, pattern: MinorPattern, mode: str = "fast") -> bool:
    return find_minor(g, pattern, mode) is not None


def gamma(s: int, t: int) -> int:
    return min(s, (t + 1) // 2)


def complement_criterion(g: Graph, gam: int) -> bool:
    """Every component of the complement of ``g`` has more than ``gam`` vertices."""
    return all(m.bit_count() > gam for m in component_masks(complement(g)))


def has_st_property(g: Graph, s: int, t: int, fast: bool = True, mode: str = "fast") -> bool:
    """K_{a,t+1-a}-minor-freeness for every a in 1..min(s, floor((t+1)/2)).

    Checked component by component; a component of order t+1 can only hold
    such a minor as a spanning subgraph, which the complement criterion
    decides directly when ``fast`` is set.
    """
    if not 2 <= s <= t:
        raise DomainError(f"(s,t)-property needs 2 <= s <= t, got s={s}, t={t}")
    gam = gamma(s, t)
    for comp in component_masks(g):
        size = comp.bit_count()
        if size < t + 1:
            continue
        c = g.induced(list(iter_bits(comp)))
        if fast and size == t + 1:
            if not complement_criterion(c, gam):
                return False
            continue
        for a in range(1, gam + 1):
            if has_minor(c, Biclique(a, t + 1 - a), mode):
                return False
    return True


def dominated_join_check(r: Graph, s: int, t: int) -> bool:
    """Whether K_{s-1} joined with ``r`` is K_{s,t}-minor-free.

    Exact for every ``r``: clique vertices can fill at most s-1 branch sets,
    so any K_{s,t} model leaves a K_{a,t+1-a} model inside ``r``, and
    conversely such a model in ``r`` extends by the clique.
    """
    if s < 2:
        raise DomainError(f"dominated join needs s >= 2, got {s}")
    return has_st_property(r, s, t)
