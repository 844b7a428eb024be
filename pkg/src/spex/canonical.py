"""Canonical labeling by individualization-refinement.

The search tree is the usual one: refine an ordered partition to an
equitable one, individualize each vertex of the first non-singleton cell,
recurse. Leaves are discrete partitions, each giving a relabeled adjacency
code; the canonical code is the maximum over all leaves. Subtrees rooted at
vertices that lie in one orbit of the automorphisms found so far (restricted
to the pointwise stabilizer of the current path) are skipped. Twin
transpositions are known automorphisms up front, which keeps the search
tiny on empty, complete and complete-multipartite pieces.
"""

from __future__ import annotations

from .errors import CapacityError
from .graphs import FAST_TIER_MAX, Graph


def _refine(adj, cells, splitters):
    """Refine ``cells`` in place to the coarsest equitable refinement.

    ``splitters`` holds cells (by identity) whose vertex sets still have to be
    used for splitting. All decisions depend only on cell positions and
    counts, so the result commutes with relabeling.
    """
    pending = {id(c) for c in splitters}
    queue = list(splitters)
    qi = 0
    while qi < len(queue):
        w = queue[qi]
        qi += 1
        if id(w) not in pending:
            continue
        pending.discard(id(w))
        wmask = 0
        for v in w:
            wmask |= 1 << v
        i = 0
        while i < len(cells):
            c = cells[i]
            if len(c) == 1:
                i += 1
                continue
            first = (adj[c[0]] & wmask).bit_count()
            split = False
            for v in c:
                if (adj[v] & wmask).bit_count() != first:
                    split = True
                    break
            if not split:
                i += 1
                continue
            groups: dict[int, list[int]] = {}
            for v in c:
                groups.setdefault((adj[v] & wmask).bit_count(), []).append(v)
            parts = [groups[k] for k in sorted(groups)]
            cells[i : i + 1] = parts
            if id(c) in pending:
                pending.discard(id(c))
                add = parts
            else:
                big = max(range(len(parts)), key=lambda j: (len(parts[j]), -j))
                add = [p for j, p in enumerate(parts) if j != big]
            for p in add:
                pending.add(id(p))
                queue.append(p)
            i += len(parts)
    return cells


def _leaf_code(adj, lab):
    n = len(lab)
    pos = [0] * n
    for i, v in enumerate(lab):
        pos[v] = i
    code = 0
    for j in range(1, n):
        row = adj[lab[j]]
        col = 0
        while row:
            low = row & -row
            row ^= low
            p = pos[low.bit_length() - 1]
            if p < j:
                col |= 1 << p
        code = (code << j) | col
    return code


class _Search:
    __slots__ = ("adj", "n", "best", "best_lab", "gens")

    def __init__(self, adj, n):
        self.adj = adj
        self.n = n
        self.best = -1
        self.best_lab = None
        self.gens = _twin_generators(adj, n)

    def leaf(self, cells):
        lab = [c[0] for c in cells]
        code = _leaf_code(self.adj, lab)
        if code > self.best:
            self.best = code
            self.best_lab = lab
        elif code == self.best:
            gamma = [0] * self.n
            for a, b in zip(self.best_lab, lab):
                gamma[a] = b
            self.gens.append(gamma)

    def orbit_roots(self, path):
        parent = list(range(self.n))

        def find(x):
            while parent[x] != x:
                parent[x] = parent[parent[x]]
                x = parent[x]
            return x

        for g in self.gens:
            if all(g[p] == p for p in path):
                for x, y in enumerate(g):
                    rx, ry = find(x), find(y)
                    if rx != ry:
                        parent[rx] = ry
        return find

    def run(self, cells, path):
        if len(cells) == self.n:
            self.leaf(cells)
            return
        ti = next(i for i, c in enumerate(cells) if len(c) > 1)
        target = cells[ti]
        done_roots: set[int] = set()
        ngens = -1
        find = None
        for v in list(target):
            if done_roots:
                if len(self.gens) != ngens:
                    ngens = len(self.gens)
                    find = self.orbit_roots(path)
                    done_roots = {find(x) for x in done_roots}
                if find(v) in done_roots:
                    continue
            single = [v]
            rest = [x for x in target if x != v]
            child = cells[:ti] + [single, rest] + cells[ti + 1 :]
            _refine(self.adj, child, [single])
            self.run(child, path + [v])
            done_roots.add(find(v) if find is not None else v)


def _twin_generators(adj, n):
    gens = []
    for closed in (False, True):
        classes: dict[int, list[int]] = {}
        for v in range(n):
            key = adj[v] | (1 << v) if closed else adj[v]
            classes.setdefault(key, []).append(v)
        for members in classes.values():
            for a, b in zip(members, members[1:]):
                g = list(range(n))
                g[a], g[b] = b, a
                gens.append(g)
    return gens


def canonical_labeling(g: Graph) -> tuple[int, list[int]]:
    """Return ``(code, lab)`` where ``lab[i]`` is the vertex placed at position ``i``."""
    n = g.n
    if n > FAST_TIER_MAX:
        raise CapacityError(f"canonical forms need n <= {FAST_TIER_MAX}, got {n}")
    if n == 0:
        return 0, []
    adj = g.adj
    groups: dict[int, list[int]] = {}
    for v in range(n):
        groups.setdefault(adj[v].bit_count(), []).append(v)
    cells = [groups[d] for d in sorted(groups)]
    _refine(adj, cells, list(cells))
    search = _Search(adj, n)
    search.run(cells, [])
    return search.best, search.best_lab


def canonical_code(g: Graph) -> bytes:
    """Bytes that are equal for two graphs iff the graphs are isomorphic."""
    code, _ = canonical_labeling(g)
    m = g.n * (g.n - 1) // 2
    return g.n.to_bytes(2, "big") + code.to_bytes((m + 7) // 8, "big")


def canonical_graph(g: Graph) -> Graph:
    """The representative of ``g``'s isomorphism class in canonical labeling."""
    _, lab = canonical_labeling(g)
    perm = [0] * g.n
    for i, v in enumerate(lab):
        perm[v] = i
    return g.relabel(perm)


def are_isomorphic(g1: Graph, g2: Graph) -> bool:
    if g1.n != g2.n or g1.num_edges != g2.num_edges:
        return False
    return canonical_code(g1) == canonical_code(g2)
