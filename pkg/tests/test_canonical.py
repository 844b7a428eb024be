from __future__ import annotations

import itertools
import random

import networkx as nx
from hypothesis import given, settings
from hypothesis import strategies as st

from spex.canonical import are_isomorphic, canonical_code, canonical_graph
from spex.families import petersen
from spex.graphs import Graph

from conftest import graphs, random_graph, to_nx


@given(graphs(max_n=8), st.randoms(use_true_random=False))
def test_code_invariant_under_relabeling(g, r):
    perm = list(range(g.n))
    r.shuffle(perm)
    assert canonical_code(g.relabel(perm)) == canonical_code(g)


@given(graphs(max_n=7))
def test_canonical_graph_is_fixed_point(g):
    c = canonical_graph(g)
    assert canonical_graph(c) == c
    assert are_isomorphic(c, g)


def _brute_iso(a: Graph, b: Graph) -> bool:
    if a.n != b.n or a.num_edges != b.num_edges:
        return False
    ea = set(a.edges())
    for perm in itertools.permutations(range(a.n)):
        if {tuple(sorted((perm[u], perm[v]))) for u, v in ea} == set(b.edges()):
            return True
    return False


def test_matches_permutation_oracle():
    rng = random.Random(7)
    for _ in range(300):
        n = rng.randint(1, 6)
        a = random_graph(rng, n, rng.random())
        b = random_graph(rng, n, rng.random()) if rng.random() < 0.5 else a.relabel(rng.sample(range(n), n))
        assert are_isomorphic(a, b) == _brute_iso(a, b)


@settings(max_examples=60)
@given(graphs(min_n=5, max_n=9), graphs(min_n=5, max_n=9))
def test_matches_networkx(a, b):
    assert are_isomorphic(a, b) == nx.is_isomorphic(to_nx(a), to_nx(b))


def test_regular_graphs_distinguished():
    # same degree sequence, non-isomorphic
    c6 = Graph.cycle(6)
    two_triangles = Graph.from_edges(6, [(0, 1), (1, 2), (0, 2), (3, 4), (4, 5), (3, 5)])
    assert not are_isomorphic(c6, two_triangles)


def test_petersen_relabeled():
    p = petersen()
    rng = random.Random(3)
    for _ in range(5):
        assert canonical_code(p.relabel(rng.sample(range(10), 10))) == canonical_code(p)
