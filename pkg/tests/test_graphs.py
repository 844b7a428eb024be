from __future__ import annotations

import pytest
from hypothesis import given

from spex.errors import CapacityError, DomainError
from spex.graphs import (
    Graph,
    complement,
    connected_components,
    degree_sequence,
    disjoint_union,
    is_connected,
    join,
    rotate_edge,
    subdivide_min_edge,
)

from conftest import graphs


def test_basic_constructors():
    assert Graph.complete(5).num_edges == 10
    assert Graph.cycle(6).degrees() == [2] * 6
    assert degree_sequence(Graph.star(4)) == (4, 1, 1, 1, 1)
    assert Graph.complete_bipartite(2, 3).num_edges == 6
    assert Graph.path(1).num_edges == 0


def test_edges_are_sorted_pairs():
    g = Graph.from_edges(4, [(3, 1), (0, 2)])
    assert g.edges() == [(0, 2), (1, 3)]


def test_self_loop_rejected():
    with pytest.raises(DomainError):
        Graph.from_edges(3, [(1, 1)])


def test_out_of_range_vertex_rejected():
    with pytest.raises(DomainError):
        Graph.from_edges(3, [(0, 3)])


def test_order_cap():
    with pytest.raises(CapacityError):
        Graph.empty(10_001)


def test_tiers():
    assert Graph.complete(64).tier == "fast"
    assert Graph.empty(65).tier == "general"


@given(graphs())
def test_complement_involution(g):
    assert complement(complement(g)) == g
    assert g.num_edges + complement(g).num_edges == g.n * (g.n - 1) // 2


@given(graphs(max_n=6), graphs(max_n=6))
def test_join_edge_count(a, b):
    j = join(a, b)
    assert j.n == a.n + b.n
    assert j.num_edges == a.num_edges + b.num_edges + a.n * b.n


@given(graphs(max_n=6), graphs(max_n=6))
def test_union_components(a, b):
    u = disjoint_union([a, b])
    assert len(connected_components(u)) == len(connected_components(a)) + len(connected_components(b))


def test_subdivide_triangle_gives_cycle():
    g = subdivide_min_edge(Graph.complete(3), 4)
    assert degree_sequence(g) == (2,) * 7
    assert is_connected(g)


def test_subdivide_k4_twice():
    g = subdivide_min_edge(Graph.complete(4), 2)
    assert degree_sequence(g) == (3, 3, 3, 3, 2, 2)
    assert g.num_edges == 8


def test_rotation_moves_one_edge():
    g = Graph.path(4)  # 0-1-2-3
    h = rotate_edge(g, 0, 2, 3)
    assert h.has_edge(0, 3) and not h.has_edge(2, 3)
    assert h.num_edges == g.num_edges


def test_rotation_requires_edge():
    with pytest.raises(DomainError):
        rotate_edge(Graph.path(4), 0, 1, 3)


def test_induced_and_delete():
    g = Graph.cycle(5)
    assert g.induced([0, 1, 2]).num_edges == 2
    assert g.delete_vertex(0).n == 4
    assert g.delete_vertex(0).num_edges == 3
