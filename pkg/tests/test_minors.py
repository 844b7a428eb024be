from __future__ import annotations

import random

import pytest
from hypothesis import given, settings

from spex.errors import CapacityError, DomainError, ValidationError
from spex.families import FamilySpec, build_family, petersen
from spex.graphs import Graph, complement, disjoint_union, join
from spex.minors import (
    Biclique,
    BranchModel,
    ExplicitGraph,
    Star,
    complement_criterion,
    dominated_join_check,
    find_minor,
    gamma,
    has_minor,
    has_st_property,
    parse_pattern,
    pattern_graph,
)

from conftest import graphs, random_graph


def test_k5_has_k23_with_singletons():
    m = find_minor(Graph.complete(5), Biclique(2, 3))
    assert m is not None
    assert all(len(s) == 1 for s in m.sets)


def test_spec_examples():
    assert not has_minor(Graph.complete(4), Star(4))
    assert not has_minor(Graph.cycle(9), Star(3))
    assert has_minor(petersen(), Star(6))
    assert not has_minor(petersen(), Star(7))


def test_star_minor_via_contraction():
    # path on 5 vertices: contract the middle three into a centre of degree 2 only
    assert not has_minor(Graph.path(5), Star(3))
    # spider with long legs has Star(3)
    spider = Graph.from_edges(7, [(0, 1), (1, 2), (0, 3), (3, 4), (0, 5), (5, 6)])
    assert has_minor(spider, Star(3))


def test_k33_in_petersen():
    assert has_minor(petersen(), Biclique(3, 3))


def test_explicit_pattern():
    assert has_minor(Graph.complete(5), ExplicitGraph(Graph.complete(4)))
    assert not has_minor(Graph.cycle(8), ExplicitGraph(Graph.complete(4)))


@settings(max_examples=150, deadline=None)
@given(graphs(max_n=7))
def test_fast_matches_bruteforce(g):
    for p in (Star(3), Biclique(2, 3), Biclique(1, 4), Biclique(2, 4), Biclique(3, 3)):
        fast = find_minor(g, p)
        brute = find_minor(g, p, mode="bruteforce")
        assert (fast is None) == (brute is None)
        if fast is not None:
            fast.validate(g, pattern_graph(p))


def test_witness_validation_catches_bad_models():
    g = Graph.path(3)
    h = Graph.complete(2)
    with pytest.raises(ValidationError):
        BranchModel(((0,), (2,))).validate(g, h)  # not adjacent
    with pytest.raises(ValidationError):
        BranchModel(((0, 2), (1,))).validate(g, h)  # disconnected set
    with pytest.raises(ValidationError):
        BranchModel(((0, 1), (1,))).validate(g, h)  # overlap
    BranchModel(((0,), (1, 2))).validate(g, h)


def test_branch_model_json_roundtrip():
    m = find_minor(petersen(), Biclique(3, 3))
    assert BranchModel.from_json(m.to_json()) == m


def test_caps():
    with pytest.raises(CapacityError):
        find_minor(Graph.empty(9), Star(2), mode="bruteforce")
    with pytest.raises(CapacityError):
        find_minor(Graph.empty(65), Star(2))
    with pytest.raises(DomainError):
        find_minor(Graph.empty(3), Star(2), mode="quantum")


def test_parse_pattern():
    assert parse_pattern("star:3") == Star(3)
    assert parse_pattern("biclique:2,3") == Biclique(2, 3)
    assert parse_pattern("g6:Bw") == ExplicitGraph(Graph.complete(3))
    assert parse_pattern("complete:n=4") == ExplicitGraph(Graph.complete(4))
    with pytest.raises(DomainError):
        parse_pattern("biclique:2")


def test_st_property_examples():
    assert has_st_property(disjoint_union([Graph.complete(5), Graph.complete(2)]), 2, 5)
    hbar = build_family(FamilySpec.parse("star-forest-complement:s=2,t=5"))
    assert has_st_property(hbar, 2, 5)
    assert not has_st_property(Graph.complete(6), 2, 5)


def test_complement_criterion_matches_search_at_order_t_plus_one():
    rng = random.Random(11)
    for _ in range(200):
        s, t = rng.choice([(2, 4), (2, 5), (3, 5), (3, 6)])
        g = random_graph(rng, t + 1, rng.uniform(0.5, 1.0))
        assert has_st_property(g, s, t, fast=True) == has_st_property(g, s, t, fast=False)
        assert complement_criterion(g, gamma(s, t)) == has_st_property(g, s, t, fast=False)


def test_dominated_join_c4():
    c4 = Graph.cycle(4)
    assert dominated_join_check(c4, 2, 3) is False
    assert has_minor(join(Graph.complete(1), c4), Biclique(2, 3), mode="bruteforce")


def test_dominated_join_tait_part():
    r = disjoint_union([Graph.complete(3)] * 4)
    assert dominated_join_check(r, 2, 3)


@settings(max_examples=40, deadline=None)
@given(graphs(max_n=6))
def test_dominated_join_agrees_with_direct_minor_search(r):
    for s, t in ((2, 3), (2, 4), (3, 3)):
        if r.n + s - 1 > 8:
            continue
        direct = not has_minor(join(Graph.complete(s - 1), r), Biclique(s, t), mode="bruteforce")
        assert dominated_join_check(r, s, t) == direct


def test_petersen_complement_property():
    pc = complement(petersen())
    for s in range(4, 9):
        assert has_st_property(pc, s, 8)
