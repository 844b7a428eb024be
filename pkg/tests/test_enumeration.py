from __future__ import annotations

import networkx as nx
import pytest

from spex.canonical import canonical_code
from spex.enumeration import count_graphs, enumerate_graphs, worker_count
from spex.errors import CapacityError
from spex.graphs import is_connected

from oracles import burnside_count, connected_counts, labeled_classes


@pytest.mark.parametrize("n", range(1, 6))
def test_labeled_oracle(n):
    assert (count_graphs(n), count_graphs(n, connected_only=True)) == labeled_classes(n)


def test_burnside_and_euler_transform():
    totals = [0] + [burnside_count(n) for n in range(1, 8)]
    conn = connected_counts(totals)
    for n in range(1, 8):
        assert count_graphs(n) == totals[n]
        assert count_graphs(n, connected_only=True) == conn[n]


def test_networkx_atlas_agrees():
    by_n: dict[int, int] = {}
    for h in nx.graph_atlas_g():
        by_n[h.number_of_nodes()] = by_n.get(h.number_of_nodes(), 0) + 1
    for n in range(1, 8):
        assert count_graphs(n) == by_n[n]


def test_representatives_distinct_and_sorted():
    gs = list(enumerate_graphs(6))
    codes = [canonical_code(g) for g in gs]
    assert len(set(codes)) == len(codes)
    assert codes == sorted(codes)


def test_hereditary_filter_is_complete():
    # max degree <= 2 is closed under vertex deletion
    def filt(g):
        return g.max_degree <= 2

    filtered = {canonical_code(g) for g in enumerate_graphs(7, hereditary=filt)}
    brute = {canonical_code(g) for g in enumerate_graphs(7) if filt(g)}
    assert filtered == brute


def test_connected_only():
    assert all(is_connected(g) for g in enumerate_graphs(6, connected_only=True))


def test_cap():
    with pytest.raises(CapacityError):
        next(enumerate_graphs(11))


def test_worker_count_env(monkeypatch):
    monkeypatch.setenv("SPEX_THREADS", "3")
    assert worker_count() == 3


def test_result_independent_of_workers(monkeypatch):
    from spex.enumeration import clear_cache

    clear_cache()
    monkeypatch.setenv("SPEX_THREADS", "1")
    one = [canonical_code(g) for g in enumerate_graphs(7)]
    clear_cache()
    monkeypatch.setenv("SPEX_THREADS", "2")
    two = [canonical_code(g) for g in enumerate_graphs(7)]
    assert one == two
