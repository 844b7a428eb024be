from __future__ import annotations

import json

import pytest

from spex.canonical import are_isomorphic
from spex.errors import CapacityError, DomainError
from spex.families import FamilySpec, build_family
from spex.graph6 import decode_g6
from spex.graphs import Graph, connected_components
from spex.search import (
    Certificate,
    K1tMinorFree,
    KstMinorFree,
    PatternFree,
    SearchSpec,
    StProperty,
    check_winner,
    feasible_graphs,
    parse_constraint,
    search_extremal,
)


def test_parse_constraint():
    assert parse_constraint("k1t:t=3") == K1tMinorFree(3)
    assert parse_constraint("kst:s=2,t=3") == KstMinorFree(2, 3)
    assert parse_constraint("st:s=2,t=5") == StProperty(2, 5)
    assert parse_constraint("pattern:star:3") == PatternFree("star:3")
    for bad in ("k1t", "k1t:t=x", "k9:t=1", "kst:s=2", "st:s=1,t=3"):
        with pytest.raises(DomainError):
            parse_constraint(bad)


@pytest.mark.parametrize("n", range(5, 9))
def test_cycles_win_for_t3(n):
    cert = search_extremal(SearchSpec(n, K1tMinorFree(3)))
    assert cert.unique
    assert are_isomorphic(decode_g6(cert.winners[0]), Graph.cycle(n))
    assert float(cert.gap_lower_bound) > 0


def test_disconnected_ties_are_reported():
    cert = search_extremal(SearchSpec(6, K1tMinorFree(4), connectivity="any"))
    assert not cert.unique
    assert len(cert.winners) == 2
    for code in cert.winners:
        assert any(are_isomorphic(c, Graph.complete(4)) for c in connected_components(decode_g6(code)))
    assert float(cert.rho["lo"]) <= 3.0 <= float(cert.rho["hi"])


def test_empty_feasible_set():
    cert = search_extremal(SearchSpec(4, K1tMinorFree(2)))
    assert cert.empty and cert.winners == [] and cert.classes_examined == 0
    assert Certificate.from_dict(json.loads(cert.to_json())).to_dict() == cert.to_dict()


def test_edge_bound_pruning_changes_nothing():
    for t, n in ((3, 7), (4, 7), (5, 8)):
        plain = search_extremal(SearchSpec(n, K1tMinorFree(t)))
        pruned = search_extremal(SearchSpec(n, K1tMinorFree(t), pruning="edge_bound"))
        assert plain.winners == pruned.winners
        assert len(feasible_graphs(SearchSpec(n, K1tMinorFree(t), pruning="edge_bound"))) <= plain.classes_examined


def test_heuristic_is_labeled():
    cert = search_extremal(SearchSpec(7, K1tMinorFree(4), pruning="majorization_heuristic"))
    assert cert.heuristic
    assert any("heuristic" in note for note in cert.notes)


def test_certificate_roundtrip_and_check():
    cert = search_extremal(SearchSpec(6, KstMinorFree(2, 3)))
    again = Certificate.from_dict(json.loads(cert.to_json()))
    assert again == cert
    assert check_winner(again)


def test_certificate_rejects_unknown_schema():
    d = search_extremal(SearchSpec(4, K1tMinorFree(3))).to_dict()
    d["schema"] = 99
    with pytest.raises(DomainError):
        Certificate.from_dict(d)


def test_config_hash_stable():
    a = SearchSpec(6, K1tMinorFree(3))
    b = SearchSpec.from_dict(a.to_dict())
    assert a.config_hash() == b.config_hash()
    assert a.config_hash() != SearchSpec(7, K1tMinorFree(3)).config_hash()


def test_search_cap():
    with pytest.raises(CapacityError):
        SearchSpec(11, K1tMinorFree(3))


def test_h1t_complement_at_t_plus_one():
    cert = search_extremal(SearchSpec(5, K1tMinorFree(4)))
    assert are_isomorphic(decode_g6(cert.winners[0]), build_family(FamilySpec.parse("h1t-complement:t=4")))
