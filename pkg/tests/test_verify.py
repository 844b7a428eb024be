from __future__ import annotations

import pytest

from spex.errors import DomainError
from spex.graphs import Graph
from spex.verify import neighbour_shift, verify_theorem


@pytest.mark.parametrize(
    "tag,params",
    [
        ("thm1.4", {"t": 3, "n_max": 8}),
        ("thm1.5", {"t": 4, "n_max": 7}),
        ("lemma2.2", {"t": 4, "n_max": 8}),
        ("lemma3.0", {"s": 2, "t": 5}),
        ("lemma3.1", {"s": 2, "t": 5}),
        ("thm3.1", {"s": 2, "t": 5}),
        ("lemma3.3", {"s": 2, "t": 5}),
        ("thm1.1", {"n": 13, "s": 2, "t": 3}),
        ("thm1.3", {"n": 19, "s": 2, "t": 4}),
        ("lemma2.6", {"trials": 300}),
        ("lemma2.7", {"trials": 300}),
        ("lemma3.2", {"trials": 100}),
        ("le000", {"trials": 30}),
        ("enclosure", {"trials": 50}),
    ],
)
def test_passing_checks(tag, params):
    rep = verify_theorem(tag, params)
    assert rep.passed, rep.render()
    assert rep.render().startswith(tag)


def test_asymptotic_checks_state_limitation():
    rep = verify_theorem("thm1.1", {"n": 13, "s": 2, "t": 3})
    assert any("asymptotic" in lim for lim in rep.limitations)


def test_failure_reports_counterexamples():
    # cycles of length >= 5 reach rho = 2 without a K_3 or C_4 component
    rep = verify_theorem("thm1.5", {"t": 3, "n_max": 5})
    assert not rep.passed
    assert rep.counterexamples


def test_even_t_limitation_recorded():
    rep = verify_theorem("thm1.5", {"t": 4, "n_max": 5})
    assert any("even" in lim for lim in rep.limitations)


def test_showdown_failure_is_reported():
    rep = verify_theorem("thm1.3", {"n": 22, "s": 5, "t": 8})
    assert not rep.passed


def test_thm31_beta_one():
    rep = verify_theorem("thm3.1", {"s": 3, "t": 5})
    assert rep.passed
    assert "disconnected" in rep.render()


@pytest.mark.parametrize(
    "tag,params",
    [
        ("thm9.9", {}),
        ("thm1.4", {}),
        ("thm1.4", {"t": 2}),
        ("lemma3.0", {"s": 1, "t": 4}),
        ("lemma3.3", {"s": 2, "t": 9}),
        ("lemma3.3", {"s": 2, "t": 8}),
        ("lemma2.2", {"t": 4, "n_max": 11}),
    ],
)
def test_usage_errors(tag, params):
    with pytest.raises(DomainError):
        verify_theorem(tag, params)


def test_neighbour_shift():
    g = Graph.path(4)  # 0-1-2-3
    h = neighbour_shift(g, 1, 2)
    assert h.has_edge(1, 3) and not h.has_edge(2, 3)
    assert neighbour_shift(Graph.complete(3), 0, 1) is None
