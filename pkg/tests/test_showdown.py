from __future__ import annotations

import pytest

from spex.errors import DomainError
from spex.showdown import candidate_showdown, format_table


def test_designated_first_19_2_4():
    sd = candidate_showdown(19, 2, 4)
    assert sd.designated == "tait"
    assert sd.designated_first
    assert sd.gap >= 1e-6


@pytest.mark.parametrize(
    "n,s,t,case",
    [
        # past the crossover orders the designated construction wins
        (174, 5, 8, "petersen"),
        (23, 2, 5, "subdivided"),
        (59, 2, 8, "star-forests"),
    ],
)
def test_designated_first_past_crossover(n, s, t, case):
    sd = candidate_showdown(n, s, t)
    assert sd.designated == case
    assert sd.designated_first
    assert sd.gap >= 1e-6


def test_just_before_crossover_tait_leads():
    sd = candidate_showdown(166, 5, 8)
    assert sd.designated == "petersen"
    assert sd.ranked[0].case == "tait"


def test_table_and_dict():
    sd = candidate_showdown(22, 5, 8)
    text = format_table(sd)
    assert "designated=petersen" in text
    assert sd.to_dict()["designated_first"] is False
    assert format_table(candidate_showdown(22, 5, 8)) == text


def test_bad_parameters():
    with pytest.raises(DomainError):
        candidate_showdown(10, 1, 4)
