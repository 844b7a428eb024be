from __future__ import annotations

import json

import pytest

from spex.errors import DomainError
from spex.report import render
from spex.search import K1tMinorFree, SearchSpec, search_extremal


@pytest.fixture
def certdir(tmp_path):
    for n in (5, 6):
        cert = search_extremal(SearchSpec(n, K1tMinorFree(3)))
        (tmp_path / f"c{n}.json").write_text(cert.to_json())
    return tmp_path


def test_markdown(certdir):
    out = render(certdir, "markdown")
    lines = out.splitlines()
    assert lines[0].startswith("| file |")
    assert len(lines) == 4
    assert "k1t:t=3" in lines[2]


def test_csv(certdir):
    out = render(certdir, "csv")
    assert out.splitlines()[0].startswith("file,n,")
    assert out.count("\n") == 3


def test_unknown_schema_refused(certdir):
    (certdir / "z.json").write_text(json.dumps({"schema": 2}))
    with pytest.raises(DomainError, match="schema"):
        render(certdir)


def test_bad_format(certdir):
    with pytest.raises(DomainError):
        render(certdir, "html")
