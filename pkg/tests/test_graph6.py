from __future__ import annotations

import pytest
from hypothesis import given

from spex.errors import ParseError
from spex.graph6 import decode_g6, encode_g6
from spex.graphs import Graph

from conftest import graphs


def test_known_codes():
    assert encode_g6(Graph.complete(3)) == "Bw"
    assert encode_g6(Graph.complete(1)) == "@"
    assert encode_g6(Graph.empty(0)) == "?"
    assert decode_g6("Bw") == Graph.complete(3)


@given(graphs(max_n=12))
def test_roundtrip(g):
    assert decode_g6(encode_g6(g)) == g


def test_long_order_prefix():
    g = Graph.path(70)
    code = encode_g6(g)
    assert code.startswith("~")
    assert decode_g6(code) == g


def test_header_accepted():
    assert decode_g6(">>graph6<<Bw") == Graph.complete(3)


def test_bad_character_offset():
    with pytest.raises(ParseError) as exc:
        decode_g6("B!")
    assert exc.value.offset == 1


def test_truncated():
    with pytest.raises(ParseError):
        decode_g6("D")


def test_nonzero_padding_rejected():
    # K_2 is "A_"; the low 5 bits are padding and must be clear
    assert decode_g6("A_") == Graph.complete(2)
    with pytest.raises(ParseError):
        decode_g6("A`")
