import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from conftest import random_graph
from ngspec.families import Complete, construct
from ngspec.graph import Graph
from ngspec.graph6 import Graph6Error, parse_graph6, read_graph6_file, write_graph6


def test_k4():
    g = parse_graph6("C~")
    assert g.n == 4 and g.num_edges == 6
    assert g == construct(Complete(4))
    assert write_graph6(g) == "C~"


def test_empty_order_zero():
    assert parse_graph6("?") == Graph.empty(0)
    assert write_graph6(Graph.empty(0)) == "?"


def test_known_encodings():
    # path 0-1-2 and the 5-cycle, hand packed
    assert write_graph6(Graph.from_edges(3, [(0, 1), (1, 2)])) == "Bg"
    assert write_graph6(Graph.from_edges(5, [(0, 1), (1, 2), (2, 3), (3, 4), (0, 4)])) == "Dhc"


def test_header_and_newline_are_accepted():
    assert parse_graph6(">>graph6<<C~\n") == parse_graph6("C~")


@pytest.mark.parametrize("text,offset", [
    ("D??x", 3),      # trailing bytes
    ("D?", 2),        # truncated payload
    ("C\x10", 1),     # byte out of range
    ("Bh", 1),        # nonzero padding bits
    ("", 0),
])
def test_malformed(text, offset):
    with pytest.raises(Graph6Error) as info:
        parse_graph6(text)
    assert info.value.offset == offset


def test_long_header_roundtrip():
    g = Graph.from_edges(70, [(0, 69), (3, 4), (10, 60)])
    s = write_graph6(g)
    assert s[0] == "~"
    assert parse_graph6(s) == g


def test_roundtrip_random(rng):
    for _ in range(1000):
        g = random_graph(rng, int(rng.integers(0, 13)), rng.random())
        assert parse_graph6(write_graph6(g)) == g


@settings(max_examples=200)
@given(st.integers(0, 14).flatmap(
    lambda n: st.tuples(st.just(n), st.integers(0, (1 << (n * (n - 1) // 2)) - 1))))
def test_roundtrip_property(nm):
    n, mask = nm
    g = Graph.from_edge_mask(n, mask)
    s = write_graph6(g)
    assert all(63 <= ord(c) <= 126 for c in s)
    assert parse_graph6(s) == g


def test_read_file(tmp_path):
    p = tmp_path / "g.g6"
    p.write_text("C~\n\nBg\n")
    assert [write_graph6(g) for g in read_graph6_file(p)] == ["C~", "Bg"]
