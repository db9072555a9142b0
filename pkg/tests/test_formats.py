from __future__ import annotations

from itertools import combinations, product

import networkx as nx
import pytest
from hypothesis import given
from hypothesis import strategies as st

from conftest import graphs
from oracles import to_nx
from k2ham import catalog as N
from k2ham.errors import ParseError
from k2ham.formats import (decode_any, decode_edge_list, decode_embedding, decode_graph6, decode_sparse6,
                           encode_edge_list, encode_embedding, encode_graph6)
from k2ham.graph import Graph, girth
from k2ham.planar import dodecahedron_embedding, faces, j18_embedding, k4_embedding


def test_graph6_examples():
    assert decode_graph6("C~") == N.complete(4)
    assert encode_graph6(N.complete(4)) == b"C~"
    assert decode_graph6("@") == Graph.from_edges(1, [])
    assert decode_graph6("C?") == Graph.from_edges(4, [])
    assert decode_graph6(">>graph6<<C~\r\n") == N.complete(4)
    p = decode_graph6(encode_graph6(N.petersen()))
    assert p.n == 10 and p.is_regular(3) and girth(p) == 5


@pytest.mark.parametrize("line, why", [
    ("", "empty"), ("C~~", "data bytes"), ("B@", "padding"), ("C\x7f", "outside"),
    ("~??", "truncated"), ("~~??????", "eight-byte"), ("~??^", "non-minimal"),
])
def test_graph6_rejects(line, why):
    with pytest.raises(ParseError, match=why):
        decode_graph6(line)


def test_graph6_exhaustive_roundtrip_upto5():
    for n in range(1, 6):
        pairs = list(combinations(range(n), 2))
        for mask in product((0, 1), repeat=len(pairs)):
            g = Graph.from_edges(n, [e for e, b in zip(pairs, mask) if b])
            line = encode_graph6(g)
            assert decode_graph6(line) == g
            assert line == nx.to_graph6_bytes(to_nx(g), header=False).strip()


@given(graphs(min_n=1, max_n=60))
def test_graph6_random_roundtrip(g):
    assert decode_graph6(encode_graph6(g)) == g
    assert encode_graph6(g) == encode_graph6(Graph(g.n, tuple(g.adj)))


@given(graphs(min_n=1, max_n=70))
def test_sparse6_matches_networkx(g):
    line = nx.to_sparse6_bytes(to_nx(g), header=False).strip()
    assert decode_sparse6(line) == g
    assert decode_any(line) == g


@pytest.mark.parametrize("name", sorted(N.CATALOG))
def test_named_roundtrip(name):
    args = {"gp": (7, 2), "flower": (5,), "cube": (4,), "complete": (5,), "cycle": (6,), "path": (4,),
            "star": (3,), "prism": (4,)}.get(name, ())
    g = N.named(name, *args)
    assert decode_graph6(encode_graph6(g)) == g
    assert decode_sparse6(nx.to_sparse6_bytes(to_nx(g), header=False)) == g


def test_sparse6_petersen():
    p = N.petersen()
    assert decode_sparse6(nx.to_sparse6_bytes(to_nx(p), header=True)) == p
    with pytest.raises(ParseError):
        decode_sparse6("I?????")


def test_edge_list():
    assert decode_edge_list("3 3\n0 1\n1 2\n2 0\n") == N.cycle(3)
    assert decode_edge_list("# c3\r\n3 3\r\n0 1\r\n1 2 # edge\r\n2 0\r\n") == N.cycle(3)
    for bad in ("3 2\n0 1\n0 1\n", "3 1\n1 1\n", "3 1\n0 3\n", "3 2\n0 1\n", "x y\n"):
        with pytest.raises(ParseError):
            decode_edge_list(bad)
    g = N.petersen()
    assert decode_edge_list(encode_edge_list(g)) == g


def test_embedding_text():
    g, emb = decode_embedding("0: 1 2 3\n1: 0 3 2\n2: 0 1 3\n3: 0 2 1\n")
    assert g == N.complete(4)
    with pytest.raises(ParseError, match="inconsistent"):
        decode_embedding("0: 1 2\n1: 2\n2: 0 1\n")
    for emb in (k4_embedding(), dodecahedron_embedding(), j18_embedding()):
        assert decode_embedding(encode_embedding(emb))[1] == emb


@pytest.mark.parametrize("load", [k4_embedding, dodecahedron_embedding, j18_embedding])
@given(data=st.data())
def test_embedding_rotations_and_corruption(load, data):
    emb = load()
    rows = [list(r) for r in emb.rotation]
    # any cyclic shift of a rotation is the same embedding
    v = data.draw(st.integers(0, len(rows) - 1))
    k = data.draw(st.integers(0, len(rows[v]) - 1))
    rows[v] = rows[v][k:] + rows[v][:k]
    text = "".join(f"{i}: {' '.join(map(str, r))}\n" for i, r in enumerate(rows))
    _, e2 = decode_embedding(text)
    assert sorted(faces(e2).sizes) == sorted(faces(emb).sizes)
    # replacing one entry by another vertex breaks mutual consistency
    i = data.draw(st.integers(0, len(rows[v]) - 1))
    choices = [w for w in range(len(rows)) if w != v and w not in rows[v]]
    if choices:
        rows[v][i] = data.draw(st.sampled_from(choices))
        text = "".join(f"{i}: {' '.join(map(str, r))}\n" for i, r in enumerate(rows))
        with pytest.raises(ParseError):
            decode_embedding(text)
