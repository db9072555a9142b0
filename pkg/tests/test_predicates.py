from __future__ import annotations

import random
import warnings

import networkx as nx
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from conftest import corpus, graphs
from oracles import brute_cycle_count, matching_class, to_nx
from k2ham import catalog as N
from k2ham.certificates import validate_cycle
from k2ham.errors import PreconditionError
from k2ham.formats import decode_graph6
from k2ham.graph import Graph, girth, is_bipartite_balanced, is_k_connected
from k2ham.predicates import (SettingWarning, cubic_chromatic_class, cyclic_edge_cut, exceptional_vertices,
                              is_cyclically_4_edge_connected, is_hypohamiltonian, is_k1_hamiltonian,
                              is_k2_hamiltonian, is_k2_hypohamiltonian, is_snark, three_edge_coloring)


def _witnesses_valid(g, rep):
    for d, cyc in rep.witnesses.items():
        assert not validate_cycle(g, cyc, d), (d, cyc)


def test_k1_examples():
    rep = is_k1_hamiltonian(N.petersen())
    assert rep.verdict and len(rep.witnesses) == 10
    _witnesses_valid(N.petersen(), rep)
    q3 = is_k1_hamiltonian(N.cube(3))
    assert not q3 and q3.counterexample == (0,)
    assert is_k1_hamiltonian(N.coxeter())
    with pytest.raises(PreconditionError):
        is_k1_hamiltonian(N.complete(3))


def test_k2_examples():
    rep = is_k2_hamiltonian(N.petersen())
    assert rep and len(rep.witnesses) == 15
    _witnesses_valid(N.petersen(), rep)
    cox = is_k2_hamiltonian(N.coxeter())
    assert not cox and cox.counterexample is not None
    assert brute_free_check(N.coxeter(), cox.counterexample)
    assert not is_k2_hamiltonian(N.triangle_replaced_k4())
    assert is_k2_hamiltonian(N.cube(3))


def brute_free_check(g, deleted):
    from k2ham.engine import find_hamiltonian_cycle
    return find_hamiltonian_cycle(g, deleted=deleted) is None


@pytest.mark.parametrize("name, args", [("petersen", ()), ("gp", (11, 2)), ("wheel19", ())])
def test_hypo_and_k2hypo_examples(name, args):
    g = N.named(name, *args)
    h = is_hypohamiltonian(g)
    k = is_k2_hypohamiltonian(g)
    assert h and k
    assert h.checks == {"non_hamiltonian": True, "k1_hamiltonian": True}
    _witnesses_valid(g, h)
    _witnesses_valid(g, k)


def test_hamiltonian_graph_is_not_hypo():
    rep = is_hypohamiltonian(N.cube(3))
    assert not rep and rep.counterexample == () and () in rep.witnesses


def test_exceptional_vertices():
    assert exceptional_vertices(N.petersen()) == frozenset()
    assert exceptional_vertices(N.wheel19()) == frozenset()
    with pytest.warns(SettingWarning):
        assert exceptional_vertices(N.cube(3)) == frozenset(range(8))
    with pytest.warns(SettingWarning):
        exceptional_vertices(N.path(5))


def test_chromatic_class_examples():
    assert cubic_chromatic_class(N.petersen()) == 2
    assert cubic_chromatic_class(N.complete(4)) == 1
    assert cubic_chromatic_class(N.prism(3)) == 1
    col = three_edge_coloring(N.cube(3))
    for v in range(8):
        assert sorted(col[tuple(sorted((v, w)))] for w in N.cube(3).neighbors(v)) == [0, 1, 2]
    with pytest.raises(PreconditionError):
        cubic_chromatic_class(N.cycle(4))


def test_chromatic_class_matches_matching_oracle():
    rng = random.Random(7)
    seen = set()
    for n in (4, 6, 8, 10, 12):
        for _ in range(60):
            h = nx.random_regular_graph(3, n, seed=rng.randrange(10 ** 9))
            g = Graph.from_edges(n, h.edges())
            key = nx.weisfeiler_lehman_graph_hash(h)
            if key in seen:
                continue
            seen.add(key)
            assert cubic_chromatic_class(g) == matching_class(g)
    for g in (N.petersen(), N.flower(5), N.generalized_petersen(7, 2)):
        assert cubic_chromatic_class(g) == matching_class(g)


def test_all_small_cubic_in_corpus():
    cubic = [g for g in corpus(8) if g.is_regular(3)]
    assert len(cubic) == 1 + 2 + 6  # n = 4, 6, 8 (including disconnected 2K4 at n = 8)
    for g in cubic:
        assert cubic_chromatic_class(g) == matching_class(g)


def test_cyclic_connectivity_examples():
    assert is_cyclically_4_edge_connected(N.petersen())
    assert not is_cyclically_4_edge_connected(N.prism(3))
    assert cyclic_edge_cut(N.prism(3)) is not None
    assert is_cyclically_4_edge_connected(N.complete(4))
    with pytest.raises(PreconditionError):
        is_cyclically_4_edge_connected(Graph.from_edges(6, [(0, 1), (1, 2), (2, 0), (3, 4), (4, 5), (5, 3)]))


def test_snark_examples():
    assert is_snark(N.petersen())
    assert is_snark(N.flower(5))
    q3 = is_snark(N.cube(3))
    assert not q3 and q3.checks["girth>=5"] is False
    assert not is_snark(N.dodecahedron())  # class 1
    assert not is_snark(N.j18())


POPULATION = ["petersen", "coxeter", "wheel19", "j18", "triangle_replaced_k4", "dodecahedron"]


@pytest.mark.parametrize("name", POPULATION)
def test_k2hypo_implies_3connected_and_girth(name):
    g = N.named(name)
    if is_k2_hypohamiltonian(g):
        assert is_k_connected(g, 3)
        if g.is_regular(3):
            assert girth(g) >= 5


def test_k2hypo_corpus_survivors_are_3connected():
    hits = [g for g in corpus(8) if g.n >= 5 and is_k2_hypohamiltonian(g)]
    # only the edgeless graphs, where "every edge" is vacuous; Petersen is the first real one
    assert all(g.m == 0 for g in hits) and len(hits) == 4
    assert is_k2_hypohamiltonian(Graph.from_edges(5, []))


@given(graphs(min_n=5, max_n=8))
@settings(max_examples=60)
def test_hypo_iff_no_exceptional(g):
    if not is_k_connected(g, 2) or brute_cycle_count(g):
        return
    assert bool(is_hypohamiltonian(g)) == (exceptional_vertices(g) == frozenset())


def test_bipartite_k2_hamiltonian_is_balanced():
    for g in corpus(8):
        if g.n >= 5 and is_k_connected(g, 1) and is_bipartite_balanced(g)[0] and is_k2_hamiltonian(g):
            assert is_bipartite_balanced(g) == (True, True)
    for d in (3, 4):
        assert is_k2_hamiltonian(N.cube(d)) and is_bipartite_balanced(N.cube(d)) == (True, True)
