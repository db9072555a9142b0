from __future__ import annotations

import random

import pytest
from hypothesis import given
from hypothesis import strategies as st

from conftest import corpus, graphs
from oracles import brute_cycle_count, brute_pair_exists, brute_path_exists, held_karp_count
from k2ham import catalog as N
from k2ham.certificates import validate_cycle, validate_path, validate_path_pair
from k2ham.engine import (Constraints, SearchStats, count_hamiltonian_cycles, find_disjoint_spanning_paths,
                          find_hamiltonian_cycle, find_hamiltonian_path, is_hamiltonian, iter_hamiltonian_cycles)
from k2ham.errors import PreconditionError, Undecided
from k2ham.graph import Graph, delete_vertices


def test_cycle_examples():
    assert find_hamiltonian_cycle(N.petersen()) is None
    cyc = find_hamiltonian_cycle(N.cube(3))
    assert cyc is not None and not validate_cycle(N.cube(3), cyc)
    assert find_hamiltonian_cycle(N.cycle(5), Constraints.make(forbidden=[(0, 1)])) is None


def test_count_examples():
    assert count_hamiltonian_cycles(N.triangle_replaced_k4()) == 3
    assert count_hamiltonian_cycles(N.complete(4)) == 3
    assert count_hamiltonian_cycles(N.complete(6)) == 60
    p = N.petersen()
    for u, v in p.edges():
        assert count_hamiltonian_cycles(p, deleted=[u, v]) == 1
        h, _ = delete_vertices(p, [u, v])
        assert count_hamiltonian_cycles(h) == 1


def test_path_examples():
    j = N.j18()
    a, b, c, d = N.J18_OUTER
    w = find_hamiltonian_path(j, a, b)
    assert w is not None and not validate_path(j, w, a, b)
    assert find_hamiltonian_path(j, a, d) is None
    assert find_hamiltonian_path(N.path(3), 0, 2) == (0, 1, 2)
    with pytest.raises(PreconditionError):
        find_hamiltonian_path(j, a, a)


def test_pair_examples():
    j = N.j18()
    a, b, c, d = N.J18_OUTER
    w = find_disjoint_spanning_paths(j, (a, b), (c, d))
    assert w is not None and not validate_path_pair(j, *w, (a, b), (c, d))
    assert find_disjoint_spanning_paths(j, (a, c), (b, d)) is None
    assert find_disjoint_spanning_paths(N.cycle(4), (0, 1), (2, 3)) == ((0, 1), (2, 3))
    with pytest.raises(PreconditionError):
        find_disjoint_spanning_paths(j, (a, b), (b, d))


def test_contradictory_constraints_flagged():
    stats = SearchStats()
    k4 = N.complete(4)
    assert find_hamiltonian_cycle(k4, Constraints.make([(0, 1), (0, 2), (0, 3)]), stats=stats) is None
    assert stats.contradictory
    with pytest.raises(PreconditionError):
        Constraints.make([(0, 1)], [(1, 0)]).validate(k4)
    with pytest.raises(PreconditionError):
        find_hamiltonian_cycle(N.path(4), Constraints.make([(0, 3)]))


def test_budget_gives_undecided_not_false():
    with pytest.raises(Undecided):
        find_hamiltonian_cycle(N.petersen(), budget=5)
    assert find_hamiltonian_cycle(N.petersen(), budget=10 ** 6) is None


def test_corpus_counts_match_permutation_bruteforce(small_graphs):
    for g in small_graphs:
        if g.n >= 3:
            assert count_hamiltonian_cycles(g) == brute_cycle_count(g), g


def test_corpus_paths_match_bruteforce():
    for g in corpus(7):
        if g.n < 2:
            continue
        for s, t in {(0, g.n - 1), (0, 1), (g.n - 1, 1)}:
            if s != t:
                got = find_hamiltonian_path(g, s, t)
                assert (got is not None) == brute_path_exists(g, s, t)
                if got:
                    assert not validate_path(g, got, s, t)


def test_corpus_pairs_match_bruteforce():
    for g in corpus(7):
        if g.n < 4:
            continue
        for p1, p2 in (((0, 1), (2, 3)), ((0, 2), (1, 3)), ((0, g.n - 1), (1, 2))):
            got = find_disjoint_spanning_paths(g, p1, p2)
            assert (got is not None) == brute_pair_exists(g, p1, p2)
            if got:
                assert not validate_path_pair(g, *got, p1, p2)


def random_graphs(count, n_range, seed):
    rng = random.Random(seed)
    for _ in range(count):
        n = rng.randint(*n_range)
        p = rng.uniform(0.25, 0.85)
        yield Graph.from_edges(n, [(u, v) for u in range(n) for v in range(u + 1, n) if rng.random() < p])


def test_random_counts_match_held_karp():
    for g in random_graphs(500, (3, 10), seed=2024):
        assert count_hamiltonian_cycles(g) == held_karp_count(g)
        assert is_hamiltonian(g) == (held_karp_count(g) > 0)


@given(graphs(min_n=3, max_n=8))
def test_witness_validity_and_enumeration(g):
    cycles = iter_hamiltonian_cycles(g)
    assert len(set(cycles)) == len(cycles)
    for c in cycles:
        assert not validate_cycle(g, c)
        assert c[0] == min(c) and c[1] < c[-1]


@given(graphs(min_n=2, max_n=8), st.data())
def test_path_symmetry(g, data):
    s = data.draw(st.integers(0, g.n - 1))
    t = data.draw(st.integers(0, g.n - 1).filter(lambda x: x != s))
    assert (find_hamiltonian_path(g, s, t) is None) == (find_hamiltonian_path(g, t, s) is None)


@given(graphs(min_n=3, max_n=8), st.data())
def test_forbidding_equals_deleting(g, data):
    if not g.m:
        return
    e = data.draw(st.sampled_from(g.edges()))
    forb = find_hamiltonian_cycle(g, Constraints.make(forbidden=[e]))
    assert (forb is None) == (find_hamiltonian_cycle(g.with_edges(remove=[e])) is None)
    if forb:
        assert not validate_cycle(g, forb, forbidden=[e])


@given(graphs(min_n=3, max_n=8), st.data())
def test_required_edges_sound_and_complete(g, data):
    if not g.m:
        return
    req = data.draw(st.sets(st.sampled_from(g.edges()), max_size=3))
    c = Constraints.make(req)
    got = find_hamiltonian_cycle(g, c)
    expect = [cyc for cyc in iter_hamiltonian_cycles(g) if c.allows(
        [(cyc[i], cyc[(i + 1) % len(cyc)]) for i in range(len(cyc))])]
    assert (got is None) == (not expect)
    if got:
        assert not validate_cycle(g, got, required=req)


@given(graphs(min_n=3, max_n=8), st.lists(st.tuples(st.integers(0, 7), st.integers(0, 7)), max_size=6))
def test_monotone_under_edge_addition(g, pairs):
    add = {(min(u, v), max(u, v)) for u, v in pairs if u != v and max(u, v) < g.n}
    add = [e for e in add if not g.has_edge(*e)]
    if is_hamiltonian(g):
        assert is_hamiltonian(g.with_edges(add=add))


@given(graphs(min_n=3, max_n=9))
def test_deterministic_witnesses(g):
    assert find_hamiltonian_cycle(g) == find_hamiltonian_cycle(g)


@given(graphs(min_n=4, max_n=8), st.data())
def test_deleted_matches_relabelled_subgraph(g, data):
    d = data.draw(st.sets(st.integers(0, g.n - 1), max_size=2))
    h, old = delete_vertices(g, d)
    if h.n >= 3:
        assert count_hamiltonian_cycles(g, deleted=d) == count_hamiltonian_cycles(h)
