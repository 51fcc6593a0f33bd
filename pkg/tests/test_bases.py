import itertools
import random

import pytest
from hypothesis import given, settings, strategies as st

from gradimp.bases import (base_from_system, build_graph, independent_sets_of, is_pred_closed,
                           is_redundant, is_system_of_pseudo_intents, maximal_independent_sets,
                           minimize_theory, order_key, pseudo_intents_glob,
                           pseudo_intents_nextclosure, pseudo_intents_spg,
                           systems_of_pseudo_intents)
from gradimp.entailment import check_complete
from gradimp.errors import PreconditionError
from gradimp.fsets import LSet, enumerate_lsets, is_strict_subset, make_universe
from gradimp.implications import Theory
from gradimp.lattice import ChainLattice
from gradimp.tables import table_from_rows

from helpers import S, one_row_yz, random_table, theory

YZ = make_universe("y,z")


def brute_force_mis(n, adjacent):
    independent = [frozenset(c) for r in range(n + 1) for c in itertools.combinations(range(n), r)
                   if all(b not in adjacent[a] for a, b in itertools.combinations(c, 2))]
    return {s for s in independent if not any(s < o for o in independent)}


@pytest.mark.parametrize("n,edges", [
    (0, []),
    (1, []),
    (3, [(0, 1), (1, 2)]),
    (5, [(0, 1), (1, 2), (2, 3), (3, 4), (4, 0)]),
    (4, [(0, 1), (0, 2), (0, 3), (1, 2), (1, 3), (2, 3)]),
])
def test_mis_known_graphs(n, edges):
    adjacent = [set() for _ in range(n)]
    for a, b in edges:
        adjacent[a].add(b)
        adjacent[b].add(a)
    found = maximal_independent_sets(n, adjacent)
    assert len(found) == len(set(found))
    assert set(found) == brute_force_mis(n, adjacent)


@settings(max_examples=80)
@given(st.integers(0, 8), st.data())
def test_mis_matches_brute_force(n, data):
    pairs = list(itertools.combinations(range(n), 2))
    chosen = data.draw(st.lists(st.sampled_from(pairs), unique=True) if pairs else st.just([]))
    adjacent = [set() for _ in range(n)]
    for a, b in chosen:
        adjacent[a].add(b)
        adjacent[b].add(a)
    assert set(maximal_independent_sets(n, adjacent)) == brute_force_mis(n, adjacent)


def test_order_key_is_total_and_extends_inclusion():
    L = ChainLattice(2)
    sets = list(enumerate_lsets(make_universe("a,b,c"), L))
    assert len({order_key(P) for P in sets}) == len(sets)
    for P, Q in itertools.product(sets, repeat=2):
        if is_strict_subset(P, Q):
            assert order_key(P) < order_key(Q)


def test_graph_vertices_are_the_non_intents():
    L = ChainLattice(2)
    t = one_row_yz(L, 1, 0)
    g = build_graph(L, t)
    assert len(g.vertices) == 6 and len(g.edges) == 14
    assert all(t.closure(P) != P for P in g.vertices)
    assert all((P, P) not in g.edges for P in g.vertices)
    empty, y, half_z = LSet.empty(YZ), S("{y}", YZ, L), S("{0.5/z}", YZ, L)
    assert (empty, y) not in g.edges and (y, empty) not in g.edges
    assert (half_z, empty) in g.edges and (empty, half_z) in g.edges


def test_printed_systems_on_the_simple_table():
    L = ChainLattice(2)
    t = one_row_yz(L, 1, 0)
    g = build_graph(L, t)
    mis = independent_sets_of(g)
    assert len(mis) == 4
    expected = {frozenset([S("{0.5/z}", YZ, L), S("{y}", YZ, L)]),
                frozenset([S("{0.5/y, 0.5/z}", YZ, L), S("{y}", YZ, L)])}
    assert {frozenset(s) for s in mis if is_pred_closed(g, s)} == expected
    systems = systems_of_pseudo_intents(L, t)
    assert {frozenset(s) for s in systems} == expected
    assert all(is_system_of_pseudo_intents(L, t, s) for s in systems)
    assert not any(is_system_of_pseudo_intents(L, t, s) for s in mis if not is_pred_closed(g, s))


def test_no_non_intents_gives_the_empty_system():
    L = ChainLattice(1, hedge="globalization")
    # rows {y} and {} make both Boolean sets intents
    t = table_from_rows(L, make_universe("y"), [[1], [0]])
    assert systems_of_pseudo_intents(L, t) == [()]
    assert base_from_system(L, t, ()) == Theory(t.universe)


def test_glob_methods_require_globalization():
    with pytest.raises(PreconditionError):
        pseudo_intents_glob(ChainLattice(2), one_row_yz(ChainLattice(2), 0, 0))


def test_alg1_on_the_lift_example():
    L = ChainLattice(2, hedge="globalization")
    t = one_row_yz(L, 0, 0)
    expected = (S("{0.5/y}", YZ, L), S("{0.5/z}", YZ, L))
    assert pseudo_intents_glob(L, t) == expected
    assert pseudo_intents_spg(L, t) == expected
    assert pseudo_intents_nextclosure(L, t).pseudo_intents == expected


def test_nextclosure_on_the_simple_table():
    L = ChainLattice(2)
    t = one_row_yz(L, 1, 0)
    res = pseudo_intents_nextclosure(L, t)
    assert res.pseudo_intents == (LSet.empty(YZ), S("{y}", YZ, L), S("{0.5/y, 0.5/z}", YZ, L))
    assert res.intents == (S("{0.5/y}", YZ, L), S("{y, 0.5/z}", YZ, L), S("{y, z}", YZ, L))
    assert list(res.fixpoints) == sorted(res.fixpoints, key=LSet.lex_key)
    T = res.theory(L, t)
    assert check_complete(L, T, t)
    log = []
    small = minimize_theory(L, T, log)
    assert [i.antecedent for i in log] == [LSet.empty(YZ)]
    assert check_complete(L, small, t) and not is_redundant(L, small)


def test_minimize_walks_the_file_order():
    L = ChainLattice(2, hedge="globalization")
    T = theory("{0.5/y} => {y, z}\n{y} => {y, z}\n{0.5/z} => {y, z}\n{z} => {y, z}\n{} => {}\n", YZ, L)
    log = []
    small = minimize_theory(L, T, log)
    assert [i.format(L, True) for i in log] == ["{y} => {y, z}", "{z} => {y, z}", "{} => {}"]
    assert len(small) == 2 and not is_redundant(L, small)
    with pytest.raises(PreconditionError):
        minimize_theory(L, theory("{} => {y} @ 0.5", YZ, L))


@settings(max_examples=60, deadline=None)
@given(st.integers(1, 2), st.integers(0, 10**6))
def test_glob_methods_agree(n, seed):
    rng = random.Random(seed)
    L = ChainLattice(n, hedge="globalization")
    t = random_table(rng, L, make_universe("a,b,c"))
    p1 = pseudo_intents_glob(L, t)
    assert p1 == pseudo_intents_spg(L, t)
    nc = pseudo_intents_nextclosure(L, t)
    assert set(nc.pseudo_intents) == set(p1)
    assert set(nc.intents) == set(t.intents())
    assert [tuple(s) for s in systems_of_pseudo_intents(L, t)] == [p1]
    T = base_from_system(L, t, p1)
    assert check_complete(L, T, t) and not is_redundant(L, T)


@settings(max_examples=40, deadline=None)
@given(st.sampled_from(["lukasiewicz", "godel"]), st.integers(0, 10**6))
def test_every_graph_system_gives_a_non_redundant_base(tnorm, seed):
    rng = random.Random(seed)
    L = ChainLattice(2, tnorm)
    t = random_table(rng, L, YZ)
    for system in systems_of_pseudo_intents(L, t):
        assert is_system_of_pseudo_intents(L, t, system)
        T = base_from_system(L, t, system)
        assert check_complete(L, T, t) and not is_redundant(L, T)
