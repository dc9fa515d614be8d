import random
import time
from itertools import combinations

import networkx as nx
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from convexclique.graph import (
    EdgeOrdering,
    GuardExceeded,
    IntersectionGraph,
    bipartite_complement_matching_size,
    brute_force_max_clique,
    brute_force_maximal_cliques,
    exact_max_clique,
    find_two_mutually_induced_odd_cycles,
    greedy_clique,
    is_cobipartite,
    max_clique_cobipartite,
)

import oracles


@st.composite
def graphs(draw, max_n=10):
    n = draw(st.integers(0, max_n))
    pairs = list(combinations(range(n), 2))
    chosen = draw(st.lists(st.booleans(), min_size=len(pairs), max_size=len(pairs)))
    return IntersectionGraph.from_edges(n, [e for e, c in zip(pairs, chosen) if c])


def edge_set(g):
    return set(g.edges())


def gnp(n, p, seed):
    rng = random.Random(seed)
    return IntersectionGraph.from_edges(n, [e for e in combinations(range(n), 2) if rng.random() < p])


def complete(n):
    return IntersectionGraph.from_edges(n, combinations(range(n), 2))


def cycle(n):
    return IntersectionGraph.from_edges(n, [(i, (i + 1) % n) for i in range(n)])


def test_graph_validation():
    with pytest.raises(ValueError):
        IntersectionGraph.from_edges(3, [(0, 0)])
    with pytest.raises(ValueError):
        IntersectionGraph.from_edges(3, [(0, 5)])
    with pytest.raises(ValueError):
        IntersectionGraph(2, (0b10, 0))
    with pytest.raises(ValueError):
        EdgeOrdering(((0, 1), (1, 0)))


def test_brute_force_small_cases():
    assert brute_force_max_clique(complete(4)) == [0, 1, 2, 3]
    assert brute_force_max_clique(cycle(5)) == [0, 1]
    assert brute_force_max_clique(IntersectionGraph.from_edges(0, [])) == []


def test_exact_small_cases():
    assert len(exact_max_clique(IntersectionGraph.from_edges(5, [])).clique) == 1
    k = 6
    anti = IntersectionGraph.from_edges(2 * k, [(2 * i, 2 * i + 1) for i in range(k)]).complement()
    assert len(exact_max_clique(anti).clique) == k


def test_brute_force_guard():
    with pytest.raises(GuardExceeded):
        brute_force_max_clique(IntersectionGraph.from_edges(31, []))


@settings(max_examples=150)
@given(graphs())
def test_solvers_match_subset_enumeration(g):
    want = oracles.subset_max_clique(g.n, edge_set(g))
    bf = brute_force_max_clique(g)
    ex = exact_max_clique(g)
    assert len(bf) == len(ex.clique) == want
    assert g.is_clique(bf) and g.is_clique(ex.clique) and ex.optimal
    assert len(greedy_clique(g)) <= want
    assert g.is_clique(greedy_clique(g))


@settings(max_examples=80)
@given(graphs(max_n=9))
def test_maximal_clique_enumeration(g):
    assert brute_force_maximal_cliques(g) == oracles.subset_maximal_cliques(g.n, edge_set(g))


@pytest.mark.parametrize("seed", range(5))
def test_exact_agrees_with_brute_force_on_gnp12(seed):
    g = gnp(12, 0.5, seed)
    assert len(exact_max_clique(g).clique) == len(brute_force_max_clique(g))


def test_exact_on_40_vertices_beats_sampled_lower_bound():
    g = gnp(40, 0.5, 11)
    sample = sorted(random.Random(1).sample(range(40), 20))
    bound = len(brute_force_max_clique(g.induced(sample)))
    res = exact_max_clique(g)
    assert res.optimal and g.is_clique(res.clique) and len(res.clique) >= bound


def test_time_budget_returns_a_clique():
    g = gnp(90, 0.9, 3)
    start = time.perf_counter()
    res = exact_max_clique(g, time_budget=0.05)
    assert time.perf_counter() - start < 5
    assert g.is_clique(res.clique)


def test_cobipartite_examples():
    ok, (a, b) = is_cobipartite(complete(4))
    assert ok and (not a or not b)
    assert is_cobipartite(cycle(5))[0] is False
    # two cliques with arbitrary cross edges
    rng = random.Random(0)
    edges = list(combinations(range(4), 2)) + list(combinations(range(4, 9), 2))
    edges += [(u, v) for u in range(4) for v in range(4, 9) if rng.random() < 0.4]
    g = IntersectionGraph.from_edges(9, edges)
    ok, (a, b) = is_cobipartite(g)
    assert ok and g.is_clique(a) and g.is_clique(b) and sorted(a + b) == list(range(9))


@settings(max_examples=150)
@given(graphs(max_n=9), st.data())
def test_cobipartite_iff_complement_bipartite(g, data):
    subset = data.draw(st.lists(st.integers(0, max(0, g.n - 1)), unique=True)) if g.n else []
    ok, part = is_cobipartite(g, subset)
    h = nx.Graph()
    h.add_nodes_from(range(len(subset)))
    h.add_edges_from(g.induced(sorted(subset)).edges())
    comp = nx.complement(h)
    assert ok == nx.is_bipartite(comp)
    if ok:
        a, b = part
        assert g.is_clique(a) and g.is_clique(b) and sorted(a + b) == sorted(subset)


def test_max_clique_cobipartite_examples():
    edges = list(combinations(range(3), 2)) + list(combinations(range(3, 8), 2))
    g = IntersectionGraph.from_edges(8, edges)
    assert len(max_clique_cobipartite(g, ([0, 1, 2], list(range(3, 8))))) == 5
    assert len(max_clique_cobipartite(complete(7), ([0, 5, 6], [1, 2, 3, 4]))) == 7
    with pytest.raises(ValueError):
        max_clique_cobipartite(cycle(5), ([0, 1, 2], [3, 4]))


@settings(max_examples=150)
@given(st.integers(1, 14), st.integers(0, 10**6))
def test_cobipartite_clique_matches_oracle_and_konig(n, seed):
    rng = random.Random(seed)
    k = rng.randint(0, n)
    edges = list(combinations(range(k), 2)) + list(combinations(range(k, n), 2))
    edges += [(u, v) for u in range(k) for v in range(k, n) if rng.random() < 0.6]
    g = IntersectionGraph.from_edges(n, edges)
    part = (list(range(k)), list(range(k, n)))
    c = max_clique_cobipartite(g, part)
    assert g.is_clique(c)
    assert len(c) == oracles.subset_max_clique(n, edge_set(g))
    assert len(c) == n - bipartite_complement_matching_size(g, part)


def _induced_odd_cycles(g):
    out = []
    for k in range(3, g.n + 1, 2):
        for vs in combinations(range(g.n), k):
            h = nx.Graph(g.induced(list(vs)).edges())
            if h.number_of_nodes() == k and all(d == 2 for _, d in h.degree()) and nx.is_connected(h):
                out.append(set(vs))
    return out


def _mutually_induced_pair_exists(g):
    cycles = _induced_odd_cycles(g)
    for a, b in combinations(cycles, 2):
        if not a & b and not any(g.has_edge(u, v) for u in a for v in b):
            return True
    return False


def test_two_triangles_found():
    g = IntersectionGraph.from_edges(6, [(0, 1), (1, 2), (0, 2), (3, 4), (4, 5), (3, 5)])
    found = find_two_mutually_induced_odd_cycles(g)
    assert found is not None
    assert sorted(sorted(c) for c in found) == [[0, 1, 2], [3, 4, 5]]


def test_bipartite_has_no_odd_cycles():
    g = IntersectionGraph.from_edges(8, [(u, v) for u in range(4) for v in range(4, 8) if (u + v) % 3])
    assert find_two_mutually_induced_odd_cycles(g) is None


@settings(max_examples=100)
@given(graphs(max_n=8))
def test_odd_cycle_pair_search_matches_subset_oracle(g):
    found = find_two_mutually_induced_odd_cycles(g)
    assert (found is not None) == _mutually_induced_pair_exists(g)
    if found:
        a, b = (set(c) for c in found)
        assert a in _induced_odd_cycles(g) and b in _induced_odd_cycles(g)
        assert not a & b and not any(g.has_edge(u, v) for u in a for v in b)
