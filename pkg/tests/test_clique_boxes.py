import random
from fractions import Fraction as F

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from convexclique.clique_boxes import (
    HalfPlanesNotPairwiseIntersecting,
    check_pairwise_intersecting,
    common_point,
    enumerate_maximal_cliques_rectangles,
    max_clique_halfplanes_rectangles,
    max_clique_rectangles,
)
from convexclique.geometry import AxisRect, HalfPlane
from convexclique.random_instances import random_halfplanes, random_rects

import oracles


def test_three_overlapping():
    rects = [AxisRect(0, 2, 0, 2), AxisRect(1, 3, 1, 3), AxisRect(F(3, 2), F(5, 2), 0, 3)]
    assert max_clique_rectangles(rects) == [0, 1, 2]
    assert common_point(rects) is not None


def test_disjoint_rectangles():
    rects = [AxisRect(3 * i, 3 * i + 1, 0, 1) for i in range(4)]
    assert len(max_clique_rectangles(rects)) == 1
    assert enumerate_maximal_cliques_rectangles(rects[:3]) == [[0], [1], [2]]


def test_two_overlapping_one_clique():
    assert enumerate_maximal_cliques_rectangles([AxisRect(0, 2, 0, 2), AxisRect(1, 3, 1, 3)]) == [[0, 1]]


def test_touching_rectangles_intersect():
    assert max_clique_rectangles([AxisRect(0, 1, 0, 1), AxisRect(1, 2, 1, 2)]) == [0, 1]


@settings(max_examples=100)
@given(st.integers(0, 10**6), st.integers(1, 12))
def test_rectangle_clique_matches_subset_oracle(seed, n):
    rects = random_rects(random.Random(seed), n)
    edges = oracles.adjacency_from(n, lambda u, v: oracles.rects_overlap(rects[u], rects[v]))
    c = max_clique_rectangles(rects)
    assert len(c) == oracles.subset_max_clique(n, edges)
    assert common_point([rects[i] for i in c]) is not None


@settings(max_examples=100)
@given(st.integers(0, 10**6), st.integers(1, 10))
def test_maximal_cliques_match_enumeration(seed, n):
    rects = random_rects(random.Random(seed), n)
    edges = oracles.adjacency_from(n, lambda u, v: oracles.rects_overlap(rects[u], rects[v]))
    got = enumerate_maximal_cliques_rectangles(rects)
    assert got == oracles.subset_maximal_cliques(n, edges)
    assert len(got) <= n * n + n


def _mixed_edges(hps, rects):
    k = len(hps)
    objs = list(hps) + list(rects)

    def meet(u, v):
        if u < k and v < k:
            return oracles.halfplanes_meet(objs[u], objs[v])
        if u >= k and v >= k:
            return oracles.rects_overlap(objs[u], objs[v])
        return oracles.halfplane_meets_rect(objs[u], objs[v]) if u < k else oracles.halfplane_meets_rect(objs[v], objs[u])

    return oracles.adjacency_from(len(objs), meet)


def test_only_halfplanes():
    hps = random_halfplanes(random.Random(0), 5)
    assert len(max_clique_halfplanes_rectangles(hps, [])) == 5


def test_rectangle_meeting_everything():
    hps = random_halfplanes(random.Random(1), 4)
    big = AxisRect(-1000, 1000, -1000, 1000)
    assert len(max_clique_halfplanes_rectangles(hps, [big])) == 5


@settings(max_examples=100)
@given(st.integers(0, 10**6), st.integers(0, 5), st.integers(0, 7))
def test_mixed_solver_matches_subset_oracle(seed, k, r):
    rng = random.Random(seed)
    hps = random_halfplanes(rng, k)
    rects = random_rects(rng, r)
    if k + r == 0:
        return
    edges = _mixed_edges(hps, rects)
    c = max_clique_halfplanes_rectangles(hps, rects)
    assert oracles.is_clique(edges, c)
    assert len(c) == oracles.subset_max_clique(k + r, edges)
    assert len(c) >= max(k, len(max_clique_rectangles(rects)) if rects else 0)


def test_parallel_same_side_halfplanes_are_fine():
    hps = [HalfPlane((0, 0), (1, 0), "upper"), HalfPlane((0, 5), (1, 5), "upper")]
    check_pairwise_intersecting(hps)
    assert len(max_clique_halfplanes_rectangles(hps, [AxisRect(0, 1, 6, 7)])) == 3


def test_disjoint_halfplanes_rejected():
    hps = [HalfPlane((0, 0), (1, 0), "lower"), HalfPlane((0, 5), (1, 5), "upper")]
    with pytest.raises(HalfPlanesNotPairwiseIntersecting):
        max_clique_halfplanes_rectangles(hps, [AxisRect(0, 1, 0, 1)])
