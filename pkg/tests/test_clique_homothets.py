import random
from fractions import Fraction as F
from itertools import combinations

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from convexclique.clique_homothets import (
    BETA,
    CollinearCentersError,
    HomothetScene,
    NotConvexPositionError,
    NotK22Error,
    brute_force_independence_number,
    check_eptas_preconditions,
    hull_order,
    k22_diagonal_property,
    peel_and_solve,
    smallest_homothet_neighborhood_bound,
)
from convexclique.geometry import ConvexBody, Placement, sub
from convexclique.random_instances import random_body, random_homothet_placements
from convexclique.verify import random_k22

import oracles

SQUARE = ConvexBody.square()


def hscene(body, triples):
    return HomothetScene(body, tuple(Placement((F(x), F(y)), F(s)) for x, y, s in triples))


def test_rhombus_k22_has_diagonal_non_edges():
    scene = hscene(SQUARE, [(0, 0, F(29, 10)), (3, -1, F(1, 2)), (6, 0, F(29, 10)), (3, 1, F(1, 2))])
    g = scene.graph()
    non = [e for e in combinations(range(4), 2) if not g.has_edge(*e)]
    assert non == [(0, 2), (1, 3)]
    assert k22_diagonal_property(scene, range(4))


def test_thin_rectangle_cannot_have_side_non_edges():
    # corners of a 10 x 1 rectangle: every attempt to drop only the two long sides fails
    rng = random.Random(0)
    for _ in range(500):
        sa, sb, sc, sd = (F(rng.randint(1, 200), 20) for _ in range(4))
        g = hscene(SQUARE, [(0, 0, sa), (10, 0, sb), (10, 1, sc), (0, 1, sd)]).graph()
        non = [e for e in combinations(range(4), 2) if not g.has_edge(*e)]
        assert non != [(0, 1), (2, 3)]


def test_pairwise_intersecting_is_not_k22():
    scene = hscene(SQUARE, [(0, 0, 5), (1, 0, 5), (1, 1, 5), (0, 1, 5)])
    with pytest.raises(NotK22Error):
        k22_diagonal_property(scene, range(4))


def test_collinear_and_non_convex_rejected():
    with pytest.raises(CollinearCentersError):
        hull_order([(0, 0), (1, 1), (2, 2), (0, 5)])
    assert hull_order([(0, 0), (4, 0), (0, 4), (1, 1)]) is None
    scene = hscene(SQUARE, [(0, 0, F(1, 2)), (4, 0, F(1, 2)), (0, 4, F(1, 2)), (1, 1, 3)])
    g = scene.graph()
    non = [e for e in combinations(range(4), 2) if not g.has_edge(*e)]
    if len(non) == 2 and not set(non[0]) & set(non[1]):
        with pytest.raises(NotConvexPositionError):
            k22_diagonal_property(scene, range(4))


@settings(max_examples=300, deadline=None)
@given(st.integers(0, 10**6), st.sampled_from(["square", "hexagon", "symtriangle", "random"]))
def test_k22_property_random(seed, kind):
    rng = random.Random(seed)
    body = random_body(rng, kind)
    scene = random_k22(rng, body)
    if scene is None:
        return
    g = scene.graph()
    non = [e for e in combinations(range(4), 2) if not g.has_edge(*e)]
    if len(non) != 2 or set(non[0]) & set(non[1]):
        return
    assert k22_diagonal_property(scene, range(4))
    # the triangle inequality core: diagonals at least as long as opposite sides
    cs = [p.center for p in scene.placements]
    o = hull_order(cs)
    a, b, c, d = (cs[i] for i in o)
    n = body.norm
    assert n(sub(a, b)) + n(sub(c, d)) <= n(sub(a, c)) + n(sub(b, d))
    assert n(sub(b, c)) + n(sub(d, a)) <= n(sub(a, c)) + n(sub(b, d))


def test_isolated_smallest_homothet():
    scene = hscene(SQUARE, [(0, 0, 1), (10, 10, 1), (12, 10, 1)])
    b = smallest_homothet_neighborhood_bound(scene)
    assert b.vertex == 0 and b.alpha == 0 and b.verified


def test_star_neighbourhood():
    triples = [(0, 0, F(1, 10))] + [(F(1, 2), 0, 2)] * 7
    scene = hscene(SQUARE, triples)
    b = smallest_homothet_neighborhood_bound(scene)
    assert b.vertex == 0 and b.alpha == 1


@settings(max_examples=100, deadline=None)
@given(st.integers(0, 10**6), st.integers(1, 15), st.sampled_from(["square", "hexagon", "symtriangle", "random"]))
def test_smallest_neighbourhood_alpha_at_most_six(seed, n, kind):
    rng = random.Random(seed)
    scene = HomothetScene(random_body(rng, kind), tuple(random_homothet_placements(rng, n, spread=4)))
    b = smallest_homothet_neighborhood_bound(scene)
    g = scene.graph()
    nb = g.neighbors(b.vertex)
    sub_edges = {(i, j) for i, j in combinations(range(len(nb)), 2) if g.has_edge(nb[i], nb[j])}
    assert b.verified and b.alpha == oracles.subset_max_independent(len(nb), sub_edges) <= 6
    assert brute_force_independence_number(g, nb) == b.alpha


def test_peel_trivial_cases():
    scene = hscene(SQUARE, [(0, 0, 3), (1, 1, 2), (2, 0, 1)])
    assert peel_and_solve(scene) == [0, 1, 2]
    clusters = [(0, 0, 1), (1, 0, 1), (0, 1, 1)] + [(50 + F(i, 4), 50, 1) for i in range(5)]
    assert peel_and_solve(hscene(SQUARE, clusters)) == [3, 4, 5, 6, 7]


@settings(max_examples=80, deadline=None)
@given(st.integers(0, 10**6), st.integers(1, 12))
def test_peel_matches_subset_oracle(seed, n):
    rng = random.Random(seed)
    body = random_body(rng, "random")
    scene = HomothetScene(body, tuple(random_homothet_placements(rng, n, spread=4)))
    edges = oracles.adjacency_from(
        n,
        lambda u, v: oracles.convex_overlap(
            oracles.placed(body.vertices, scene.placements[u].center, scene.placements[u].scale),
            oracles.placed(body.vertices, scene.placements[v].center, scene.placements[v].scale),
        ),
    )
    c = peel_and_solve(scene, epsilon=0.1)
    assert oracles.is_clique(edges, c) and len(c) == oracles.subset_max_clique(n, edges)


@settings(max_examples=40, deadline=None)
@given(st.integers(0, 10**6), st.integers(2, 12))
def test_preconditions_hold_on_homothet_scenes(seed, n):
    rng = random.Random(seed)
    scene = HomothetScene(random_body(rng, "random"), tuple(random_homothet_placements(rng, n, spread=4)))
    rep = check_eptas_preconditions(scene)
    assert rep.odd_cycle_checked and rep.odd_cycle_ok
    assert rep.density_ok and rep.min_density >= BETA
    assert "not computed" in rep.vc_dimension
