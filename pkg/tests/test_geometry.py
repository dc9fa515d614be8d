import random
from fractions import Fraction as F

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from convexclique.geometry import (
    AxisRect,
    ConvexBody,
    HalfPlane,
    Placement,
    Scene,
    SceneObject,
    add,
    build_lens,
    central_symmetrize,
    convex_hull,
    homothets_intersect,
    minkowski_norm,
    mul,
    polygon_contains,
    scene_to_graph,
    split_lens,
    sub,
    supporting_normals,
    translates_intersect,
)
from convexclique.random_instances import BODY_KINDS, random_body, random_halfplanes, random_rects
from convexclique.verify import sample_point

import oracles

small_q = st.fractions(min_value=-6, max_value=6, max_denominator=6)
vec = st.tuples(small_q, small_q)
body_st = st.builds(lambda seed, k: random_body(random.Random(seed), k), st.integers(0, 10**6), st.sampled_from(BODY_KINDS))

SQUARE = ConvexBody.square()


def test_square_norm_is_max_coordinate():
    assert minkowski_norm(SQUARE, (3, 4)) == 4


@given(body_st)
def test_norm_of_zero(body):
    assert body.norm((0, 0)) == 0


def test_hexagon_norm_matches_ray_oracle():
    hexagon = ConvexBody.regular(3)
    assert hexagon.norm((1, 1)) == oracles.ray_norm(hexagon.vertices, (F(1), F(1)))


def test_body_rejects_asymmetric_polygon():
    with pytest.raises(ValueError):
        ConvexBody(((F(0), F(0)), (F(1), F(0)), (F(0), F(1))))


@settings(max_examples=200)
@given(body_st, vec)
def test_norm_agrees_with_ray_casting(body, v):
    assert body.norm(v) == oracles.ray_norm(body.vertices, v)


@settings(max_examples=200)
@given(body_st, vec, vec, small_q)
def test_norm_axioms(body, u, v, a):
    assert body.norm(mul(v, a)) == abs(a) * body.norm(v)
    assert body.norm(add(u, v)) <= body.norm(u) + body.norm(v)
    assert (body.norm(v) == 0) == (v == (0, 0))


def test_translates_tangent_at_distance_two():
    disk = ConvexBody.regular(64)
    assert translates_intersect(disk, Placement((0, 0)), Placement((2, 0)))
    assert not translates_intersect(disk, Placement((0, 0)), Placement((F(201, 100), 0)))
    assert translates_intersect(disk, Placement((1, 1)), Placement((1, 1)))


def test_homothets_tangent():
    assert homothets_intersect(SQUARE, Placement((0, 0), 1), Placement((3, 0), 2))
    assert not homothets_intersect(SQUARE, Placement((0, 0), 1), Placement((F(301, 100), 0), 2))


@settings(max_examples=150)
@given(body_st, vec, vec, st.fractions(F(1, 4), 3, max_denominator=4), st.fractions(F(1, 4), 3, max_denominator=4))
def test_homothet_predicate_matches_polygon_overlap(body, c1, c2, s1, s2):
    p1, p2 = Placement(c1, s1), Placement(c2, s2)
    expected = oracles.convex_overlap(oracles.placed(body.vertices, c1, s1), oracles.placed(body.vertices, c2, s2))
    assert homothets_intersect(body, p1, p2) == expected == homothets_intersect(body, p2, p1)
    if s1 == s2 == 1:
        assert translates_intersect(body, p1, p2) == expected


def test_square_lens():
    lens = build_lens(SQUARE, (0, 0), (2, 0))
    assert lens.d == 2
    assert sorted(lens.region) == sorted([(0, -2), (2, -2), (2, 2), (0, 2)])
    assert lens.center == (1, 0)


def _lenses(seed, count):
    rng = random.Random(seed)
    out = []
    while len(out) < count:
        body = random_body(rng, BODY_KINDS[len(out) % 4])
        c1 = (F(rng.randint(0, 16), 8), F(rng.randint(0, 16), 8))
        c2 = (F(rng.randint(0, 16), 8), F(rng.randint(0, 16), 8))
        d = body.norm(sub(c1, c2))
        if 0 < d <= 2:
            out.append((body, build_lens(body, c1, c2), rng))
    return out


@pytest.mark.parametrize("body,lens,rng", _lenses(1, 30))
def test_lens_is_symmetric_and_is_the_intersection(body, lens, rng):
    c = lens.center
    for v in lens.region:
        assert polygon_contains(lens.region, sub(mul(c, 2), v))
    for _ in range(20):
        x = sample_point(rng, lens.region)
        assert body.norm(sub(x, lens.c1)) <= lens.d
        assert body.norm(sub(x, lens.c2)) <= lens.d


@pytest.mark.parametrize("body,lens,rng", _lenses(2, 30))
def test_lens_tangents_at_centres_are_parallel(body, lens, rng):
    n1 = supporting_normals(lens.region, lens.c1)
    n2 = supporting_normals(lens.region, lens.c2)
    assert n1 and n2

    def same_dir(a, b):
        return a[0] * b[1] - a[1] * b[0] == 0 and a[0] * b[0] + a[1] * b[1] > 0

    assert any(same_dir(a, mul(b, -1)) for a in n1 for b in n2)


@pytest.mark.parametrize("body,lens,rng", _lenses(3, 30))
def test_lens_halves_have_diameter_at_most_d(body, lens, rng):
    for half in split_lens(lens):
        for _ in range(30):
            x, y = sample_point(rng, half), sample_point(rng, half)
            assert body.norm(sub(x, y)) <= lens.d


def test_split_is_needed_somewhere():
    found = False
    for body, lens, rng in _lenses(4, 30):
        d1, d2 = split_lens(lens)
        for _ in range(30):
            if body.norm(sub(sample_point(rng, d1), sample_point(rng, d2))) > lens.d:
                found = True
    assert found


def test_degenerate_and_far_lens():
    assert build_lens(SQUARE, (1, 1), (1, 1)).degenerate
    with pytest.raises(ValueError):
        build_lens(SQUARE, (0, 0), (3, 0))


def test_symmetrize_triangle_gives_hexagon_and_same_graphs():
    tri = [(F(0), F(0)), (F(1), F(0)), (F(0), F(1))]
    body = central_symmetrize(tri)
    assert len(body.vertices) == 6
    rng = random.Random(5)
    centers = [(F(rng.randint(0, 16), 8), F(rng.randint(0, 16), 8)) for _ in range(20)]
    for i in range(20):
        for j in range(i + 1, 20):
            tri_meet = oracles.convex_overlap(oracles.placed(tri, centers[i]), oracles.placed(tri, centers[j]))
            assert translates_intersect(body, Placement(centers[i]), Placement(centers[j])) == tri_meet


def test_symmetrize_symmetric_input_is_congruent():
    assert set(central_symmetrize(SQUARE.vertices).vertices) == set(SQUARE.vertices)


@given(st.lists(vec, min_size=3, max_size=7))
def test_symmetrize_size_and_idempotence(points):
    if len(convex_hull(points)) < 3:
        return
    body = central_symmetrize(points)
    assert len(body.vertices) <= 2 * len(convex_hull(points))
    again = central_symmetrize(body.vertices)
    assert set(again.vertices) == set(body.vertices)


def test_empty_scene():
    assert scene_to_graph(Scene(None, ())).n == 0


def test_figure_style_rectangles_pairwise_adjacent():
    rects = [AxisRect(-i - 1, j + 1, -j - 1, i + 1) for i in range(5) for j in range(2)]
    hps = [HalfPlane((-2, 0), (0, 3), "upper"), HalfPlane((0, 5), (-2, 2), "lower")]
    objs = [SceneObject("halfplane", h, f"h{i}") for i, h in enumerate(hps)]
    objs += [SceneObject("rect", r, f"R{i}") for i, r in enumerate(rects)]
    g = scene_to_graph(Scene(None, tuple(objs)))
    assert all(g.has_edge(u, v) for u in range(2, 12) for v in range(u + 1, 12))


@settings(max_examples=60)
@given(st.integers(0, 10**6))
def test_mixed_scene_graph_matches_oracles(seed):
    rng = random.Random(seed)
    body = random_body(rng, "random")
    hps = random_halfplanes(rng, 3)
    rects = random_rects(rng, 3)
    homs = [Placement((F(rng.randint(0, 40), 4), F(rng.randint(0, 40), 4)), F(rng.randint(1, 8), 4)) for _ in range(3)]
    objs = [SceneObject("halfplane", h) for h in hps] + [SceneObject("rect", r) for r in rects]
    objs += [SceneObject("homothet", p) for p in homs]
    g = scene_to_graph(Scene(body, tuple(objs)))

    def poly(o):
        if o.kind == "rect":
            return [(o.shape.x_lo, o.shape.y_lo), (o.shape.x_hi, o.shape.y_lo), (o.shape.x_hi, o.shape.y_hi), (o.shape.x_lo, o.shape.y_hi)]
        return oracles.placed(body.vertices, o.shape.center, o.shape.scale)

    for u in range(len(objs)):
        for v in range(u + 1, len(objs)):
            a, b = objs[u], objs[v]
            if a.kind == b.kind == "halfplane":
                want = oracles.halfplanes_meet(a.shape, b.shape)
            elif a.kind == "halfplane":
                want = any(oracles.in_halfplane(a.shape, p) for p in poly(b))
            else:
                want = oracles.convex_overlap(poly(a), poly(b))
            assert g.has_edge(u, v) == want


def test_weighted_objects_become_twins():
    objs = (SceneObject("rect", AxisRect(0, 1, 0, 1), "A", weight=3), SceneObject("rect", AxisRect(5, 6, 5, 6), "B"))
    g = scene_to_graph(Scene(None, objs))
    assert g.n == 4
    assert g.labels == ("A#0", "A#1", "A#2", "B")
    assert g.is_clique([0, 1, 2]) and not g.has_edge(0, 3)
