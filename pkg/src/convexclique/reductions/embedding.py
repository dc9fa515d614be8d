"""Embedding a symmetric MIPA instance as a clique problem on half-planes and rectangles.

Points p_0..p_{n+1} sit on the convex curve y = -1/x over [-(1+lam), -1]
(slightly wiggled), q_i = -p_i. Interval [i, j] yields the weight-5
half-planes above the line through mid(p_{i-1}, p_i) and mid(p_j, p_{j+1})
and below its mirror; matching edge (i, sigma(i)) yields the rectangle with
top-left corner p_i and bottom-right corner q_sigma(i). Then

    omega(G) = 5 * #intervals + OPT(MIPA).
"""

from __future__ import annotations

import math
import random
from dataclasses import dataclass
from fractions import Fraction

from ..geometry import (
    AxisRect,
    ConvexBody,
    HalfPlane,
    Placement,
    Scene,
    SceneObject,
    dot,
    midpoint,
    mul,
    scene_to_graph,
    sub,
)
from ..mipa import MipaInstance

HALFPLANE_WEIGHT = 5
ALL_PAIRS_LIMIT = 40


@dataclass(frozen=True)
class GeometricEmbedding:
    instance: MipaInstance
    scene: Scene
    p: tuple
    q: tuple
    mode: str
    labels: tuple[tuple[str, int], ...]  # per scene object: ("hp"|"hq", interval) or ("rect", i)
    lam: Fraction
    disk_scale: Fraction | None = None

    def object_index(self, kind: str, key: int) -> int:
        return self.labels.index((kind, key))

    def placement_clique(self, placement) -> list[int]:
        """Scene objects of the clique built from a MIPA placement (weights not expanded)."""
        from ..mipa import covered_points

        low, high = covered_points(self.instance, placement)
        chosen = []
        for k, level in enumerate(placement):
            chosen.append(self.object_index("hp" if level == 0 else "hq", k))
        for i, j in self.instance.edges():
            if i not in low and j not in high:
                chosen.append(self.object_index("rect", i))
        return sorted(chosen)


def _curve_points(n: int, lam: Fraction, deltas) -> list:
    pts = []
    for i in range(n + 2):
        x = -(1 + lam) + lam * Fraction(i, n + 1)
        pts.append((x, -1 / x + deltas[i]))
    return pts


def _strictly_convex_chain(pts) -> bool:
    slopes = [(b[1] - a[1]) / (b[0] - a[0]) for a, b in zip(pts, pts[1:])]
    return all(s1 < s2 for s1, s2 in zip(slopes, slopes[1:])) and all(s > 0 for s in slopes)


def _line_points(pts, i: int, j: int):
    return midpoint(pts[i - 1], pts[i]), midpoint(pts[j], pts[j + 1])


def _slope(a, b) -> Fraction:
    return (b[1] - a[1]) / (b[0] - a[0])


def _wiggle(n: int, lam: Fraction, intervals, seed: int):
    """Rejection-sample tiny rational perturbations until the chain is strictly
    convex and the relevant midpoint lines have pairwise distinct slopes."""
    rng = random.Random(seed)
    scale = Fraction(1, 64 * (n + 1) ** 2) * lam * lam
    if n <= ALL_PAIRS_LIMIT:
        spans = [(i, j) for i in range(1, n + 1) for j in range(i, n + 1)]
    else:
        spans = sorted(set(intervals))
    for _ in range(200):
        deltas = [scale * Fraction(rng.randint(-1000, 1000), 1000) for _ in range(n + 2)]
        pts = _curve_points(n, lam, deltas)
        if not _strictly_convex_chain(pts):
            scale /= 2
            continue
        slopes = [_slope(*_line_points(pts, i, j)) for i, j in spans]
        if len(set(slopes)) == len(slopes):
            return pts
    raise RuntimeError("could not find a wiggle with distinct slopes")


def _rational_direction(theta: float, denom: int = 1 << 16) -> tuple[Fraction, Fraction]:
    """A rational point on the unit circle close to angle theta (theta in [0, pi))."""
    t = Fraction(math.tan(theta / 2)).limit_denominator(denom)
    d = 1 + t * t
    return ((1 - t * t) / d, 2 * t / d)


def polygonal_disk(directions, k: int = 16) -> tuple[ConvexBody, list]:
    """Zonotope sum of [-g, g] over k near-unit directions plus the given ones.

    Including a direction as a generator makes the zonotope have an edge
    parallel to it, which is what lets a huge copy stand in for a half-plane.
    """
    gens: dict = {}

    def add(g):
        gx, gy = g
        if gy < 0 or (gy == 0 and gx < 0):
            gx, gy = -gx, -gy
        gens.setdefault(gy / gx if gx else None, (gx, gy))

    for t in range(k):
        add(_rational_direction(math.pi * t / k))
    for d in directions:
        length = Fraction(math.hypot(float(d[0]), float(d[1]))).limit_denominator(1 << 20)
        add((d[0] / length, d[1] / length))
    ordered = sorted(gens.values(), key=lambda g: math.atan2(float(g[1]), float(g[0])))
    start = (-sum(g[0] for g in ordered), -sum(g[1] for g in ordered))
    verts = [start]
    cur = start
    for g in ordered + [mul(g, -1) for g in ordered]:
        cur = (cur[0] + 2 * g[0], cur[1] + 2 * g[1])
        verts.append(cur)
    verts.pop()
    return ConvexBody(tuple(verts)), ordered


def _disk_center(body: ConvexBody, gens, scale: Fraction, h: HalfPlane):
    """Centre of ``scale * body`` so that its facet facing the boundary lies on
    the line, with the facet's midpoint at the foot of the perpendicular from O."""
    nvec = h.inward_normal
    c = h.offset
    nn = dot(nvec, nvec)
    foot = mul(nvec, c / nn)
    d = sub(h.b, h.a)
    mid = (Fraction(0), Fraction(0))
    for g in gens:
        if g[0] * d[1] - g[1] * d[0] == 0:
            continue
        s = -1 if dot(nvec, g) > 0 else 1  # minimise n . x over the body
        mid = (mid[0] + s * g[0], mid[1] + s * g[1])
    return sub(foot, mul(mid, scale))


def embed_mipa_as_clique(
    inst: MipaInstance,
    mode: str = "halfplane",
    lam: Fraction | int | str = 1,
    seed: int = 0,
    disk_directions: int = 16,
    verify_disks: bool = True,
) -> GeometricEmbedding:
    if mode not in ("halfplane", "unitdisk"):
        raise ValueError(f"unknown mode {mode!r}")
    if not inst.is_involution():
        raise ValueError("sigma must be an involution (symmetric matching)")
    if not inst.intervals_disjoint():
        raise ValueError("intervals must be pairwise disjoint")
    if any(r - l + 1 > 5 for l, r in inst.intervals):
        raise ValueError("intervals may contain at most five points")
    lam = Fraction(lam)
    if lam <= 0:
        raise ValueError("lambda must be positive")
    n = inst.n
    p = _wiggle(n, lam, inst.intervals, seed)
    q = [mul(pt, -1) for pt in p]

    halfplanes: list[tuple[HalfPlane, str, int]] = []
    for k, (i, j) in enumerate(inst.intervals):
        a, b = _line_points(p, i, j)
        halfplanes.append((HalfPlane(a, b, "upper"), "hp", k))
        halfplanes.append((HalfPlane(mul(b, -1), mul(a, -1), "lower"), "hq", k))

    rects = []
    for i, j in inst.edges():
        rects.append((AxisRect(p[i][0], q[j][0], q[j][1], p[i][1]), i, j))

    labels = [(kind, k) for _, kind, k in halfplanes] + [("rect", i) for _, i, _ in rects]
    rect_objs = [SceneObject("rect", r, f"R({i},{j})") for r, i, j in rects]

    def hp_label(kind, k):
        l, r = inst.intervals[k]
        return f"h_{kind[1]}([{l},{r}])"

    hp_objs = [
        SceneObject("halfplane", h, hp_label(kind, k), HALFPLANE_WEIGHT) for h, kind, k in halfplanes
    ]
    hp_scene = Scene(None, tuple(hp_objs + rect_objs))
    if mode == "halfplane":
        return GeometricEmbedding(inst, hp_scene, tuple(p), tuple(q), mode, tuple(labels), lam)

    base, gens = polygonal_disk([sub(h.b, h.a) for h, _, _ in halfplanes], disk_directions)
    target = scene_to_graph(hp_scene) if verify_disks else None
    scale = Fraction(16)
    for _ in range(40):
        body = ConvexBody(tuple(mul(v, scale) for v in base.vertices))
        disk_objs = [
            SceneObject("translate", Placement(_disk_center(base, gens, scale, h)), obj.label, HALFPLANE_WEIGHT)
            for (h, _, _), obj in zip(halfplanes, hp_objs)
        ]
        scene = Scene(body, tuple(disk_objs + rect_objs))
        if target is None or scene_to_graph(scene).adj == target.adj:
            return GeometricEmbedding(inst, scene, tuple(p), tuple(q), mode, tuple(labels), lam, scale)
        scale *= 4
    raise RuntimeError("polygonal disks did not reproduce the half-plane graph")
