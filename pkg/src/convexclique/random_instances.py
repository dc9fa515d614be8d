"""Seeded random instance generators (all exact rationals)."""

from __future__ import annotations

import random
from fractions import Fraction

from .geometry import AxisRect, ConvexBody, HalfPlane, Placement, Scene, SceneObject, central_symmetrize, convex_hull
from .mipa import MipaInstance
from .reductions.cnf import CnfFormula

BODY_KINDS = ("square", "hexagon", "symtriangle", "random")


def rand_q(rng: random.Random, lo, hi, den: int = 8) -> Fraction:
    lo, hi = Fraction(lo), Fraction(hi)
    steps = int((hi - lo) * den)
    return lo + Fraction(rng.randint(0, steps), den)


def random_body(rng: random.Random, kind: str = "random") -> ConvexBody:
    if kind == "square":
        return ConvexBody.square()
    if kind == "hexagon":
        return ConvexBody.regular(3)
    if kind == "symtriangle":
        while True:
            pts = [(rand_q(rng, -1, 1), rand_q(rng, -1, 1)) for _ in range(3)]
            if len(convex_hull(pts)) == 3:
                return central_symmetrize(pts)
    if kind == "random":
        while True:
            pts = [(rand_q(rng, -1, 1), rand_q(rng, -1, 1)) for _ in range(rng.randint(3, 6))]
            if len(convex_hull(pts)) >= 3:
                return central_symmetrize(pts)
    raise ValueError(f"unknown body kind {kind!r}")


def random_centers(rng: random.Random, n: int, spread=4, den: int = 8) -> list:
    return [(rand_q(rng, 0, spread, den), rand_q(rng, 0, spread, den)) for _ in range(n)]


def random_translate_scene(rng: random.Random, n: int, body: ConvexBody, spread=4) -> Scene:
    objs = [SceneObject("translate", Placement(c), f"T{i}") for i, c in enumerate(random_centers(rng, n, spread))]
    return Scene(body, tuple(objs))


def random_homothet_placements(rng: random.Random, n: int, spread=6, smin="1/4", smax=2) -> list[Placement]:
    return [Placement(c, rand_q(rng, smin, smax)) for c in random_centers(rng, n, spread)]


def random_rects(rng: random.Random, n: int, spread=10, max_side=5) -> list[AxisRect]:
    out = []
    for _ in range(n):
        x = rand_q(rng, 0, spread, 2)
        y = rand_q(rng, 0, spread, 2)
        out.append(AxisRect(x, x + rand_q(rng, "1/2", max_side, 2), y, y + rand_q(rng, "1/2", max_side, 2)))
    return out


def random_halfplanes(rng: random.Random, k: int, spread=10) -> list[HalfPlane]:
    """Half-planes whose boundaries have pairwise distinct slopes."""
    out, slopes = [], set()
    while len(out) < k:
        a = (rand_q(rng, 0, spread, 2), rand_q(rng, 0, spread, 2))
        d = (Fraction(rng.randint(-6, 6)), Fraction(rng.randint(-6, 6)))
        if d == (0, 0):
            continue
        slope = d[1] / d[0] if d[0] else None
        if slope in slopes:
            continue
        slopes.add(slope)
        out.append(HalfPlane(a, (a[0] + d[0], a[1] + d[1]), rng.choice(("upper", "lower"))))
    return out


def random_cnf(rng: random.Random, n_vars: int, n_clauses: int, width: int = 3, max_occ: int | None = None) -> CnfFormula:
    clauses = []
    occ = [0] * (n_vars + 1)
    for _ in range(n_clauses):
        w = rng.randint(1, width)
        pool = [v for v in range(1, n_vars + 1) if max_occ is None or occ[v] < max_occ]
        if len(pool) < w:
            break
        vs = rng.sample(pool, w)
        for v in vs:
            occ[v] += 1
        clauses.append(tuple(v if rng.random() < 0.5 else -v for v in vs))
    return CnfFormula(n_vars, tuple(clauses))


def random_pnae33(rng: random.Random, n_vars: int, n_clauses: int) -> CnfFormula:
    """Positive NAE formula, clause widths 2 or 3, distinct variables, each used at most 3 times."""
    occ = [0] * (n_vars + 1)
    clauses = []
    for _ in range(n_clauses):
        pool = [v for v in range(1, n_vars + 1) if occ[v] < 3]
        w = rng.choice((2, 3))
        if len(pool) < w:
            w = 2
        if len(pool) < w:
            break
        vs = tuple(sorted(rng.sample(pool, w)))
        for v in vs:
            occ[v] += 1
        clauses.append(vs)
    return CnfFormula(n_vars, tuple(clauses), nae=True)


def random_mipa(rng: random.Random, n: int, h: int, symmetric: bool = True, max_len: int = 5) -> MipaInstance:
    """Random instance with pairwise disjoint intervals (as many as fit, up to h)."""
    if symmetric:
        pts = list(range(1, n + 1))
        rng.shuffle(pts)
        sigma = list(range(1, n + 1))
        for a, b in zip(pts[0::2], pts[1::2]):
            sigma[a - 1], sigma[b - 1] = b, a
    else:
        sigma = list(range(1, n + 1))
        rng.shuffle(sigma)
    intervals = []
    free = 1
    for _ in range(h):
        if free > n:
            break
        l = rng.randint(free, min(n, free + 2))
        r = min(n, l + rng.randint(0, max_len - 1))
        intervals.append((l, r))
        free = r + 1
    return MipaInstance(n, tuple(sigma), tuple(intervals))
