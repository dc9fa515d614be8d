"""Randomised invariant suites behind ``convexclique verify``.

Each suite returns a :class:`SuiteResult`; counts are deterministic for a given seed.
"""

from __future__ import annotations

import random
from dataclasses import dataclass
from fractions import Fraction
from itertools import combinations

from .clique_boxes import (
    enumerate_maximal_cliques_rectangles,
    max_clique_halfplanes_rectangles,
    max_clique_rectangles,
    rect_meets_halfplane,
)
from .clique_homothets import (
    CollinearCentersError,
    HomothetScene,
    NotK22Error,
    hull_order,
    k22_diagonal_property,
    peel_and_solve,
    smallest_homothet_neighborhood_bound,
)
from .clique_translates import (
    length_ordering,
    max_clique_translates_geometric,
    robust_max_clique_translates,
    translate_graph,
    validate_cneeo,
)
from .geometry import (
    ConvexBody,
    Placement,
    build_lens,
    halfplanes_intersect,
    objects_intersect,
    polygon_contains,
    scene_to_graph,
    split_lens,
    sub,
)
from .graph import IntersectionGraph, brute_force_max_clique, brute_force_maximal_cliques, exact_max_clique
from .mipa import brute_force_mipa
from .random_instances import (
    random_body,
    random_centers,
    random_cnf,
    random_halfplanes,
    random_homothet_placements,
    random_mipa,
    random_pnae33,
    random_rects,
)
from .reductions.cnf import CnfFormula, brute_force_sat, is_satisfiable
from .reductions.embedding import HALFPLANE_WEIGHT, embed_mipa_as_clique
from .reductions.expander import gabber_galil_expander
from .reductions.gadgets import reduce_pnae33_to_mipa
from .reductions.sat_chain import reduce_3sat_to_nae4, reduce_nae3_to_positive3occ, reduce_nae4_to_nae3


@dataclass
class SuiteResult:
    name: str
    trials: int
    failures: int
    detail: str = ""

    @property
    def passed(self) -> bool:
        return self.failures == 0 and self.trials > 0

    def line(self) -> str:
        status = "PASS" if self.passed else "FAIL"
        extra = f" ({self.detail})" if self.detail else ""
        return f"{status} {self.name}: {self.trials - self.failures}/{self.trials}{extra}"


def sample_point(rng: random.Random, poly) -> tuple[Fraction, Fraction]:
    """Exact random point of a convex polygon (random convex combination of its vertices)."""
    w = [rng.randint(0, 1000) for _ in poly]
    if sum(w) == 0:
        w[0] = 1
    s = sum(w)
    return (
        sum(Fraction(wi) * p[0] for wi, p in zip(w, poly)) / s,
        sum(Fraction(wi) * p[1] for wi, p in zip(w, poly)) / s,
    )


BODY_CYCLE = ("square", "hexagon", "symtriangle", "random")


def lens_suite(trials: int = 100, pairs: int = 50, seed: int = 0) -> SuiteResult:
    rng = random.Random(seed)
    failures = 0
    done = 0
    while done < trials:
        body = random_body(rng, BODY_CYCLE[done % len(BODY_CYCLE)])
        c1, c2 = random_centers(rng, 2, spread=2)
        d = body.norm(sub(c1, c2))
        if d == 0 or d > 2:
            continue
        done += 1
        lens = build_lens(body, c1, c2)
        c = lens.center
        ok = all(
            any(v == w for w in lens.region) or polygon_contains(lens.region, (2 * c[0] - v[0], 2 * c[1] - v[1]))
            for v in lens.region
        )
        halves = split_lens(lens)
        for half in halves:
            if len(half) == 0:
                continue
            for _ in range(pairs):
                x, y = sample_point(rng, half), sample_point(rng, half)
                if body.norm(sub(x, y)) > d:
                    ok = False
        failures += not ok
    return SuiteResult("lens lemmas (symmetry, halves have diameter <= d)", trials, failures)


def translate_suite(trials: int = 200, max_n: int = 12, seed: int = 0) -> SuiteResult:
    rng = random.Random(seed)
    failures = 0
    bodies = ("square", "symtriangle", "hexagon")
    for t in range(trials):
        body = random_body(rng, bodies[t % 3])
        cs = random_centers(rng, rng.randint(1, max_n), spread=5)
        g = translate_graph(body, cs)
        a = len(max_clique_translates_geometric(body, cs))
        res = robust_max_clique_translates(g)
        b = len(res.clique) if res.clique is not None else -1
        c = len(brute_force_max_clique(g))
        failures += not (a == b == c)
    return SuiteResult("translates: geometric = robust = brute force", trials, failures)


def cneeo_suite(trials: int = 100, max_n: int = 12, seed: int = 0) -> SuiteResult:
    rng = random.Random(seed)
    failures = 0
    for t in range(trials):
        body = random_body(rng, BODY_CYCLE[t % 4])
        cs = random_centers(rng, rng.randint(2, max_n), spread=4)
        g = translate_graph(body, cs)
        failures += not validate_cneeo(g, length_ordering(body, cs))
    return SuiteResult("non-increasing length orderings are CNEEOs", trials, failures)


MATCHINGS = (((0, 1), (2, 3)), ((0, 2), (1, 3)), ((0, 3), (1, 2)))


def _uniform(rng: random.Random, lo: Fraction, hi: Fraction) -> Fraction:
    return lo + (hi - lo) * Fraction(rng.randint(0, 999), 1000)


def random_k22(rng: random.Random, body: ConvexBody, tries: int = 8):
    """Four homothets inducing K_{2,2} with centres in strict convex position, or None.

    Each of the three perfect matchings on the four centres (side pairs included) is
    tried in random order, sampling scales so that exactly its pairs are disjoint.
    Homothets of a symmetric body meet iff s_i + s_j >= |c_i - c_j|.
    """
    cs = [(Fraction(rng.randint(0, 40)), Fraction(rng.randint(0, 40))) for _ in range(4)]
    try:
        if hull_order(cs) is None:
            return None
    except CollinearCentersError:
        return None
    d = {}
    for a, b in combinations(range(4), 2):
        d[a, b] = d[b, a] = body.norm(sub(cs[a], cs[b]))
    order = list(MATCHINGS)
    rng.shuffle(order)
    for (a, b), (c, e) in order:
        for _ in range(tries):
            s = [Fraction(0)] * 4
            s[a] = _uniform(rng, Fraction(0), d[a, b])
            s[b] = _uniform(rng, Fraction(0), d[a, b] - s[a])
            lo_c = max(d[a, c] - s[a], d[b, c] - s[b], Fraction(0))
            lo_e = max(d[a, e] - s[a], d[b, e] - s[b], Fraction(0))
            if lo_c + lo_e >= d[c, e]:
                continue
            s[c] = _uniform(rng, lo_c, d[c, e] - lo_e)
            s[e] = _uniform(rng, lo_e, d[c, e] - s[c])
            if 0 not in s:
                return HomothetScene(body, tuple(Placement(p, x) for p, x in zip(cs, s)))
    return None


def k22_suite(trials: int = 10_000, seed: int = 0, max_attempts: int | None = None) -> SuiteResult:
    rng = random.Random(seed)
    bodies = [random_body(random.Random(seed + i), BODY_CYCLE[i % 4]) for i in range(8)]
    found = failures = attempts = 0
    limit = max_attempts or trials * 100
    while found < trials and attempts < limit:
        attempts += 1
        body = bodies[attempts % len(bodies)]
        scene = random_k22(rng, body)
        if scene is None:
            continue
        try:
            k22_diagonal_property(scene, range(4))
        except NotK22Error:
            continue
        found += 1
        # the verdict uses the scene's own intersection test, not the sampler's shortcut
        failures += not k22_diagonal_property(scene, range(4))
    failures += trials - found
    return SuiteResult("K22 non-edges are hull diagonals", trials, failures, f"{attempts} centre sets drawn")


def homothet_suite(trials: int = 100, seed: int = 0) -> SuiteResult:
    rng = random.Random(seed)
    failures = 0
    worst = 0
    for t in range(trials):
        body = random_body(rng, BODY_CYCLE[t % 4])
        n = rng.randint(1, 15)
        scene = HomothetScene(body, tuple(random_homothet_placements(rng, n, spread=5)))
        bound = smallest_homothet_neighborhood_bound(scene)
        ok = bound.verified
        worst = max(worst, bound.alpha or 0)
        if n <= 14:
            ok = ok and len(peel_and_solve(scene)) == len(brute_force_max_clique(scene.graph()))
        failures += not ok
    return SuiteResult("smallest homothet: alpha(N) <= 6, peeling exact", trials, failures, f"max alpha {worst}")


def boxes_suite(trials: int = 100, seed: int = 0) -> SuiteResult:
    rng = random.Random(seed)
    failures = 0
    for t in range(trials):
        rects = random_rects(rng, rng.randint(1, 12))
        g = IntersectionGraph.from_predicate(len(rects), lambda u, v: rects[u].intersects(rects[v]))
        ok = len(max_clique_rectangles(rects)) == len(brute_force_max_clique(g))
        small = rects[:10]
        gs = g.induced(list(range(len(small))))
        ok = ok and enumerate_maximal_cliques_rectangles(small) == brute_force_maximal_cliques(gs)
        k = rng.randint(0, 5)
        hps = random_halfplanes(rng, k)
        rs = rects[: max(0, 12 - k)]
        objs = list(hps) + list(rs)

        def meet(u, v):
            a, b = objs[u], objs[v]
            if u < k and v < k:
                return halfplanes_intersect(a, b)
            if u >= k and v >= k:
                return a.intersects(b)
            return rect_meets_halfplane(b, a) if u < k else rect_meets_halfplane(a, b)

        gm = IntersectionGraph.from_predicate(len(objs), meet)
        ok = ok and len(max_clique_halfplanes_rectangles(hps, rs)) == len(brute_force_max_clique(gm))
        failures += not ok
    return SuiteResult("rectangle and half-plane+rectangle solvers", trials, failures)


def all_small_3sat(max_vars: int = 4, max_clauses: int = 6, count: int = 200, seed: int = 0) -> list[CnfFormula]:
    rng = random.Random(seed)
    out = []
    while len(out) < count:
        nv = rng.randint(1, max_vars)
        nc = rng.randint(1, max_clauses)
        out.append(random_cnf(rng, nv, nc, 3, max_occ=9))
    return out


def reductions_suite(count: int = 200, seed: int = 0, B: int = 9) -> SuiteResult:
    failures = 0
    for phi in all_small_3sat(count=count, seed=seed):
        ok = True
        r1 = reduce_3sat_to_nae4(phi, B)
        r2 = reduce_nae4_to_nae3(r1.target)
        r3 = reduce_nae3_to_positive3occ(r2.target, max(B, r2.target.max_occurrence))
        sat = brute_force_sat(phi)
        for r in (r1, r2, r3):
            src_sat = is_satisfiable(r.source)
            tgt_sat = is_satisfiable(r.target)
            ok = ok and src_sat == tgt_sat
        if sat is not None:
            a1 = r1.forward(sat)
            a2 = r2.forward(a1)
            a3 = r3.forward(a2)
            ok = ok and r1.target.is_satisfied(a1) and r2.target.is_satisfied(a2) and r3.target.is_satisfied(a3)
        s1, s2, s3 = r1.sizes, r2.sizes, r3.sizes
        ok = ok and s1["m_prime"] == 5 * s1["m"]
        ok = ok and s2["n"] == s2["N"] + s2["M"] and s2["m"] == 2 * s2["M"]
        ok = ok and s3["n"] == 2 * s3["B"] * s3["N"] and s3["m"] == s3["M"] + (2 * s3["B"] - 1) * s3["N"]
        failures += not ok
    return SuiteResult("SAT chain round trips and size formulas", count, failures)


def gadget_suite(sat_count: int = 50, unsat_count: int = 20, seed: int = 0) -> SuiteResult:
    rng = random.Random(seed)
    sat_seen = unsat_seen = failures = 0
    attempts = 0
    while (sat_seen < sat_count or unsat_seen < unsat_count) and attempts < 100_000:
        attempts += 1
        nv = rng.randint(2, 5)
        phi = random_pnae33(rng, nv, rng.randint(1, 5))
        red = reduce_pnae33_to_mipa(phi)
        if red.instance.h > 22:
            continue
        sat = brute_force_sat(phi) is not None
        if sat and sat_seen >= sat_count or not sat and unsat_seen >= unsat_count:
            continue
        _, opt = brute_force_mipa(red.instance)
        if sat:
            sat_seen += 1
            failures += opt != red.target_value
        else:
            unsat_seen += 1
            failures += not opt < red.target_value
    total = sat_count + unsat_count
    failures += total - sat_seen - unsat_seen
    return SuiteResult("gadget optimum = 3n + 4m exactly when NAE-satisfiable", total, failures)


def embedding_suite(trials: int = 20, seed: int = 0, modes=("halfplane", "unitdisk")) -> SuiteResult:
    rng = random.Random(seed)
    failures = 0
    for _ in range(trials):
        inst = random_mipa(rng, rng.randint(2, 8), rng.randint(1, 4))
        _, opt = brute_force_mipa(inst)
        ok = True
        for mode in modes:
            emb = embed_mipa_as_clique(inst, mode, seed=seed)
            g = scene_to_graph(emb.scene)
            ok = ok and len(exact_max_clique(g).clique) == HALFPLANE_WEIGHT * inst.h + opt
        ok = ok and halfplane_audit(embed_mipa_as_clique(inst, "halfplane", seed=seed))
        failures += not ok
    return SuiteResult("embedding: omega = 5h + OPT", trials, failures)


def halfplane_audit(emb) -> bool:
    """Each h_p(I) misses only its partner h_q(I) and at most five rectangles."""
    objs = emb.scene.objects
    for idx, (kind, k) in enumerate(emb.labels):
        if kind == "rect":
            continue
        partner = emb.object_index("hq" if kind == "hp" else "hp", k)
        misses_hp = [
            j for j, (kd, _) in enumerate(emb.labels) if kd != "rect" and j != idx and not objects_intersect(emb.scene, objs[idx], objs[j])
        ]
        misses_rect = [
            j for j, (kd, _) in enumerate(emb.labels) if kd == "rect" and not objects_intersect(emb.scene, objs[idx], objs[j])
        ]
        if misses_hp != [partner] or len(misses_rect) > 5:
            return False
    return True


def expander_suite(sizes=range(1, 11)) -> SuiteResult:
    failures = 0
    for n in sizes:
        h = gabber_galil_expander(n)
        failures += not (all(d == 8 for d in h.degree()) and len(h.edges) == 4 * n * n)
    return SuiteResult("H(n^2, 8) is 8-regular with 4n^2 edges", len(sizes), failures)


def run_all(quick: bool = False, seed: int = 0) -> list[SuiteResult]:
    f = 10 if quick else 1
    return [
        lens_suite(100 // f, 50 // f, seed),
        translate_suite(200 // f, seed=seed),
        cneeo_suite(100 // f, seed=seed),
        k22_suite(10_000 // (f * 10 if quick else 1), seed=seed),
        homothet_suite(100 // f, seed=seed),
        boxes_suite(100 // f, seed=seed),
        reductions_suite(200 // f, seed=seed),
        gadget_suite(50 // f, 20 // f, seed=seed),
        embedding_suite(20 // f, seed=seed),
        expander_suite(),
    ]


SUITES = {
    "lens": lens_suite,
    "translates": translate_suite,
    "cneeo": cneeo_suite,
    "k22": k22_suite,
    "homothets": homothet_suite,
    "boxes": boxes_suite,
    "reductions": reductions_suite,
    "gadgets": gadget_suite,
    "embedding": embedding_suite,
    "expander": expander_suite,
}
