"""Cliques of axis-parallel rectangles, alone or mixed with half-planes.

Rectangles have the Helly property, so a clique of rectangles is exactly the
set of rectangles covering some point, and it suffices to probe points whose
coordinates are lower-left corner coordinates.
"""

from __future__ import annotations

from typing import Sequence

from .geometry import AxisRect, HalfPlane, halfplanes_intersect
from .graph import konig_cover, to_mask


class HalfPlanesNotPairwiseIntersecting(ValueError):
    """Two half-planes are disjoint; Maximum Clique is hard for such inputs."""


def _candidate_points(rects: Sequence[AxisRect]):
    xs = sorted({r.x_lo for r in rects})
    ys = sorted({r.y_lo for r in rects})
    return [(x, y) for x in xs for y in ys]


def _covering_sets(rects: Sequence[AxisRect]) -> list[frozenset[int]]:
    seen = set()
    out = []
    for p in _candidate_points(rects):
        s = frozenset(i for i, r in enumerate(rects) if r.contains(p))
        if s and s not in seen:
            seen.add(s)
            out.append(s)
    return out


def max_clique_rectangles(rects: Sequence[AxisRect]) -> list[int]:
    best: list[int] = []
    for s in _covering_sets(rects):
        cand = sorted(s)
        if len(cand) > len(best) or (len(cand) == len(best) and cand < best):
            best = cand
    return best


def enumerate_maximal_cliques_rectangles(rects: Sequence[AxisRect]) -> list[list[int]]:
    """All maximal cliques, sorted; each is the covering set of some arrangement cell."""
    sets = _covering_sets(rects)
    maximal = [s for s in sets if not any(s < t for t in sets)]
    return sorted(sorted(s) for s in maximal)


def common_point(rects: Sequence[AxisRect]):
    """A point in all rectangles, or None (the Helly witness)."""
    if not rects:
        return None
    x = max(r.x_lo for r in rects)
    y = max(r.y_lo for r in rects)
    if x <= min(r.x_hi for r in rects) and y <= min(r.y_hi for r in rects):
        return (x, y)
    return None


def check_pairwise_intersecting(halfplanes: Sequence[HalfPlane]) -> None:
    for i in range(len(halfplanes)):
        for j in range(i + 1, len(halfplanes)):
            if not halfplanes_intersect(halfplanes[i], halfplanes[j]):
                raise HalfPlanesNotPairwiseIntersecting(
                    f"half-planes {i} and {j} are disjoint; with disjoint pairs the problem "
                    "encodes Max Interval Permutation Avoidance and is APX-hard"
                )


def rect_meets_halfplane(r: AxisRect, h: HalfPlane) -> bool:
    return any(h.contains(p) for p in r.polygon())


def max_clique_halfplanes_rectangles(halfplanes: Sequence[HalfPlane], rects: Sequence[AxisRect]) -> list[int]:
    """Vertex ids: half-planes are ``0..k-1``, rectangles ``k..k+r-1``."""
    check_pairwise_intersecting(halfplanes)
    k = len(halfplanes)
    hits = [[rect_meets_halfplane(r, h) for r in rects] for h in halfplanes]
    groups = enumerate_maximal_cliques_rectangles(rects) or [[]]
    best: list[int] = []
    hp = list(range(k))
    for group in groups:
        right = [k + j for j in group]
        rmask = to_mask(right)
        non = {}
        for i in hp:
            row = 0
            for j in group:
                if not hits[i][j]:
                    row |= 1 << (k + j)
            non[i] = row & rmask
        cover, _ = konig_cover(hp, right, non)
        clique = sorted(v for v in hp + right if v not in cover)
        if len(clique) > len(best) or (len(clique) == len(best) and clique < best):
            best = clique
    return best
