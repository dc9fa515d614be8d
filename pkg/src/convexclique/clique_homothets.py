"""Homothets of a centrally symmetric convex body.

Structural checks (the K_{2,2} diagonal property, the neighbourhood of the
smallest homothet) plus an exact peeling solver. The randomized EPTAS that
normally sits behind ``peel_and_solve`` is replaced by exact branch and bound.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from itertools import combinations, permutations
from typing import Callable, Sequence

from .geometry import ConvexBody, Placement, homothets_intersect, orient
from .graph import (
    ODD_CYCLE_GUARD,
    GuardExceeded,
    IntersectionGraph,
    brute_force_max_clique,
    exact_max_clique,
    find_two_mutually_induced_odd_cycles,
)

NEIGHBORHOOD_GUARD = 25
BETA = Fraction(1, 36)


@dataclass(frozen=True)
class HomothetScene:
    body: ConvexBody
    placements: tuple[Placement, ...]

    def __post_init__(self):
        object.__setattr__(self, "placements", tuple(self.placements))
        for p in self.placements:
            if p.scale <= 0:
                raise ValueError("scales must be positive")

    def __len__(self):
        return len(self.placements)

    def intersect(self, i: int, j: int) -> bool:
        return homothets_intersect(self.body, self.placements[i], self.placements[j])

    def graph(self) -> IntersectionGraph:
        return IntersectionGraph.from_predicate(len(self), self.intersect)


class NotK22Error(ValueError):
    pass


class NotConvexPositionError(ValueError):
    pass


class CollinearCentersError(NotConvexPositionError):
    pass


def hull_order(points) -> list[int] | None:
    """Indices of four points in counter-clockwise hull order, or None if not in convex position.

    Raises CollinearCentersError if three of the points are collinear.
    """
    for a, b, c in combinations(range(4), 3):
        if orient(points[a], points[b], points[c]) == 0:
            raise CollinearCentersError("three centres are collinear")
    # the hull order is the cyclic order in which every consecutive triple turns left
    for perm in permutations(range(1, 4)):
        order = [0, *perm]
        if all(orient(points[order[i]], points[order[(i + 1) % 4]], points[order[(i + 2) % 4]]) > 0 for i in range(4)):
            return order
    return None


def k22_diagonal_property(scene: HomothetScene, indices: Sequence[int]) -> bool:
    """True iff the two non-edges among the four homothets join opposite hull corners."""
    idx = list(indices)
    if len(idx) != 4 or len(set(idx)) != 4:
        raise ValueError("need four distinct indices")
    non_edges = [(a, b) for a, b in combinations(range(4), 2) if not scene.intersect(idx[a], idx[b])]
    if len(non_edges) != 2 or set(non_edges[0]) & set(non_edges[1]):
        raise NotK22Error("the four homothets do not induce K_{2,2}")
    centers = [scene.placements[i].center for i in idx]
    order = hull_order(centers)
    if order is None:
        raise NotConvexPositionError("centres are not in convex position")
    pos = {v: k for k, v in enumerate(order)}
    return all((pos[a] - pos[b]) % 4 == 2 for a, b in non_edges)


def independence_number(g: IntersectionGraph, vertices: Sequence[int]) -> int:
    """Exact alpha(g[vertices]) as the clique number of the complement."""
    if not vertices:
        return 0
    return len(exact_max_clique(g.induced(list(vertices)).complement()).clique)


def brute_force_independence_number(g: IntersectionGraph, vertices: Sequence[int]) -> int:
    """alpha(g[vertices]) by enumerating every maximal independent set."""
    vs = list(vertices)
    if not vs:
        return 0
    return len(brute_force_max_clique(g.induced(vs).complement(), guard=NEIGHBORHOOD_GUARD))


@dataclass(frozen=True)
class NeighborhoodBound:
    vertex: int
    alpha: int | None
    verified: bool


def smallest_homothet(scene: HomothetScene, alive: Sequence[int] | None = None) -> int:
    alive = range(len(scene)) if alive is None else alive
    return min(alive, key=lambda i: (scene.placements[i].scale, i))


def smallest_homothet_neighborhood_bound(scene: HomothetScene, guard: int = NEIGHBORHOOD_GUARD) -> NeighborhoodBound:
    if len(scene) == 0:
        raise ValueError("scene is empty")
    g = scene.graph()
    v = smallest_homothet(scene)
    nb = g.neighbors(v)
    if len(nb) > guard:
        return NeighborhoodBound(v, None, False)
    alpha = brute_force_independence_number(g, nb)
    return NeighborhoodBound(v, alpha, alpha <= 6)


def _exact_inner(g: IntersectionGraph, v: int, epsilon: float | None = None) -> list[int]:
    """Largest clique of ``g`` containing ``v`` (``epsilon`` is accepted and ignored)."""
    nb = g.neighbors(v)
    sub_clique = exact_max_clique(g.induced(nb)).clique if nb else []
    return sorted([v] + [nb[i] for i in sub_clique])


def peel_and_solve(
    scene: HomothetScene,
    inner_solver: Callable[[IntersectionGraph, int], list[int]] | None = None,
    epsilon: float | None = None,
    trace: list | None = None,
) -> list[int]:
    """Take the smallest homothet v, solve the best clique through v, delete v, repeat."""
    solver = inner_solver or (lambda g, v: _exact_inner(g, v, epsilon))
    g = scene.graph()
    alive = list(range(len(scene)))
    best: list[int] = []
    while alive:
        v = smallest_homothet(scene, alive)
        sub_g = g.induced(alive)
        local = alive.index(v)
        clique = sorted(alive[i] for i in solver(sub_g, local))
        if trace is not None:
            trace.append((v, len(sub_g.neighbors(local)) + 1, len(clique)))
        if len(clique) > len(best) or (len(clique) == len(best) and clique < best):
            best = clique
        alive.remove(v)
    return best


@dataclass
class PreconditionReport:
    odd_cycles: tuple | None = None
    odd_cycle_checked: bool = False
    min_density: Fraction | None = None
    density_ok: bool | None = None
    vc_dimension: str = "not computed - out of scope"
    notes: list[str] = field(default_factory=list)

    @property
    def odd_cycle_ok(self) -> bool | None:
        return (self.odd_cycles is None) if self.odd_cycle_checked else None


def check_eptas_preconditions(scene: HomothetScene, guard: int = ODD_CYCLE_GUARD) -> PreconditionReport:
    """Check the structural inputs of the EPTAS on a small scene.

    (a) the complement has no two mutually induced odd cycles;
    (b) at every peeling step, the closed neighbourhood of the smallest
        homothet has clique number at least 1/36 of its size.
    """
    rep = PreconditionReport()
    g = scene.graph()
    try:
        rep.odd_cycles = find_two_mutually_induced_odd_cycles(g.complement(), guard)
        rep.odd_cycle_checked = True
    except GuardExceeded as exc:
        rep.notes.append(f"odd-cycle check skipped: {exc}")
    trace: list = []
    peel_and_solve(scene, trace=trace)
    if trace:
        rep.min_density = min(Fraction(size, nsize) for _, nsize, size in trace)
        rep.density_ok = rep.min_density >= BETA
    return rep
