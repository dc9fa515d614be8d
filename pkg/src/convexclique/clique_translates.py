"""Maximum clique in intersection graphs of translates of a centrally symmetric body.

Two algorithms live here. The geometric one needs the centres: it guesses the
farthest pair of a maximum clique, keeps the centres inside their lens, splits
the lens into two halves (each half is a clique) and finishes with König.

The robust one never looks at geometry. It builds a cobipartite neighbourhood
edge elimination ordering (CNEEO) greedily and reads a maximum clique off it,
or returns a certificate that the graph has no such ordering (and therefore
is not a translate graph).
"""

from __future__ import annotations

from dataclasses import dataclass

from .geometry import ConvexBody, Placement, cross, pt, sub
from .graph import (
    EdgeOrdering,
    IntersectionGraph,
    bits,
    is_cobipartite,
    konig_cover,
    max_clique_cobipartite,
    to_mask,
)


def _centers(placements) -> list:
    out = []
    for p in placements:
        if isinstance(p, Placement):
            if p.scale != 1:
                raise ValueError("translate algorithm received a scaled placement")
            out.append(p.center)
        else:
            out.append(pt(*p))
    return out


def translate_graph(body: ConvexBody, placements) -> IntersectionGraph:
    cs = _centers(placements)
    return IntersectionGraph.from_predicate(len(cs), lambda u, v: body.within(sub(cs[u], cs[v]), 2))


def _below(c1, c2, x) -> bool:
    """Strictly below the line through c1, c2 (for a vertical line: smaller x)."""
    d = sub(c2, c1)
    if d[0] < 0 or (d[0] == 0 and d[1] > 0):
        d = (-d[0], -d[1])
    return cross(d, sub(x, c1)) < 0


def max_clique_translates_geometric(body: ConvexBody, placements, stats: dict | None = None) -> list[int]:
    cs = _centers(placements)
    n = len(cs)
    if n <= 1:
        return list(range(n))
    pairs = []
    for i in range(n):
        for j in range(i + 1, n):
            d = body.norm(sub(cs[i], cs[j]))
            if d <= 2:
                pairs.append((-d, i, j))
    if not pairs:
        return [0]
    pairs.sort()
    best: list[int] = [0]
    examined = 0
    for neg_d, i, j in pairs:
        d = -neg_d
        ci, cj = cs[i], cs[j]
        if d == 0:
            # coincident centres: everything within the cap is the same point
            cand = [k for k in range(n) if cs[k] == ci]
            if len(cand) > len(best):
                best = cand
            continue
        cand = [k for k in range(n) if body.within(sub(cs[k], ci), d) and body.within(sub(cs[k], cj), d)]
        if len(cand) <= len(best):
            continue
        examined += 1
        low = [k for k in cand if _below(ci, cj, cs[k])]
        high = [k for k in cand if not _below(ci, cj, cs[k])]
        # both halves are cliques (any two centres in a half are within d)
        bmask = to_mask(high)
        non = {}
        for u in low:
            row = 0
            for w in high:
                if not body.within(sub(cs[u], cs[w]), 2):
                    row |= 1 << w
            non[u] = row & bmask
        cover, _ = konig_cover(low, high, non)
        clique = sorted(k for k in cand if k not in cover)
        if len(clique) > len(best) or (len(clique) == len(best) and clique < best):
            best = clique
    if stats is not None:
        stats["pairs"] = len(pairs)
        stats["examined"] = examined
    return best


def length_ordering(body: ConvexBody, placements) -> EdgeOrdering:
    """Edges of the translate graph by non-increasing centre distance (ties lexicographic)."""
    cs = _centers(placements)
    edges = []
    for u in range(len(cs)):
        for v in range(u + 1, len(cs)):
            d = body.norm(sub(cs[u], cs[v]))
            if d <= 2:
                edges.append((-d, u, v))
    edges.sort()
    return EdgeOrdering(tuple((u, v) for _, u, v in edges))


# ------------------------------------------------------------------------ CNEEO


@dataclass(frozen=True)
class NoCneeo:
    """Certificate: every remaining edge has a non-cobipartite common neighbourhood."""

    remaining: tuple[tuple[int, int], ...]
    witnesses: tuple[tuple[int, ...], ...]  # per edge, its common neighbourhood

    def verify(self, g: IntersectionGraph) -> bool:
        adj = _edge_adj(g.n, self.remaining)
        for (u, v), common in zip(self.remaining, self.witnesses):
            if sorted(bits(adj[u] & adj[v])) != sorted(common):
                return False
            if is_cobipartite(g, common)[0]:
                return False
        return bool(self.remaining)


def _edge_adj(n: int, edges) -> list[int]:
    adj = [0] * n
    for u, v in edges:
        adj[u] |= 1 << v
        adj[v] |= 1 << u
    return adj


def compute_cneeo(g: IntersectionGraph) -> EdgeOrdering | NoCneeo:
    """Greedy elimination: repeatedly remove the smallest edge whose common
    neighbourhood in the remaining graph is cobipartite in ``g``.

    Removing edges only shrinks common neighbourhoods, and induced subgraphs
    of cobipartite graphs stay cobipartite, so an eligible edge stays eligible.
    Hence the greedy never paints itself into a corner: if it gets stuck, no
    ordering of the remaining edges can start, so no CNEEO exists at all.
    """
    remaining = set(g.edges())
    adj = list(g.adj)
    eligible: dict[tuple[int, int], bool] = {}
    dirty = set(remaining)
    order = []
    while remaining:
        for e in dirty:
            if e in remaining:
                u, v = e
                eligible[e] = is_cobipartite(g, bits(adj[u] & adj[v]))[0]
        dirty = set()
        pick = min((e for e in remaining if eligible[e]), default=None)
        if pick is None:
            stuck = tuple(sorted(remaining))
            return NoCneeo(stuck, tuple(tuple(bits(adj[u] & adj[v])) for u, v in stuck))
        u, v = pick
        order.append(pick)
        remaining.discard(pick)
        adj[u] &= ~(1 << v)
        adj[v] &= ~(1 << u)
        # only edges touching u or v can see a different common neighbourhood
        for w in bits(adj[u]):
            dirty.add((min(u, w), max(u, w)))
        for w in bits(adj[v]):
            dirty.add((min(v, w), max(v, w)))
    return EdgeOrdering(tuple(order))


def _check_ordering(g: IntersectionGraph, ordering: EdgeOrdering) -> None:
    edges = set(g.edges())
    if len(ordering) != len(edges) or set(ordering.edges) != edges:
        raise ValueError("ordering is not a permutation of the edge set")


def _suffix_neighborhoods(g: IntersectionGraph, ordering: EdgeOrdering):
    """Yield ``(k, u, v, N_k)``: common neighbours of e_k in the graph of e_k..e_m."""
    adj = list(g.adj)
    for k, (u, v) in enumerate(ordering.edges):
        yield k, u, v, bits(adj[u] & adj[v])
        adj[u] &= ~(1 << v)
        adj[v] &= ~(1 << u)


def validate_cneeo(g: IntersectionGraph, ordering: EdgeOrdering) -> bool:
    _check_ordering(g, ordering)
    return all(is_cobipartite(g, common)[0] for _, _, _, common in _suffix_neighborhoods(g, ordering))


def max_clique_from_cneeo(g: IntersectionGraph, ordering: EdgeOrdering) -> list[int]:
    _check_ordering(g, ordering)
    if g.n == 0:
        return []
    best = [0]
    for _, u, v, common in _suffix_neighborhoods(g, ordering):
        ok, part = is_cobipartite(g, common)
        if not ok:
            raise ValueError("ordering is not a CNEEO")
        if len(common) + 2 <= len(best):
            continue
        clique = sorted(max_clique_cobipartite(g, part) + [u, v])
        if len(clique) > len(best) or (len(clique) == len(best) and clique < best):
            best = clique
    return best


@dataclass(frozen=True)
class RobustResult:
    clique: list[int] | None
    certificate: NoCneeo | None = None

    @property
    def in_class(self) -> bool | None:
        """False when the graph is certified not to be a translate graph; None if unknown."""
        return False if self.certificate is not None else None


def robust_max_clique_translates(g: IntersectionGraph) -> RobustResult:
    res = compute_cneeo(g)
    if isinstance(res, NoCneeo):
        return RobustResult(None, res)
    return RobustResult(max_clique_from_cneeo(g, res))
