"""Abstract graphs, clique oracles, and the bipartite matching / König machinery.

Vertices are dense ids ``0..n-1``; adjacency is stored as one Python ``int``
bitmask per vertex, which keeps the clique searches short and fast.
"""

from __future__ import annotations

import time
from dataclasses import dataclass
from itertools import combinations
from typing import Iterable, Sequence

BRUTE_FORCE_GUARD = 30
ODD_CYCLE_GUARD = 18


class GuardExceeded(ValueError):
    """Input is larger than the exhaustive routine is allowed to handle."""


def bits(mask: int) -> list[int]:
    out = []
    while mask:
        low = mask & -mask
        out.append(low.bit_length() - 1)
        mask ^= low
    return out


def to_mask(vertices: Iterable[int]) -> int:
    m = 0
    for v in vertices:
        m |= 1 << v
    return m


@dataclass(frozen=True)
class IntersectionGraph:
    n: int
    adj: tuple[int, ...]
    labels: tuple[str, ...] = ()

    def __post_init__(self):
        adj = tuple(self.adj)
        object.__setattr__(self, "adj", adj)
        if len(adj) != self.n:
            raise ValueError("adjacency length does not match n")
        full = (1 << self.n) - 1
        for u, row in enumerate(adj):
            if row >> u & 1:
                raise ValueError(f"self-loop at {u}")
            if row & ~full:
                raise ValueError(f"vertex {u} has neighbours outside the vertex range")
            for v in bits(row):
                if not adj[v] >> u & 1:
                    raise ValueError(f"adjacency is not symmetric at ({u}, {v})")
        labels = tuple(self.labels)
        if labels and len(labels) != self.n:
            raise ValueError("labels must be empty or one per vertex")
        object.__setattr__(self, "labels", labels)

    @classmethod
    def from_edges(cls, n: int, edges: Iterable[tuple[int, int]], labels: Sequence[str] = ()) -> "IntersectionGraph":
        adj = [0] * n
        for u, v in edges:
            if u == v:
                raise ValueError(f"self-loop at {u}")
            if not (0 <= u < n and 0 <= v < n):
                raise ValueError(f"edge ({u}, {v}) out of range for {n} vertices")
            adj[u] |= 1 << v
            adj[v] |= 1 << u
        return cls(n, tuple(adj), tuple(labels))

    @classmethod
    def from_predicate(cls, n: int, pred, labels: Sequence[str] = ()) -> "IntersectionGraph":
        return cls.from_edges(n, ((u, v) for u, v in combinations(range(n), 2) if pred(u, v)), labels)

    def has_edge(self, u: int, v: int) -> bool:
        return bool(self.adj[u] >> v & 1)

    def neighbors(self, u: int) -> list[int]:
        return bits(self.adj[u])

    def edges(self) -> list[tuple[int, int]]:
        return [(u, v) for u in range(self.n) for v in bits(self.adj[u] >> (u + 1) << (u + 1))]

    @property
    def m(self) -> int:
        return sum(bin(a).count("1") for a in self.adj) // 2

    def complement(self) -> "IntersectionGraph":
        full = (1 << self.n) - 1
        return IntersectionGraph(self.n, tuple(full & ~a & ~(1 << u) for u, a in enumerate(self.adj)), self.labels)

    def induced(self, vertices: Sequence[int]) -> "IntersectionGraph":
        """Induced subgraph, relabelled 0..k-1 in the given order."""
        index = {v: i for i, v in enumerate(vertices)}
        adj = []
        for v in vertices:
            adj.append(to_mask(index[w] for w in bits(self.adj[v]) if w in index))
        labels = tuple(self.labels[v] for v in vertices) if self.labels else ()
        return IntersectionGraph(len(vertices), tuple(adj), labels)

    def is_clique(self, vertices: Iterable[int]) -> bool:
        vs = list(vertices)
        mask = to_mask(vs)
        return all((self.adj[v] | 1 << v) & mask == mask for v in vs)


@dataclass(frozen=True)
class EdgeOrdering:
    edges: tuple[tuple[int, int], ...]

    def __post_init__(self):
        norm = tuple((min(u, v), max(u, v)) for u, v in self.edges)
        if len(set(norm)) != len(norm):
            raise ValueError("an edge appears twice in the ordering")
        object.__setattr__(self, "edges", norm)

    def __len__(self):
        return len(self.edges)

    def __iter__(self):
        return iter(self.edges)


# ----------------------------------------------------------------- clique oracles


def brute_force_max_clique(g: IntersectionGraph, guard: int = BRUTE_FORCE_GUARD) -> list[int]:
    """Maximum clique by plain Bron-Kerbosch enumeration of every maximal clique.

    Ties go to the lexicographically smallest sorted vertex list.
    """
    if g.n > guard:
        raise GuardExceeded(f"brute force limited to {guard} vertices (got {g.n})")
    if g.n == 0:
        return []
    best: list[int] = []

    def expand(r: list[int], p: int, x: int):
        nonlocal best
        if not p and not x:
            cand = sorted(r)
            if len(cand) > len(best) or (len(cand) == len(best) and cand < best):
                best = cand
            return
        for v in bits(p):
            expand(r + [v], p & g.adj[v], x & g.adj[v])
            p &= ~(1 << v)
            x |= 1 << v

    expand([], (1 << g.n) - 1, 0)
    return best


def brute_force_maximal_cliques(g: IntersectionGraph, guard: int = BRUTE_FORCE_GUARD) -> list[list[int]]:
    if g.n > guard:
        raise GuardExceeded(f"brute force limited to {guard} vertices (got {g.n})")
    out: list[list[int]] = []

    def expand(r, p, x):
        if not p and not x:
            out.append(sorted(r))
            return
        for v in bits(p):
            expand(r + [v], p & g.adj[v], x & g.adj[v])
            p &= ~(1 << v)
            x |= 1 << v

    if g.n:
        expand([], (1 << g.n) - 1, 0)
    return sorted(out)


def greedy_clique(g: IntersectionGraph) -> list[int]:
    """Pick vertices by descending degree while they stay adjacent to all picked."""
    order = sorted(range(g.n), key=lambda v: (-bin(g.adj[v]).count("1"), v))
    clique: list[int] = []
    cand = (1 << g.n) - 1
    for v in order:
        if cand >> v & 1:
            clique.append(v)
            cand &= g.adj[v]
    return sorted(clique)


def _color_bound(adj: Sequence[int], cand: int) -> tuple[list[int], list[int]]:
    """Greedy sequential colouring of ``cand``; returns vertices with their colour numbers."""
    order: list[int] = []
    colors: list[int] = []
    color = 0
    uncolored = cand
    while uncolored:
        color += 1
        avail = uncolored
        while avail:
            low = avail & -avail
            v = low.bit_length() - 1
            avail &= ~adj[v] & ~low
            uncolored &= ~low
            order.append(v)
            colors.append(color)
    return order, colors


@dataclass
class CliqueResult:
    clique: list[int]
    optimal: bool
    nodes: int = 0


def exact_max_clique(
    g: IntersectionGraph,
    time_budget: float | None = None,
    start: Sequence[int] | None = None,
) -> CliqueResult:
    """Branch and bound with greedy colouring bounds (Tomita-style MCQ).

    With ``time_budget`` (seconds) the search may stop early and return the
    incumbent with ``optimal=False``. The returned clique is sorted; among
    cliques found of the best size the search keeps the first, and a final
    pass prefers the lexicographically smallest when the search completed.
    """
    n = g.n
    if n == 0:
        return CliqueResult([], True)
    adj = g.adj
    best = list(start) if start else greedy_clique(g)
    deadline = None if time_budget is None else time.monotonic() + time_budget
    nodes = 0
    aborted = False

    def search(r: list[int], cand: int):
        nonlocal best, nodes, aborted
        nodes += 1
        if deadline is not None and nodes & 1023 == 0 and time.monotonic() > deadline:
            aborted = True
        if aborted:
            return
        order, colors = _color_bound(adj, cand)
        for i in range(len(order) - 1, -1, -1):
            if len(r) + colors[i] <= len(best):
                return
            v = order[i]
            nr = r + [v]
            nc = cand & adj[v]
            if nc:
                search(nr, nc)
            elif len(nr) > len(best):
                best = nr
            cand &= ~(1 << v)
            if aborted:
                return

    search([], (1 << n) - 1)
    return CliqueResult(sorted(best), not aborted, nodes)


def max_clique_size(g: IntersectionGraph) -> int:
    return len(exact_max_clique(g).clique)


# -------------------------------------------------------------- cobipartite tools


def is_cobipartite(g: IntersectionGraph, subset: Iterable[int] | None = None):
    """2-colour the complement of ``g[subset]``.

    Returns ``(True, (A, B))`` with both sides cliques of ``g`` or ``(False, None)``.
    """
    verts = sorted(range(g.n) if subset is None else set(subset))
    mask = to_mask(verts)
    side: dict[int, int] = {}
    for s in verts:
        if s in side:
            continue
        side[s] = 0
        stack = [s]
        while stack:
            u = stack.pop()
            non = mask & ~g.adj[u] & ~(1 << u)
            for w in bits(non):
                if w not in side:
                    side[w] = 1 - side[u]
                    stack.append(w)
                elif side[w] == side[u]:
                    return False, None
    a = [v for v in verts if side[v] == 0]
    b = [v for v in verts if side[v] == 1]
    return True, (a, b)


def bipartite_matching(left: Sequence[int], right: Sequence[int], adj: dict[int, int]) -> dict[int, int]:
    """Maximum matching by augmenting paths; ``adj[u]`` is a bitmask of right vertices.

    Returns the matching as a map right -> left.
    """
    match_r: dict[int, int] = {}

    def augment(u: int, seen: set[int]) -> bool:
        for w in bits(adj.get(u, 0)):
            if w in seen:
                continue
            seen.add(w)
            if w not in match_r or augment(match_r[w], seen):
                match_r[w] = u
                return True
        return False

    for u in left:
        augment(u, set())
    return match_r


def konig_cover(left: Sequence[int], right: Sequence[int], adj: dict[int, int]) -> tuple[set[int], dict[int, int]]:
    """Minimum vertex cover of a bipartite graph via König's construction."""
    match_r = bipartite_matching(left, right, adj)
    match_l = {u: w for w, u in match_r.items()}
    # Z: vertices reachable from unmatched left vertices along alternating paths
    z_left = {u for u in left if u not in match_l}
    z_right: set[int] = set()
    frontier = list(z_left)
    while frontier:
        u = frontier.pop()
        for w in bits(adj.get(u, 0)):
            if w in z_right:
                continue
            z_right.add(w)
            nxt = match_r.get(w)
            if nxt is not None and nxt not in z_left:
                z_left.add(nxt)
                frontier.append(nxt)
    cover = (set(left) - z_left) | z_right
    return cover, match_r


def max_clique_cobipartite(g: IntersectionGraph, partition: tuple[Sequence[int], Sequence[int]]) -> list[int]:
    """Maximum clique inside ``A | B`` where A and B are cliques of ``g``.

    The non-edges between A and B form a bipartite graph whose maximum
    independent sets are exactly the cliques we want.
    """
    a, b = list(partition[0]), list(partition[1])
    if set(a) & set(b):
        raise ValueError("partition sides overlap")
    if not g.is_clique(a) or not g.is_clique(b):
        raise ValueError("partition sides must both be cliques")
    bmask = to_mask(b)
    non = {u: bmask & ~g.adj[u] for u in a}
    cover, _ = konig_cover(a, b, non)
    return sorted(v for v in a + b if v not in cover)


def bipartite_complement_matching_size(g: IntersectionGraph, partition) -> int:
    a, b = list(partition[0]), list(partition[1])
    bmask = to_mask(b)
    return len(bipartite_matching(a, b, {u: bmask & ~g.adj[u] for u in a}))


# --------------------------------------------------------------------- odd cycles


def chordless_odd_cycles(g: IntersectionGraph) -> list[tuple[int, ...]]:
    """All induced (chordless) odd cycles, each listed once from its smallest vertex."""
    found: list[tuple[int, ...]] = []
    adj = g.adj

    def extend(path: list[int], pmask: int):
        start, last = path[0], path[-1]
        for w in bits(adj[last]):
            if w <= start or pmask >> w & 1:
                continue
            # w may only touch the path at `last` (and `start`, which closes it)
            inner = pmask & ~(1 << last) & ~(1 << start)
            if adj[w] & inner:
                continue
            if len(path) >= 2 and adj[w] >> start & 1:
                cyc = path + [w]
                if len(cyc) % 2 == 1 and cyc[1] < cyc[-1]:
                    found.append(tuple(cyc))
                continue
            extend(path + [w], pmask | 1 << w)

    for s in range(g.n):
        extend([s], 1 << s)
    return found


def find_two_mutually_induced_odd_cycles(g: IntersectionGraph, guard: int = ODD_CYCLE_GUARD):
    """Two vertex-disjoint chordless odd cycles with no edge between them, or None."""
    if g.n > guard:
        raise GuardExceeded(f"odd-cycle search limited to {guard} vertices (got {g.n})")
    cycles = chordless_odd_cycles(g)
    masks = [to_mask(c) for c in cycles]
    nbhd = [0] * len(cycles)
    for i, c in enumerate(cycles):
        for v in c:
            nbhd[i] |= g.adj[v]
    order = sorted(range(len(cycles)), key=lambda i: (len(cycles[i]), cycles[i]))
    for x, i in enumerate(order):
        for j in order[x + 1 :]:
            if masks[i] & masks[j] == 0 and nbhd[i] & masks[j] == 0:
                return cycles[i], cycles[j]
    return None
