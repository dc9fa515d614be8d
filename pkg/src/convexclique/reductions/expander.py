"""The Margulis / Gabber-Galil 8-regular expander on Z_n x Z_n, and expansion checks."""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from ..graph import GuardExceeded

EXPANSION_GUARD = 25
SPECTRAL_GUARD = 400


@dataclass(frozen=True)
class MultiGraph:
    """Undirected multigraph; loops and parallel edges are kept."""

    n: int
    edges: tuple[tuple[int, int], ...]

    def degree(self) -> list[int]:
        deg = [0] * self.n
        for u, v in self.edges:
            deg[u] += 1
            deg[v] += 1  # a loop adds 2
        return deg

    def adjacency_matrix(self):
        import numpy as np

        a = np.zeros((self.n, self.n))
        for u, v in self.edges:
            if u == v:
                a[u, u] += 2
            else:
                a[u, v] += 1
                a[v, u] += 1
        return a

    def is_connected(self) -> bool:
        if self.n == 0:
            return True
        nb: list[set[int]] = [set() for _ in range(self.n)]
        for u, v in self.edges:
            nb[u].add(v)
            nb[v].add(u)
        seen = {0}
        stack = [0]
        while stack:
            u = stack.pop()
            for w in nb[u] - seen:
                seen.add(w)
                stack.append(w)
        return len(seen) == self.n


@dataclass(frozen=True)
class ExpanderGraph(MultiGraph):
    side: int = 1

    def vertex(self, x: int, y: int) -> int:
        return (x % self.side) * self.side + (y % self.side)

    def coords(self, v: int) -> tuple[int, int]:
        return divmod(v, self.side)


def gabber_galil_expander(n: int) -> ExpanderGraph:
    """H(n^2, 8): every vertex (x, y) contributes the four '+' rules

    (x+2y, y), (x+2y+1, y), (x, y+2x), (x, y+2x+1)  (mod n).

    The '-' rules are exactly the reverse edges of these, so keeping one
    copy per '+' rule application yields 4n^2 edges and degree 8 everywhere
    (a loop counts twice).
    """
    if n < 1:
        raise ValueError("n must be at least 1")
    edges = []
    for x in range(n):
        for y in range(n):
            u = x * n + y
            for tx, ty in (
                (x + 2 * y, y),
                (x + 2 * y + 1, y),
                (x, y + 2 * x),
                (x, y + 2 * x + 1),
            ):
                edges.append((u, (tx % n) * n + ty % n))
    return ExpanderGraph(n * n, tuple(edges), n)


def gabber_galil_neighbors(n: int, x: int, y: int) -> list[tuple[int, int]]:
    """The eight listed neighbours of (x, y), straight from the definition."""
    return [
        ((x + 2 * y) % n, y),
        ((x - 2 * y) % n, y),
        ((x + 2 * y + 1) % n, y),
        ((x - 2 * y - 1) % n, y),
        (x, (y + 2 * x) % n),
        (x, (y - 2 * x) % n),
        (x, (y + 2 * x + 1) % n),
        (x, (y - 2 * x - 1) % n),
    ]


def edge_expansion(g: MultiGraph, max_subset_size: int | None = None, guard: int = EXPANSION_GUARD) -> Fraction:
    """min |boundary(S)| / |S| over nonempty S with |S| <= n/2 (exhaustive, loops ignored).

    Subsets are visited in Gray-code order so each step updates the cut in
    time proportional to one vertex degree.
    """
    n = g.n
    if n > guard:
        raise GuardExceeded(f"exhaustive expansion limited to {guard} vertices (got {n})")
    if n < 2:
        raise ValueError("edge expansion needs at least two vertices")
    limit = n // 2 if max_subset_size is None else min(max_subset_size, n // 2)
    incident: list[list[int]] = [[] for _ in range(n)]
    for u, v in g.edges:
        if u != v:
            incident[u].append(v)
            incident[v].append(u)
    inside = [False] * n
    cut = 0
    size = 0
    best: Fraction | None = None
    for i in range(1, 1 << n):
        v = (i & -i).bit_length() - 1  # bit flipped between gray(i-1) and gray(i)
        inside[v] = not inside[v]
        delta = 0
        for w in incident[v]:
            delta += -1 if inside[w] else 1
        if inside[v]:
            cut += delta
            size += 1
        else:
            cut -= delta
            size -= 1
        if 0 < size <= limit:
            r = Fraction(cut, size)
            if best is None or r < best:
                best = r
    return best


def second_eigenvalue(g: MultiGraph, tol: float = 1e-12, max_iter: int = 20_000, seed: int = 0) -> float:
    """Second-largest adjacency eigenvalue by deflated subspace iteration.

    The spectrum is shifted by the maximum degree so that it is non-negative
    and the largest two eigenvalues are also largest in magnitude. A small
    block is iterated with QR re-orthonormalisation and a Rayleigh-Ritz step;
    the block is wider than two so that the convergence ratio stays good.
    """
    import numpy as np

    n = g.n
    if n > SPECTRAL_GUARD:
        raise GuardExceeded(f"spectral routine limited to {SPECTRAL_GUARD} vertices (got {n})")
    if n < 2:
        raise ValueError("need at least two vertices")
    a = g.adjacency_matrix()
    shift = float(np.abs(a).sum(axis=1).max())
    m = a + shift * np.eye(n)
    k = min(n, 8)
    rng = np.random.default_rng(seed)
    q, _ = np.linalg.qr(rng.standard_normal((n, k)))
    prev = None
    for _ in range(max_iter):
        z = m @ q
        q, _ = np.linalg.qr(z)
        h = q.T @ m @ q
        ritz, vecs = np.linalg.eigh((h + h.T) / 2)
        q = q @ vecs[:, ::-1]
        vals = ritz[::-1]
        resid = np.linalg.norm(m @ q[:, :2] - q[:, :2] * vals[:2], axis=0).max()
        if resid < tol * shift * 2 or (prev is not None and abs(prev - vals[1]) < tol * 1e-3 and resid < 1e-8):
            break
        prev = vals[1]
    else:
        raise RuntimeError("subspace iteration did not converge")
    return float(vals[1] - shift)


def dense_second_eigenvalue(g: MultiGraph) -> float:
    import numpy as np

    return float(np.sort(np.linalg.eigvalsh(g.adjacency_matrix()))[-2])
