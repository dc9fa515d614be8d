"""Max Interval Permutation Avoidance.

A matching joins ``(i, 0)`` to ``(sigma(i), 1)`` for every ``i`` in ``1..n``.
Each interval is pushed to level 0 or 1 and covers the points of that level
inside it; a matching edge is preserved when neither endpoint is covered.
"""

from __future__ import annotations

import random
from dataclasses import dataclass
from typing import Sequence

from .graph import GuardExceeded

BRUTE_FORCE_GUARD = 24


@dataclass(frozen=True)
class MipaInstance:
    n: int
    sigma: tuple[int, ...]
    intervals: tuple[tuple[int, int], ...]
    symmetric: bool = False
    bounded_length: bool = False

    def __post_init__(self):
        sigma = tuple(int(s) for s in self.sigma)
        intervals = tuple((int(l), int(r)) for l, r in self.intervals)
        object.__setattr__(self, "sigma", sigma)
        object.__setattr__(self, "intervals", intervals)
        if len(sigma) != self.n or sorted(sigma) != list(range(1, self.n + 1)):
            raise ValueError("sigma must be a permutation of 1..n")
        for l, r in intervals:
            if not 1 <= l <= r <= self.n:
                raise ValueError(f"interval [{l}, {r}] is outside 1..{self.n}")
        if self.symmetric and not self.is_involution():
            raise ValueError("instance is flagged symmetric but sigma is not an involution")
        if self.bounded_length and any(r - l + 1 > 5 for l, r in intervals):
            raise ValueError("instance is flagged bounded-length but an interval has more than 5 points")

    @property
    def h(self) -> int:
        return len(self.intervals)

    def is_involution(self) -> bool:
        return all(self.sigma[self.sigma[i] - 1] == i + 1 for i in range(self.n))

    def intervals_disjoint(self) -> bool:
        spans = sorted(self.intervals)
        return all(a[1] < b[0] for a, b in zip(spans, spans[1:]))

    def edges(self) -> list[tuple[int, int]]:
        return [(i, self.sigma[i - 1]) for i in range(1, self.n + 1)]


def _check_placement(inst: MipaInstance, placement: Sequence[int]) -> None:
    if len(placement) != inst.h or any(b not in (0, 1) for b in placement):
        raise ValueError("placement must assign 0 or 1 to every interval")


def covered_points(inst: MipaInstance, placement: Sequence[int]) -> tuple[set[int], set[int]]:
    low: set[int] = set()
    high: set[int] = set()
    for (l, r), level in zip(inst.intervals, placement):
        (low if level == 0 else high).update(range(l, r + 1))
    return low, high


def evaluate_placement(inst: MipaInstance, placement: Sequence[int]) -> int:
    _check_placement(inst, placement)
    low, high = covered_points(inst, placement)
    return sum(1 for i, j in inst.edges() if i not in low and j not in high)


def _kill_masks(inst: MipaInstance) -> tuple[list[int], list[int]]:
    """Per interval: edges destroyed when placed at level 0, and at level 1."""
    where0 = [0] * (inst.n + 1)  # edge i has its level-0 endpoint at i
    where1 = [0] * (inst.n + 1)
    for i, j in inst.edges():
        where0[i] |= 1 << (i - 1)
        where1[j] |= 1 << (i - 1)
    kill0, kill1 = [], []
    for l, r in inst.intervals:
        a = b = 0
        for x in range(l, r + 1):
            a |= where0[x]
            b |= where1[x]
        kill0.append(a)
        kill1.append(b)
    return kill0, kill1


def brute_force_mipa(inst: MipaInstance, guard: int = BRUTE_FORCE_GUARD) -> tuple[tuple[int, ...], int]:
    """Exhaustive search over placements (0 before 1) with a covered-edge bound.

    The first optimum met in this order is the lexicographically smallest.
    """
    h = inst.h
    if h > guard:
        raise GuardExceeded(f"brute force limited to {guard} intervals (got {h})")
    kill0, kill1 = _kill_masks(inst)
    n = inst.n
    best_val = -1
    best: list[int] = []
    cur = [0] * h

    def dfs(k: int, killed: int):
        nonlocal best_val, best
        bound = n - killed.bit_count()
        if bound <= best_val:
            return
        if k == h:
            best_val = bound
            best = cur.copy()
            return
        cur[k] = 0
        dfs(k + 1, killed | kill0[k])
        cur[k] = 1
        dfs(k + 1, killed | kill1[k])

    dfs(0, 0)
    return tuple(best), best_val


def local_search_mipa(inst: MipaInstance, seed: int = 0, max_iters: int = 10_000) -> tuple[tuple[int, ...], int]:
    """First-improvement hill climbing over single interval flips from a seeded random start."""
    rng = random.Random(seed)
    h = inst.h
    if h == 0:
        return (), evaluate_placement(inst, ())
    place = [rng.randint(0, 1) for _ in range(h)]
    kill0, kill1 = _kill_masks(inst)
    n = inst.n

    def value(p):
        killed = 0
        for k, level in enumerate(p):
            killed |= kill1[k] if level else kill0[k]
        return n - killed.bit_count()

    val = value(place)
    iters = 0
    improved = True
    while improved and iters < max_iters:
        improved = False
        for k in range(h):
            iters += 1
            place[k] ^= 1
            v = value(place)
            if v > val:
                val = v
                improved = True
            else:
                place[k] ^= 1
            if iters >= max_iters:
                break
    return tuple(place), val


def exact_mipa_maxsat(inst: MipaInstance) -> tuple[tuple[int, ...], int]:
    """Exact optimum through a weighted MaxSAT encoding (for instances beyond brute force).

    Variable ``k + 1`` true means interval ``k`` sits at level 1. Edge ``i``
    gets an indicator that may only be true when no interval at level 0
    contains ``i`` and no interval at level 1 contains ``sigma(i)``.
    """
    from pysat.examples.rc2 import RC2
    from pysat.formula import WCNF

    h = inst.h
    at0: dict[int, list[int]] = {}
    for k, (l, r) in enumerate(inst.intervals):
        for x in range(l, r + 1):
            at0.setdefault(x, []).append(k)
    wcnf = WCNF()
    for i, j in inst.edges():
        e = h + i
        for k in at0.get(i, []):
            wcnf.append([-e, k + 1])
        for k in at0.get(j, []):
            wcnf.append([-e, -(k + 1)])
        wcnf.append([e], weight=1)
    if h:
        for k in range(h):  # tautologies so every interval variable appears in the model
            wcnf.append([k + 1, -(k + 1)])
    with RC2(wcnf) as solver:
        model = solver.compute()
    truth = {abs(x): x > 0 for x in model} if model else {}
    placement = tuple(1 if truth.get(k + 1, False) else 0 for k in range(h))
    return placement, evaluate_placement(inst, placement)
