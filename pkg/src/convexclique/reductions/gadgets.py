"""Positive NAE 3-SAT-3 to Max Interval Permutation Avoidance.

Layout on 1..n_points (both levels share indices):

* variable x_i owns the range X_i = [3(i-1)+1, 3(i-1)+3]; its t-th point
  stands for the t-th occurrence of x_i;
* each clause gets a slot of 5 points per literal, the first point of each
  block is matched to the variable's occurrence point and the remaining four
  carry the clause-internal transpositions;
* an occurrence point with no clause behind it is matched to a private dummy
  point with a singleton interval.

Every matching edge comes with its mirror, so sigma is an involution.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Sequence

from ..mipa import MipaInstance
from .cnf import Assignment, CnfFormula


@dataclass(frozen=True)
class GadgetReduction:
    source: CnfFormula
    instance: MipaInstance
    interval_labels: tuple[str, ...]
    variable_interval: tuple[int, ...]  # interval index of X_i
    clause_intervals: tuple[tuple[tuple[int, int], ...], ...]  # per clause: (interval index, variable)
    dummy_intervals: tuple[tuple[int, int], ...]  # (interval index, variable)
    edge_kinds: dict

    def forward(self, assignment: Assignment) -> tuple[int, ...]:
        """The canonical placement: X_i up iff x_i is true, its clause/dummy blocks opposite."""
        place = [0] * self.instance.h
        for i, k in enumerate(self.variable_interval):
            place[k] = 1 if assignment[i] else 0
        for blocks in self.clause_intervals:
            for k, var in blocks:
                place[k] = 0 if assignment[var - 1] else 1
        for k, var in self.dummy_intervals:
            place[k] = 0 if assignment[var - 1] else 1
        return tuple(place)

    def backward(self, placement: Sequence[int]) -> Assignment:
        return tuple(placement[k] == 1 for k in self.variable_interval)

    @property
    def target_value(self) -> int:
        """3n + 4m: the optimum exactly when the formula is NAE-satisfiable."""
        return 3 * self.source.num_vars + 4 * self.source.num_clauses


def reduce_pnae33_to_mipa(phi: CnfFormula) -> GadgetReduction:
    if not phi.nae or not phi.positive:
        raise ValueError("expected a positive not-all-equal formula")
    if any(len(c) not in (2, 3) for c in phi.clauses):
        raise ValueError("clauses must have two or three literals")
    if any(len(set(c)) != len(c) for c in phi.clauses):
        raise ValueError("a clause repeats a variable")
    if phi.max_occurrence > 3:
        raise ValueError("a variable occurs more than three times")
    n_vars = phi.num_vars
    partner: dict[int, int] = {}
    kinds = {"variable-clause": 0, "intra-slot": 0, "dummy": 0}

    def pair(a: int, b: int, kind: str):
        assert a not in partner and b not in partner and a != b
        partner[a] = b
        partner[b] = a
        kinds[kind] += 2

    intervals: list[tuple[int, int]] = []
    labels: list[str] = []
    for i in range(1, n_vars + 1):
        intervals.append((3 * (i - 1) + 1, 3 * (i - 1) + 3))
        labels.append(f"X{i}")
    var_interval = tuple(range(n_vars))

    occ = [0] * (n_vars + 1)
    pos = 3 * n_vars + 1
    clause_blocks = []
    for j, clause in enumerate(phi.clauses, start=1):
        s = pos
        width = len(clause)
        blocks = []
        for p, var in enumerate(clause):
            occ[var] += 1
            start = s + 5 * p
            intervals.append((start, start + 4))
            labels.append(f"C{j}(x{var})")
            blocks.append((len(intervals) - 1, var))
            pair(start, 3 * (var - 1) + occ[var], "variable-clause")
        if width == 2:
            for h in range(1, 5):
                pair(s + h, s + 5 + h, "intra-slot")
        else:
            free = {p: [s + 5 * p + h for h in range(1, 5)] for p in range(3)}
            for a, b in ((0, 1), (0, 2), (1, 2)):
                for _ in range(2):
                    pair(free[a].pop(0), free[b].pop(0), "intra-slot")
        clause_blocks.append(tuple(blocks))
        pos = s + 5 * width

    dummies = []
    for i in range(1, n_vars + 1):
        for t in range(occ[i] + 1, 4):
            d = pos
            pos += 1
            pair(3 * (i - 1) + t, d, "dummy")
            intervals.append((d, d))
            labels.append(f"D{i}.{t}")
            dummies.append((len(intervals) - 1, i))

    n_points = pos - 1
    if sorted(partner) != list(range(1, n_points + 1)):
        raise AssertionError("gadget matching is not perfect")
    sigma = tuple(partner[i] for i in range(1, n_points + 1))
    inst = MipaInstance(n_points, sigma, tuple(intervals), symmetric=True, bounded_length=True)
    if not inst.intervals_disjoint():
        raise AssertionError("gadget intervals overlap")
    if n_vars and n_points > 49 * n_vars:
        raise AssertionError("matching larger than 49n")
    return GadgetReduction(
        phi, inst, tuple(labels), var_interval, tuple(clause_blocks), tuple(dummies), kinds
    )
