"""The satisfiability chain 3-SAT-B -> NAE 4-SAT-B -> NAE 3-SAT-B -> Positive NAE 3-SAT-3.

Every reduction returns a :class:`Reduction` carrying the produced formula and
two witness maps: ``forward`` turns a satisfying assignment of the source into
one of the target, ``backward`` turns a satisfying assignment of the target
into one of the source.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from typing import Callable

from .cnf import Assignment, CnfFormula
from .expander import gabber_galil_expander

MIN_B = 9


@dataclass(frozen=True)
class Reduction:
    source: CnfFormula
    target: CnfFormula
    forward: Callable[[Assignment], Assignment]
    backward: Callable[[Assignment], Assignment]
    sizes: dict = field(default_factory=dict)
    labels: tuple[str, ...] = ()


def _lit_value(assignment: Assignment, lit: int) -> bool:
    return assignment[abs(lit) - 1] == (lit > 0)


def reduce_3sat_to_nae4(phi: CnfFormula, B: int = MIN_B) -> Reduction:
    """Pad to a perfect square of clauses, add one fresh z_j per clause, tie the
    z_j together with equality constraints along the edges of an expander.

    For each clause C_j we emit the NAE clause ``C_j or not z_j``; the twin
    ``not C_j or z_j`` is the very same not-all-equal constraint, so it is
    not repeated (this is what makes the clause count exactly 5m and keeps
    every z_j at 9 occurrences). Expander loops become ``z_a or not z_a``.
    """
    if phi.nae:
        raise ValueError("expected an ordinary CNF formula")
    if B < MIN_B:
        raise ValueError(f"B must be at least {MIN_B}")
    if phi.max_width > 3:
        raise ValueError("expected clauses with at most three literals")
    if any(len(c) == 0 for c in phi.clauses):
        raise ValueError("empty clauses are not allowed")
    if phi.max_occurrence > B:
        raise ValueError(f"a variable occurs {phi.max_occurrence} > B = {B} times")
    N, M = phi.num_vars, phi.num_clauses
    side = math.isqrt(2 * M - 1) + 1 if M else 0
    m = side * side
    pads = m - M
    n = N + pads
    clauses = list(phi.clauses) + [(N + i + 1, -(N + i + 1)) for i in range(pads)]
    z = [n + j + 1 for j in range(m)]
    out = [tuple(c) + (-z[j],) for j, c in enumerate(clauses)]
    labels = [f"C{j + 1}|~z{j + 1}" for j in range(m)]
    if m:
        for a, b in gabber_galil_expander(side).edges:
            lo, hi = min(a, b), max(a, b)
            out.append((z[lo], -z[hi]))
            labels.append(f"z{lo + 1}|~z{hi + 1}")
    target = CnfFormula(n + m, tuple(out), nae=True)

    def forward(assignment: Assignment) -> Assignment:
        return tuple(assignment) + (False,) * pads + (True,) * m

    def backward(assignment: Assignment) -> Assignment:
        if m and not assignment[z[0] - 1]:
            assignment = tuple(not v for v in assignment)
        return tuple(assignment[:N])

    sizes = {"N": N, "M": M, "m": m, "padded_vars": n, "n_prime": n + m, "m_prime": len(out), "side": side}
    return Reduction(phi, target, forward, backward, sizes, tuple(labels))


def _pad4(clause: tuple[int, ...]) -> tuple[int, int, int, int]:
    """Repeat literals cyclically until the clause has four."""
    if not clause or len(clause) > 4:
        raise ValueError("NAE clause width must be between 1 and 4")
    return tuple(clause[i % len(clause)] for i in range(4))


def reduce_nae4_to_nae3(phi: CnfFormula) -> Reduction:
    """Split every (padded) NAE 4-clause into two NAE 3-clauses sharing a fresh z_j."""
    if not phi.nae:
        raise ValueError("expected a not-all-equal formula")
    if phi.max_width > 4:
        raise ValueError("clause width exceeds 4")
    N, M = phi.num_vars, phi.num_clauses
    padded = [_pad4(c) for c in phi.clauses]
    out = []
    for j, (l1, l2, l3, l4) in enumerate(padded):
        zj = N + j + 1
        out.append((l1, l2, zj))
        out.append((l3, l4, -zj))
    target = CnfFormula(N + M, tuple(out), nae=True)

    def forward(assignment: Assignment) -> Assignment:
        extra = []
        for l1, l2, l3, l4 in padded:
            v1, v2, v3 = (_lit_value(assignment, l) for l in (l1, l2, l3))
            # l1 != l2: make not z_j differ from l3; otherwise z_j opposes l1
            extra.append(v3 if v1 != v2 else not v1)
        return tuple(assignment) + tuple(extra)

    def backward(assignment: Assignment) -> Assignment:
        return tuple(assignment[:N])

    sizes = {"N": N, "M": M, "n": N + M, "m": len(out)}
    return Reduction(phi, target, forward, backward, sizes)


def reduce_nae3_to_positive3occ(phi: CnfFormula, B: int | None = None) -> Reduction:
    """Replace variable x_i by a ladder x_{i,1}, y_{i,1}, x_{i,2}, ... of NAE 2-clauses.

    The t-th occurrence of x_i becomes x_{i,t} when positive and y_{i,t} when
    negative. Variable numbering: x_{i,h} = 2B(i-1)+h, y_{i,h} = 2B(i-1)+B+h.
    """
    if not phi.nae:
        raise ValueError("expected a not-all-equal formula")
    if phi.max_width > 3:
        raise ValueError("clause width exceeds 3")
    B = phi.max_occurrence if B is None else B
    B = max(B, 1)
    if phi.max_occurrence > B:
        raise ValueError(f"a variable occurs {phi.max_occurrence} > B = {B} times")
    N, M = phi.num_vars, phi.num_clauses

    def x(i, h):
        return 2 * B * (i - 1) + h

    def y(i, h):
        return 2 * B * (i - 1) + B + h

    seen = [0] * (N + 1)
    out = []
    for c in phi.clauses:
        new = []
        for lit in c:
            i = abs(lit)
            seen[i] += 1
            new.append(x(i, seen[i]) if lit > 0 else y(i, seen[i]))
        out.append(tuple(new))
    for i in range(1, N + 1):
        for h in range(1, B + 1):
            out.append((x(i, h), y(i, h)))
        for h in range(1, B):
            out.append((y(i, h), x(i, h + 1)))
    target = CnfFormula(2 * B * N, tuple(out), nae=True)

    def forward(assignment: Assignment) -> Assignment:
        vals = []
        for i in range(1, N + 1):
            v = assignment[i - 1]
            vals.extend([v] * B + [not v] * B)
        return tuple(vals)

    def backward(assignment: Assignment) -> Assignment:
        return tuple(assignment[x(i, 1) - 1] for i in range(1, N + 1))

    sizes = {"N": N, "M": M, "B": B, "n": 2 * B * N, "m": len(out)}
    return Reduction(phi, target, forward, backward, sizes)
