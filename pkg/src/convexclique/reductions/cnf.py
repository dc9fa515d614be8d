"""CNF and not-all-equal formulas, with brute-force and SAT-solver oracles."""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass
from itertools import product
from typing import Sequence

from ..graph import GuardExceeded

Assignment = tuple[bool, ...]
BRUTE_FORCE_VARS = 22


@dataclass(frozen=True)
class CnfFormula:
    """Clauses of signed DIMACS literals over variables ``1..num_vars``.

    With ``nae=True`` each clause is a not-all-equal constraint: it needs a
    true literal and a false literal. Occurrences count literal occurrences,
    so ``x or not x`` uses ``x`` twice.
    """

    num_vars: int
    clauses: tuple[tuple[int, ...], ...]
    nae: bool = False

    def __post_init__(self):
        clauses = tuple(tuple(int(l) for l in c) for c in self.clauses)
        object.__setattr__(self, "clauses", clauses)
        for c in clauses:
            for lit in c:
                if lit == 0 or abs(lit) > self.num_vars:
                    raise ValueError(f"literal {lit} outside 1..{self.num_vars}")

    @property
    def num_clauses(self) -> int:
        return len(self.clauses)

    def occurrences(self) -> Counter:
        return Counter(abs(l) for c in self.clauses for l in c)

    @property
    def max_occurrence(self) -> int:
        occ = self.occurrences()
        return max(occ.values()) if occ else 0

    @property
    def positive(self) -> bool:
        return all(l > 0 for c in self.clauses for l in c)

    @property
    def max_width(self) -> int:
        return max((len(c) for c in self.clauses), default=0)

    def clause_ok(self, clause: Sequence[int], assignment: Assignment) -> bool:
        vals = [assignment[abs(l) - 1] == (l > 0) for l in clause]
        if self.nae:
            return any(vals) and not all(vals)
        return any(vals)

    def satisfied_count(self, assignment: Assignment) -> int:
        if len(assignment) != self.num_vars:
            raise ValueError("assignment length does not match the variable count")
        return sum(self.clause_ok(c, assignment) for c in self.clauses)

    def is_satisfied(self, assignment: Assignment) -> bool:
        return self.satisfied_count(assignment) == self.num_clauses

    def plain_clauses(self) -> list[list[int]]:
        """An ordinary CNF with the same models (NAE clause C becomes C and its negation)."""
        if not self.nae:
            return [list(c) for c in self.clauses]
        out = []
        for c in self.clauses:
            out.append(list(c))
            out.append([-l for l in c])
        return out


def brute_force_sat(phi: CnfFormula, guard: int = BRUTE_FORCE_VARS) -> Assignment | None:
    """First satisfying assignment in lexicographic order (False before True), or None."""
    if phi.num_vars > guard:
        raise GuardExceeded(f"brute-force SAT limited to {guard} variables (got {phi.num_vars})")
    for bitsv in product((False, True), repeat=phi.num_vars):
        if phi.is_satisfied(bitsv):
            return bitsv
    return None


def brute_force_max_sat(phi: CnfFormula, guard: int = BRUTE_FORCE_VARS) -> int:
    if phi.num_vars > guard:
        raise GuardExceeded(f"brute-force MAX-SAT limited to {guard} variables (got {phi.num_vars})")
    return max(phi.satisfied_count(b) for b in product((False, True), repeat=phi.num_vars))


def solver_sat(phi: CnfFormula) -> Assignment | None:
    """Satisfying assignment from a CDCL solver (pysat / Minisat 2.2), or None."""
    from pysat.solvers import Minisat22

    with Minisat22(bootstrap_with=phi.plain_clauses()) as s:
        if not s.solve():
            return None
        model = s.get_model() or []
    truth = {abs(x): x > 0 for x in model}
    return tuple(truth.get(v, False) for v in range(1, phi.num_vars + 1))


def is_satisfiable(phi: CnfFormula) -> bool:
    if phi.num_vars <= 16:
        return brute_force_sat(phi) is not None
    return solver_sat(phi) is not None


# ---------------------------------------------------------------------- DIMACS


def to_dimacs(phi: CnfFormula) -> str:
    lines = []
    if phi.nae:
        lines.append("c nae")
    lines.append(f"p cnf {phi.num_vars} {phi.num_clauses}")
    for c in phi.clauses:
        lines.append(" ".join(str(l) for l in c) + " 0")
    return "\n".join(lines) + "\n"


def from_dimacs(text: str) -> CnfFormula:
    nae = False
    num_vars = None
    declared = None
    clauses: list[tuple[int, ...]] = []
    cur: list[int] = []
    for raw in text.splitlines():
        line = raw.strip()
        if not line:
            continue
        if line.startswith("c"):
            if line.split()[1:2] == ["nae"]:
                nae = True
            continue
        if line.startswith("p"):
            parts = line.split()
            if len(parts) != 4 or parts[1] != "cnf":
                raise ValueError(f"bad problem line: {line!r}")
            num_vars, declared = int(parts[2]), int(parts[3])
            continue
        if num_vars is None:
            raise ValueError("clause before the problem line")
        for tok in line.split():
            lit = int(tok)
            if lit == 0:
                clauses.append(tuple(cur))
                cur = []
            else:
                cur.append(lit)
    if cur:
        clauses.append(tuple(cur))
    if num_vars is None:
        raise ValueError("missing problem line")
    if declared is not None and declared != len(clauses):
        raise ValueError(f"header declares {declared} clauses, found {len(clauses)}")
    return CnfFormula(num_vars, tuple(clauses), nae)
