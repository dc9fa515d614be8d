"""The whole construction: 3-SAT formula to a clique instance on half-planes and rectangles."""

from __future__ import annotations

from dataclasses import dataclass

from ..graph import GuardExceeded, exact_max_clique
from ..geometry import scene_to_graph
from ..mipa import brute_force_mipa, exact_mipa_maxsat
from .cnf import Assignment, CnfFormula
from .embedding import HALFPLANE_WEIGHT, GeometricEmbedding, embed_mipa_as_clique
from .gadgets import GadgetReduction, reduce_pnae33_to_mipa
from .sat_chain import MIN_B, Reduction, reduce_3sat_to_nae4, reduce_nae3_to_positive3occ, reduce_nae4_to_nae3

CLIQUE_GUARD = 150
MIPA_GUARD = 24


@dataclass
class PipelineResult:
    source: CnfFormula
    B: int
    stage1: Reduction
    stage2: Reduction
    stage3: Reduction
    stage4: GadgetReduction
    embedding: GeometricEmbedding | None

    @property
    def predicted(self) -> int:
        """Clique size when the source is satisfiable: 5|I| + 3 nu + 4 mu."""
        phi = self.stage3.target
        return HALFPLANE_WEIGHT * self.stage4.instance.h + 3 * phi.num_vars + 4 * phi.num_clauses

    def size_audit(self) -> dict[str, bool]:
        s1, s2, s3 = self.stage1.sizes, self.stage2.sizes, self.stage3.sizes
        return {
            "m' = 5m": s1["m_prime"] == 5 * s1["m"],
            "n' = n + m": self.stage1.target.num_vars == s1["padded_vars"] + s1["m"],
            "n = N + M": s2["n"] == s2["N"] + s2["M"] == self.stage2.target.num_vars,
            "m = 2M": s2["m"] == 2 * s2["M"] == self.stage2.target.num_clauses,
            "n = 2BN": s3["n"] == 2 * s3["B"] * s3["N"] == self.stage3.target.num_vars,
            "m = M + (2B-1)N": s3["m"] == s3["M"] + (2 * s3["B"] - 1) * s3["N"] == self.stage3.target.num_clauses,
            "|M| <= 49n": self.stage4.instance.n <= 49 * max(1, self.stage3.target.num_vars),
        }

    def forward(self, assignment: Assignment):
        """Push a satisfying assignment of the source down to a MIPA placement."""
        a1 = self.stage1.forward(assignment)
        a2 = self.stage2.forward(a1)
        a3 = self.stage3.forward(a2)
        return self.stage4.forward(a3)

    def backward(self, placement) -> Assignment:
        a3 = self.stage4.backward(placement)
        return self.stage1.backward(self.stage2.backward(self.stage3.backward(a3)))

    def computed_clique_value(self, allow_large: bool = False) -> tuple[int, str]:
        """Clique number of the final scene and the method used to obtain it.

        Small scenes are solved directly. Larger ones go through the MIPA
        optimum (omega = 5h + OPT), by brute force when possible, otherwise
        by MaxSAT when ``allow_large`` is set.
        """
        inst = self.stage4.instance
        n_vertices = 2 * HALFPLANE_WEIGHT * inst.h + inst.n
        if self.embedding is not None and n_vertices <= CLIQUE_GUARD:
            g = scene_to_graph(self.embedding.scene)
            return len(exact_max_clique(g).clique), "exact clique on scene"
        if inst.h <= MIPA_GUARD:
            return HALFPLANE_WEIGHT * inst.h + brute_force_mipa(inst)[1], "5h + brute-force MIPA"
        if not allow_large:
            raise GuardExceeded(
                f"final instance has {n_vertices} vertices and {inst.h} intervals; pass allow_large to use MaxSAT"
            )
        return HALFPLANE_WEIGHT * inst.h + exact_mipa_maxsat(inst)[1], "5h + MaxSAT MIPA"


def full_pipeline(phi: CnfFormula, B: int = MIN_B, embed: bool = True, seed: int = 0) -> PipelineResult:
    s1 = reduce_3sat_to_nae4(phi, B)
    s2 = reduce_nae4_to_nae3(s1.target)
    # padding clauses by repeating literals can push occurrences past B
    s3 = reduce_nae3_to_positive3occ(s2.target, max(B, s2.target.max_occurrence))
    s4 = reduce_pnae33_to_mipa(s3.target)
    emb = embed_mipa_as_clique(s4.instance, "halfplane", seed=seed) if embed else None
    return PipelineResult(phi, B, s1, s2, s3, s4, emb)
