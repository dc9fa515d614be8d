"""Hardness constructions: SAT chain, expander, MIPA gadgets, geometric embedding."""

from .cnf import CnfFormula, brute_force_sat, from_dimacs, is_satisfiable, solver_sat, to_dimacs
from .embedding import GeometricEmbedding, embed_mipa_as_clique
from .expander import ExpanderGraph, MultiGraph, edge_expansion, gabber_galil_expander, second_eigenvalue
from .gadgets import GadgetReduction, reduce_pnae33_to_mipa
from .pipeline import PipelineResult, full_pipeline
from .sat_chain import Reduction, reduce_3sat_to_nae4, reduce_nae3_to_positive3occ, reduce_nae4_to_nae3

__all__ = [
    "CnfFormula",
    "ExpanderGraph",
    "GadgetReduction",
    "GeometricEmbedding",
    "MultiGraph",
    "PipelineResult",
    "Reduction",
    "brute_force_sat",
    "edge_expansion",
    "embed_mipa_as_clique",
    "from_dimacs",
    "full_pipeline",
    "gabber_galil_expander",
    "is_satisfiable",
    "reduce_3sat_to_nae4",
    "reduce_nae3_to_positive3occ",
    "reduce_nae4_to_nae3",
    "reduce_pnae33_to_mipa",
    "second_eigenvalue",
    "solver_sat",
    "to_dimacs",
]
