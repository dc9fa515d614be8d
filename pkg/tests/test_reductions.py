import random
from itertools import product

import pytest
from hypothesis import assume, given, settings
from hypothesis import strategies as st

from convexclique.reductions.cnf import CnfFormula, brute_force_sat, from_dimacs, is_satisfiable, to_dimacs
from convexclique.reductions.sat_chain import reduce_3sat_to_nae4, reduce_nae3_to_positive3occ, reduce_nae4_to_nae3
from convexclique.random_instances import random_cnf

import oracles


def chain(phi, B=9):
    r1 = reduce_3sat_to_nae4(phi, B)
    r2 = reduce_nae4_to_nae3(r1.target)
    r3 = reduce_nae3_to_positive3occ(r2.target, max(B, r2.target.max_occurrence))
    return r1, r2, r3


@st.composite
def small_3sat(draw, max_vars=4, max_clauses=6):
    nv = draw(st.integers(1, max_vars))
    nc = draw(st.integers(1, max_clauses))
    lit = st.integers(1, nv).flatmap(lambda v: st.sampled_from([v, -v]))
    clauses = draw(st.lists(st.lists(lit, min_size=1, max_size=3), min_size=nc, max_size=nc))
    phi = CnfFormula(nv, tuple(tuple(c) for c in clauses))
    assume(phi.max_occurrence <= 9)
    return phi


ALL_SIGNS = CnfFormula(3, tuple(tuple(s * v for s, v in zip(signs, (1, 2, 3))) for signs in product((1, -1), repeat=3)))


def test_dimacs_round_trip():
    phi = CnfFormula(3, ((1, -2, 3), (-1,)))
    assert from_dimacs(to_dimacs(phi)) == phi
    nae = CnfFormula(2, ((1, 2),), nae=True)
    text = to_dimacs(nae)
    assert "c nae" in text and from_dimacs(text) == nae


def test_dimacs_errors():
    with pytest.raises(ValueError):
        from_dimacs("p cnf 2 1\n1 3 0\n")
    with pytest.raises(ValueError):
        CnfFormula(2, ((0, 1),))


def test_formula_basics():
    assert brute_force_sat(ALL_SIGNS) is None
    assert not is_satisfiable(ALL_SIGNS)
    phi = CnfFormula(2, ((1, -1), (2,)))
    assert phi.occurrences()[1] == 2 and phi.max_occurrence == 2


def test_stage1_sizes_for_single_clause():
    r1 = reduce_3sat_to_nae4(CnfFormula(3, ((1, 2, 3),)))
    s = r1.sizes
    # one clause pads to a 2 x 2 grid of clauses
    assert (s["side"], s["m"], s["padded_vars"]) == (2, 4, 6)
    assert s["m_prime"] == 5 * s["m"] == r1.target.num_clauses
    assert r1.target.num_vars == s["padded_vars"] + s["m"]
    assert r1.target.nae and r1.target.max_width == 4


def test_stage1_rejects_bad_inputs():
    with pytest.raises(ValueError):
        reduce_3sat_to_nae4(CnfFormula(4, ((1, 2, 3, 4),)))
    with pytest.raises(ValueError):
        reduce_3sat_to_nae4(CnfFormula(1, ((1,),)), B=8)
    with pytest.raises(ValueError):
        reduce_3sat_to_nae4(CnfFormula(1, ((1,),) * 10))
    with pytest.raises(ValueError):
        reduce_nae4_to_nae3(CnfFormula(1, ((1,),)))


def test_stage3_output_shape():
    phi = CnfFormula(3, ((1, -2, 3), (-1, 2)), nae=True)
    r3 = reduce_nae3_to_positive3occ(phi, 4)
    t = r3.target
    assert t.positive and t.max_occurrence <= 3 and t.num_vars == 2 * 4 * 3
    assert t.num_clauses == 2 + (2 * 4 - 1) * 3
    assert oracles.sat_by_enumeration(3, phi.clauses, nae=True) == (oracles.sat_solve(t.num_vars, t.clauses, nae=True) is not None)


def test_unsat_core_stays_unsat_through_the_chain():
    for r in chain(ALL_SIGNS):
        assert oracles.sat_solve(r.target.num_vars, r.target.clauses, r.target.nae) is None


@settings(max_examples=120, deadline=None)
@given(small_3sat())
def test_each_stage_preserves_satisfiability_both_ways(phi):
    for r in chain(phi):
        src, tgt = r.source, r.target
        a = oracles.sat_solve(src.num_vars, src.clauses, src.nae)
        b = oracles.sat_solve(tgt.num_vars, tgt.clauses, tgt.nae)
        assert (a is None) == (b is None)
        if a is not None:
            assert oracles.satisfies(tgt.clauses, r.forward(a), tgt.nae)
            assert oracles.satisfies(src.clauses, r.backward(b), src.nae)


@settings(max_examples=120, deadline=None)
@given(small_3sat(), st.integers(9, 12))
def test_size_formulas(phi, B):
    r1, r2, r3 = chain(phi, B)
    s1, s2, s3 = r1.sizes, r2.sizes, r3.sizes
    assert s1["m_prime"] == 5 * s1["m"] == r1.target.num_clauses
    assert s2["n"] == s2["N"] + s2["M"] == r2.target.num_vars
    assert s2["m"] == 2 * s2["M"] == r2.target.num_clauses
    assert s3["n"] == 2 * s3["B"] * s3["N"] == r3.target.num_vars
    assert s3["m"] == s3["M"] + (2 * s3["B"] - 1) * s3["N"] == r3.target.num_clauses
    assert r1.target.max_occurrence <= max(B, phi.max_occurrence, 9)
    assert r3.target.positive and r3.target.max_occurrence <= 3


def test_random_cnf_respects_occurrence_cap():
    rng = random.Random(5)
    for _ in range(50):
        phi = random_cnf(rng, 4, 6, 3, max_occ=9)
        assert phi.max_occurrence <= 9 and phi.max_width <= 3
