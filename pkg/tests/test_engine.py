import random

import pytest
from hypothesis import given
from hypothesis import strategies as st

from prerigid import schemas
from prerigid.constructions.graded_dual import graded_predual
from prerigid.core import compose, identity_adjunction
from prerigid.engine import (
    PreDualData,
    closed_to_prerigid,
    compute_units,
    check_selfadjoint,
    dagger,
    finrel_structure,
    finvect_structure,
    predual_of_morphism,
    terminal_unit_prerigid,
    transfer_predual,
    uniqueness_iso,
    verify_predual,
)
from prerigid.errors import NotPreDual, TransferBlocked, Unsupported
from prerigid.instances import FINREL, FINVECT, NATURALS, cyclic_group, graded_category
from prerigid.instances.finrel import STAR, FinRelObject
from prerigid.instances.graded import GradedObject, degree_zero_adjunction, total_space_adjunction
from prerigid.instances.pomonoid_cat import pomonoid_category
from prerigid.linalg import Matrix

FV = finvect_structure()
FR = finrel_structure()
dims = st.integers(0, 3)


# dagger

def test_dagger_of_evaluation_is_identity():
    for X in range(4):
        d = FV.predual(X)
        assert dagger(d.evaluation, d, d.object, X) == FINVECT.identity(X)
    for X in FINREL.sets_up_to(2):
        d = FR.predual(X)
        assert dagger(d.evaluation, d, d.object, X) == FINREL.identity(X)


def test_finvect_scalar_dagger():
    t = FINVECT.mor([[3]])
    assert FV.dagger(1, 1, t).data == Matrix.from_rows([[3]])


def test_finrel_full_relation_dagger():
    X = FinRelObject.of("a")
    t = FINREL.relation(FINREL.tensor(FINREL.unit, X), FINREL.unit, {(("a",), STAR)})
    assert FR.dagger(FINREL.unit, X, t).data == frozenset({((), ("a",))})


def test_degenerate_evaluation_has_no_dagger():
    d = PreDualData(2, FINVECT.zero(4, 1))
    with pytest.raises(NotPreDual):
        dagger(FINVECT.pairing(2), d, 2, 2)


@given(dims, dims, st.integers(0, 9999))
def test_dagger_round_trips(T, X, seed):
    rng = random.Random(seed)
    t = FINVECT.random_morphism(T * X, 1, rng)
    u = FV.dagger(T, X, t)
    assert compose(FV.ev(X), FINVECT.tensor_mor(u, FINVECT.identity(X))) == t


@given(dims, dims, st.integers(0, 9999))
def test_closed_form_dagger_matches_linear_solve(T, X, seed):
    rng = random.Random(seed)
    t = FINVECT.random_morphism(T * X, 1, rng)
    assert FV.dagger(T, X, t) == dagger(t, FV.predual(X), T, X, solver=None)


# verification

def test_finvect_pairing_verifies():
    assert verify_predual(2, FV.predual(2), range(5)).passed


def test_oversized_candidate_fails_as_non_square():
    cand = PreDualData(3, FINVECT.morphism(6, 1, Matrix.from_rows([[1, 0, 0, 0, 1, 0]])))
    rep = verify_predual(2, cand, [1])
    assert not rep.passed
    assert rep.witness["detail"]["kind"] == "non-square"


def test_rank_deficient_candidate_fails():
    cand = PreDualData(2, FINVECT.morphism(4, 1, Matrix.from_rows([[1, 0, 0, 0]])))
    rep = verify_predual(2, cand, [1])
    assert rep.witness["detail"]["kind"] == "rank deficient"


def test_finrel_diagonal_verifies():
    tests = FINREL.sets_up_to(2)
    X = FinRelObject.of("a", "b")
    assert verify_predual(X, FR.predual(X), tests).passed


def test_finrel_empty_evaluation_fails():
    X = FinRelObject.of("a")
    cand = PreDualData(X, FINREL.relation(FINREL.tensor(X, X), FINREL.unit, set()))
    assert not verify_predual(X, cand, FINREL.sets_up_to(1)).passed


def test_unit_is_its_own_predual():
    assert verify_predual(FINVECT.unit, FV.predual(1), range(4)).passed
    assert verify_predual(FINREL.unit, FR.predual(FINREL.unit), FINREL.sets_up_to(2)).passed


# pre-dual of morphisms

def test_dual_of_identity():
    for X in range(4):
        assert predual_of_morphism(FINVECT.identity(X), FV) == FINVECT.identity(X)


@given(dims, dims, st.integers(0, 9999))
def test_dual_is_transpose(X, Y, seed):
    f = FINVECT.random_morphism(X, Y, random.Random(seed))
    assert predual_of_morphism(f, FV).data == f.data.T


@given(dims, dims, dims, st.integers(0, 9999))
def test_dual_is_contravariant(X, Y, Z, seed):
    rng = random.Random(seed)
    f, g = FINVECT.random_morphism(X, Y, rng), FINVECT.random_morphism(Y, Z, rng)
    assert FV.dual_mor(compose(g, f)) == compose(FV.dual_mor(f), FV.dual_mor(g))


def test_finrel_dual_is_converse():
    X, Y = FinRelObject.of("a", "b"), FinRelObject.of("x")
    f = FINREL.relation(X, Y, {(("a",), ("x",))})
    assert FR.dual_mor(f).data == frozenset({(("x",), ("a",))})


# uniqueness

def test_uniqueness_iso_same_candidate():
    d = FV.predual(3)
    assert uniqueness_iso(d, d, 3) == FINVECT.identity(3)


def test_uniqueness_iso_scaled_evaluation():
    d1 = FV.predual(2)
    d2 = PreDualData(2, FINVECT.scale(2, d1.evaluation))
    assert uniqueness_iso(d1, d2, 2).data == Matrix.from_rows([[2, 0], [0, 2]])


def test_uniqueness_iso_for_unit():
    closed = closed_to_prerigid(FINVECT)
    iso = uniqueness_iso(FV.predual(1), closed.predual(1), 1)
    assert iso.source == iso.target == 1


def test_uniqueness_iso_rejects_non_predual():
    bad = PreDualData(2, FINVECT.morphism(4, 1, Matrix.from_rows([[1, 0, 0, 0]])))
    with pytest.raises(NotPreDual):
        uniqueness_iso(FV.predual(2), bad, 2)


# closed categories

def test_closed_to_prerigid_finvect():
    S = closed_to_prerigid(FINVECT)
    for X in range(4):
        assert S.dual(X) == X
        assert verify_predual(X, S.predual(X), range(4)).passed


def test_closed_to_prerigid_graded():
    cat = graded_category(FINVECT, NATURALS)
    X = GradedObject.from_support([(0, 2), (1, 1)])
    S = closed_to_prerigid(cat)
    assert S.dual(X).support == [(0, 2)]
    uniqueness_iso(graded_predual(cat, X), S.predual(X), X)


def test_closed_to_prerigid_finrel():
    S = closed_to_prerigid(FINREL)
    X = FinRelObject.of("a", "b")
    assert len(S.dual(X)) == 2
    assert verify_predual(X, S.predual(X), FINREL.sets_up_to(2)).passed


def test_closed_to_prerigid_needs_internal_hom():
    cat = pomonoid_category(schemas.load_pomonoid("z2.json"))
    with pytest.raises(Unsupported):
        closed_to_prerigid(cat)


# terminal unit

def test_terminal_unit_pomonoid():
    p = schemas.load_pomonoid("idempotent_below.json")
    cat = pomonoid_category(p)
    res = terminal_unit_prerigid(cat, cat.objects())
    assert res.obstruction is None
    for X in cat.objects():
        assert res.structure.dual(X) == p.unit
        assert verify_predual(X, res.structure.predual(X), cat.objects()).passed


def test_finvect_unit_not_terminal():
    res = terminal_unit_prerigid(FINVECT, [0, 1, 2])
    assert res.structure is None
    assert res.obstruction.witness["object"] == 1


def test_initial_unit_means_not_right_closed():
    cat = pomonoid_category(schemas.load_pomonoid("idempotent_above.json"))
    res = terminal_unit_prerigid(cat, cat.objects())
    assert res.not_right_closed is not None
    assert res.structure is None


# units

def test_units_dimension_one():
    u = compute_units(1, FV)
    assert u.eta == u.j == FINVECT.identity(1)


def test_units_identity_for_twist():
    u = compute_units(3, FV)
    assert u.eta == u.j == FINVECT.identity(3)


def test_units_finrel():
    X = FinRelObject.of("a", "b")
    u = compute_units(X, FR)
    assert u.eta == u.j == FINREL.identity(X)


# self-adjointness

def test_selfadjoint_finvect():
    pairs = [(X, Y) for X in range(4) for Y in range(4)]
    assert check_selfadjoint(FV, pairs, random.Random(0)).passed


def test_selfadjoint_terminal_unit():
    cat = pomonoid_category(schemas.load_pomonoid("idempotent_below.json"))
    S = terminal_unit_prerigid(cat, cat.objects()).structure
    assert check_selfadjoint(S, [(0, 1), (1, 1), (1, 0)]).passed


def test_selfadjoint_rejects_non_natural_bijection():
    def scrambled(X, Y, u):
        # transpose, then negate the first row: bijective but not natural
        m = u.data.T
        if m.rows:
            m = Matrix.from_function(m.rows, m.cols, lambda i, j: -m[i, j] if i == 0 else m[i, j])
        return FINVECT.morphism(X, Y, m)

    rep = check_selfadjoint(FV, [(2, 2)], random.Random(0), bijection=scrambled)
    assert not rep.passed
    assert "natural" in rep.witness["case"]


# transfer

def test_transfer_along_identity():
    d = transfer_predual(identity_adjunction(FINVECT), 2, FV)
    assert d.object == 2 and d.evaluation == FV.ev(2)


def test_transfer_degree_zero():
    cat = graded_category(FINVECT, NATURALS)
    adj = degree_zero_adjunction(cat)
    X = GradedObject.from_support([(0, 2), (1, 1), (3, 1)])
    d = transfer_predual(adj, X, FV)
    assert [(g, d.object.dim(g)) for g in range(4)] == [(0, 2), (1, 0), (2, 0), (3, 0)]
    assert verify_predual(X, d, [cat.unit, X, GradedObject.from_support([(1, 1), (2, 1)])]).passed


def test_transfer_blocked_when_unit_not_preserved():
    z2 = graded_category(FINVECT, cyclic_group(2))
    with pytest.raises(TransferBlocked):
        transfer_predual(total_space_adjunction(z2), z2.unit, FV)
