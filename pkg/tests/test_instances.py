import random

import pytest

from prerigid import schemas
from prerigid.core import compose
from prerigid.errors import BoundRequired, ValidationError
from prerigid.grammar.pomonoid import Pomonoid
from prerigid.instances import FINREL, FINVECT, NATURALS, cyclic_group, graded_category
from prerigid.instances.finrel import FinRelObject
from prerigid.instances.graded import GeneratedGradedObject, GradedObject, graded_internal_hom, is_conical
from prerigid.instances.pomonoid_cat import pomonoid_category
from prerigid.laws import check_braiding, check_category_laws
from prerigid.linalg import Matrix


# FinRel

def test_finrel_hom_is_powerset():
    a, b = FinRelObject.of("a"), FinRelObject.of("b")
    hom = FINREL.hom(a, b)
    assert {m.data for m in hom.elements} == {frozenset(), frozenset({(("a",), ("b",))})}
    two = FinRelObject.of("x", "y")
    assert len(FINREL.hom(two, two)) == 16


def test_finrel_strict_unit():
    I = FinRelObject.of("a", "b")
    assert FINREL.tensor(FINREL.unit, I) == I == FINREL.tensor(I, FINREL.unit)


def test_finrel_internal_hom_is_product():
    J, K = FinRelObject.of("a", "b"), FinRelObject.of("x", "y", "z")
    assert len(FINREL.internal_hom(J, K)) == 6


def test_finrel_duplicate_labels_rejected():
    with pytest.raises(ValidationError):
        FinRelObject.of("a", "a")


# FinVect

def test_finvect_hom_dimension():
    assert FINVECT.hom(2, 3).dim == 6


def test_finvect_twist_2_2():
    c = FINVECT.braid(2, 2).data
    expected = Matrix.permutation([0, 2, 1, 3])
    assert c == expected
    # e_0⊗e_1 (index 1) goes to e_1⊗e_0 (index 2)
    assert c[2, 1] == 1


def test_finvect_internal_hom_into_unit():
    for X in range(4):
        assert FINVECT.internal_hom(X, FINVECT.unit) == X


def test_finvect_closed_counit_curries(rng):
    for X, Y, T in [(2, 1, 1), (2, 2, 1), (1, 3, 2)]:
        h = FINVECT.random_morphism(T * X, Y, rng)
        cur = FINVECT.curry(h, T, X)
        back = compose(FINVECT.closed_counit(X, Y), FINVECT.tensor_mor(cur, FINVECT.identity(X)))
        assert back == h


def test_finvect_morphism_shape_checked():
    with pytest.raises(ValidationError):
        FINVECT.morphism(2, 3, Matrix.identity(2))


# pomonoids as thin categories

def test_group_pomonoid_category_is_discrete():
    cat = pomonoid_category(schemas.load_pomonoid("z2.json"))
    assert len(cat.hom(0, 0)) == 1
    assert len(cat.hom(0, 1)) == 0 and len(cat.hom(1, 0)) == 0


def test_chain_under_max_has_singleton_hom():
    p = Pomonoid.build(("0", "1"), [[1, 1], [0, 1]], [[0, 1], [1, 1]], 0)
    cat = pomonoid_category(p)
    assert len(cat.hom(0, 1)) == 1 and len(cat.hom(1, 0)) == 0
    assert check_category_laws(cat, [0, 1]).passed


def test_non_monotone_pomonoid_rejected():
    p = schemas.load_pomonoid("negative/pomonoid_nonmonotone.json")
    with pytest.raises(ValidationError):
        pomonoid_category(p)


# graded vector spaces

N = graded_category(FINVECT, NATURALS)
Z2 = graded_category(FINVECT, cyclic_group(2))


def test_degree_zero_of_tensor_is_tensor_of_degree_zero():
    X = GradedObject.from_support([(0, 2), (1, 1)])
    Y = GradedObject.from_support([(0, 3), (2, 1)])
    assert N.tensor(X, Y).dim(0) == X.dim(0) * Y.dim(0)


def test_unit_vanishes_away_from_neutral_degree():
    assert N.unit.dim(0) == 1
    assert all(N.unit.dim(g) == 0 for g in range(1, 5))
    assert Z2.unit.dim(1) == 0


def test_support_convolution():
    X, Y = GradedObject.from_support([(1, 1)]), GradedObject.from_support([(2, 1)])
    assert N.tensor(X, Y).support == [(3, 1)]
    assert Z2.tensor(GradedObject.from_support([(1, 1)]), GradedObject.from_support([(1, 2)])).support == [(0, 2)]


def test_graded_convolution_dimensions():
    X = GradedObject.from_support([(0, 1), (1, 2)])
    Y = GradedObject.from_support([(0, 2), (1, 1)])
    T = N.tensor(X, Y)
    assert [T.dim(n) for n in range(3)] == [2, 1 + 4, 2]


def test_graded_laws_and_symmetric_braiding():
    objs = [N.unit, GradedObject.from_support([(0, 1), (1, 1)]), GradedObject.from_support([(2, 1)])]
    assert check_category_laws(N, objs, random.Random(0)).passed
    rep = check_braiding(N, [(objs[1], objs[2]), (objs[1], objs[1])], random.Random(0), symmetric=True)
    assert rep.passed, rep.witness


def test_graded_internal_hom_into_unit():
    V = GradedObject.from_support([(0, 2)])
    assert N.internal_hom(V, N.unit).support == [(0, 2)]
    W = GradedObject.from_support([(0, 1), (1, 3)])
    assert N.internal_hom(W, N.unit).support == [(0, 1)]
    zero = GradedObject.from_support([])
    assert N.internal_hom(zero, W).support == []


def test_truncated_endomorphism_dimension():
    const = GeneratedGradedObject(lambda n: 1, "constant")
    for d in range(6):
        assert graded_internal_hom(N, const, const, bound=d).dim(0) == d + 1


def test_unbounded_support_needs_bound():
    const = GeneratedGradedObject(lambda n: 1, "constant")
    with pytest.raises(BoundRequired):
        graded_internal_hom(N, const, N.unit)


def test_conical_monoids():
    assert is_conical(NATURALS)
    assert not is_conical(cyclic_group(2))


def test_graded_fixtures_load():
    cat, objs = schemas.load_graded("graded_naturals.json")
    assert cat.monoid.name == "N" and len(objs) == 5
