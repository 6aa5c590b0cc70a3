import random

import pytest
from hypothesis import given
from hypothesis import strategies as st

from prerigid import schemas
from prerigid.core import OppositeCategory, compose, compose_all, find_inverse, opposite
from prerigid.errors import CategoryMismatch, CompositionError, Unsupported
from prerigid.instances import FINREL, FINVECT, TERMINAL
from prerigid.instances.finrel import FinRelObject
from prerigid.laws import check_braiding, check_category_laws, check_opposite_involution
from prerigid.linalg import Matrix


def test_compose_and_tensor_finvect():
    f = FINVECT.mor([[1, 2]])
    g = FINVECT.mor([[3], [4]])
    assert compose(f, g).data == Matrix.from_rows([[11]])
    assert FINVECT.tensor_mor(g, f).data.shape == (2, 2)
    assert compose_all(f, g, FINVECT.identity(1)) == compose(f, g)


def test_compose_mismatch_raises():
    with pytest.raises(CompositionError):
        compose(FINVECT.mor([[1, 2]]), FINVECT.mor([[1, 2]]))
    with pytest.raises(CategoryMismatch):
        compose(FINVECT.identity(1), FINREL.identity(FinRelObject.of("a")))


def test_finrel_compose_is_relational():
    A, B = FinRelObject.of("a", "b"), FinRelObject.of("x")
    f = FINREL.relation(A, B, {(("a",), ("x",))})
    g = FINREL.relation(B, A, {(("x",), ("a",)), (("x",), ("b",))})
    assert compose(g, f).data == frozenset({(("a",), ("a",)), (("a",), ("b",))})


@pytest.mark.parametrize("cat,objects", [
    (FINVECT, [0, 1, 2, 3]),
    (FINREL, FINREL.sets_up_to(2)),
    (TERMINAL, [()]),
])
def test_category_laws(cat, objects):
    rep = check_category_laws(cat, objects, random.Random(0))
    assert rep.passed, rep.witness


def test_finvect_twist_is_symmetric_braiding():
    rep = check_braiding(FINVECT, [(1, 2), (2, 2), (0, 3), (2, 1)], random.Random(3), symmetric=True)
    assert rep.passed, rep.witness


def test_finrel_swap_is_symmetric_braiding():
    s = FINREL.sets_up_to(2)
    rep = check_braiding(FINREL, [(s[1], s[2]), (s[2], s[2]), (s[0], s[1])], random.Random(3), symmetric=True)
    assert rep.passed, rep.witness


def test_corrupted_braiding_fails_hexagon():
    braid = schemas.load_braiding("negative/braiding_corrupt.json")
    rep = check_braiding(FINVECT, [(1, 1), (2, 1)], random.Random(0), braid=braid)
    assert not rep.passed
    assert "hexagon" in rep.witness["case"]


def test_identity_braiding_fails_only_naturality():
    def ident(X, Y):
        return FINVECT.morphism(X * Y, Y * X, Matrix.identity(X * Y))

    rep = check_braiding(FINVECT, [(2, 2)], random.Random(0), braid=ident)
    assert not rep.passed
    assert "naturality" in rep.witness["case"]


def test_opposite_involution():
    assert opposite(opposite(FINVECT)) == FINVECT
    rep = check_opposite_involution(FINVECT, [(1, 2), (2, 1), (0, 2)])
    assert rep.passed


def test_opposite_reverses_composition():
    op = OppositeCategory(FINVECT)
    f, g = FINVECT.mor([[1, 2]]), FINVECT.mor([[3], [4]])
    assert op.unop(compose(op.op(g), op.op(f))) == compose(f, g)


def test_missing_braiding_is_unsupported():
    from prerigid.instances.pomonoid_cat import pomonoid_category

    cat = pomonoid_category(schemas.load_pomonoid("z2.json"))
    with pytest.raises(Unsupported):
        cat.braid(0, 1)


@given(st.integers(1, 3), st.integers(0, 10_000))
def test_find_inverse_of_invertible_matrix(n, seed):
    rng = random.Random(seed)
    P = Matrix.permutation(rng.sample(range(n), n))
    f = FINVECT.mor(P)
    inv = find_inverse(f)
    assert inv is not None and compose(inv, f) == FINVECT.identity(n)


@given(st.lists(st.integers(0, 3), min_size=3, max_size=3), st.integers(0, 10_000))
def test_interchange_law_property(dims, seed):
    rng = random.Random(seed)
    a, b, c = dims
    f, f2 = FINVECT.random_morphism(a, b, rng), FINVECT.random_morphism(b, c, rng)
    g, g2 = FINVECT.random_morphism(c, a, rng), FINVECT.random_morphism(a, b, rng)
    lhs = compose(FINVECT.tensor_mor(f2, g2), FINVECT.tensor_mor(f, g))
    assert lhs == FINVECT.tensor_mor(compose(f2, f), compose(g2, g))
