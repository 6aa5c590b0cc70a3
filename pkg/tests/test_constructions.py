import random

import pytest
import sympy

from prerigid import schemas
from prerigid.constructions.fam import (
    FamObject,
    check_fam_closed,
    fam_category,
    fam_curry,
    fam_internal_hom,
    fam_predual,
    fam_predual_converse_check,
    fam_structure,
    fam_uncurry,
    maf_obstruction,
    maf_obstruction_witness,
)
from prerigid.constructions.famrel import (
    check_famrel_inverse,
    check_rel_agreement,
    famrel_category,
    famrel_predual,
    famrel_structure,
    famrel_to_rel,
)
from prerigid.constructions.functorcat import (
    FunctorCategory,
    FunctorPredual,
    arrow_category,
    check_functorcat_predual,
    constant,
    diagram,
    nat_space,
    point_category,
    random_functor,
    square_category,
)
from prerigid.constructions.graded_dual import graded_predual, not_closed_witness_gradedf
from prerigid.core import compose
from prerigid.engine import finvect_structure, terminal_unit_prerigid, verify_predual
from prerigid.errors import Unsupported, ValidationError
from prerigid.instances import FINREL, FINVECT, NATURALS, TERMINAL, cyclic_group, graded_category
from prerigid.instances.graded import GradedObject
from prerigid.linalg import Matrix

FV = finvect_structure()
FAM = fam_category(FINVECT)


# Fam

def test_fam_tensor_of_singletons():
    X, Y = FamObject.of({"i": 1}), FamObject.of({"j": 2})
    T = FAM.tensor(X, Y)
    assert T.index == (("i", "j"),) and T.fibers == (2,)


def test_fam_unit_is_strict():
    X = FamObject.of({"i": 1, "k": 3})
    assert FAM.tensor(FAM.unit, X) == X == FAM.tensor(X, FAM.unit)


def test_fam_composition_unfolds(rng):
    X, Y, Z = FamObject.of({"a": 1, "b": 2}), FamObject.of({"p": 2}), FamObject.of({"u": 1, "v": 1})
    f = FAM.random_fam_mor(X, Y, rng)
    g = FAM.random_fam_mor(Y, Z, rng, images=[("v",)])
    gf = compose(g, f)
    assert gf.data[0] == (("v",), ("v",))
    assert gf.data[1][1] == compose(g.data[1][0], f.data[1][1])


def test_fam_predual_is_product_of_duals():
    d = fam_predual(FAM, FamObject.of({"1": 1, "2": 2}), FV)
    assert len(d.object) == 1 and d.object.fibers == (3,)


def test_fam_predual_singleton_and_zero_fiber():
    assert fam_predual(FAM, FamObject.of({"j": 3}), FV).object.fibers == (3,)
    assert fam_predual(FAM, FamObject.of({"j": 0, "k": 2}), FV).object.fibers == (2,)
    assert fam_predual(FAM, FamObject.of({}), FV).object.fibers == (0,)


def test_fam_predual_verifies(rng):
    S = fam_structure(FAM, FV)
    Y = FamObject.of({"a": 1, "b": 2})
    tests = [FamObject.of({}), FamObject.of({"x": 1}), FamObject.of({"x": 2, "y": 0, "z": 1})]
    assert verify_predual(Y, S.predual(Y), tests, solver=S.solver, rng=rng).passed


def test_fam_converse_passes_and_corrupted_projection_fails():
    Y = FamObject.of({"a": 1, "b": 2})
    d = fam_predual(FAM, Y, FV)
    assert fam_predual_converse_check(FAM, Y, d, FV).passed
    broken = [FINVECT.zero(3, 1), FINVECT.mor([[0, 1, 0], [0, 0, 1]])]
    assert not fam_predual_converse_check(FAM, Y, d, FV, projections=broken).passed


def test_fam_predual_needs_products_in_base():
    with pytest.raises(Unsupported):
        fam_predual(fam_category(FINREL), FamObject.of({"a": FINREL.unit}), FV)


def test_fam_internal_hom_counts():
    one = fam_internal_hom(FAM, FamObject.of({"j": 2}), FamObject.of({"u": 3}))
    assert len(one) == 1 and one.fibers == (6,)
    two = fam_internal_hom(FAM, FamObject.of({"j": 1, "k": 1}), FamObject.of({"u": 1, "v": 1}))
    assert len(two) == 4 and set(two.fibers) == {2}
    assert len(fam_internal_hom(FAM, FamObject.of({"j": 1}), FamObject.of({}))) == 0


def test_fam_curry_round_trip(rng):
    X, Y, Z = FamObject.of({"a": 1, "b": 2}), FamObject.of({"p": 1, "q": 2}), FamObject.of({"u": 2, "v": 1})
    for _ in range(5):
        m = FAM.random_fam_mor(FAM.tensor(X, Y), Z, rng)
        assert fam_uncurry(FAM, X, Y, Z, fam_curry(FAM, X, Y, Z, m)) == m
    assert check_fam_closed(FAM, [(X, Y, Z)], rng, samples=10).passed


# Maf

@pytest.mark.parametrize("base", [FINVECT, FINREL, TERMINAL])
def test_maf_obstruction(base):
    rep = maf_obstruction_witness(base)
    assert rep.passed
    assert "Hom(empty family, unit) is empty" in rep.test_set
    assert maf_obstruction(base).witness == {"hom_empty_to_unit": 0}


# FamRel

FAMREL = famrel_category(TERMINAL)
POINT_S = terminal_unit_prerigid(TERMINAL, [()]).structure


def _points(n):
    return FamObject.make([((f"x{i}",), TERMINAL.unit) for i in range(n)], 1)


def test_famrel_predual_over_point_is_diagonal():
    Y = _points(2)
    d = famrel_predual(FAMREL, Y, POINT_S)
    assert d.object.index == Y.index
    rel = famrel_to_rel(d.evaluation)
    assert rel.data == frozenset((j + j, ()) for j in Y.index)


def test_famrel_inverse_and_rel_agreement(rng):
    S = famrel_structure(FAMREL, POINT_S)
    pairs = [(_points(a), _points(b)) for a in range(3) for b in range(3)]
    assert check_famrel_inverse(FAMREL, S, pairs, rng).passed
    assert check_rel_agreement(FAMREL, S, range(3)).passed


def test_famrel_over_finvect_singletons(rng):
    cat = famrel_category(FINVECT)
    S = famrel_structure(cat, FV)
    Y = FamObject.of({"j": 2})
    T = FamObject.of({"t": 1})
    assert check_famrel_inverse(cat, S, [(T, Y)], rng, samples=6).passed


def test_famrel_empty_component_maps_to_empty():
    S = famrel_structure(FAMREL, POINT_S)
    T, Y = _points(1), _points(2)
    empty = FAMREL.hom(FAMREL.tensor(T, Y), FAMREL.unit).elements[0]
    assert not empty.data
    assert not S.dagger(T, Y, empty).data


# functor categories

def nat_dim_oracle(index, G, H) -> int:
    """dim Nat(G, H): unknown matrices per object, one linear equation per arrow entry."""
    syms, comp = [], {}
    for x in index.objects:
        M = sympy.Matrix(H.dim(x), G.dim(x), lambda i, j: sympy.Symbol(f"{x}_{i}_{j}"))
        comp[x] = M
        syms.extend(M)
    eqs = []
    for name, s, t in index.arrows:
        Hf = sympy.Matrix(H.dim(t), H.dim(s), [int(v) for v in H.map(name).flatten()])
        Gf = sympy.Matrix(G.dim(t), G.dim(s), [int(v) for v in G.map(name).flatten()])
        eqs.extend(Hf * comp[s] - comp[t] * Gf)
    if not syms:
        return 0
    if not eqs:
        return len(syms)
    A, _ = sympy.linear_eq_to_matrix(eqs, syms)
    return len(syms) - A.rank()


def test_point_category_dual_is_pointwise():
    cat = FunctorCategory(point_category())
    F = diagram(point_category(), {"a": 3}, {})
    assert FunctorPredual(cat, F).dual.dims == (3,)
    assert nat_space(cat, constant(point_category(), 1), constant(point_category(), 1)).dim == 1


def test_arrow_category_dual_dimensions():
    idx = arrow_category()
    cat = FunctorCategory(idx)
    F = diagram(idx, {"a": 1, "b": 2}, {"f": [[1], [0]]})
    P = FunctorPredual(cat, F)
    for T in [cat.unit, F, diagram(idx, {"a": 2, "b": 1}, {"f": [[1, 1]]})]:
        lhs = nat_space(cat, cat.tensor(T, F), cat.unit).dim
        assert lhs == nat_space(cat, T, P.dual).dim == nat_dim_oracle(idx, cat.tensor(T, F), cat.unit)
    assert check_functorcat_predual(cat, F, [cat.unit, F]).passed


def test_arrow_with_zero_target_forces_components():
    idx = arrow_category()
    cat = FunctorCategory(idx)
    F = diagram(idx, {"a": 1, "b": 0}, {"f": Matrix.zeros(0, 1)})
    assert nat_space(cat, F, F).dim == nat_dim_oracle(idx, F, F) == 1


@pytest.mark.parametrize("index", [point_category(), arrow_category(), square_category()])
def test_nat_space_matches_oracle(index):
    rng = random.Random(5)
    cat = FunctorCategory(index)
    for _ in range(4):
        G, H = random_functor(index, rng, 2), random_functor(index, rng, 2)
        assert nat_space(cat, G, H).dim == nat_dim_oracle(index, G, H)


def test_constant_unit_is_self_dual():
    idx = square_category()
    cat = FunctorCategory(idx)
    P = FunctorPredual(cat, constant(idx, 1))
    assert check_functorcat_predual(cat, constant(idx, 1), [cat.unit]).passed
    assert nat_space(cat, P.dual, cat.unit).dim == 1


def test_square_fixture_predual():
    index, F = schemas.load_diagram("diagram_square.json")
    cat = FunctorCategory(index)
    rng = random.Random(2)
    assert check_functorcat_predual(cat, F, [cat.unit, random_functor(index, rng)]).passed


def test_noncommuting_square_rejected():
    with pytest.raises(ValidationError):
        diagram(square_category(), {"a": 1, "b": 1, "c": 1, "d": 1},
                {"f": [[1]], "g": [[1]], "h": [[1]], "k": [[2]], "diag": [[1]]})


# graded pre-duals

NG = graded_category(FINVECT, NATURALS)
Z2G = graded_category(FINVECT, cyclic_group(2))


def test_naturals_predual_is_degree_zero_dual():
    X = GradedObject.from_support([(0, 2), (1, 1), (2, 3)])
    d = graded_predual(NG, X)
    assert d.object.support == [(0, 2)]


def test_z2_predual_keeps_both_degrees():
    X = GradedObject.from_support([(0, 2), (1, 1)])
    d = graded_predual(Z2G, X)
    assert d.object.dim(0) == 2 and d.object.dim(1) == 1
    tests = [Z2G.unit, X, GradedObject.from_support([(1, 2)])]
    assert verify_predual(X, d, tests).passed


def test_no_degree_zero_gives_zero_predual():
    X = GradedObject.from_support([(1, 2), (3, 1)])
    assert graded_predual(NG, X).object.support == []


@pytest.mark.parametrize("d,expected", [(0, 1), (5, 6), (10, 11)])
def test_not_closed_witness(d, expected):
    rep = not_closed_witness_gradedf(d)
    assert rep.passed
    assert rep.details["dims"][-1] == expected
    assert rep.details["dims"] == list(range(1, d + 2))
