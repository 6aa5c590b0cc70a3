"""Pre-duals of graded vector spaces and the failure of closedness for
unbounded ℕ-gradings."""

from __future__ import annotations

from ..engine import PreDualData, PreRigidStructure
from ..errors import BoundRequired
from ..instances.graded import (
    NATURALS,
    GeneratedGradedObject,
    GradedCategory,
    GradedObject,
    graded_internal_hom,
)
from ..linalg import Matrix
from ..report import Report, Tally


def _dual_degrees(cat: GradedCategory, X: GradedObject) -> list:
    if cat.monoid.elements is not None:
        return list(cat.monoid.elements)
    return [0]  # in ℕ only 0 has a right inverse


def graded_predual(cat: GradedCategory, X: GradedObject) -> PreDualData:
    """(X*)_g = (⊕_{h : gh = e} X_h)*, paired with X at the neutral degree."""
    m = cat.monoid
    layout = {}
    support = []
    for g in _dual_degrees(cat, X):
        off = 0
        for h in m.right_inverses(g):
            layout[(g, h)] = off
            off += X.dim(h)
        support.append((g, off))
    Xs = GradedObject.from_support(support)
    S = cat.tensor(Xs, X)
    comps = {}
    for d in cat._degrees(S, cat.unit):
        cols = cat._coords(Xs, X, d)
        row = []
        for ls, i, lx, j in cols:
            g, h = ls[0], cat.degree_of(lx)
            row.append(int((g, h) in layout and i == layout[(g, h)] + cat._pos(X, lx, j)))
        comps[d] = Matrix.from_rows([row], len(cols))
    return PreDualData(Xs, cat.graded_mor(S, cat.unit, comps))


def graded_structure(cat: GradedCategory) -> PreRigidStructure:
    return PreRigidStructure(cat, lambda X: graded_predual(cat, X), name=f"pre-duals in {cat.key}")


def graded_tests(cat: GradedCategory, max_dim: int = 1, max_degree: int = 2) -> list[GradedObject]:
    """Atomic test objects: supports on small degree sets with dims ≤ max_dim."""
    import itertools

    degrees = list(cat.monoid.elements) if cat.monoid.elements is not None else list(range(max_degree + 1))
    out = [cat.unit]
    for dims in itertools.product(range(max_dim + 1), repeat=len(degrees)):
        out.append(GradedObject.from_support(list(zip(degrees, dims))))
    return list(dict.fromkeys(out))


def not_closed_witness_gradedf(d: int) -> Report:
    """V = k in every degree of ℕ. A right adjoint [V,V] would need
    [V,V]_0 ≅ hom(V, V) = ∏_n Hom(V_n, V_n), which is infinite-dimensional;
    the truncations V_{≤d} show hom growing as d+1 without bound."""
    cat = GradedCategory(NATURALS)
    V = GeneratedGradedObject(lambda n: 1, "k in every degree")
    t = Tally("graded spaces with unbounded support are not closed", "graded non-closedness")
    dims = []
    for b in range(d + 1):
        Vb = V.truncate(b)
        dim = cat.hom(Vb, Vb).dim
        dims.append(dim)
        t.check(dim == b + 1, f"dim hom(V<={b}, V<={b})", {"dim": dim, "expected": b + 1})
        H = graded_internal_hom(cat, V, V, bound=b)
        t.check(H.dim(0) == dim, f"degree-0 part of the truncated internal hom at bound {b}", {"dim": H.dim(0)})
    try:
        graded_internal_hom(cat, V, V)
        t.fail("internal hom without a bound must be refused")
    except BoundRequired:
        t.check(True, "unbounded internal hom refused")
    t.details["dims"] = dims
    t.details["bounded"] = f"degrees 0..{d}"
    return t.report()
