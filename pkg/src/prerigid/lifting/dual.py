"""The pre-dual functor R = (−)* : C^op → C of a braided pre-rigid category,
its left adjoint L = R^op, and the comparison of the two lifts.

The adjunction is (L, R, η, j^op): the unit is η_X : X → X** and the counit
at Y is j_Y read in C^op. The two agree only when the braiding is symmetric
on the objects involved, so they are never interchanged here.
"""

from __future__ import annotations

import random
from dataclasses import dataclass
from typing import Sequence

from ..core import (
    Adjunction,
    ColaxStructure,
    Functor,
    LaxStructure,
    NaturalTransformation,
    OppositeCategory,
    compose,
)
from ..engine import PreRigidStructure, compute_units
from ..report import Report, Tally, merge
from .algebra import (
    CoalgebraObject,
    alg_lift,
    algebra_from_opposite,
    algebra_in_opposite,
    check_adjunction,
    check_lax_coherence,
    coalg_lift,
    colax_from_lax,
    compare_colax,
    compare_lax,
    lax_from_colax,
)


def dual_functor_lax(structure: PreRigidStructure) -> LaxStructure:
    """φ₂(X,Y) = ((ev_X⊗ev_Y)∘(X*⊗c⁻¹_{X,Y*}⊗Y))† : X*⊗Y* → (X⊗Y)*, φ₀ = (m_𝕀)†."""
    cat = structure.cat
    I = cat.unit
    cache: dict = {}

    def phi2(X, Y):
        if (X, Y) not in cache:
            cache[(X, Y)] = _phi2(X, Y)
        return cache[(X, Y)]

    def _phi2(X, Y):
        Xs, Ys = structure.dual(X), structure.dual(Y)
        swap = cat.tensor_mor(cat.tensor_mor(cat.identity(Xs), cat.braid_inverse(X, Ys)), cat.identity(Y))
        t = compose(cat.tensor_mor(structure.ev(X), structure.ev(Y)), swap)
        return structure.dagger(cat.tensor(Xs, Ys), cat.tensor(X, Y), t)

    # strictness: m_𝕀 : 𝕀⊗𝕀 → 𝕀 is the identity of 𝕀
    return LaxStructure(phi2, structure.dagger(I, I, cat.identity(I)))


@dataclass(frozen=True, eq=False)
class DualAdjunction:
    structure: PreRigidStructure
    opcat: OppositeCategory
    R: Functor  # C^op → C, lax
    L: Functor  # C → C^op, colax (φ₂^op, φ₀^op)
    adjunction: Adjunction


def dual_adjunction(structure: PreRigidStructure) -> DualAdjunction:
    cat = structure.cat
    opcat = OppositeCategory(cat)
    lax = dual_functor_lax(structure)
    R = Functor(opcat, cat, structure.dual, lambda f: structure.dual_mor(opcat.unop(f)), "dual", lax=lax)
    colax = ColaxStructure(lambda X, Y: opcat.op(lax.phi2(X, Y)), opcat.op(lax.phi0))
    L = Functor(cat, opcat, structure.dual, lambda f: opcat.op(structure.dual_mor(f)), "dual^op", colax=colax)
    units: dict = {}

    def unit_pair(X):
        if X not in units:
            units[X] = compute_units(X, structure)
        return units[X]

    eta = NaturalTransformation(None, None, lambda X: unit_pair(X).eta, "η")
    counit = NaturalTransformation(None, None, lambda Y: opcat.op(unit_pair(Y).j), "j^op")
    return DualAdjunction(structure, opcat, R, L, Adjunction(L, R, eta, counit))


def check_dual_functor(structure: PreRigidStructure, objects: Sequence, rng: random.Random | None = None) -> Report:
    """Lax coherence of (−)*, the triangle identities of (L, R, η, j^op), and
    that moving φ across the adjunction gives (φ₂^op, φ₀^op) and back."""
    D = dual_adjunction(structure)
    cat = structure.cat
    reports = [
        check_lax_coherence(D.R, D.R.lax, objects, rng, "the pre-dual functor is lax monoidal"),
        check_adjunction(D.adjunction, objects, objects, "the pre-dual functor is adjoint to its opposite"),
        compare_colax(colax_from_lax(D.adjunction, D.R.lax), D.L.colax, objects,
                      "colax structure moved across the adjunction is the opposite of the lax one"),
        compare_lax(lax_from_colax(D.adjunction, D.L.colax), D.R.lax, objects,
                    "lax structure is recovered from the colax one"),
    ]
    return merge(f"pre-dual functor of {cat.key} is lax and self-adjoint", reports, "pre-dual functor")


def check_barop_identity(structure: PreRigidStructure, coalgebras: Sequence[CoalgebraObject],
                         colax: ColaxStructure | None = None) -> Report:
    """R̄(C) (C read as an algebra of C^op) equals (L̲ C)^op on payloads."""
    D = dual_adjunction(structure)
    L = D.L if colax is None else D.L.with_colax(colax)
    t = Tally("lifted algebra of the pre-dual functor is the opposite of the lifted coalgebra", "lifts of the dual pair")
    for k, C in enumerate(coalgebras):
        bar = alg_lift(D.R, algebra_in_opposite(C, D.opcat))
        under = algebra_from_opposite(coalg_lift(L, C), D.opcat)
        label = f"coalgebra #{k} on {C.carrier!r}"
        t.check(bar.carrier == under.carrier, label + " carrier")
        t.check(bar.m == under.m, label + " multiplication", {"bar": bar.m.data, "under": under.m.data})
        t.check(bar.u == under.u, label + " unit", {"bar": bar.u.data, "under": under.u.data})
    return t.report()


def check_units_symmetric(structure: PreRigidStructure, objects: Sequence) -> Report:
    """η_X = j_X wherever c_{X*,X}∘c_{X,X*} is the identity."""
    cat = structure.cat
    t = Tally("η and j agree for a symmetric braiding", "units of the pre-dual adjunction")
    for X in objects:
        Xs = structure.dual(X)
        symmetric = compose(cat.braid(Xs, X), cat.braid(X, Xs)) == cat.identity(cat.tensor(X, Xs))
        u = compute_units(X, structure)
        if symmetric:
            t.check(u.eta == u.j, f"X={X!r}", {"eta": u.eta.data, "j": u.j.data})
        else:
            t.note(f"X={X!r} skipped: braiding not symmetric there")
    return t.report()


def check_dual_transpose_composition(structure: PreRigidStructure, objects: Sequence, rng: random.Random) -> Report:
    """(g∘f)* = f*∘g* and (id)* = id."""
    cat = structure.cat
    t = Tally("the pre-dual is contravariantly functorial", "pre-dual of a morphism")
    for X in objects:
        t.check(structure.dual_mor(cat.identity(X)) == cat.identity(structure.dual(X)), f"identity at {X!r}")
    for X in objects:
        for Y in objects:
            for Z in objects:
                f, g = cat.random_morphism(X, Y, rng), cat.random_morphism(Y, Z, rng)
                if f is None or g is None:
                    continue
                lhs = structure.dual_mor(compose(g, f))
                rhs = compose(structure.dual_mor(f), structure.dual_mor(g))
                t.check(lhs == rhs, f"{X!r}->{Y!r}->{Z!r}", {"f": f.data, "g": g.data})
    return t.report()
