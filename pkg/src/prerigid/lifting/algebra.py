"""Algebra, coalgebra and bialgebra objects; moving lax and colax structures
across an adjunction and lifting objects along monoidal functors."""

from __future__ import annotations

import random
from dataclasses import dataclass
from typing import Any, Sequence

from ..core import (
    Adjunction,
    ColaxStructure,
    Functor,
    LaxStructure,
    MonoidalCategory,
    Morphism,
    compose,
    compose_all,
)
from ..errors import InvalidAlgebra, InvalidCoalgebra
from ..report import Report, Tally


@dataclass(frozen=True)
class AlgebraObject:
    carrier: Any
    m: Morphism  # A⊗A → A
    u: Morphism  # 𝕀 → A

    @property
    def cat(self) -> MonoidalCategory:
        return self.m.cat

    def to_json(self):
        from ..report import jsonable

        return {"carrier": jsonable(self.carrier), "m": jsonable(self.m.data), "u": jsonable(self.u.data)}


@dataclass(frozen=True)
class CoalgebraObject:
    carrier: Any
    delta: Morphism  # C → C⊗C
    eps: Morphism  # C → 𝕀

    @property
    def cat(self) -> MonoidalCategory:
        return self.delta.cat

    def to_json(self):
        from ..report import jsonable

        return {"carrier": jsonable(self.carrier), "delta": jsonable(self.delta.data),
                "epsilon": jsonable(self.eps.data)}


@dataclass(frozen=True)
class BialgebraObject:
    algebra: AlgebraObject
    coalgebra: CoalgebraObject

    @property
    def carrier(self):
        return self.algebra.carrier


def algebra_failures(A: AlgebraObject) -> list[str]:
    cat, X = A.cat, A.carrier
    idX = cat.identity(X)
    out = []
    if A.m.source != cat.tensor(X, X) or A.m.target != X or A.u.source != cat.unit or A.u.target != X:
        return ["structure maps have the wrong endpoints"]
    if compose(A.m, cat.tensor_mor(A.m, idX)) != compose(A.m, cat.tensor_mor(idX, A.m)):
        out.append("associativity")
    if compose(A.m, cat.tensor_mor(A.u, idX)) != idX:
        out.append("left unit")
    if compose(A.m, cat.tensor_mor(idX, A.u)) != idX:
        out.append("right unit")
    return out


def coalgebra_failures(C: CoalgebraObject) -> list[str]:
    cat, X = C.cat, C.carrier
    idX = cat.identity(X)
    out = []
    if C.delta.source != X or C.delta.target != cat.tensor(X, X) or C.eps.source != X or C.eps.target != cat.unit:
        return ["structure maps have the wrong endpoints"]
    if compose(cat.tensor_mor(C.delta, idX), C.delta) != compose(cat.tensor_mor(idX, C.delta), C.delta):
        out.append("coassociativity")
    if compose(cat.tensor_mor(C.eps, idX), C.delta) != idX:
        out.append("left counit")
    if compose(cat.tensor_mor(idX, C.eps), C.delta) != idX:
        out.append("right counit")
    return out


def validate_algebra(A: AlgebraObject) -> AlgebraObject:
    bad = algebra_failures(A)
    if bad:
        raise InvalidAlgebra(", ".join(bad))
    return A


def validate_coalgebra(C: CoalgebraObject) -> CoalgebraObject:
    bad = coalgebra_failures(C)
    if bad:
        raise InvalidCoalgebra(", ".join(bad))
    return C


def check_bialgebra(B: BialgebraObject) -> Report:
    """Δ and ε are algebra maps for the braided tensor-product algebra."""
    A, C = B.algebra, B.coalgebra
    cat, X = A.cat, A.carrier
    t = Tally("structure maps form a bialgebra", "bialgebra axioms")
    for name in algebra_failures(A):
        t.fail(f"algebra {name}")
    for name in coalgebra_failures(C):
        t.fail(f"coalgebra {name}")
    idX = cat.identity(X)
    middle = cat.tensor_mor(cat.tensor_mor(idX, cat.braid(X, X)), idX)
    lhs = compose(C.delta, A.m)
    rhs = compose_all(cat.tensor_mor(A.m, A.m), middle, cat.tensor_mor(C.delta, C.delta))
    t.check(lhs == rhs, "Δ∘m = (m⊗m)∘(A⊗c⊗A)∘(Δ⊗Δ)", {"lhs": lhs.data, "rhs": rhs.data})
    t.check(compose(C.delta, A.u) == cat.tensor_mor(A.u, A.u), "Δ∘u = u⊗u")
    t.check(compose(C.eps, A.m) == cat.tensor_mor(C.eps, C.eps), "ε∘m = ε⊗ε")
    t.check(compose(C.eps, A.u) == cat.identity(cat.unit), "ε∘u = id")
    return t.report()


# coherence of lax / colax structures


def _pairs(objects):
    return [(X, Y) for X in objects for Y in objects]


def check_lax_coherence(F: Functor, lax: LaxStructure, objects: Sequence, rng: random.Random | None = None,
                        claim: str = "lax structure is coherent") -> Report:
    """Associativity, both unit laws and naturality of φ₂ on sampled morphisms."""
    A, B = F.source, F.target
    rng = rng or random.Random(0)
    t = Tally(claim, "lax monoidal coherence")
    p2, p0 = lax.phi2, lax.phi0
    for X in objects:
        FX = F.obj(X)
        idF = B.identity(FX)
        t.check(compose(p2(A.unit, X), B.tensor_mor(p0, idF)) == idF, f"left unit at {X!r}")
        t.check(compose(p2(X, A.unit), B.tensor_mor(idF, p0)) == idF, f"right unit at {X!r}")
        for Y in objects:
            for Z in objects:
                lhs = compose(p2(A.tensor(X, Y), Z), B.tensor_mor(p2(X, Y), B.identity(F.obj(Z))))
                rhs = compose(p2(X, A.tensor(Y, Z)), B.tensor_mor(idF, p2(Y, Z)))
                t.check(lhs == rhs, f"associativity at {X!r}, {Y!r}, {Z!r}", {"lhs": lhs.data, "rhs": rhs.data})
    _naturality(t, F, p2, objects, rng, lax=True)
    return t.report()


def check_colax_coherence(F: Functor, colax: ColaxStructure, objects: Sequence,
                          rng: random.Random | None = None, claim: str = "colax structure is coherent") -> Report:
    A, B = F.source, F.target
    rng = rng or random.Random(0)
    t = Tally(claim, "colax monoidal coherence")
    q2, q0 = colax.psi2, colax.psi0
    for X in objects:
        FX = F.obj(X)
        idF = B.identity(FX)
        t.check(compose(B.tensor_mor(q0, idF), q2(A.unit, X)) == idF, f"left counit at {X!r}")
        t.check(compose(B.tensor_mor(idF, q0), q2(X, A.unit)) == idF, f"right counit at {X!r}")
        for Y in objects:
            for Z in objects:
                lhs = compose(B.tensor_mor(q2(X, Y), B.identity(F.obj(Z))), q2(A.tensor(X, Y), Z))
                rhs = compose(B.tensor_mor(idF, q2(Y, Z)), q2(X, A.tensor(Y, Z)))
                t.check(lhs == rhs, f"coassociativity at {X!r}, {Y!r}, {Z!r}", {"lhs": lhs.data, "rhs": rhs.data})
    _naturality(t, F, q2, objects, rng, lax=False)
    return t.report()


def _naturality(t: Tally, F: Functor, s2, objects, rng, lax: bool, samples: int = 2) -> None:
    A, B = F.source, F.target
    pairs = _pairs(objects)
    for (X, Y), (X2, Y2) in [(pairs[k], pairs[-1 - k]) for k in range(min(samples, len(pairs)))]:
        f, g = A.random_morphism(X, X2, rng), A.random_morphism(Y, Y2, rng)
        if f is None or g is None:
            continue
        if lax:
            lhs = compose(s2(X2, Y2), B.tensor_mor(F.mor(f), F.mor(g)))
            rhs = compose(F.mor(A.tensor_mor(f, g)), s2(X, Y))
        else:
            lhs = compose(B.tensor_mor(F.mor(f), F.mor(g)), s2(X, Y))
            rhs = compose(s2(X2, Y2), F.mor(A.tensor_mor(f, g)))
        t.check(lhs == rhs, f"naturality along {X!r}->{X2!r}, {Y!r}->{Y2!r}")


def check_adjunction(adj: Adjunction, lower_objects: Sequence, upper_objects: Sequence,
                     claim: str = "triangle identities hold") -> Report:
    """Rε ∘ ηR = id_R on upper objects and εL ∘ Lη = id_L on lower objects."""
    L, R, eta, eps = adj.left, adj.right, adj.unit, adj.counit
    t = Tally(claim, "adjunction triangle identities")
    for Aobj in upper_objects:
        RA = R.obj(Aobj)
        got = compose(R.mor(eps.at(Aobj)), eta.at(RA))
        t.check(got == R.target.identity(RA), f"R-triangle at {Aobj!r}", {"got": got.data})
    for Bobj in lower_objects:
        LB = L.obj(Bobj)
        got = compose(eps.at(LB), L.mor(eta.at(Bobj)))
        t.check(got == L.target.identity(LB), f"L-triangle at {Bobj!r}", {"got": got.data})
    return t.report()


# transport across L ⊣ R (L : B → A, R : A → B)


def colax_from_lax(adj: Adjunction, lax: LaxStructure) -> ColaxStructure:
    """ψ₂(X,Y) = ε_{LX⊗LY} ∘ Lφ₂(LX,LY) ∘ L(η_X⊗η_Y) and ψ₀ = ε_𝕀 ∘ Lφ₀."""
    L, eta, eps = adj.left, adj.unit, adj.counit
    Bcat, Acat = L.source, L.target

    def psi2(X, Y):
        LX, LY = L.obj(X), L.obj(Y)
        return compose_all(eps.at(Acat.tensor(LX, LY)), L.mor(lax.phi2(LX, LY)),
                           L.mor(Bcat.tensor_mor(eta.at(X), eta.at(Y))))

    return ColaxStructure(psi2, compose(eps.at(Acat.unit), L.mor(lax.phi0)))


def lax_from_colax(adj: Adjunction, colax: ColaxStructure) -> LaxStructure:
    """φ₂(X,Y) = R(ε_X⊗ε_Y) ∘ Rψ₂(RX,RY) ∘ η_{RX⊗RY} and φ₀ = Rψ₀ ∘ η_𝕀."""
    R, eta, eps = adj.right, adj.unit, adj.counit
    Bcat, Acat = R.target, R.source

    def phi2(X, Y):
        RX, RY = R.obj(X), R.obj(Y)
        return compose_all(R.mor(Acat.tensor_mor(eps.at(X), eps.at(Y))), R.mor(colax.psi2(RX, RY)),
                           eta.at(Bcat.tensor(RX, RY)))

    return LaxStructure(phi2, compose(R.mor(colax.psi0), eta.at(Bcat.unit)))


def compare_lax(a: LaxStructure, b: LaxStructure, objects: Sequence, claim: str) -> Report:
    t = Tally(claim, "lax and colax transport")
    t.check(a.phi0 == b.phi0, "unit components", {"a": a.phi0.data, "b": b.phi0.data})
    for X, Y in _pairs(objects):
        x, y = a.phi2(X, Y), b.phi2(X, Y)
        t.check(x == y, f"phi2 at {X!r}, {Y!r}", {"a": x.data, "b": y.data})
    return t.report()


def compare_colax(a: ColaxStructure, b: ColaxStructure, objects: Sequence, claim: str) -> Report:
    t = Tally(claim, "lax and colax transport")
    t.check(a.psi0 == b.psi0, "unit components", {"a": a.psi0.data, "b": b.psi0.data})
    for X, Y in _pairs(objects):
        x, y = a.psi2(X, Y), b.psi2(X, Y)
        t.check(x == y, f"psi2 at {X!r}, {Y!r}", {"a": x.data, "b": y.data})
    return t.report()


# lifts


def alg_lift(R: Functor, A: AlgebraObject) -> AlgebraObject:
    """R̄(A, m, u) = (RA, Rm∘φ₂(A,A), Ru∘φ₀)."""
    validate_algebra(A)
    if R.lax is None:
        raise InvalidAlgebra(f"{R.name} has no lax structure")
    X = A.carrier
    out = AlgebraObject(R.obj(X), compose(R.mor(A.m), R.lax.phi2(X, X)), compose(R.mor(A.u), R.lax.phi0))
    bad = algebra_failures(out)
    if bad:
        raise InvalidAlgebra(f"lifted algebra fails: {', '.join(bad)}")
    return out


def coalg_lift(L: Functor, C: CoalgebraObject) -> CoalgebraObject:
    """L̲(C, Δ, ε) = (LC, ψ₂(C,C)∘LΔ, ψ₀∘Lε)."""
    validate_coalgebra(C)
    if L.colax is None:
        raise InvalidCoalgebra(f"{L.name} has no colax structure")
    X = C.carrier
    out = CoalgebraObject(L.obj(X), compose(L.colax.psi2(X, X), L.mor(C.delta)), compose(L.colax.psi0, L.mor(C.eps)))
    bad = coalgebra_failures(out)
    if bad:
        raise InvalidCoalgebra(f"lifted coalgebra fails: {', '.join(bad)}")
    return out


def algebra_in_opposite(C: CoalgebraObject, opcat) -> AlgebraObject:
    """A coalgebra of C read as an algebra of C^op."""
    return AlgebraObject(C.carrier, opcat.op(C.delta), opcat.op(C.eps))


def coalgebra_from_opposite(A: AlgebraObject, opcat) -> CoalgebraObject:
    return CoalgebraObject(A.carrier, opcat.unop(A.m), opcat.unop(A.u))


def algebra_from_opposite(C: CoalgebraObject, opcat) -> AlgebraObject:
    """A coalgebra of C^op read as an algebra of C."""
    return AlgebraObject(C.carrier, opcat.unop(C.delta), opcat.unop(C.eps))
