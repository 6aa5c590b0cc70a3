"""Pre-duals, the dagger solver and verification of the universal property.

For a candidate pre-dual (X*, ev_X) and a test object T the forward map is

    Hom(T, X*) → Hom(T⊗X, 𝕀),    u ↦ ev_X ∘ (u ⊗ X)

and the candidate is a pre-dual when this map is bijective for every T. The
dagger t ↦ t† is its inverse.
"""

from __future__ import annotations

import random
from dataclasses import dataclass, field
from functools import lru_cache
from typing import Any, Callable, Iterable, Sequence

from .core import (
    Adjunction,
    MonoidalCategory,
    Morphism,
    compose,
    compose_all,
    find_inverse,
)
from .errors import NotPreDual, TransferBlocked, Unsupported, ValidationError
from .linalg import Matrix, stack_columns
from .report import Report, Tally


@dataclass(frozen=True)
class PreDualData:
    object: Any
    evaluation: Morphism

    def to_json(self) -> dict:
        from .report import jsonable

        return {"object": jsonable(self.object), "evaluation": self.evaluation.to_json()}


def check_shape(X, d: PreDualData) -> None:
    cat = d.evaluation.cat
    if d.evaluation.source != cat.tensor(d.object, X) or d.evaluation.target != cat.unit:
        raise ValidationError("evaluation must go from X*⊗X to the unit")


def forward(d: PreDualData, X, u: Morphism) -> Morphism:
    """u ↦ ev_X ∘ (u ⊗ X)."""
    cat = u.cat
    return compose(d.evaluation, cat.tensor_mor(u, cat.identity(X)))


# a dagger solver takes (T, X, predual, t) and returns t†
DaggerSolver = Callable[[Any, Any, PreDualData, Morphism], Morphism]


@lru_cache(maxsize=4096)
def _forward_matrix(T, X, d: PreDualData) -> tuple[Matrix, int]:
    cat = d.evaluation.cat
    src = cat.hom(T, d.object)
    tgt = cat.hom(cat.tensor(T, X), cat.unit)
    cols = [tgt.coords(forward(d, X, b)) for b in src.basis]
    M = stack_columns(cols, tgt.dim)
    return M, M.rank()


def forward_matrix(T, X, d: PreDualData) -> Matrix:
    """Matrix of the forward map in the chosen hom bases (linear homs only)."""
    return _forward_matrix(T, X, d)[0]


def generic_dagger(T, X, d: PreDualData, t: Morphism) -> Morphism:
    """Invert the forward map by search (enumerated homs) or exact solve (linear homs)."""
    cat = d.evaluation.cat
    if t.source != cat.tensor(T, X) or t.target != cat.unit:
        raise ValidationError("t must go from T⊗X to the unit")
    H = cat.hom(T, d.object)
    if H.kind == "enumerated":
        sols = [u for u in H.elements if forward(d, X, u) == t]
        if len(sols) != 1:
            raise NotPreDual(f"{len(sols)} preimages for t at T={T!r}")
        return sols[0]
    if H.kind == "linear":
        M, rank = _forward_matrix(T, X, d)
        if rank != H.dim:
            raise NotPreDual(f"forward map not injective at T={T!r}")
        tgt = cat.hom(cat.tensor(T, X), cat.unit)
        sol = M.solve(tgt.coords(t))
        if sol is None:
            raise NotPreDual(f"t has no preimage at T={T!r}")
        return H.combine(sol)
    raise Unsupported(f"{cat.key} needs a dedicated dagger solver for sampled homs")


def dagger(t: Morphism, predual: PreDualData, T, X, solver: DaggerSolver | None = None) -> Morphism:
    """The unique t† : T → X* with ev_X ∘ (t† ⊗ X) = t."""
    return (solver or generic_dagger)(T, X, predual, t)


class PreRigidStructure:
    """An assignment X ↦ (X*, ev_X) plus the dagger solver to use."""

    def __init__(self, cat: MonoidalCategory, assign: Callable[[Any], PreDualData],
                 solver: DaggerSolver | None = None, name: str = ""):
        self.cat = cat
        self._assign = assign
        self.solver = solver or generic_dagger
        self.name = name or f"pre-duals of {cat.key}"
        self._cache: dict = {}

    def predual(self, X) -> PreDualData:
        if X not in self._cache:
            d = self._assign(X)
            check_shape(X, d)
            self._cache[X] = d
        return self._cache[X]

    def dual(self, X):
        return self.predual(X).object

    def ev(self, X) -> Morphism:
        return self.predual(X).evaluation

    def dagger(self, T, X, t: Morphism) -> Morphism:
        return self.solver(T, X, self.predual(X), t)

    def dual_mor(self, f: Morphism) -> Morphism:
        return predual_of_morphism(f, self)


def predual_of_morphism(f: Morphism, structure: PreRigidStructure) -> Morphism:
    """f* : Y* → X*, the dagger of ev_Y ∘ (Y* ⊗ f)."""
    cat = structure.cat
    X, Y = f.source, f.target
    Ys = structure.dual(Y)
    t = compose(structure.ev(Y), cat.tensor_mor(cat.identity(Ys), f))
    return structure.dagger(Ys, X, t)


# verification


def verify_predual(X, candidate: PreDualData, tests: Iterable, solver: DaggerSolver | None = None,
                   rng: random.Random | None = None, samples: int = 4, claim: str | None = None) -> Report:
    """Check the forward map is bijective at every test object.

    Enumerated homs are checked by exhaustion, linear homs by an exact
    square/full-rank certificate, and sampled homs by dagger round trips.
    """
    cat = candidate.evaluation.cat
    check_shape(X, candidate)
    rng = rng or random.Random(0)
    solver = solver or generic_dagger
    t = Tally(claim or f"pre-dual of {X!r} satisfies the universal property on the test set",
              "pre-dual universal property")
    for T in tests:
        label = f"T={T!r}"
        H1 = cat.hom(T, candidate.object)
        H2 = cat.hom(cat.tensor(T, X), cat.unit)
        if H1.kind == H2.kind == "enumerated":
            images = [forward(candidate, X, u) for u in H1.elements]
            if len(set(images)) != len(images):
                seen: dict = {}
                for u, im in zip(H1.elements, images):
                    if im in seen:
                        t.fail(label, {"kind": "not injective", "u1": seen[im], "u2": u})
                        break
                    seen[im] = u
                continue
            missing = [m for m in H2.elements if m not in set(images)]
            t.check(not missing, label, {"kind": "not surjective", "t": missing[0]} if missing else None)
        elif H1.kind == H2.kind == "linear":
            M = forward_matrix(T, X, candidate)
            if M.rows != M.cols:
                t.fail(label, {"kind": "non-square", "shape": list(M.shape)})
                continue
            r = _forward_matrix(T, X, candidate)[1]
            t.check(r == M.cols, label, {"kind": "rank deficient", "rank": r, "size": M.cols})
        else:
            _round_trips(t, label, cat, T, X, candidate, solver, rng, samples, H1, H2)
    rep = t.report()
    rep.details["bounded"] = "verified on the listed test objects only"
    return rep


def _round_trips(t: Tally, label, cat, T, X, d, solver, rng, n, H1, H2) -> None:
    def draw(H, k):
        if H.kind == "enumerated":
            return list(H.elements)[:k] if len(H.elements) <= k else rng.sample(list(H.elements), k)
        if H.kind == "linear":
            return [H.combine([rng.randint(-2, 2) for _ in H.basis]) for _ in range(k)]
        return H.sample(rng, k)

    try:
        for u in draw(H1, n):
            back = solver(T, X, d, forward(d, X, u))
            if not t.check(back == u, label, {"kind": "u -> t -> u mismatch", "u": u, "got": back}):
                return
        for s in draw(H2, n):
            there = forward(d, X, solver(T, X, d, s))
            if not t.check(there == s, label, {"kind": "t -> u -> t mismatch", "t": s, "got": there}):
                return
    except NotPreDual as exc:
        t.fail(label, {"kind": "dagger failed", "error": str(exc)})


def uniqueness_iso(d1: PreDualData, d2: PreDualData, X, solver: DaggerSolver | None = None) -> Morphism:
    """The canonical iso d2.object → d1.object: dagger of d2's evaluation against d1."""
    solver = solver or generic_dagger
    cat = d1.evaluation.cat
    iso = solver(d2.object, X, d1, d2.evaluation)
    back = solver(d1.object, X, d2, d1.evaluation)
    if compose(back, iso) != cat.identity(d2.object) or compose(iso, back) != cat.identity(d1.object):
        raise NotPreDual("comparison map is not invertible; one candidate is not a pre-dual")
    return iso


# standard structures


def finvect_structure() -> PreRigidStructure:
    from .instances.finvect import FINVECT

    def solver(T, X, d, t):
        if d.object != X or d.evaluation != FINVECT.pairing(X):
            return generic_dagger(T, X, d, t)
        return FINVECT.dagger_formula(T, X, t)

    return PreRigidStructure(FINVECT, lambda X: PreDualData(X, FINVECT.pairing(X)), solver, "FinVect pairing")


def finrel_structure() -> PreRigidStructure:
    from .instances.finrel import FINREL

    def solver(T, X, d, t):
        if d.object != X or d.evaluation != FINREL.evaluation(X):
            return generic_dagger(T, X, d, t)
        return FINREL.dagger_formula(T, X, t)

    return PreRigidStructure(FINREL, lambda X: PreDualData(X, FINREL.evaluation(X)), solver, "Rel diagonal")


def closed_to_prerigid(cat: MonoidalCategory) -> PreRigidStructure:
    """X* := [X, 𝕀] with ev_X the counit of the internal-hom adjunction."""
    if not hasattr(cat, "internal_hom") or not hasattr(cat, "closed_counit"):
        raise Unsupported(f"{cat.key} has no internal hom")
    return PreRigidStructure(
        cat, lambda X: PreDualData(cat.internal_hom(X, cat.unit), cat.closed_counit(X, cat.unit)),
        name=f"internal hom of {cat.key}")


@dataclass
class Obstruction:
    claim: str
    reason: str
    witness: Any = None
    details: dict = field(default_factory=dict)

    def to_json(self) -> dict:
        from .report import jsonable

        return {"claim": self.claim, "reason": self.reason, "witness": jsonable(self.witness),
                "details": jsonable(self.details)}


@dataclass
class TerminalUnitResult:
    structure: PreRigidStructure | None
    obstruction: Obstruction | None
    not_right_closed: Obstruction | None


def _singleton(h) -> bool:
    if h.kind == "enumerated":
        return len(h.elements) == 1
    if h.kind == "linear":
        return h.dim == 0
    return False


def terminal_unit_prerigid(cat: MonoidalCategory, objects: Sequence) -> TerminalUnitResult:
    """Pre-duals X* := 𝕀 when the unit is terminal (checked on ``objects``).

    Also tests whether the unit is initial while some object is not
    isomorphic to it, which rules out right closedness.
    """
    I = cat.unit
    structure = obstruction = None
    bad = next((X for X in objects if not _singleton(cat.hom(X, I))), None)
    if bad is None:
        def assign(X):
            h = cat.hom(cat.tensor(I, X), I)
            ev = h.elements[0] if h.kind == "enumerated" else h.combine([])
            return PreDualData(I, ev)

        structure = PreRigidStructure(cat, assign, name=f"terminal unit of {cat.key}")
    else:
        h = cat.hom(bad, I)
        size = len(h.elements) if h.kind == "enumerated" else f"dim {h.dim}"
        obstruction = Obstruction("unit object is terminal", "hom(X, unit) is not a singleton",
                                  {"object": bad, "hom_size": size})

    nrc = None
    initial = all(_singleton(cat.hom(I, X)) for X in objects)
    if initial:
        for X in objects:
            h = cat.hom(I, X)
            f = h.elements[0] if h.kind == "enumerated" else h.combine([])
            if find_inverse(f) is None:
                nrc = Obstruction(
                    "category is not right closed",
                    "unit is initial and some object is not isomorphic to it",
                    {"object": X},
                    {"unit_terminal_on_tests": bad is None,
                     "note": "if such a category were pre-rigid the unit would also be terminal; "
                             "checked on the given objects only"})
                break
    return TerminalUnitResult(structure, obstruction, nrc)


# units for braided categories


@dataclass(frozen=True)
class UnitPair:
    eta: Morphism
    j: Morphism


def compute_units(X, structure: PreRigidStructure) -> UnitPair:
    """η_X := (ev_X ∘ c_{X,X*})† and j_X := (ev_X ∘ c⁻¹_{X*,X})†, both X → X**."""
    cat = structure.cat
    Xs = structure.dual(X)
    ev = structure.ev(X)
    eta = structure.dagger(X, Xs, compose(ev, cat.braid(X, Xs)))
    j = structure.dagger(X, Xs, compose(ev, cat.braid_inverse(Xs, X)))
    return UnitPair(eta, j)


def selfadjoint_map(structure: PreRigidStructure, X, Y, u: Morphism) -> Morphism:
    """Hom(Y, X*) → Hom(X, Y*) through Hom(Y⊗X, 𝕀) ≅ Hom(X⊗Y, 𝕀)."""
    cat = structure.cat
    s = forward(structure.predual(X), X, u)
    if cat.has_braiding:
        s = compose(s, cat.braid(X, Y))
    else:
        h = cat.hom(cat.tensor(X, Y), cat.unit)
        if not _singleton(h):
            raise Unsupported("self-adjointness needs a braiding or a terminal unit")
        s = h.elements[0] if h.kind == "enumerated" else h.combine([])
    return structure.dagger(X, Y, s)


def check_selfadjoint(structure: PreRigidStructure, pairs: Sequence[tuple], rng: random.Random | None = None,
                      bijection: Callable | None = None, samples: int = 3) -> Report:
    """Bijectivity of Hom(Y,X*) ≅ Hom(X,Y*) and naturality in X and Y."""
    cat = structure.cat
    rng = rng or random.Random(0)
    theta = bijection or (lambda X, Y, u: selfadjoint_map(structure, X, Y, u))
    t = Tally("Hom(Y, X*) and Hom(X, Y*) are naturally isomorphic", "self-adjointness of the pre-dual functor")
    objs = list(dict.fromkeys(o for p in pairs for o in p))
    for X, Y in pairs:
        label = f"X={X!r}, Y={Y!r}"
        H = cat.hom(Y, structure.dual(X))
        K = cat.hom(X, structure.dual(Y))
        if H.kind == "enumerated":
            images = [theta(X, Y, u) for u in H.elements]
            ok = len(set(images)) == len(images) == len(K.elements)
            t.check(ok, label + " bijective", {"sizes": [len(H.elements), len(K.elements)]})
            us = list(H.elements)
        else:
            cols = [K.coords(theta(X, Y, b)) for b in H.basis]
            M = stack_columns(cols, K.dim)
            t.check(M.rows == M.cols and M.rank() == M.cols, label + " bijective", {"shape": list(M.shape)})
            us = [H.combine([rng.randint(-2, 2) for _ in H.basis]) for _ in range(samples)]
        for u in us[:samples]:
            for X2 in objs:
                f = cat.random_morphism(X2, X, rng)
                if f is None:
                    continue
                lhs = theta(X2, Y, compose(structure.dual_mor(f), u))
                rhs = compose(theta(X, Y, u), f)
                t.check(lhs == rhs, label + f" natural in X along {X2!r}", {"u": u, "f": f})
            for Y2 in objs:
                g = cat.random_morphism(Y2, Y, rng)
                if g is None:
                    continue
                lhs = theta(X, Y2, compose(u, g))
                rhs = compose(structure.dual_mor(g), theta(X, Y, u))
                t.check(lhs == rhs, label + f" natural in Y along {Y2!r}", {"u": u, "g": g})
    return t.report()


# transfer along an adjunction


def transfer_predual(adj: Adjunction, B, structure: PreRigidStructure) -> PreDualData:
    """B* := R((LB)*), for L : B → A strong monoidal and A pre-rigid.

    The evaluation is the image of id_{B*} under

        Hom(T, R(LB)*) ≅ Hom(LT, (LB)*) ≅ Hom(LT⊗LB, 𝕀) ≅ Hom(L(T⊗B), 𝕀)
                       ≅ Hom(T⊗B, R𝕀) ≅ Hom(T⊗B, RL𝕀) ≅ Hom(T⊗B, 𝕀).
    """
    L, R = adj.left, adj.right
    catA, catB = L.target, L.source
    if L.colax is None:
        raise ValidationError("left adjoint needs its (strong) monoidal structure")
    IB = catB.unit
    kappa = find_inverse(adj.unit.at(IB))
    if kappa is None:
        raise TransferBlocked("unit object is not isomorphic to RL(unit)")
    psi0_inv = find_inverse(L.colax.psi0)
    if psi0_inv is None:
        raise TransferBlocked("left adjoint does not preserve the unit")
    LB = L.obj(B)
    d = structure.predual(LB)
    Bs = R.obj(d.object)
    eps = adj.counit.at(d.object)
    inner = compose_all(d.evaluation, catA.tensor_mor(eps, catA.identity(LB)), L.colax.psi2(Bs, B))
    ev = compose_all(kappa, R.mor(psi0_inv), R.mor(inner), adj.unit.at(catB.tensor(Bs, B)))
    return PreDualData(Bs, ev)


def default_tests(cat: MonoidalCategory, X, bound: int = 2) -> list:
    """All objects up to ``bound`` plus the unit and X, for the built-in instances."""
    from .instances.finrel import FinRel
    from .instances.finvect import FinVect

    if isinstance(cat, FinVect):
        base = list(range(bound + 1))
    elif isinstance(cat, FinRel):
        base = cat.sets_up_to(bound)
    else:
        base = []
    return list(dict.fromkeys(base + [cat.unit, X]))
