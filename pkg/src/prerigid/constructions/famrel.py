"""Families with relations as index maps: FamRel(C).

A morphism X → Y is a set of triples (i, j, f) with f : X_i → Y_j, read as
a relation between the index sets labelled by base morphisms. Composition
sums over the middle index.
"""

from __future__ import annotations

import random
from typing import Sequence

from ..core import EnumeratedHom, MonoidalCategory, Morphism, SampledHom, compose
from ..engine import PreDualData, PreRigidStructure, finrel_structure, forward
from ..errors import ValidationError
from ..instances.finrel import FINREL, FinRelObject
from ..report import Report, Tally
from .fam import FamObject, _tensor_families


class FamRelCategory(MonoidalCategory):
    def __init__(self, base: MonoidalCategory, cap: int = 12):
        self.base = base
        self.cap = cap
        self.key = f"FamRel({base.key})"
        self.has_braiding = getattr(base, "has_braiding", False)

    @property
    def unit(self) -> FamObject:
        return FamObject(((),), (self.base.unit,), 0)

    def validate_object(self, X) -> None:
        if not isinstance(X, FamObject):
            raise ValidationError(f"not a family: {X!r}")

    def tensor(self, X, Y):
        return _tensor_families(self.base, X, Y)

    def famrel_mor(self, X: FamObject, Y: FamObject, triples) -> Morphism:
        triples = frozenset(triples)
        for i, j, f in triples:
            if i not in X.index or j not in Y.index:
                raise ValidationError(f"triple ({i}, {j}) outside the index sets")
            if f.source != X.fiber(i) or f.target != Y.fiber(j):
                raise ValidationError(f"base morphism at ({i}, {j}) has the wrong type")
        return Morphism(self, X, Y, triples)

    def identity(self, X) -> Morphism:
        return Morphism(self, X, X, frozenset((i, i, self.base.identity(a)) for i, a in X.items()))

    def _compose(self, g, f):
        after: dict = {}
        for j, k, h in g.data:
            after.setdefault(j, []).append((k, h))
        return frozenset((i, k, compose(h, e)) for i, j, e in f.data for k, h in after.get(j, ()))

    def _tensor_mor(self, f, g):
        return frozenset((i + i2, j + j2, self.base.tensor_mor(a, b))
                         for i, j, a in f.data for i2, j2, b in g.data)

    def braid(self, X, Y) -> Morphism:
        return Morphism(self, self.tensor(X, Y), self.tensor(Y, X), frozenset(
            (i + j, j + i, self.base.braid(a, b)) for i, a in X.items() for j, b in Y.items()))

    def braid_inverse(self, X, Y) -> Morphism:
        return Morphism(self, self.tensor(Y, X), self.tensor(X, Y), frozenset(
            (j + i, i + j, self.base.braid_inverse(a, b)) for i, a in X.items() for j, b in Y.items()))

    def _candidates(self, X, Y):
        """Possible triples, or None when some base hom is not enumerable."""
        out = []
        for i, a in X.items():
            for j, b in Y.items():
                h = self.base.hom(a, b)
                if h.kind != "enumerated":
                    return None
                out.extend((i, j, f) for f in h.elements)
        return out

    def hom(self, X, Y):
        cands = self._candidates(X, Y)
        if cands is not None and len(cands) <= self.cap:
            mors = []
            for mask in range(1 << len(cands)):
                mors.append(Morphism(self, X, Y, frozenset(c for k, c in enumerate(cands) if mask >> k & 1)))
            return EnumeratedHom(X, Y, tuple(mors))
        return SampledHom(X, Y, lambda rng, n: [self.random_morphism(X, Y, rng) for _ in range(n)])

    def random_morphism(self, X, Y, rng: random.Random) -> Morphism:
        triples = set()
        for i, a in X.items():
            for j, b in Y.items():
                if rng.random() < 0.5:
                    f = self.base.random_morphism(a, b, rng)
                    if f is not None:
                        triples.add((i, j, f))
        return Morphism(self, X, Y, frozenset(triples))


def famrel_category(base: MonoidalCategory) -> FamRelCategory:
    return FamRelCategory(base)


def famrel_predual(cat: FamRelCategory, Y: FamObject, base_structure: PreRigidStructure) -> PreDualData:
    """Same index set, fibers replaced by their pre-duals, diagonal evaluation."""
    Ys = FamObject(Y.index, tuple(base_structure.dual(b) for b in Y.fibers), Y.arity)
    ev = frozenset((j + j, (), base_structure.ev(b)) for j, b in Y.items())
    return PreDualData(Ys, Morphism(cat, cat.tensor(Ys, Y), cat.unit, ev))


def famrel_structure(cat: FamRelCategory, base_structure: PreRigidStructure) -> PreRigidStructure:
    def solver(T, X, d, t):
        return famrel_inverse(cat, T, X, t, base_structure)

    return PreRigidStructure(cat, lambda Y: famrel_predual(cat, Y, base_structure), solver,
                             f"fiberwise pre-duals in {cat.key}")


def famrel_inverse(cat: FamRelCategory, T: FamObject, Y: FamObject, t: Morphism,
                   base_structure: PreRigidStructure) -> Morphism:
    """(R, {f}) ↦ (R†, {f†}): split each source label of t and dualize the fiber map."""
    k = T.arity
    Ys = famrel_predual(cat, Y, base_structure).object
    triples = set()
    for ij, _, f in t.data:
        i, j = ij[:k], ij[k:]
        triples.add((i, j, base_structure.dagger(T.fiber(i), Y.fiber(j), f)))
    return Morphism(cat, T, Ys, frozenset(triples))


def famrel_to_rel(m: Morphism) -> Morphism:
    """Forget the fiber data (terminal base): a FamRel morphism as a relation."""
    X = FinRelObject(m.source.index, m.source.arity)
    Y = FinRelObject(m.target.index, m.target.arity)
    return Morphism(FINREL, X, Y, frozenset((i, j) for i, j, _ in m.data))


def check_famrel_inverse(cat: FamRelCategory, structure: PreRigidStructure, pairs: Sequence[tuple],
                         rng: random.Random | None = None, samples: int = 8) -> Report:
    """The stated inverse undoes the forward map in both directions."""
    rng = rng or random.Random(0)
    t = Tally("forward map and its stated inverse are mutually inverse in FamRel", "FamRel pre-duals")
    for T, Y in pairs:
        d = structure.predual(Y)
        H1 = cat.hom(T, d.object)
        H2 = cat.hom(cat.tensor(T, Y), cat.unit)
        us = H1.elements if H1.kind == "enumerated" else H1.sample(rng, samples)
        ss = H2.elements if H2.kind == "enumerated" else H2.sample(rng, samples)
        label = f"T={T.to_json()}, Y={Y.to_json()}"
        for u in us:
            back = structure.dagger(T, Y, forward(d, Y, u))
            if not t.check(back == u, label, {"u": u, "got": back}):
                break
        for s in ss:
            there = forward(d, Y, structure.dagger(T, Y, s))
            if not t.check(there == s, label, {"t": s, "got": there}):
                break
    return t.report()


def check_rel_agreement(cat: FamRelCategory, structure: PreRigidStructure, sizes: Sequence[int]) -> Report:
    """Over the terminal base FamRel(𝟏) is Rel: forgetting fibers matches the
    forward maps of both pre-rigid structures on every morphism."""
    rel = finrel_structure()
    t = Tally("FamRel over the terminal category agrees with Rel", "FamRel over the point")
    u0 = cat.base.unit
    for a in sizes:
        for b in sizes:
            T = FamObject.make([((f"t{i}",), u0) for i in range(a)], 1)
            Y = FamObject.make([((f"y{j}",), u0) for j in range(b)], 1)
            d = structure.predual(Y)
            H = cat.hom(T, d.object)
            ok = len(H.elements) == 2 ** (a * b)
            t.check(ok, f"|Hom| for sizes {a}, {b}", {"count": len(H.elements)})
            Yr = FinRelObject(Y.index, 1)
            for u in H.elements:
                lhs = famrel_to_rel(forward(d, Y, u))
                rhs = forward(rel.predual(Yr), Yr, famrel_to_rel(u))
                if not t.check(lhs == rhs, f"sizes {a}, {b}", {"u": u}):
                    break
    return t.report()
