"""Finite sets and binary relations.

Elements of an object are tuples of atoms of a fixed arity; the tensor
concatenates tuples, which makes the cartesian product strictly associative
and the singleton ``{()}`` a strict unit.
"""

from __future__ import annotations

import random
from dataclasses import dataclass

from ..core import EnumeratedHom, MonoidalCategory, Morphism, SampledHom
from ..errors import ValidationError

STAR = ()


@dataclass(frozen=True)
class FinRelObject:
    elements: tuple
    arity: int

    def __post_init__(self):
        # the empty set has one representation whatever the arity
        if not self.elements:
            object.__setattr__(self, "arity", 0)

    @classmethod
    def of(cls, *labels) -> "FinRelObject":
        obj = cls(tuple((x,) for x in labels), 1)
        obj.validate()
        return obj

    def validate(self) -> None:
        if len(set(self.elements)) != len(self.elements):
            raise ValidationError("FinRel object has duplicate labels")
        if any(not isinstance(e, tuple) or len(e) != self.arity for e in self.elements):
            raise ValidationError("FinRel elements must be tuples of the object's arity")

    def __len__(self) -> int:
        return len(self.elements)

    def to_json(self):
        return [list(e) for e in self.elements]


class FinRel(MonoidalCategory):
    key = "FinRel"
    has_braiding = True

    def __init__(self, cap: int = 12):
        self.cap = cap

    @property
    def unit(self) -> FinRelObject:
        return FinRelObject((STAR,), 0)

    def validate_object(self, X) -> None:
        if not isinstance(X, FinRelObject):
            raise ValidationError(f"not a FinRel object: {X!r}")
        X.validate()

    def tensor(self, X: FinRelObject, Y: FinRelObject) -> FinRelObject:
        return FinRelObject(tuple(x + y for x in X.elements for y in Y.elements), X.arity + Y.arity)

    def relation(self, X: FinRelObject, Y: FinRelObject, pairs) -> Morphism:
        pairs = frozenset(pairs)
        xs, ys = set(X.elements), set(Y.elements)
        if any(a not in xs or b not in ys for a, b in pairs):
            raise ValidationError("relation pair outside source x target")
        return Morphism(self, X, Y, pairs)

    def identity(self, X) -> Morphism:
        return Morphism(self, X, X, frozenset((x, x) for x in X.elements))

    def _compose(self, g, f):
        after: dict = {}
        for b, c in g.data:
            after.setdefault(b, []).append(c)
        return frozenset((a, c) for a, b in f.data for c in after.get(b, ()))

    def _tensor_mor(self, f, g):
        return frozenset((a + a2, b + b2) for a, b in f.data for a2, b2 in g.data)

    def hom(self, X, Y):
        pairs = [(x, y) for x in X.elements for y in Y.elements]
        if len(pairs) <= self.cap:
            rels = []
            for mask in range(1 << len(pairs)):
                rels.append(Morphism(self, X, Y, frozenset(p for k, p in enumerate(pairs) if mask >> k & 1)))
            return EnumeratedHom(X, Y, tuple(rels))

        def sampler(rng: random.Random, n: int):
            return [Morphism(self, X, Y, frozenset(p for p in pairs if rng.random() < 0.5)) for _ in range(n)]

        return SampledHom(X, Y, sampler)

    def braid(self, X, Y) -> Morphism:
        return Morphism(self, self.tensor(X, Y), self.tensor(Y, X),
                        frozenset((x + y, y + x) for x in X.elements for y in Y.elements))

    def braid_inverse(self, X, Y) -> Morphism:
        return self.braid(Y, X)

    # compact closed structure

    def evaluation(self, X) -> Morphism:
        """The diagonal relation X⊗X → {*}."""
        return Morphism(self, self.tensor(X, X), self.unit, frozenset((x + x, STAR) for x in X.elements))

    def dagger_formula(self, T, X, t: Morphism) -> Morphism:
        """R† = {(i,j) | ((i,j),*) ∈ R} for the diagonal evaluation."""
        k = T.arity
        return Morphism(self, T, X, frozenset((e[:k], e[k:]) for e, _ in t.data))

    def internal_hom(self, J, K):
        return self.tensor(J, K)

    def closed_counit(self, J, K) -> Morphism:
        """[J,K]⊗J → K relating (j,k,j) to k."""
        return Morphism(self, self.tensor(self.tensor(J, K), J), K,
                        frozenset((j + k + j, k) for j in J.elements for k in K.elements))

    def sets_up_to(self, n: int) -> list[FinRelObject]:
        return [FinRelObject.of(*[f"x{i}" for i in range(k)]) for k in range(n + 1)]


FINREL = FinRel()


def finrel_category(max_size: int = 2) -> FinRel:
    if max_size < 1:
        raise ValidationError("max_size must be at least 1")
    return FINREL

