"""A pomonoid viewed as a thin monoidal category."""

from __future__ import annotations

from ..core import EnumeratedHom, MonoidalCategory, Morphism
from ..errors import CompositionError, ValidationError
from ..grammar.pomonoid import Pomonoid, validate_pomonoid

LEQ = "leq"  # the unique witness payload


class PomonoidCategory(MonoidalCategory):
    """Objects are element indices; hom(a, b) is a singleton iff a <= b."""

    def __init__(self, p: Pomonoid):
        self.p = p
        self.key = f"Pomonoid{p.elements}"

    @property
    def unit(self) -> int:
        return self.p.unit

    def validate_object(self, X) -> None:
        if not isinstance(X, int) or not 0 <= X < self.p.size:
            raise ValidationError(f"not an element index: {X!r}")

    def tensor(self, X: int, Y: int) -> int:
        return self.p.mul(X, Y)

    def leq(self, a: int, b: int) -> Morphism:
        if not self.p.le(a, b):
            raise CompositionError(f"{self.p.elements[a]} is not below {self.p.elements[b]}")
        return Morphism(self, a, b, LEQ)

    def identity(self, X) -> Morphism:
        return Morphism(self, X, X, LEQ)

    def _compose(self, g, f):
        return LEQ

    def _tensor_mor(self, f, g):
        return LEQ

    def hom(self, X, Y) -> EnumeratedHom:
        return EnumeratedHom(X, Y, (Morphism(self, X, Y, LEQ),) if self.p.le(X, Y) else ())

    def objects(self) -> list[int]:
        return list(range(self.p.size))


def pomonoid_category(p: Pomonoid) -> PomonoidCategory:
    rep = validate_pomonoid(p)
    if not rep.passed:
        raise ValidationError(f"invalid pomonoid: {rep.witness}")
    return PomonoidCategory(p)
