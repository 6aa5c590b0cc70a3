"""The terminal monoidal category: one object, one morphism."""

from __future__ import annotations

from ..core import EnumeratedHom, MonoidalCategory, Morphism
from ..errors import ValidationError

POINT = ()


class TerminalCategory(MonoidalCategory):
    key = "Terminal"
    has_braiding = True

    @property
    def unit(self):
        return POINT

    def validate_object(self, X) -> None:
        if X != POINT:
            raise ValidationError("the terminal category has a single object")

    def tensor(self, X, Y):
        return POINT

    def identity(self, X) -> Morphism:
        return Morphism(self, POINT, POINT, None)

    def _compose(self, g, f):
        return None

    def _tensor_mor(self, f, g):
        return None

    def hom(self, X, Y) -> EnumeratedHom:
        return EnumeratedHom(X, Y, (self.identity(POINT),))

    def braid(self, X, Y) -> Morphism:
        return self.identity(POINT)

    def braid_inverse(self, X, Y) -> Morphism:
        return self.identity(POINT)


TERMINAL = TerminalCategory()


def terminal_category() -> TerminalCategory:
    return TERMINAL
