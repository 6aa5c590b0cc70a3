"""Finite-dimensional vector spaces over Q, objects are dimensions."""

from __future__ import annotations

import random
from fractions import Fraction
from typing import Sequence

from ..core import LinearHom, MonoidalCategory, Morphism
from ..errors import ValidationError
from ..linalg import Matrix, block_diag, hstack, random_matrix, vstack


class FinVect(MonoidalCategory):
    """Kronecker tensor, unit of dimension 1, symmetric twist braiding."""

    key = "FinVect"
    linear = True
    has_braiding = True

    @property
    def unit(self) -> int:
        return 1

    def validate_object(self, X) -> None:
        if not isinstance(X, int) or isinstance(X, bool) or X < 0:
            raise ValidationError(f"FinVect object must be a natural number, got {X!r}")

    def tensor(self, X: int, Y: int) -> int:
        return X * Y

    def mor(self, A: Matrix | Sequence) -> Morphism:
        """Wrap a matrix (rows = target dim) as a morphism."""
        if not isinstance(A, Matrix):
            A = Matrix.from_rows(A)
        return Morphism(self, A.cols, A.rows, A)

    def morphism(self, source, target, data) -> Morphism:
        if not isinstance(data, Matrix) or data.shape != (target, source):
            raise ValidationError(f"matrix shape does not match {source} -> {target}")
        return Morphism(self, source, target, data)

    def identity(self, X: int) -> Morphism:
        return Morphism(self, X, X, Matrix.identity(X))

    def zero(self, X: int, Y: int) -> Morphism:
        return Morphism(self, X, Y, Matrix.zeros(Y, X))

    def _compose(self, g, f):
        return g.data @ f.data

    def _tensor_mor(self, f, g):
        return f.data.kron(g.data)

    def add(self, f, g):
        return Morphism(self, f.source, f.target, f.data + g.data)

    def scale(self, c, f):
        return Morphism(self, f.source, f.target, f.data.scale(c))

    def hom(self, X: int, Y: int) -> LinearHom:
        basis = tuple(
            Morphism(self, X, Y, Matrix.from_function(Y, X, lambda i, j, r=r, c=c: int(i == r and j == c)))
            for r in range(Y) for c in range(X)
        )
        return LinearHom(X, Y, basis, lambda m: m.data.flatten(),
                         lambda cs: Morphism(self, X, Y, Matrix.from_flat(Y, X, list(cs))))

    def random_morphism(self, X, Y, rng: random.Random) -> Morphism:
        return Morphism(self, X, Y, random_matrix(rng, Y, X))

    # braiding

    def braid(self, X: int, Y: int) -> Morphism:
        # e_i ⊗ e_j (index i*Y + j) goes to e_j ⊗ e_i (index j*X + i)
        images = [j * X + i for i in range(X) for j in range(Y)]
        return Morphism(self, X * Y, Y * X, Matrix.permutation(images))

    def braid_inverse(self, X: int, Y: int) -> Morphism:
        return self.braid(Y, X)

    # pairing, closed structure, products

    def pairing(self, X: int) -> Morphism:
        """Standard evaluation X*⊗X → k with X* of the same dimension."""
        return Morphism(self, X * X, 1, Matrix.from_function(1, X * X, lambda _, k: int(k // X == k % X)))

    def dagger_formula(self, T: int, X: int, t: Morphism) -> Morphism:
        """For the standard pairing, t† : T → X has entries t†[c, s] = t[s·X + c]."""
        return Morphism(self, T, X, Matrix.from_function(X, T, lambda c, s: t.data[0, s * X + c]))

    def internal_hom(self, X: int, Y: int) -> int:
        return Y * X

    def closed_counit(self, X: int, Y: int) -> Morphism:
        """[X,Y]⊗X → Y, with [X,Y] holding row-major Y×X matrices."""
        src = Y * X * X

        def entry(r, k):
            mat, c2 = divmod(k, X)
            r1, c1 = divmod(mat, X)
            return int(r1 == r and c1 == c2)

        return Morphism(self, src, Y, Matrix.from_function(Y, src, entry))

    def curry(self, h: Morphism, X: int, Y: int) -> Morphism:
        """h : X⊗Y → Z to its transpose X → [Y,Z]."""
        Z = h.target
        return Morphism(self, X, Z * Y, Matrix.from_function(
            Z * Y, X, lambda row, i: h.data[row // Y, i * Y + row % Y]))

    def product(self, objs: Sequence[int]) -> tuple[int, list[Morphism]]:
        """Direct sum with its projections, blocks in the given order."""
        total = sum(objs)
        projections = []
        offset = 0
        for d in objs:
            projections.append(Morphism(self, total, d, Matrix.from_function(
                d, total, lambda i, j, o=offset: int(j == o + i))))
            offset += d
        return total, projections

    def tuple_into_product(self, maps: Sequence[Morphism], objs: Sequence[int]) -> Morphism:
        """The map T → ⊕ objs with components ``maps``."""
        T = maps[0].source if maps else 0
        return Morphism(self, T, sum(objs), vstack([m.data for m in maps], cols=T))

    def coproduct(self, objs: Sequence[int]) -> tuple[int, list[Morphism]]:
        total, projections = self.product(objs)
        return total, [Morphism(self, p.target, total, p.data.transpose()) for p in projections]

    def codiagonal(self, maps: Sequence[Morphism], target: int) -> Morphism:
        src = sum(m.source for m in maps)
        return Morphism(self, src, target, hstack([m.data for m in maps], rows=target))

    def direct_sum_mor(self, maps: Sequence[Morphism]) -> Morphism:
        return Morphism(self, sum(m.source for m in maps), sum(m.target for m in maps),
                        block_diag([m.data for m in maps]))


FINVECT = FinVect()


def finvect_category() -> FinVect:
    return FINVECT


def scalar(c) -> Morphism:
    return FINVECT.mor([[Fraction(c)]])
