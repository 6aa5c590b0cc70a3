"""Small algebras and coalgebras in FinVect used as fixtures."""

from __future__ import annotations

import random
from typing import Sequence

from ..core import Functor, LaxStructure, compose
from ..errors import InvalidCoalgebra
from ..instances.finvect import FINVECT
from ..linalg import Matrix, random_matrix
from .algebra import AlgebraObject, BialgebraObject, CoalgebraObject, validate_algebra, validate_coalgebra

V = FINVECT


def group_coalgebra(n: int) -> CoalgebraObject:
    """k[G] with grouplike basis: Δg = g⊗g, ε(g) = 1."""
    delta = Matrix.from_function(n * n, n, lambda r, c: int(r == c * n + c))
    return CoalgebraObject(n, V.mor(delta), V.mor(Matrix.row([1] * n)))


def group_algebra(table: Sequence[Sequence[int]], e: int = 0) -> AlgebraObject:
    n = len(table)
    m = Matrix.from_function(n, n * n, lambda r, c: int(table[c // n][c % n] == r))
    u = Matrix.column([int(i == e) for i in range(n)])
    return AlgebraObject(n, V.mor(m), V.mor(u))


def cyclic_table(n: int) -> list[list[int]]:
    return [[(a + b) % n for b in range(n)] for a in range(n)]


def group_bialgebra(n: int) -> BialgebraObject:
    return BialgebraObject(group_algebra(cyclic_table(n)), group_coalgebra(n))


def function_algebra(n: int) -> AlgebraObject:
    """Functions on n points: idempotent basis, pointwise product."""
    m = Matrix.from_function(n, n * n, lambda r, c: int(c == r * n + r))
    return AlgebraObject(n, V.mor(m), V.mor(Matrix.column([1] * n)))


def matrix_coalgebra(n: int) -> CoalgebraObject:
    """Δ e_ij = Σ_k e_ik ⊗ e_kj, ε e_ij = δ_ij; basis e_ij at index i·n + j."""
    d = n * n

    def delta(r, c):
        i, j = divmod(c, n)
        a, b = divmod(r, d)
        i1, k1 = divmod(a, n)
        k2, j2 = divmod(b, n)
        return int(i1 == i and j2 == j and k1 == k2)

    eps = Matrix.row([int(c // n == c % n) for c in range(d)])
    return CoalgebraObject(d, V.mor(Matrix.from_function(d * d, d, delta)), V.mor(eps))


def conjugate_coalgebra(C: CoalgebraObject, P: Matrix) -> CoalgebraObject:
    """Transport along the change of basis P : new → old."""
    Pinv = P.inverse()
    if Pinv is None:
        raise InvalidCoalgebra("basis change is singular")
    delta = Pinv.kron(Pinv) @ C.delta.data @ P
    return CoalgebraObject(C.carrier, V.mor(delta), V.mor(C.eps.data @ P))


def seeded_coalgebras(rng: random.Random, count: int = 2) -> list[CoalgebraObject]:
    """Group and matrix coalgebras in random rational bases."""
    base = [group_coalgebra(3), matrix_coalgebra(2), group_coalgebra(2)]
    out = []
    for k in range(count):
        C = base[k % len(base)]
        while True:
            P = random_matrix(rng, C.carrier, C.carrier)
            if P.inverse() is not None:
                break
        out.append(validate_coalgebra(conjugate_coalgebra(C, P)))
    return out


def dual_numbers() -> AlgebraObject:
    """S = k[X]/(X²), basis 1, X."""
    m = Matrix.from_rows([[1, 0, 0, 0], [0, 1, 1, 0]])
    return validate_algebra(AlgebraObject(2, V.mor(m), V.mor(Matrix.column([1, 0]))))


def tensor_with(S: AlgebraObject) -> Functor:
    """S⊗(−) with φ₂(V,W) = (m⊗V⊗W)∘(S⊗c_{V,S}⊗W) and φ₀ = u."""
    s = S.carrier

    def phi2(A, B):
        swap = V.tensor_mor(V.tensor_mor(V.identity(s), V.braid(A, s)), V.identity(B))
        return compose(V.tensor_mor(S.m, V.identity(A * B)), swap)

    return Functor(V, V, lambda A: s * A, lambda f: V.tensor_mor(V.identity(s), f), "S⊗-",
                   lax=LaxStructure(phi2, S.u))


def unit_algebra() -> AlgebraObject:
    return AlgebraObject(1, V.identity(1), V.identity(1))


def unit_coalgebra() -> CoalgebraObject:
    return CoalgebraObject(1, V.identity(1), V.identity(1))


def bialgebra_from_json(doc: dict) -> BialgebraObject:
    """{dim, m, u, delta, epsilon} with matrices as row lists."""
    n = doc["dim"]
    A = AlgebraObject(n, V.morphism(n * n, n, Matrix.from_rows(doc["m"], n * n)),
                      V.morphism(1, n, Matrix.column(doc["u"])))
    C = CoalgebraObject(n, V.morphism(n, n * n, Matrix.from_rows(doc["delta"], n)),
                        V.morphism(n, 1, Matrix.row(doc["epsilon"])))
    return BialgebraObject(A, C)
