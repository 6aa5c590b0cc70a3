"""Externally graded finite-dimensional vector spaces.

A graded object is a list of blocks ``(label, degree, dim)``. Atomic objects
carry one block per degree with label ``(degree,)``; the tensor concatenates
labels, so ``(X⊗Y)⊗Z`` and ``X⊗(Y⊗Z)`` have literally the same blocks in the
same order and Kronecker products inside each block agree. The degree-g
component is the direct sum of the blocks of degree g, in label order.
"""

from __future__ import annotations

import random
from dataclasses import dataclass
from typing import Callable, Iterable, Sequence

from ..core import (
    Adjunction,
    ColaxStructure,
    Functor,
    LaxStructure,
    LinearHom,
    MonoidalCategory,
    Morphism,
    NaturalTransformation,
)
from ..errors import BoundRequired, UnsupportedBase, ValidationError
from ..linalg import Matrix, random_matrix
from .finvect import FINVECT, FinVect


# grading monoids


class Monoid:
    name = "M"
    e = 0
    elements: tuple | None = None
    commutative = True

    def op(self, a, b):
        raise NotImplementedError

    def right_inverses(self, g) -> list:
        """All h with g·h = e."""
        return [h for h in self.elements if self.op(g, h) == self.e]


class NaturalNumbers(Monoid):
    name = "N"
    e = 0

    def op(self, a, b):
        return a + b

    def right_inverses(self, g) -> list:
        return [0] if g == 0 else []


class FiniteMonoid(Monoid):
    def __init__(self, name: str, table: Sequence[Sequence[int]], e: int = 0):
        self.name = name
        self.table = tuple(tuple(r) for r in table)
        self.elements = tuple(range(len(self.table)))
        self.e = e
        self.commutative = all(self.table[a][b] == self.table[b][a] for a in self.elements for b in self.elements)

    def op(self, a, b):
        return self.table[a][b]


NATURALS = NaturalNumbers()


def is_conical(m: Monoid) -> bool:
    """g·h = e only for g = h = e."""
    if m.elements is None:
        return isinstance(m, NaturalNumbers)
    return all(m.op(g, h) != m.e or g == h == m.e for g in m.elements for h in m.elements)


def cyclic_group(n: int) -> FiniteMonoid:
    return FiniteMonoid(f"Z{n}", [[(a + b) % n for b in range(n)] for a in range(n)])


# objects


@dataclass(frozen=True)
class GradedObject:
    blocks: tuple  # ((label, degree, dim), ...), dim > 0, sorted by label
    arity: int

    @classmethod
    def from_support(cls, support: Iterable[tuple[int, int]] | dict) -> "GradedObject":
        items = support.items() if isinstance(support, dict) else support
        seen = set()
        blocks = []
        for g, d in items:
            if g in seen:
                raise ValidationError(f"degree {g} listed twice")
            seen.add(g)
            if d < 0:
                raise ValidationError("negative dimension")
            if d:
                blocks.append(((g,), g, d))
        return cls._norm(blocks, 1)

    @classmethod
    def concentrated(cls, dim: int, neutral=0) -> "GradedObject":
        """``dim`` copies of the field in the neutral degree, as an arity-0 object."""
        return cls._norm([((), neutral, dim)] if dim else [], 0)

    @classmethod
    def _norm(cls, blocks, arity) -> "GradedObject":
        blocks = tuple(sorted(blocks, key=lambda b: b[0]))
        return cls(blocks, arity if blocks else 0)

    def dim(self, g) -> int:
        return sum(d for _, deg, d in self.blocks if deg == g)

    def degrees(self) -> list:
        return sorted({deg for _, deg, _ in self.blocks})

    @property
    def support(self) -> list[tuple]:
        return [(g, self.dim(g)) for g in self.degrees()]

    def layout(self, g) -> dict:
        """label -> (offset, dim) inside the degree-g component."""
        out, off = {}, 0
        for lab, deg, d in self.blocks:
            if deg == g:
                out[lab] = (off, d)
                off += d
        return out

    def to_json(self):
        return {"support": [[g, d] for g, d in self.support]}


@dataclass(frozen=True)
class GeneratedGradedObject:
    """ℕ-graded object given by a rule degree -> dim, answered up to a bound."""

    rule: Callable[[int], int]
    name: str = "generated"

    def truncate(self, bound: int | None) -> GradedObject:
        if bound is None:
            raise BoundRequired(f"{self.name} has unbounded support; pass a degree bound")
        return GradedObject.from_support([(n, self.rule(n)) for n in range(bound + 1)])


# the category


class GradedCategory(MonoidalCategory):
    linear = True

    def __init__(self, monoid: Monoid, base: MonoidalCategory = FINVECT):
        if not isinstance(base, FinVect):
            raise UnsupportedBase(f"graded construction needs FinVect direct sums, got {base.key}")
        self.monoid = monoid
        self.base = base
        self.key = f"Graded[{monoid.name}]"
        self.has_braiding = monoid.commutative

    @property
    def unit(self) -> GradedObject:
        return GradedObject(((((), self.monoid.e, 1)),), 0)

    def validate_object(self, X) -> None:
        if not isinstance(X, GradedObject):
            raise ValidationError(f"not a graded object: {X!r}")
        if self.monoid.elements is not None and any(deg not in self.monoid.elements for _, deg, _ in X.blocks):
            raise ValidationError("degree outside the grading monoid")

    def atomic(self, support) -> GradedObject:
        X = GradedObject.from_support(support)
        self.validate_object(X)
        return X

    def tensor(self, X: GradedObject, Y: GradedObject) -> GradedObject:
        op = self.monoid.op
        return GradedObject._norm(
            [(la + lb, op(ga, gb), da * db) for la, ga, da in X.blocks for lb, gb, db in Y.blocks],
            X.arity + Y.arity)

    # morphisms are {degree: matrix} over degrees where both sides are nonzero

    def _degrees(self, X, Y) -> list:
        return sorted(set(X.degrees()) & set(Y.degrees()))

    def graded_mor(self, X, Y, comps: dict) -> Morphism:
        data = []
        for g in self._degrees(X, Y):
            m = comps.get(g, Matrix.zeros(Y.dim(g), X.dim(g)))
            if m.shape != (Y.dim(g), X.dim(g)):
                raise ValidationError(f"degree {g} component has shape {m.shape}")
            data.append((g, m))
        return Morphism(self, X, Y, tuple(data))

    @staticmethod
    def components(f: Morphism) -> dict:
        return dict(f.data)

    def identity(self, X) -> Morphism:
        return self.graded_mor(X, X, {g: Matrix.identity(X.dim(g)) for g in X.degrees()})

    def zero(self, X, Y) -> Morphism:
        return self.graded_mor(X, Y, {})

    def _compose(self, g, f):
        fc, gc = dict(f.data), dict(g.data)
        X, Z = f.source, g.target
        out = []
        for d in self._degrees(X, Z):
            if d in fc and d in gc:
                out.append((d, gc[d] @ fc[d]))
            else:
                out.append((d, Matrix.zeros(Z.dim(d), X.dim(d))))
        return tuple(out)

    def add(self, f, g):
        gc = dict(g.data)
        return Morphism(self, f.source, f.target, tuple((d, m + gc[d]) for d, m in f.data))

    def scale(self, c, f):
        return Morphism(self, f.source, f.target, tuple((d, m.scale(c)) for d, m in f.data))

    def _coords(self, P: GradedObject, Q: GradedObject, d) -> list:
        """Coordinates of (P⊗Q)_d as (label_p, i, label_q, j) in layout order."""
        out = []
        op = self.monoid.op
        for lp, gp, dp in P.blocks:
            for lq, gq, dq in Q.blocks:
                if op(gp, gq) == d:
                    out.extend((lp, i, lq, j) for i in range(dp) for j in range(dq))
        return out

    def degree_of(self, label: tuple):
        out = self.monoid.e
        for g in label:
            out = self.monoid.op(out, g)
        return out

    def _pos(self, obj: GradedObject, label: tuple, i: int) -> int:
        return obj.layout(self.degree_of(label))[label][0] + i

    def _tensor_mor(self, f, g):
        X, Y, X2, Y2 = f.source, f.target, g.source, g.target
        S, T = self.tensor(X, X2), self.tensor(Y, Y2)
        fc, gc = dict(f.data), dict(g.data)
        deg, pos = self.degree_of, self._pos
        out = []
        for d in self._degrees(S, T):
            cols = self._coords(X, X2, d)
            rows = self._coords(Y, Y2, d)
            entries = []
            for ly, iy, ly2, iy2 in rows:
                a, b = deg(ly), deg(ly2)
                if a not in fc or b not in gc:
                    entries.append([0] * len(cols))
                    continue
                r1, r2 = pos(Y, ly, iy), pos(Y2, ly2, iy2)
                fa, gb = fc[a], gc[b]
                entries.append([
                    fa[r1, pos(X, lx, ix)] * gb[r2, pos(X2, lx2, ix2)]
                    if deg(lx) == a and deg(lx2) == b else 0
                    for lx, ix, lx2, ix2 in cols
                ])
            out.append((d, Matrix.from_rows(entries, len(cols))))
        return tuple(out)

    def hom(self, X, Y) -> LinearHom:
        degs = self._degrees(X, Y)
        shapes = [(g, Y.dim(g), X.dim(g)) for g in degs]
        basis = []
        for g, r, c in shapes:
            for i in range(r):
                for j in range(c):
                    basis.append(self.graded_mor(X, Y, {g: Matrix.from_function(r, c, lambda a, b: int((a, b) == (i, j)))}))

        def coords(m):
            return tuple(x for _, mat in m.data for x in mat.flatten())

        def combine(cs):
            comps, k = {}, 0
            for g, r, c in shapes:
                comps[g] = Matrix.from_flat(r, c, list(cs[k:k + r * c]))
                k += r * c
            return self.graded_mor(X, Y, comps)

        return LinearHom(X, Y, tuple(basis), coords, combine)

    def random_morphism(self, X, Y, rng: random.Random) -> Morphism:
        return self.graded_mor(X, Y, {g: random_matrix(rng, Y.dim(g), X.dim(g)) for g in self._degrees(X, Y)})

    # braiding (commutative grading monoid)

    def braid(self, X, Y) -> Morphism:
        if not self.monoid.commutative:
            raise ValidationError("braiding needs a commutative grading monoid")
        S, T = self.tensor(X, Y), self.tensor(Y, X)
        out = {}
        for d in S.degrees():
            cols = self._coords(X, Y, d)
            rows = {c: k for k, c in enumerate(self._coords(Y, X, d))}
            images = [rows[(lq, j, lp, i)] for lp, i, lq, j in cols]
            out[d] = Matrix.permutation(images)
        return self.graded_mor(S, T, out)

    def braid_inverse(self, X, Y) -> Morphism:
        return self.braid(Y, X)

    # closed structure

    def _hom_degrees(self, V: GradedObject, W: GradedObject) -> list:
        if self.monoid.elements is not None:
            return list(self.monoid.elements)
        # ℕ: g + h = w with h in supp V, w in supp W
        return sorted({w - h for h in V.degrees() for w in W.degrees() if w >= h})

    def _hom_factors(self, V, W, g) -> list[tuple]:
        """(h, rows, cols) for the factors [V_h, W_{gh}] of [V,W]_g."""
        op = self.monoid.op
        return [(h, W.dim(op(g, h)), V.dim(h)) for h in V.degrees() if W.dim(op(g, h))]

    def internal_hom(self, V: GradedObject, W: GradedObject) -> GradedObject:
        support = []
        for g in self._hom_degrees(V, W):
            support.append((g, sum(r * c for _, r, c in self._hom_factors(V, W, g))))
        return GradedObject.from_support(support)

    def closed_counit(self, V: GradedObject, W: GradedObject) -> Morphism:
        """[V,W]⊗V → W evaluating the factor [V_b, W_{ab}] on V_b."""
        H = self.internal_hom(V, W)
        S = self.tensor(H, V)
        comps = {}
        for d in self._degrees(S, W):
            cols = self._coords(H, V, d)
            mat = [[0] * len(cols) for _ in range(W.dim(d))]
            for k, (lh, i, lv, j) in enumerate(cols):
                b = self.degree_of(lv)
                off = 0
                for h, r, c in self._hom_factors(V, W, lh[0]):
                    if off <= i < off + r * c:
                        row, col = divmod(i - off, c)
                        if h == b and col == self._pos(V, lv, j):
                            mat[row][k] = 1
                        break
                    off += r * c
            comps[d] = Matrix.from_rows(mat, len(cols))
        return self.graded_mor(S, W, comps)


def graded_category(base: MonoidalCategory, monoid: Monoid) -> GradedCategory:
    return GradedCategory(monoid, base)


def graded_internal_hom(cat: GradedCategory, V, W, bound: int | None = None) -> GradedObject:
    if isinstance(V, GeneratedGradedObject):
        V = V.truncate(bound)
    if isinstance(W, GeneratedGradedObject):
        W = W.truncate(bound)
    return cat.internal_hom(V, W)


# adjunctions used for transfer of pre-duals


def degree_zero_adjunction(cat: GradedCategory) -> Adjunction:
    """L = degree-0 part : graded → FinVect, R = concentration in degree 0.

    Both functors are strict monoidal on atomic objects; in general L carries
    the coordinate permutation (X⊗Y)_0 → X_0⊗Y_0 as its colax structure.
    """
    e = cat.monoid.e
    base = FINVECT
    if not is_conical(cat.monoid):
        raise ValidationError(f"degree-0 part is not strong monoidal over {cat.monoid.name}")

    def L_obj(X):
        return X.dim(e)

    def L_mor(f):
        comps = dict(f.data)
        return base.morphism(f.source.dim(e), f.target.dim(e),
                             comps.get(e, Matrix.zeros(f.target.dim(e), f.source.dim(e))))

    def R_obj(V):
        return GradedObject.concentrated(V, e)

    def R_mor(f):
        return cat.graded_mor(R_obj(f.source), R_obj(f.target), {e: f.data})

    def psi2(X, Y):
        cols = cat._coords(X, Y, e)
        lx, ly = X.layout(e), Y.layout(e)
        dy = Y.dim(e)
        images = [(lx[a][0] + i) * dy + ly[b][0] + j for a, i, b, j in cols]
        return base.morphism(len(cols), len(cols), Matrix.permutation(images))

    L = Functor(cat, base, L_obj, L_mor, "degree0",
                colax=ColaxStructure(psi2, base.identity(1)))
    R = Functor(base, cat, R_obj, R_mor, "concentrate",
                lax=LaxStructure(lambda V, W: cat.identity(R_obj(V * W)), cat.identity(cat.unit)))
    eta = NaturalTransformation(None, None,
                                lambda X: cat.graded_mor(X, R_obj(X.dim(e)), {e: Matrix.identity(X.dim(e))}), "η")
    eps = NaturalTransformation(None, None, base.identity, "ε")
    return Adjunction(L, R, eta, eps)


def total_space_adjunction(cat: GradedCategory) -> Adjunction:
    """Forget the grading (finite G) ⊣ repeat in every degree.

    The forgetful functor is strong monoidal but RL(𝕀) is a copy of the field
    in every degree, so it is not isomorphic to 𝕀 when |G| > 1.
    """
    elems = cat.monoid.elements
    if elems is None:
        raise ValidationError("total-space adjunction needs a finite grading monoid")
    base = FINVECT

    def order(X):
        # coordinates of LX: by degree, then block label
        out = []
        for g in elems:
            for lab, (off, d) in X.layout(g).items():
                out.extend((g, off + i) for i in range(d))
        return out

    def L_obj(X):
        return sum(d for _, _, d in X.blocks)

    def L_mor(f):
        src, tgt = order(f.source), order(f.target)
        comps = dict(f.data)
        return base.morphism(len(src), len(tgt), Matrix.from_function(
            len(tgt), len(src),
            lambda r, c: comps[tgt[r][0]][tgt[r][1], src[c][1]]
            if tgt[r][0] == src[c][0] and tgt[r][0] in comps else 0))

    def R_obj(V):
        return GradedObject.from_support([(g, V) for g in elems])

    def R_mor(f):
        return cat.graded_mor(R_obj(f.source), R_obj(f.target), {g: f.data for g in elems})

    def psi2(X, Y):
        S = cat.tensor(X, Y)
        src = order(S)
        ox = {k: n for n, k in enumerate(order(X))}
        oy = {k: n for n, k in enumerate(order(Y))}
        dy = L_obj(Y)
        images = []
        by_degree = {g: cat._coords(X, Y, g) for g in elems}
        for g, i in src:
            lp, a, lq, b = by_degree[g][i]
            gp = next(d for lab, d, _ in X.blocks if lab == lp)
            gq = next(d for lab, d, _ in Y.blocks if lab == lq)
            images.append(ox[(gp, X.layout(gp)[lp][0] + a)] * dy + oy[(gq, Y.layout(gq)[lq][0] + b)])
        return base.morphism(len(src), len(src), Matrix.permutation(images))

    def eta(X):
        lx = order(X)
        n = len(lx)
        return cat.graded_mor(X, R_obj(n), {
            g: Matrix.from_function(n, X.dim(g), lambda r, c, g=g: int(lx[r] == (g, c))) for g in X.degrees()})

    def eps(V):
        # codiagonal V ⊕ ... ⊕ V → V
        return base.morphism(V * len(elems), V, Matrix.from_function(V, V * len(elems), lambda r, c: int(c % V == r)))

    L = Functor(cat, base, L_obj, L_mor, "forget", colax=ColaxStructure(psi2, base.identity(1)))
    R = Functor(base, cat, R_obj, R_mor, "repeat")
    return Adjunction(L, R, NaturalTransformation(None, None, eta, "η"), NaturalTransformation(None, None, eps, "ε"))
