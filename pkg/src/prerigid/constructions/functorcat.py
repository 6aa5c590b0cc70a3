"""Functors from a finite index category into FinVect.

The pre-dual of F is computed objectwise as a space of compatible families
of functionals: F*(x) is the set of (a_g) indexed by arrows g : x → y with
a_g ∈ F(y)* and a_g = a_{v∘g} ∘ F(v) for every further arrow v.
"""

from __future__ import annotations

import itertools
import random
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Sequence

from ..core import LinearHom, MonoidalCategory, Morphism, compose
from ..engine import PreDualData
from ..errors import ValidationError
from ..instances.finvect import FINVECT
from ..linalg import Matrix, Subspace, random_matrix, stack_columns
from ..report import Report, Tally


@dataclass(frozen=True)
class IndexCategory:
    """Finite category given by its non-identity arrows and their composites.

    ``table`` lists ((g, f), g∘f) for composable non-identity pairs; pairs
    that are absent are not composable.
    """

    name: str
    objects: tuple
    arrows: tuple  # (name, source, target)
    table: tuple = ()
    _comp: dict = field(init=False, repr=False, compare=False, hash=False)

    def __post_init__(self):
        object.__setattr__(self, "_comp", dict(self.table))

    @staticmethod
    def identity_name(x) -> str:
        return f"id_{x}"

    def all_arrows(self) -> list[tuple]:
        return [(self.identity_name(x), x, x) for x in self.objects] + list(self.arrows)

    def ends(self, a: str) -> tuple:
        for name, s, t in self.all_arrows():
            if name == a:
                return s, t
        raise ValidationError(f"unknown arrow {a!r}")

    def comp(self, g: str, f: str) -> str:
        """g∘f."""
        fs, ft = self.ends(f)
        gs, gt = self.ends(g)
        if ft != gs:
            raise ValidationError(f"{g} and {f} are not composable")
        if f == self.identity_name(ft):
            return g
        if g == self.identity_name(gs):
            return f
        if (g, f) not in self._comp:
            raise ValidationError(f"composite {g}∘{f} missing from the table")
        return self._comp[(g, f)]

    def out_of(self, x) -> list[tuple]:
        return [a for a in self.all_arrows() if a[1] == x]

    def validate(self) -> None:
        names = [a[0] for a in self.all_arrows()]
        if len(set(names)) != len(names):
            raise ValidationError("duplicate arrow names")
        for name, s, t in self.arrows:
            if s not in self.objects or t not in self.objects:
                raise ValidationError(f"arrow {name} has an unknown endpoint")
        for (g, f), h in self.table:
            if self.ends(h) != (self.ends(f)[0], self.ends(g)[1]):
                raise ValidationError(f"composite {h} has the wrong endpoints")
        arrows = self.all_arrows()
        for f, g in itertools.product(arrows, repeat=2):
            if f[2] == g[1]:
                self.comp(g[0], f[0])
        for f, g, h in itertools.product(arrows, repeat=3):
            if f[2] == g[1] and g[2] == h[1]:
                if self.comp(h[0], self.comp(g[0], f[0])) != self.comp(self.comp(h[0], g[0]), f[0]):
                    raise ValidationError("composition is not associative")

    def to_json(self):
        return {"name": self.name, "objects": list(self.objects), "arrows": [list(a) for a in self.arrows],
                "table": [[list(k), v] for k, v in self.table]}


def point_category() -> IndexCategory:
    return IndexCategory("point", ("a",), ())


def arrow_category() -> IndexCategory:
    return IndexCategory("arrow", ("a", "b"), (("f", "a", "b"),))


def square_category() -> IndexCategory:
    """Commutative square a → b → d, a → c → d, with diagonal d∘... named 'diag'."""
    arrows = (("f", "a", "b"), ("g", "a", "c"), ("h", "b", "d"), ("k", "c", "d"), ("diag", "a", "d"))
    return IndexCategory("square", ("a", "b", "c", "d"), arrows, ((("h", "f"), "diag"), (("k", "g"), "diag")))


def named_index(name: str) -> IndexCategory:
    table = {"point": point_category, "arrow": arrow_category, "square": square_category}
    if name not in table:
        raise ValidationError(f"unknown index category {name!r}")
    return table[name]()


@dataclass(frozen=True)
class DiagramFunctor:
    index: IndexCategory
    dims: tuple  # aligned with index.objects
    maps: tuple  # (arrow name, Matrix) for every non-identity arrow

    def dim(self, x) -> int:
        return self.dims[self.index.objects.index(x)]

    def map(self, a: str) -> Matrix:
        s, t = self.index.ends(a)
        if a == self.index.identity_name(s):
            return Matrix.identity(self.dim(s))
        return dict(self.maps)[a]

    def validate(self) -> None:
        given = dict(self.maps)
        for name, s, t in self.index.arrows:
            if name not in given:
                raise ValidationError(f"no matrix for arrow {name}")
            if given[name].shape != (self.dim(t), self.dim(s)):
                raise ValidationError(f"matrix for {name} has shape {given[name].shape}")
        for (g, f), h in self.index.table:
            if self.map(g) @ self.map(f) != self.map(h):
                raise ValidationError(f"F({g})F({f}) != F({h})")

    def to_json(self):
        return {"index": self.index.name, "dims": list(self.dims),
                "maps": {k: m.to_json() for k, m in self.maps}}


def diagram(index: IndexCategory, dims: dict, maps: dict) -> DiagramFunctor:
    F = DiagramFunctor(index, tuple(dims[x] for x in index.objects),
                       tuple((a[0], maps[a[0]] if isinstance(maps[a[0]], Matrix) else Matrix.from_rows(
                           maps[a[0]], dims[a[1]])) for a in index.arrows))
    F.validate()
    return F


def constant(index: IndexCategory, n: int) -> DiagramFunctor:
    return DiagramFunctor(index, tuple(n for _ in index.objects),
                          tuple((a[0], Matrix.identity(n)) for a in index.arrows))


# natural transformations


def _naturality_matrix(T: DiagramFunctor, G: DiagramFunctor) -> tuple[Matrix, list[int]]:
    """Constraint matrix on the concatenated row-major components α_x : T(x) → G(x)."""
    idx = T.index
    offsets, off = [], 0
    for x in idx.objects:
        offsets.append(off)
        off += G.dim(x) * T.dim(x)
    rows = []
    for name, x, y in idx.arrows:
        Ga, Ta = G.map(name), T.map(name)
        ox, oy = offsets[idx.objects.index(x)], offsets[idx.objects.index(y)]
        tx, ty = T.dim(x), T.dim(y)
        for r in range(G.dim(y)):
            for c in range(tx):
                row = [Fraction(0)] * off
                for k in range(G.dim(x)):
                    row[ox + k * tx + c] += Ga[r, k]
                for k in range(ty):
                    row[oy + r * ty + k] -= Ta[k, c]
                rows.append(row)
    return Matrix.from_rows(rows, off), offsets


def _components(T, G, vec, offsets) -> tuple:
    return tuple(Matrix.from_flat(G.dim(x), T.dim(x), list(vec[o:o + G.dim(x) * T.dim(x)]))
                 for x, o in zip(T.index.objects, offsets))


class FunctorCategory(MonoidalCategory):
    """[index, FinVect] with the pointwise tensor; morphisms are tuples of
    component matrices aligned with the index objects."""

    linear = True
    has_braiding = True

    def __init__(self, index: IndexCategory):
        index.validate()
        self.index = index
        self.key = f"Fun({index.name}, FinVect)"
        self._spaces: dict = {}

    @property
    def unit(self) -> DiagramFunctor:
        return constant(self.index, 1)

    def validate_object(self, X) -> None:
        if not isinstance(X, DiagramFunctor) or X.index != self.index:
            raise ValidationError("not a functor on this index category")
        X.validate()

    def tensor(self, X, Y):
        return DiagramFunctor(self.index, tuple(a * b for a, b in zip(X.dims, Y.dims)),
                              tuple((a, X.map(a).kron(Y.map(a))) for a, _, _ in self.index.arrows))

    def identity(self, X):
        return Morphism(self, X, X, tuple(Matrix.identity(d) for d in X.dims))

    def _compose(self, g, f):
        return tuple(b @ a for a, b in zip(f.data, g.data))

    def _tensor_mor(self, f, g):
        return tuple(a.kron(b) for a, b in zip(f.data, g.data))

    def add(self, f, g):
        return Morphism(self, f.source, f.target, tuple(a + b for a, b in zip(f.data, g.data)))

    def scale(self, c, f):
        return Morphism(self, f.source, f.target, tuple(a.scale(c) for a in f.data))

    def braid(self, X, Y):
        return Morphism(self, self.tensor(X, Y), self.tensor(Y, X),
                        tuple(FINVECT.braid(a, b).data for a, b in zip(X.dims, Y.dims)))

    def braid_inverse(self, X, Y):
        return self.braid(Y, X)

    def is_natural(self, T, G, comps) -> bool:
        M, _ = _naturality_matrix(T, G)
        vec = [x for m in comps for x in m.flatten()]
        return (M @ Matrix.column(vec)).is_zero() if M.rows else True

    def natural(self, T, G, comps) -> Morphism:
        comps = tuple(comps)
        if not self.is_natural(T, G, comps):
            raise ValidationError("components are not natural")
        return Morphism(self, T, G, comps)

    def nat_space(self, T, G) -> tuple[Subspace, list[int]]:
        key = (T, G)
        if key not in self._spaces:
            M, offsets = _naturality_matrix(T, G)
            if M.rows:
                S = Subspace.kernel(M)
            else:
                S = Subspace([tuple(int(i == k) for i in range(M.cols)) for k in range(M.cols)], M.cols)
            self._spaces[key] = (S, offsets)
        return self._spaces[key]

    def hom(self, T, G) -> LinearHom:
        S, offsets = self.nat_space(T, G)

        def build(vec):
            return Morphism(self, T, G, _components(T, G, vec, offsets))

        def coords(m):
            return S.coords([x for c in m.data for x in c.flatten()])

        return LinearHom(T, G, tuple(build(b) for b in S.basis), coords, lambda cs: build(S.vector(cs)))

    def random_morphism(self, T, G, rng):
        H = self.hom(T, G)
        return H.combine([rng.randint(-2, 2) for _ in H.basis])


def nat_space(cat: FunctorCategory, T, G) -> LinearHom:
    return cat.hom(T, G)


# the pre-dual


class FunctorPredual:
    """F*, ev_F and the explicit bijections Φ and Ψ."""

    def __init__(self, cat: FunctorCategory, F: DiagramFunctor):
        self.cat, self.F = cat, F
        idx = cat.index
        self.layout: dict = {}
        self.spaces: dict = {}
        for x in idx.objects:
            outs = idx.out_of(x)
            offs, off = {}, 0
            for g, _, y in outs:
                offs[g] = (off, y)
                off += F.dim(y)
            self.layout[x] = offs
            rows = []
            for g, _, y in outs:
                for v, _, y2 in idx.out_of(y):
                    if v == idx.identity_name(y):
                        continue
                    vg = idx.comp(v, g)
                    Fv = F.map(v)
                    for c in range(F.dim(y)):
                        row = [Fraction(0)] * off
                        row[offs[g][0] + c] += 1
                        for k in range(F.dim(y2)):
                            row[offs[vg][0] + k] -= Fv[k, c]
                        rows.append(row)
            if rows:
                self.spaces[x] = Subspace.kernel(Matrix.from_rows(rows, off))
            else:
                self.spaces[x] = Subspace([tuple(int(i == k) for i in range(off)) for k in range(off)], off)
        maps = []
        for u, x1, x2 in idx.arrows:
            K1, K2 = self.spaces[x1], self.spaces[x2]
            cols = []
            for a in K1.basis:
                b = [Fraction(0)] * K2.ambient
                for g, (o2, y) in self.layout[x2].items():
                    o1 = self.layout[x1][idx.comp(g, u)][0]
                    b[o2:o2 + F.dim(y)] = a[o1:o1 + F.dim(y)]
                cols.append(K2.coords(b))
            maps.append((u, stack_columns(cols, K2.dim)))
        self.dual = DiagramFunctor(idx, tuple(self.spaces[x].dim for x in idx.objects), tuple(maps))
        self.dual.validate()
        comps = []
        for x in idx.objects:
            K, n = self.spaces[x], F.dim(x)
            o = self.layout[x][idx.identity_name(x)][0]
            comps.append(Matrix.row([K.basis[k][o + c] for k in range(K.dim) for c in range(n)]))
        self.evaluation = cat.natural(cat.tensor(self.dual, F), cat.unit, comps)

    @property
    def data(self) -> PreDualData:
        return PreDualData(self.dual, self.evaluation)

    def phi(self, T: DiagramFunctor, alpha: Morphism) -> Morphism:
        """Φ(α)_x(t) = ((α_y)†(T(g) t))_g for α : T⊗F → 1."""
        idx, F = self.cat.index, self.F
        comps = []
        for x in idx.objects:
            K = self.spaces[x]
            cols = []
            for s in range(T.dim(x)):
                vec = [Fraction(0)] * K.ambient
                for g, (o, y) in self.layout[x].items():
                    ty, fy = T.dim(y), F.dim(y)
                    a_y = alpha.data[idx.objects.index(y)]
                    t_img = [T.map(g)[r, s] for r in range(ty)]
                    for c in range(fy):
                        vec[o + c] = sum((a_y[0, r * fy + c] * t_img[r] for r in range(ty)), Fraction(0))
                if not K.contains(vec):
                    raise ValidationError(f"Φ(α) leaves the pre-dual at {x}")
                cols.append(K.coords(vec))
            comps.append(stack_columns(cols, K.dim))
        return self.cat.natural(T, self.dual, comps)

    def psi(self, lam: Morphism) -> Morphism:
        """Ψ(λ) = ev_F ∘ (λ ⊗ F)."""
        return compose(self.evaluation, self.cat.tensor_mor(lam, self.cat.identity(self.F)))


def functorcat_predual(cat: FunctorCategory, F: DiagramFunctor) -> PreDualData:
    return FunctorPredual(cat, F).data


def check_functorcat_predual(cat: FunctorCategory, F: DiagramFunctor, tests: Sequence[DiagramFunctor]) -> Report:
    """Φ and Ψ are mutually inverse between Nat(T⊗F, 1) and Nat(T, F*)."""
    P = FunctorPredual(cat, F)
    t = Tally(f"pointwise compatible functionals give a pre-dual in {cat.key}", "functor category pre-duals")
    for T in tests:
        label = f"F={F.to_json()}, T={T.to_json()}"
        A = cat.hom(cat.tensor(T, F), cat.unit)
        B = cat.hom(T, P.dual)
        if not t.check(A.dim == B.dim, label + " dimensions", {"nat(TF,1)": A.dim, "nat(T,F*)": B.dim}):
            continue
        for alpha in A.basis:
            try:
                back = P.psi(P.phi(T, alpha))
            except ValidationError as exc:
                t.fail(label, {"alpha": alpha, "error": str(exc)})
                break
            if not t.check(back == alpha, label + " psi.phi", {"alpha": alpha, "got": back}):
                break
        for lam in B.basis:
            back = P.phi(T, P.psi(lam))
            if not t.check(back == lam, label + " phi.psi", {"lambda": lam, "got": back}):
                break
    t.details["dual_dims"] = list(P.dual.dims)
    return t.report()


def random_functor(index: IndexCategory, rng: random.Random, max_dim: int = 2) -> DiagramFunctor:
    """Random functor; on the square the last side is solved for, zero if needed."""
    dims = {x: rng.randint(0, max_dim) for x in index.objects}
    if index.name == "square":
        A = random_matrix(rng, dims["b"], dims["a"])
        C = random_matrix(rng, dims["c"], dims["a"])
        B = random_matrix(rng, dims["d"], dims["c"])
        D = _solve_right(A, B @ C, dims["d"], dims["b"])
        if D is None:
            B = Matrix.zeros(dims["d"], dims["c"])
            D = Matrix.zeros(dims["d"], dims["b"])
        return diagram(index, dims, {"f": A, "g": C, "k": B, "h": D, "diag": B @ C})
    maps = {}
    for name, s, t in index.arrows:
        maps[name] = random_matrix(rng, dims[t], dims[s]) if len(index.arrows) == 1 else Matrix.zeros(dims[t], dims[s])
    return diagram(index, dims, maps)


def _solve_right(A: Matrix, target: Matrix, rows: int, cols: int) -> Matrix | None:
    """Some D (rows x cols) with D A = target, or None."""
    # vec(DA) = (I ⊗ A^T) vec(D) in row-major order
    system = Matrix.identity(rows).kron(A.transpose())
    sol = system.solve(target.flatten())
    return None if sol is None else Matrix.from_flat(rows, cols, list(sol))
