"""Strict monoidal categories, functors, natural transformations and adjunctions.

Objects are plain hashable payloads interpreted by their category. A
:class:`Morphism` carries the category that owns it, so composition and
tensoring can refuse to mix categories.
"""

from __future__ import annotations

import random
from dataclasses import dataclass, field
from typing import Any, Callable, Sequence

from .errors import CategoryMismatch, CompositionError, Unsupported


@dataclass(frozen=True)
class Morphism:
    cat: "MonoidalCategory" = field(repr=False)
    source: Any
    target: Any
    data: Any

    def __matmul__(self, other: "Morphism") -> "Morphism":
        return compose(self, other)

    def to_json(self) -> dict:
        from .report import jsonable

        return {
            "category": self.cat.key,
            "source": jsonable(self.source),
            "target": jsonable(self.target),
            "data": jsonable(self.data),
        }


# hom-spaces


@dataclass(frozen=True)
class EnumeratedHom:
    source: Any
    target: Any
    elements: tuple

    kind = "enumerated"

    def __len__(self) -> int:
        return len(self.elements)

    def __iter__(self):
        return iter(self.elements)


@dataclass(frozen=True)
class LinearHom:
    """A finite-dimensional hom-space with a chosen basis.

    ``coords`` maps a morphism to its coordinate tuple and ``combine`` builds a
    morphism from coordinates.
    """

    source: Any
    target: Any
    basis: tuple
    coords: Callable[[Morphism], tuple] = field(compare=False, repr=False)
    combine: Callable[[Sequence], Morphism] = field(compare=False, repr=False)

    kind = "linear"

    @property
    def dim(self) -> int:
        return len(self.basis)


@dataclass(frozen=True)
class SampledHom:
    """Hom-space that can only be sampled; verifiers fall back to round trips."""

    source: Any
    target: Any
    sampler: Callable[[random.Random, int], list] = field(compare=False, repr=False)

    kind = "sampled"

    def sample(self, rng: random.Random, n: int) -> list:
        return self.sampler(rng, n)


# categories


class MonoidalCategory:
    """Base class for strict monoidal categories.

    Subclasses implement the underscored primitives. ``key`` identifies the
    category; two instances with equal keys are treated as the same category.
    """

    key: str = "abstract"
    linear: bool = False
    has_braiding: bool = False

    def __eq__(self, other) -> bool:
        return isinstance(other, MonoidalCategory) and self.key == other.key

    def __hash__(self) -> int:
        return hash(self.key)

    def __repr__(self) -> str:
        return self.key

    # objects
    @property
    def unit(self):
        raise NotImplementedError

    def validate_object(self, X) -> None:
        return None

    def tensor(self, X, Y):
        raise NotImplementedError

    # morphisms
    def identity(self, X) -> Morphism:
        raise NotImplementedError

    def _compose(self, g: Morphism, f: Morphism):
        raise NotImplementedError

    def _tensor_mor(self, f: Morphism, g: Morphism):
        raise NotImplementedError

    def hom(self, X, Y):
        raise NotImplementedError

    def morphism(self, source, target, data) -> Morphism:
        return Morphism(self, source, target, data)

    def compose(self, g: Morphism, f: Morphism) -> Morphism:
        if f.cat != self or g.cat != self:
            raise CategoryMismatch(f"compose in {self.key} got {f.cat.key} and {g.cat.key}")
        if f.target != g.source:
            raise CompositionError(f"cannot compose: {f.target!r} != {g.source!r}")
        return Morphism(self, f.source, g.target, self._compose(g, f))

    def tensor_mor(self, f: Morphism, g: Morphism) -> Morphism:
        if f.cat != self or g.cat != self:
            raise CategoryMismatch(f"tensor in {self.key} got {f.cat.key} and {g.cat.key}")
        return Morphism(self, self.tensor(f.source, g.source), self.tensor(f.target, g.target),
                        self._tensor_mor(f, g))

    def tensor_objects(self, objs: Sequence):
        out = self.unit
        for X in objs:
            out = self.tensor(out, X)
        return out

    # braiding
    def braid(self, X, Y) -> Morphism:
        raise Unsupported(f"{self.key} has no braiding")

    def braid_inverse(self, X, Y) -> Morphism:
        """c^{-1}_{X,Y} : Y⊗X → X⊗Y."""
        raise Unsupported(f"{self.key} has no braiding")

    # linear structure
    def add(self, f: Morphism, g: Morphism) -> Morphism:
        raise Unsupported(f"{self.key} is not linear")

    def scale(self, c, f: Morphism) -> Morphism:
        raise Unsupported(f"{self.key} is not linear")

    # sampling for law checks
    def random_morphism(self, X, Y, rng: random.Random) -> Morphism | None:
        h = self.hom(X, Y)
        if h.kind == "enumerated":
            return rng.choice(h.elements) if h.elements else None
        if h.kind == "linear":
            return h.combine([rng.randint(-2, 2) for _ in h.basis])
        got = h.sample(rng, 1)
        return got[0] if got else None


def compose(g: Morphism, f: Morphism) -> Morphism:
    """g∘f."""
    if f.cat != g.cat:
        raise CategoryMismatch(f"{g.cat.key} vs {f.cat.key}")
    return g.cat.compose(g, f)


def compose_all(*ms: Morphism) -> Morphism:
    """compose_all(h, g, f) = h∘g∘f."""
    out = ms[-1]
    for m in reversed(ms[:-1]):
        out = compose(m, out)
    return out


def tensor_mor(f: Morphism, g: Morphism) -> Morphism:
    if f.cat != g.cat:
        raise CategoryMismatch(f"{f.cat.key} vs {g.cat.key}")
    return f.cat.tensor_mor(f, g)


# opposite category


class OppositeCategory(MonoidalCategory):
    """C^op with the same tensor and braiding (c^{-1})^op.

    A morphism f^op : Y → X has the payload of f : X → Y.
    """

    def __init__(self, base: MonoidalCategory):
        self.base = base
        self.key = f"op({base.key})"
        self.linear = base.linear
        self.has_braiding = base.has_braiding

    @property
    def unit(self):
        return self.base.unit

    def validate_object(self, X) -> None:
        self.base.validate_object(X)

    def tensor(self, X, Y):
        return self.base.tensor(X, Y)

    def op(self, f: Morphism) -> Morphism:
        """Base morphism f : X → Y to f^op : Y → X."""
        if f.cat != self.base:
            raise CategoryMismatch(f"{f.cat.key} is not {self.base.key}")
        return Morphism(self, f.target, f.source, f.data)

    def unop(self, f: Morphism) -> Morphism:
        if f.cat != self:
            raise CategoryMismatch(f"{f.cat.key} is not {self.key}")
        return Morphism(self.base, f.target, f.source, f.data)

    def identity(self, X) -> Morphism:
        return self.op(self.base.identity(X))

    def _compose(self, g, f):
        return self.base.compose(self.unop(f), self.unop(g)).data

    def _tensor_mor(self, f, g):
        return self.base.tensor_mor(self.unop(f), self.unop(g)).data

    def hom(self, X, Y):
        h = self.base.hom(Y, X)
        if h.kind == "enumerated":
            return EnumeratedHom(X, Y, tuple(self.op(m) for m in h.elements))
        if h.kind == "linear":
            return LinearHom(X, Y, tuple(self.op(m) for m in h.basis),
                             lambda m: h.coords(self.unop(m)),
                             lambda cs: self.op(h.combine(cs)))
        return SampledHom(X, Y, lambda rng, n: [self.op(m) for m in h.sample(rng, n)])

    def braid(self, X, Y) -> Morphism:
        # c^op_{X,Y} := (c^{-1}_{X,Y})^op, and c^{-1}_{X,Y} : Y⊗X → X⊗Y
        return self.op(self.base.braid_inverse(X, Y))

    def braid_inverse(self, X, Y) -> Morphism:
        return self.op(self.base.braid(X, Y))

    def add(self, f, g):
        return self.op(self.base.add(self.unop(f), self.unop(g)))

    def scale(self, c, f):
        return self.op(self.base.scale(c, self.unop(f)))


def opposite(cat: MonoidalCategory) -> MonoidalCategory:
    if isinstance(cat, OppositeCategory):
        return cat.base
    return OppositeCategory(cat)


# functors and transformations


@dataclass(frozen=True)
class LaxStructure:
    """φ₂(X,Y) : FX⊗FY → F(X⊗Y) and φ₀ : 𝕀 → F𝕀."""

    phi2: Callable[[Any, Any], Morphism]
    phi0: Morphism


@dataclass(frozen=True)
class ColaxStructure:
    """ψ₂(X,Y) : F(X⊗Y) → FX⊗FY and ψ₀ : F𝕀 → 𝕀."""

    psi2: Callable[[Any, Any], Morphism]
    psi0: Morphism


@dataclass(frozen=True, eq=False)
class Functor:
    source: MonoidalCategory
    target: MonoidalCategory
    on_obj: Callable[[Any], Any]
    on_mor: Callable[[Morphism], Morphism]
    name: str = "F"
    lax: LaxStructure | None = None
    colax: ColaxStructure | None = None

    def obj(self, X):
        return self.on_obj(X)

    def mor(self, f: Morphism) -> Morphism:
        if f.cat != self.source:
            raise CategoryMismatch(f"{self.name} expects {self.source.key}, got {f.cat.key}")
        return self.on_mor(f)

    def with_lax(self, lax: LaxStructure) -> "Functor":
        return Functor(self.source, self.target, self.on_obj, self.on_mor, self.name, lax, self.colax)

    def with_colax(self, colax: ColaxStructure) -> "Functor":
        return Functor(self.source, self.target, self.on_obj, self.on_mor, self.name, self.lax, colax)


def identity_functor(cat: MonoidalCategory) -> Functor:
    return Functor(
        cat, cat, lambda X: X, lambda f: f, "Id",
        LaxStructure(lambda X, Y: cat.identity(cat.tensor(X, Y)), cat.identity(cat.unit)),
        ColaxStructure(lambda X, Y: cat.identity(cat.tensor(X, Y)), cat.identity(cat.unit)),
    )


def opposite_functor(F: Functor) -> Functor:
    """F^op : A^op → B^op."""
    src, tgt = opposite(F.source), opposite(F.target)

    def on_mor(f):
        return _from_base(tgt, F.mor(_to_base(src, f)))

    return Functor(src, tgt, F.obj, on_mor, f"{F.name}^op")


def _to_base(opcat: MonoidalCategory, f: Morphism) -> Morphism:
    # f lives in opcat = A^op; return the corresponding morphism of A
    if isinstance(opcat, OppositeCategory):
        return opcat.unop(f)
    # opcat is a plain category that is the opposite of an OppositeCategory
    return OppositeCategory(opcat).op(f)


def _from_base(opcat: MonoidalCategory, f: Morphism) -> Morphism:
    if isinstance(opcat, OppositeCategory):
        return opcat.op(f)
    return OppositeCategory(opcat).unop(f)


@dataclass(frozen=True, eq=False)
class NaturalTransformation:
    source: Functor | None
    target: Functor | None
    component: Callable[[Any], Morphism]
    name: str = "α"

    def at(self, X) -> Morphism:
        return self.component(X)


@dataclass(frozen=True, eq=False)
class Adjunction:
    """L ⊣ R with L : B → A, unit η : Id_B → RL and counit ε : LR → Id_A."""

    left: Functor
    right: Functor
    unit: NaturalTransformation
    counit: NaturalTransformation

    @property
    def lower(self) -> MonoidalCategory:
        return self.left.source

    @property
    def upper(self) -> MonoidalCategory:
        return self.left.target


def identity_adjunction(cat: MonoidalCategory) -> Adjunction:
    Id = identity_functor(cat)
    eta = NaturalTransformation(Id, Id, cat.identity, "id")
    return Adjunction(Id, Id, eta, eta)


def find_inverse(f: Morphism) -> Morphism | None:
    """A two-sided inverse of f, searched in the hom-space, or None."""
    cat = f.cat
    X, Y = f.source, f.target
    h = cat.hom(Y, X)
    idX, idY = cat.identity(X), cat.identity(Y)
    if h.kind == "enumerated":
        for g in h.elements:
            if cat.compose(g, f) == idX and cat.compose(f, g) == idY:
                return g
        return None
    if h.kind == "linear":
        from .linalg import stack_columns

        hx = cat.hom(X, X)
        cols = [hx.coords(cat.compose(b, f)) for b in h.basis]
        A = stack_columns(cols, hx.dim)
        sol = A.solve(hx.coords(idX))
        if sol is None:
            return None
        g = h.combine(sol)
        return g if cat.compose(f, g) == idY and cat.compose(g, f) == idX else None
    raise Unsupported("inverse search needs an enumerated or linear hom")
