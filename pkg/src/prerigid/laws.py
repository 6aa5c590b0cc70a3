"""Sample-based checks of the strict monoidal and braided axioms."""

from __future__ import annotations

import random
from typing import Callable, Sequence

from .core import MonoidalCategory, compose, opposite
from .report import Report, Tally


def _draw(cat, X, Y, rng, k):
    h = cat.hom(X, Y)
    if h.kind == "enumerated":
        els = list(h.elements)
        return els if len(els) <= k else rng.sample(els, k)
    out = [cat.random_morphism(X, Y, rng) for _ in range(k)]
    return [m for m in out if m is not None]


def check_category_laws(cat: MonoidalCategory, objects: Sequence, rng: random.Random | None = None,
                        samples: int = 2) -> Report:
    """Identity laws, associativity of composition and the interchange law."""
    rng = rng or random.Random(0)
    t = Tally(f"{cat.key} satisfies the strict monoidal category laws", "strict monoidal category")
    for X in objects:
        for Y in objects:
            for f in _draw(cat, X, Y, rng, samples):
                t.check(compose(cat.identity(Y), f) == f and compose(f, cat.identity(X)) == f,
                        f"identity laws {X!r}->{Y!r}", {"f": f})
            t.check(cat.tensor(cat.tensor(cat.unit, X), Y) == cat.tensor(X, Y) == cat.tensor(X, cat.tensor(Y, cat.unit)),
                    f"strict unit {X!r}, {Y!r}")
            t.check(cat.tensor_mor(cat.identity(X), cat.identity(Y)) == cat.identity(cat.tensor(X, Y)),
                    f"id⊗id = id at {X!r}, {Y!r}")
    for X, Y, Z in zip(objects, objects[1:] + objects[:1], objects[2:] + objects[:2]):
        for f, g, h in zip(_draw(cat, X, Y, rng, samples), _draw(cat, Y, Z, rng, samples), _draw(cat, Z, X, rng, samples)):
            t.check(compose(h, compose(g, f)) == compose(compose(h, g), f), f"associativity {X!r}->{Y!r}->{Z!r}->{X!r}")
            t.check(cat.tensor_mor(cat.tensor_mor(f, g), h) == cat.tensor_mor(f, cat.tensor_mor(g, h)),
                    f"strict tensor of morphisms at {X!r}, {Y!r}, {Z!r}")
            f2, g2 = cat.random_morphism(Y, Z, rng), cat.random_morphism(Z, X, rng)
            if f2 is None or g2 is None:
                continue
            lhs = compose(cat.tensor_mor(f2, g2), cat.tensor_mor(f, g))
            rhs = cat.tensor_mor(compose(f2, f), compose(g2, g))
            t.check(lhs == rhs, f"interchange at {X!r}, {Y!r}, {Z!r}", {"lhs": lhs, "rhs": rhs})
    return t.report()


def check_braiding(cat: MonoidalCategory, samples: Sequence[tuple], rng: random.Random | None = None,
                   braid: Callable | None = None, symmetric: bool = False) -> Report:
    """Both hexagons on all triples of sampled objects, and naturality on
    sampled morphisms. ``braid`` overrides the category's braiding."""
    rng = rng or random.Random(0)
    c = braid or cat.braid
    t = Tally(f"braiding of {cat.key} satisfies the hexagon identities and is natural", "braiding axioms")
    objs = list(dict.fromkeys(o for p in samples for o in p))
    ident = cat.identity
    for X, Y in samples:
        for Z in objs:
            lhs = c(X, cat.tensor(Y, Z))
            rhs = compose(cat.tensor_mor(ident(Y), c(X, Z)), cat.tensor_mor(c(X, Y), ident(Z)))
            t.check(lhs == rhs, f"hexagon c(X,Y⊗Z) at {X!r}, {Y!r}, {Z!r}", {"lhs": lhs, "rhs": rhs})
            lhs = c(cat.tensor(X, Y), Z)
            rhs = compose(cat.tensor_mor(c(X, Z), ident(Y)), cat.tensor_mor(ident(X), c(Y, Z)))
            t.check(lhs == rhs, f"hexagon c(X⊗Y,Z) at {X!r}, {Y!r}, {Z!r}", {"lhs": lhs, "rhs": rhs})
        if symmetric:
            t.check(compose(c(Y, X), c(X, Y)) == ident(cat.tensor(X, Y)), f"symmetry at {X!r}, {Y!r}")
        for X2, Y2 in samples:
            f, g = cat.random_morphism(X, X2, rng), cat.random_morphism(Y, Y2, rng)
            if f is None or g is None:
                continue
            lhs = compose(c(X2, Y2), cat.tensor_mor(f, g))
            rhs = compose(cat.tensor_mor(g, f), c(X, Y))
            t.check(lhs == rhs, f"naturality along {X!r}->{X2!r}, {Y!r}->{Y2!r}", {"f": f, "g": g})
    return t.report()


def check_opposite_involution(cat: MonoidalCategory, pairs: Sequence[tuple]) -> Report:
    t = Tally(f"taking the opposite of {cat.key} twice gives it back", "opposite category")
    op = opposite(cat)
    t.check(opposite(op) == cat, "category identity")
    for X, Y in pairs:
        h, hop = cat.hom(X, Y), op.hom(Y, X)
        if h.kind == "enumerated":
            t.check([m.data for m in h.elements] == [m.data for m in hop.elements], f"hom {X!r}->{Y!r}")
        elif h.kind == "linear":
            t.check([m.data for m in h.basis] == [m.data for m in hop.basis], f"hom {X!r}->{Y!r}")
    return t.report()
