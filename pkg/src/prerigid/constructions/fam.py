"""Families of objects: Fam(C) with covariant index maps and Maf(C) with
contravariant ones.

Index labels are tuples of a fixed arity and the tensor concatenates them,
exactly as for finite sets in Rel.
"""

from __future__ import annotations

import itertools
import random
from dataclasses import dataclass
from typing import Sequence

from ..core import MonoidalCategory, Morphism, SampledHom, compose
from ..engine import Obstruction, PreDualData, PreRigidStructure
from ..errors import NotPreDual, Unsupported, UnsupportedBase, ValidationError
from ..instances.finvect import FinVect
from ..linalg import stack_columns, vstack
from ..report import Report, Tally


@dataclass(frozen=True)
class FamObject:
    index: tuple
    fibers: tuple
    arity: int

    def __post_init__(self):
        # the empty set has one representation whatever the arity
        if not self.index:
            object.__setattr__(self, "arity", 0)

    @classmethod
    def of(cls, items) -> "FamObject":
        """From ``{label: fiber}`` or a list of pairs; labels become 1-tuples."""
        pairs = list(items.items()) if isinstance(items, dict) else list(items)
        return cls.make([((lab,), fib) for lab, fib in pairs], 1)

    @classmethod
    def make(cls, pairs, arity: int) -> "FamObject":
        pairs = list(pairs)
        labels = [p[0] for p in pairs]
        if len(set(labels)) != len(labels):
            raise ValidationError("family index has duplicate labels")
        if any(len(lab) != arity for lab in labels):
            raise ValidationError("index labels must share one arity")
        return cls(tuple(labels), tuple(p[1] for p in pairs), arity)

    def fiber(self, label):
        return self.fibers[self.index.index(label)]

    def items(self):
        return zip(self.index, self.fibers)

    def __len__(self) -> int:
        return len(self.index)

    def to_json(self):
        return {"index": [list(i) for i in self.index], "fibers": list(self.fibers)}


def _tensor_families(base: MonoidalCategory, X: FamObject, Y: FamObject) -> FamObject:
    return FamObject.make([(i + j, base.tensor(a, b)) for i, a in X.items() for j, b in Y.items()],
                          X.arity + Y.arity)


def index_maps(source: Sequence, target: Sequence) -> list[tuple]:
    """All functions source → target as tuples of images, lexicographic order."""
    return list(itertools.product(target, repeat=len(source)))


class FamCategory(MonoidalCategory):
    """Morphisms (f, φ_i) with f : I → J and φ_i : X_i → Y_f(i).

    Payload: (tuple of image labels, tuple of base morphisms), aligned with
    the source index.
    """

    def __init__(self, base: MonoidalCategory):
        self.base = base
        self.key = f"Fam({base.key})"
        self.linear = False

    @property
    def unit(self) -> FamObject:
        return FamObject(((),), (self.base.unit,), 0)

    def validate_object(self, X) -> None:
        if not isinstance(X, FamObject):
            raise ValidationError(f"not a family: {X!r}")
        for f in X.fibers:
            self.base.validate_object(f)

    def tensor(self, X, Y):
        return _tensor_families(self.base, X, Y)

    def fam_mor(self, X: FamObject, Y: FamObject, images: Sequence, comps: Sequence[Morphism]) -> Morphism:
        images, comps = tuple(images), tuple(comps)
        if len(images) != len(X) or len(comps) != len(X):
            raise ValidationError("index map and components must cover the source index")
        for (i, xi), j, c in zip(X.items(), images, comps):
            if j not in Y.index:
                raise ValidationError(f"index map sends {i} outside the target")
            if c.source != xi or c.target != Y.fiber(j):
                raise ValidationError(f"component at {i} has the wrong type")
        return Morphism(self, X, Y, (images, comps))

    def identity(self, X) -> Morphism:
        return Morphism(self, X, X, (X.index, tuple(self.base.identity(a) for a in X.fibers)))

    def _compose(self, g, f):
        fimg, fcomp = f.data
        gimg, gcomp = g.data
        Ypos = {lab: k for k, lab in enumerate(f.target.index)}
        return (tuple(gimg[Ypos[j]] for j in fimg),
                tuple(compose(gcomp[Ypos[j]], c) for j, c in zip(fimg, fcomp)))

    def _tensor_mor(self, f, g):
        fimg, fcomp = f.data
        gimg, gcomp = g.data
        return (tuple(a + b for a in fimg for b in gimg),
                tuple(self.base.tensor_mor(c, d) for c in fcomp for d in gcomp))

    def random_fam_mor(self, X, Y, rng: random.Random, images=None) -> Morphism | None:
        if len(Y) == 0 and len(X) > 0:
            return None
        if images is None:
            images = [rng.choice(Y.index) for _ in X.index]
        comps = [self.base.random_morphism(a, Y.fiber(j), rng) for a, j in zip(X.fibers, images)]
        return Morphism(self, X, Y, (tuple(images), tuple(comps)))

    def hom(self, X, Y) -> SampledHom:
        def sampler(rng, n):
            out = [self.random_fam_mor(X, Y, rng) for _ in range(n)]
            return [m for m in out if m is not None]

        return SampledHom(X, Y, sampler)

    def random_morphism(self, X, Y, rng):
        return self.random_fam_mor(X, Y, rng)


def fam_category(base: MonoidalCategory) -> FamCategory:
    return FamCategory(base)


def _require_finvect(base):
    if not isinstance(base, FinVect):
        raise UnsupportedBase(f"products of pre-duals are implemented over FinVect, not {base.key}")


def fam_predual(cat: FamCategory, Y: FamObject, base_structure: PreRigidStructure) -> PreDualData:
    """Y* = ({*}, ∏_j Y_j*) with ev_Y = (t, ev_{Y_j} ∘ (p_j ⊗ Y_j))."""
    base = cat.base
    if not hasattr(base, "product"):
        raise Unsupported(f"{base.key} has no products")
    duals = [base_structure.dual(b) for b in Y.fibers]
    prod, projections = base.product(duals)
    Ys = FamObject(((),), (prod,), 0)
    comps = []
    for b, p in zip(Y.fibers, projections):
        comps.append(compose(base_structure.ev(b), base.tensor_mor(p, base.identity(b))))
    src = cat.tensor(Ys, Y)
    ev = Morphism(cat, src, cat.unit, (tuple(() for _ in src.index), tuple(comps)))
    return PreDualData(Ys, ev)


def fam_dagger(T: FamObject, Y: FamObject, d: PreDualData, t: Morphism) -> Morphism:
    """Solve ev ∘ (u ⊗ Y) = t for u : T → Y* over a FinVect base.

    Every index map T → (index of Y*) is tried and, for each, the components
    are found by an exact linear solve; exactly one solution must exist.
    """
    cat = t.cat
    base = cat.base
    _require_finvect(base)
    S = d.object
    ev_img, ev_comp = d.evaluation.data
    ev_at = dict(zip(d.evaluation.source.index, ev_comp))
    t_at = dict(zip(t.source.index, t.data[1]))
    solutions = []
    for images in index_maps(T.index, S.index):
        comps = []
        for i, Ti, s in zip(T.index, T.fibers, images):
            L = S.fiber(s)
            H = base.hom(Ti, L)
            rows, rhs = [], []
            for j, Yj in Y.items():
                ev_sj = ev_at[s + j]
                tgt = base.hom(base.tensor(Ti, Yj), base.unit)
                cols = [tgt.coords(compose(ev_sj, base.tensor_mor(b, base.identity(Yj)))) for b in H.basis]
                rows.append(stack_columns(cols, tgt.dim))
                rhs.extend(tgt.coords(t_at[i + j]))
            M = vstack(rows, cols=H.dim)
            sol = M.solve(rhs)
            if sol is None:
                break
            if M.rank() != H.dim:
                raise NotPreDual(f"non-unique component at index {i}")
            comps.append(H.combine(sol))
        else:
            solutions.append(Morphism(cat, T, S, (tuple(images), tuple(comps))))
    if len(solutions) != 1:
        raise NotPreDual(f"{len(solutions)} solutions for the index map")
    return solutions[0]


def fam_structure(cat: FamCategory, base_structure: PreRigidStructure) -> PreRigidStructure:
    return PreRigidStructure(cat, lambda Y: fam_predual(cat, Y, base_structure), fam_dagger,
                             f"product pre-duals in {cat.key}")


def fam_predual_converse_check(cat: FamCategory, Y: FamObject, d: PreDualData, base_structure: PreRigidStructure,
                               cone_objects: Sequence = (0, 1, 2), projections: Sequence[Morphism] | None = None) -> Report:
    """Recover p_j := (ev_j)† from a singleton-indexed pre-dual and check
    that (L, p_j) is a product of the Y_j*."""
    base = cat.base
    t = Tally("recovered projections form a product of the fiber pre-duals", "Fam pre-dual converse")
    if len(d.object) != 1:
        t.fail("singleton index", {"index": d.object.index})
        return t.report()
    (s,) = d.object.index
    L = d.object.fibers[0]
    ev_at = dict(zip(d.evaluation.source.index, d.evaluation.data[1]))
    if projections is None:
        projections = [base_structure.dagger(L, Yj, ev_at[s + j]) for j, Yj in Y.items()]
    duals = [base_structure.dual(b) for b in Y.fibers]
    for X in cone_objects:
        H = base.hom(X, L)
        targets = [base.hom(X, D) for D in duals]
        cols = []
        for b in H.basis:
            cols.append(tuple(c for p, K in zip(projections, targets) for c in K.coords(compose(p, b))))
        M = stack_columns(cols, sum(K.dim for K in targets))
        ok = M.rows == M.cols and M.rank() == M.cols
        t.check(ok, f"cones from {X!r}", {"shape": list(M.shape), "rank": M.rank()})
    t.details["bounded"] = "universal property checked against the listed cone objects"
    return t.report()


# closed structure


def fam_internal_hom(cat: FamCategory, Y: FamObject, Z: FamObject) -> FamObject:
    """Index: functions α : J → U. Fiber at α: ∏_j [Y_j, Z_α(j)]."""
    base = cat.base
    _require_finvect(base)
    pairs = []
    for alpha in index_maps(Y.index, Z.index):
        pairs.append(((alpha,), sum(base.internal_hom(b, Z.fiber(u)) for b, u in zip(Y.fibers, alpha))))
    return FamObject.make(pairs, 1)


def fam_curry(cat: FamCategory, X: FamObject, Y: FamObject, Z: FamObject, m: Morphism) -> Morphism:
    """α : Hom(X⊗Y, Z) → Hom(X, [Y,Z])."""
    base = cat.base
    H = fam_internal_hom(cat, Y, Z)
    img = dict(zip(m.source.index, m.data[0]))
    comp = dict(zip(m.source.index, m.data[1]))
    images, comps = [], []
    for i, Xi in X.items():
        alpha = tuple(img[i + j] for j in Y.index)
        images.append((alpha,))
        blocks = [base.curry(comp[i + j], Xi, Yj).data for j, Yj in Y.items()]
        target = H.fiber((alpha,))
        comps.append(base.morphism(Xi, target, vstack(blocks, cols=Xi)))
    return cat.fam_mor(X, H, images, comps)


def fam_uncurry(cat: FamCategory, X: FamObject, Y: FamObject, Z: FamObject, n: Morphism) -> Morphism:
    """β : Hom(X, [Y,Z]) → Hom(X⊗Y, Z)."""
    base = cat.base
    src = cat.tensor(X, Y)
    images, comps = [], []
    for (i, Xi), (alpha,), psi in zip(X.items(), n.data[0], n.data[1]):
        dims = [base.internal_hom(b, Z.fiber(u)) for b, u in zip(Y.fibers, alpha)]
        _, projections = base.product(dims)
        for (j, Yj), u, p in zip(Y.items(), alpha, projections):
            Zu = Z.fiber(u)
            images.append(u)
            piece = compose(p, psi)
            comps.append(compose(base.closed_counit(Yj, Zu), base.tensor_mor(piece, base.identity(Yj))))
    return cat.fam_mor(src, Z, images, comps)


def check_fam_closed(cat: FamCategory, triples: Sequence[tuple], rng: random.Random, samples: int = 50) -> Report:
    """β∘α = id and α∘β = id on seeded samples of both hom-sets."""
    t = Tally("curry and uncurry are mutually inverse in Fam", "Fam internal hom")
    t.details["restriction"] = "finite index sets and finite products only"
    done = 0
    k = 0
    while done < samples:
        X, Y, Z = triples[k % len(triples)]
        k += 1
        label = f"X={X.to_json()}, Y={Y.to_json()}, Z={Z.to_json()}"
        m = cat.random_fam_mor(cat.tensor(X, Y), Z, rng)
        H = fam_internal_hom(cat, Y, Z)
        n = cat.random_fam_mor(X, H, rng)
        if m is None and n is None:
            if k > 10 * samples:
                break
            continue
        if m is not None:
            back = fam_uncurry(cat, X, Y, Z, fam_curry(cat, X, Y, Z, m))
            t.check(back == m, label, {"direction": "beta.alpha", "m": m})
        if n is not None:
            back = fam_curry(cat, X, Y, Z, fam_uncurry(cat, X, Y, Z, n))
            t.check(back == n, label, {"direction": "alpha.beta", "n": n})
        done += 1
    t.details["samples"] = done
    return t.report()


# Maf


class MafCategory(MonoidalCategory):
    """Morphisms (f, φ_j) with f : J → I and φ_j : X_f(j) → Y_j.

    Only the monoidal structure and index-level hom enumeration are provided.
    """

    def __init__(self, base: MonoidalCategory):
        self.base = base
        self.key = f"Maf({base.key})"

    @property
    def unit(self) -> FamObject:
        return FamObject(((),), (self.base.unit,), 0)

    def tensor(self, X, Y):
        return _tensor_families(self.base, X, Y)

    def identity(self, X) -> Morphism:
        return Morphism(self, X, X, (X.index, tuple(self.base.identity(a) for a in X.fibers)))

    def _compose(self, g, f):
        # f : X → Y with fmap : J → I, g : Y → Z with gmap : K → J
        fmap, fcomp = f.data
        gmap, gcomp = g.data
        Jpos = {lab: k for k, lab in enumerate(f.target.index)}
        return (tuple(fmap[Jpos[j]] for j in gmap),
                tuple(compose(gc, fcomp[Jpos[j]]) for j, gc in zip(gmap, gcomp)))

    def _tensor_mor(self, f, g):
        return (tuple(a + b for a in f.data[0] for b in g.data[0]),
                tuple(self.base.tensor_mor(c, d) for c in f.data[1] for d in g.data[1]))

    def index_maps(self, X: FamObject, Y: FamObject) -> list[tuple]:
        """Index parts of Hom(X, Y): functions from Y's index to X's."""
        return index_maps(Y.index, X.index)

    def hom(self, X, Y):
        raise Unsupported("Maf hom-sets are only enumerated at the index level")


def maf_obstruction_witness(base: MonoidalCategory, tests: Sequence[FamObject] | None = None) -> Report:
    """Machine-checked argument that Maf(C) has no pre-duals.

    The empty family 𝟏 is terminal and absorbs tensors, but there is no
    morphism 𝟏 → 𝕀 because there is no map from a singleton to the empty set.
    A pre-dual 𝟏* would give Hom(𝟏*, 𝟏*) ≅ Hom(𝟏*⊗𝟏, 𝕀) = Hom(𝟏, 𝕀) = ∅,
    contradicting id ∈ Hom(𝟏*, 𝟏*).
    """
    cat = MafCategory(base)
    one = FamObject((), (), 0)
    unit = cat.unit
    if tests is None:
        u = base.unit
        tests = [unit, one, FamObject.make([(("a",), u), (("b",), u)], 1)]
    t = Tally(f"{cat.key} is not pre-rigid", "Maf obstruction")
    for X in tests:
        t.check(len(cat.index_maps(X, one)) == 1, f"unique morphism {X.to_json()} -> empty family")
        t.check(cat.tensor(one, X) == one and cat.tensor(X, one) == one, f"empty family absorbs {X.to_json()}")
    t.check(len(cat.index_maps(one, unit)) == 0, "Hom(empty family, unit) is empty")
    for C in tests:
        # any candidate C for the pre-dual of 𝟏: id_C exists, Hom(C⊗𝟏, 𝕀) is empty
        t.check(len(cat.index_maps(cat.tensor(C, one), unit)) == 0 and len(cat.index_maps(C, C)) >= 1,
                f"candidate {C.to_json()} cannot be a pre-dual of the empty family")
    t.details["chain"] = [
        "empty family is terminal",
        "empty family tensor X equals the empty family",
        "no morphism from the empty family to the unit",
        "Hom(P, P) nonempty but Hom(P (x) empty, unit) empty for every candidate P",
    ]
    return t.report()


def maf_obstruction(base: MonoidalCategory) -> Obstruction:
    rep = maf_obstruction_witness(base)
    return Obstruction(rep.claim, "no morphism from the empty family to the unit",
                       {"hom_empty_to_unit": 0}, {"report": rep.to_json()})
