"""Finite partially ordered monoids and their classification.

Conventions: ``right_star[t]`` is the largest a with a·t ≤ 1 (written t*),
``left_star[t]`` the largest b with t·b ≤ 1 (written *t). Residuals are
``over[c][b]`` = c/b = max{a | a·b ≤ c} and ``under[a][c]`` = a\\c =
max{b | a·b ≤ c}. Absent maxima are ``None``.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass, field
from typing import Any, Sequence

from ..errors import ValidationError
from ..report import Tally, Report


@dataclass(frozen=True)
class Pomonoid:
    elements: tuple
    leq: tuple
    mult: tuple
    unit: int

    @classmethod
    def build(cls, elements: Sequence[str], leq, mult, unit: int) -> "Pomonoid":
        n = len(elements)
        leq_t = tuple(tuple(bool(x) for x in row) for row in leq)
        mult_t = tuple(tuple(int(x) for x in row) for row in mult)
        if len(leq_t) != n or any(len(r) != n for r in leq_t):
            raise ValidationError("leq must be an n x n matrix")
        if len(mult_t) != n or any(len(r) != n for r in mult_t):
            raise ValidationError("mult must be an n x n table")
        if any(not 0 <= x < n for r in mult_t for x in r) or not 0 <= unit < n:
            raise ValidationError("table entry out of range")
        return cls(tuple(elements), leq_t, mult_t, unit)

    @classmethod
    def from_group(cls, names: Sequence[str], mult, unit: int = 0) -> "Pomonoid":
        """A group with the discrete order."""
        n = len(names)
        return cls.build(names, [[i == j for j in range(n)] for i in range(n)], mult, unit)

    @classmethod
    def cyclic(cls, n: int) -> "Pomonoid":
        return cls.from_group([f"g{i}" for i in range(n)], [[(i + j) % n for j in range(n)] for i in range(n)])

    @property
    def size(self) -> int:
        return len(self.elements)

    def le(self, a: int, b: int) -> bool:
        return self.leq[a][b]

    def mul(self, a: int, b: int) -> int:
        return self.mult[a][b]

    def product(self, items: Sequence[int]) -> int:
        out = self.unit
        for x in items:
            out = self.mult[out][x]
        return out

    def index(self, name: str) -> int:
        try:
            return self.elements.index(name)
        except ValueError:
            raise ValidationError(f"unknown element {name!r}") from None

    def maximum(self, subset: Sequence[int]) -> int | None:
        """The greatest element of ``subset``, if any."""
        for m in subset:
            if all(self.leq[x][m] for x in subset):
                return m
        return None

    def to_json(self) -> dict:
        return {
            "elements": list(self.elements),
            "leq": [list(r) for r in self.leq],
            "mult": [list(r) for r in self.mult],
            "unit": self.unit,
        }


def validate_pomonoid(p: Pomonoid) -> Report:
    """Poset, monoid and monotonicity axioms, listing every violation."""
    t = Tally("pomonoid axioms hold", "pomonoid definition: monotone multiplication")
    n = range(p.size)
    violations: list[Any] = []

    def bad(kind, *w):
        violations.append([kind, *[p.elements[i] for i in w]])

    for a in n:
        if not p.le(a, a):
            bad("reflexivity", a)
    for a, b in itertools.product(n, n):
        if a != b and p.le(a, b) and p.le(b, a):
            bad("antisymmetry", a, b)
    for a, b, c in itertools.product(n, n, n):
        if p.le(a, b) and p.le(b, c) and not p.le(a, c):
            bad("transitivity", a, b, c)
        if p.mul(p.mul(a, b), c) != p.mul(a, p.mul(b, c)):
            bad("associativity", a, b, c)
    for a in n:
        if p.mul(p.unit, a) != a or p.mul(a, p.unit) != a:
            bad("unit", a)
    for a, b, c, d in itertools.product(n, n, n, n):
        if p.le(a, c) and p.le(b, d) and not p.le(p.mul(a, b), p.mul(c, d)):
            bad("monotonicity", a, b, c, d)
    for kind in ("reflexivity", "antisymmetry", "transitivity", "associativity", "unit", "monotonicity"):
        found = [v for v in violations if v[0] == kind]
        t.check(not found, kind, found or None)
    rep = t.report()
    if violations:
        rep.details["violations"] = violations
    return rep


@dataclass
class Classification:
    is_protogroup: bool
    is_contractive: bool
    is_residuated: bool
    is_pregroup: bool
    right_star: tuple | None = None  # t*
    left_star: tuple | None = None  # *t
    over: tuple | None = None  # over[c][b] = c/b
    under: tuple | None = None  # under[a][c] = a\c
    stars_unique: bool | None = None
    notes: dict = field(default_factory=dict)

    @property
    def flags(self) -> dict:
        return {
            "is_protogroup": self.is_protogroup,
            "is_contractive": self.is_contractive,
            "is_residuated": self.is_residuated,
            "is_pregroup": self.is_pregroup,
        }

    def to_json(self) -> dict:
        out: dict[str, Any] = dict(self.flags)
        if self.right_star is not None:
            out["right_star"] = list(self.right_star)
            out["left_star"] = list(self.left_star)
            out["stars_unique"] = self.stars_unique
        if self.over is not None:
            out["over"] = [list(r) for r in self.over]
            out["under"] = [list(r) for r in self.under]
        return out


def classify(p: Pomonoid) -> Classification:
    n = range(p.size)
    one = p.unit
    proto = all(any(p.le(p.mul(a, t), one) for a in n) and any(p.le(p.mul(t, b), one) for b in n) for t in n)

    rs = [p.maximum([a for a in n if p.le(p.mul(a, t), one)]) for t in n]
    ls = [p.maximum([b for b in n if p.le(p.mul(t, b), one)]) for t in n]
    contractive = proto and None not in rs and None not in ls
    right_star = left_star = None
    unique = None
    if contractive:
        right_star, left_star = tuple(rs), tuple(ls)
        unique = True
        for t in n:
            # exactly one s with {a | a·t ≤ 1} = ↓s, and likewise on the right
            r_cands = [s for s in n if all(p.le(p.mul(a, t), one) == p.le(a, s) for a in n)]
            l_cands = [s for s in n if all(p.le(p.mul(t, b), one) == p.le(b, s) for b in n)]
            unique &= r_cands == [rs[t]] and l_cands == [ls[t]]

    over = [[p.maximum([a for a in n if p.le(p.mul(a, b), c)]) for b in n] for c in n]
    under = [[p.maximum([b for b in n if p.le(p.mul(a, b), c)]) for c in n] for a in n]
    residuated = all(x is not None for r in over for x in r) and all(x is not None for r in under for x in r)

    pregroup = contractive and all(
        p.le(one, p.mul(t, rs[t])) and p.le(one, p.mul(ls[t], t)) for t in n
    )
    return Classification(
        is_protogroup=proto,
        is_contractive=contractive,
        is_residuated=residuated,
        is_pregroup=pregroup,
        right_star=right_star,
        left_star=left_star,
        over=tuple(tuple(r) for r in over) if residuated else None,
        under=tuple(tuple(r) for r in under) if residuated else None,
        stars_unique=unique,
    )


def check_derived_laws(p: Pomonoid, c: Classification) -> Report:
    """The consequences of contractivity, checked exhaustively."""
    t = Tally("derived laws of proto-inverses hold", "contractive pomonoid derived laws")
    if not c.is_contractive or c.right_star is None:
        t.fail("precondition", "pomonoid is not contractive")
        return t.report()
    rs, ls, one = c.right_star, c.left_star, p.unit
    name = p.elements
    n = range(p.size)
    t.check(rs[one] == one and ls[one] == one, "1* = 1 = *1", [name[rs[one]], name[ls[one]]])
    bad = [name[x] for x in n if not p.le(x, ls[rs[x]])]
    t.check(not bad, "t <= *(t*)", bad or None)
    bad = [name[x] for x in n if not p.le(x, rs[ls[x]])]
    t.check(not bad, "t <= (*t)*", bad or None)
    bad = [[name[a], name[b]] for a in n for b in n if not p.le(p.mul(rs[b], rs[a]), rs[p.mul(a, b)])]
    t.check(not bad, "b*.a* <= (a.b)*", bad or None)
    bad = [[name[a], name[b]] for a in n for b in n if not p.le(p.mul(ls[b], ls[a]), ls[p.mul(a, b)])]
    t.check(not bad, "*b.*a <= *(a.b)", bad or None)
    bad = [[name[a], name[b]] for a in n for b in n if p.le(a, rs[b]) != p.le(b, ls[a])]
    t.check(not bad, "a <= b* iff b <= *a", bad or None)
    return t.report()


@dataclass
class Verdict:
    accepted: bool
    value: Any = None
    trace: list = field(default_factory=list)

    def to_json(self) -> dict:
        return {"accepted": self.accepted, "value": self.value, "trace": [list(x) for x in self.trace]}


def finite_sentence_check(p: Pomonoid, c: Classification, word_types: Sequence[int], s: int) -> Verdict:
    """Accept iff the product of the word types, in order, is below ``s``."""
    if not c.is_protogroup:
        raise ValidationError("sentence checking needs at least a protogroup")
    value = p.product(word_types)
    return Verdict(p.le(value, s), p.elements[value])
