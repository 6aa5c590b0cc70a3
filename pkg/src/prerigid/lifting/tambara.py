"""Degree-truncated quotient k⟨X,Y⟩/(X², XY+YX).

Words of each degree are ordered degree-lexicographically with X < Y. The
ideal in degree n is spanned by u·r·v with r ∈ {XX, XY+YX}; it is reduced to
echelon form with pivots on the smallest words, and the remaining words form
the normal-form basis.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass, field
from fractions import Fraction

from ..linalg import Matrix
from ..report import Report, Tally

RELATIONS = ({"XX": 1}, {"XY": 1, "YX": 1})


def words(n: int) -> list[str]:
    return ["".join(w) for w in itertools.product("XY", repeat=n)]


def relation_multiples(n: int) -> list[dict]:
    """All u·r·v of total degree n as sparse {word: coefficient} vectors."""
    out = []
    if n < 2:
        return out
    for k in range(n - 1):
        for u in words(k):
            for v in words(n - 2 - k):
                for r in RELATIONS:
                    out.append({u + w + v: c for w, c in r.items()})
    return out


def _reduce(rows: list[dict], order: dict, modulus: int | None = None) -> dict:
    """Sparse elimination; returns pivot word → reduced row.

    The pivot of a row is its smallest word under ``order``. Arithmetic is in
    Q, or in Z/p when ``modulus`` is given.
    """
    pivots: dict = {}

    def norm(x):
        return x % modulus if modulus else x

    for row in rows:
        row = {w: norm(c) for w, c in row.items() if norm(c)}
        while row:
            lead = min(row, key=order.__getitem__)
            if lead not in pivots:
                inv = pow(row[lead], -1, modulus) if modulus else 1 / Fraction(row[lead])
                pivots[lead] = {w: norm(c * inv) for w, c in row.items()}
                break
            piv, a = pivots[lead], row[lead]
            for w, c in piv.items():
                x = norm(row.get(w, 0) - a * c)
                if x:
                    row[w] = x
                else:
                    row.pop(w, None)
    return pivots


@dataclass
class TruncatedFreeAlgebra:
    degree: int
    basis: dict = field(default_factory=dict)  # degree → normal-form words

    @property
    def profile(self) -> list[int]:
        return [len(self.basis[n]) for n in range(self.degree + 1)]

    @property
    def cumulative(self) -> int:
        return sum(self.profile)

    def to_json(self):
        return {"degree": self.degree, "profile": self.profile, "cumulative": self.cumulative,
                "normal_forms": {str(n): self.basis[n] for n in range(self.degree + 1)}}


def tambara_truncated(d: int) -> TruncatedFreeAlgebra:
    if d < 0:
        raise ValueError("degree bound must be nonnegative")
    out = TruncatedFreeAlgebra(d)
    for n in range(d + 1):
        ws = words(n)
        order = {w: k for k, w in enumerate(ws)}
        pivots = _reduce(relation_multiples(n), order)
        out.basis[n] = [w for w in ws if w not in pivots]
    return out


# independent oracles


_PRIME = 2_147_483_647


def oracle_profile_modular(d: int) -> list[int]:
    """Rank per degree modulo a large prime, pivoting on the largest words."""
    out = []
    for n in range(d + 1):
        ws = words(n)
        order = {w: -k for k, w in enumerate(ws)}
        out.append(len(ws) - len(_reduce(relation_multiples(n), order, _PRIME)))
    return out


def oracle_profile_dense(d: int) -> list[int]:
    """Dense exact rank of the full relation matrix per degree."""
    out = []
    for n in range(d + 1):
        ws = words(n)
        idx = {w: k for k, w in enumerate(ws)}
        rows = []
        for r in relation_multiples(n):
            row = [0] * len(ws)
            for w, c in r.items():
                row[idx[w]] += c
            rows.append(row)
        rank = Matrix.from_rows(rows, len(ws)).rank() if rows else 0
        out.append(len(ws) - rank)
    return out


def check_tambara(d: int, dense_up_to: int = 6) -> Report:
    """Profile 1, 2, 2, ... with cumulative 2d+1, matched against the oracles."""
    A = tambara_truncated(d)
    t = Tally("the quotient by X² and XY+YX grows without bound", "non-liftable adjunction witness")
    expected = [1] + [2] * d
    t.check(A.profile == expected, "per-degree dimensions", {"profile": A.profile, "expected": expected})
    t.check(A.cumulative == 2 * d + 1, "cumulative dimension", {"cumulative": A.cumulative})
    modular = oracle_profile_modular(d)
    t.check(modular == A.profile, "modular oracle, reversed pivot order", {"oracle": modular})
    dense = oracle_profile_dense(min(d, dense_up_to))
    t.check(dense == A.profile[:len(dense)], f"dense exact oracle up to degree {len(dense) - 1}", {"oracle": dense})
    forms = {n: sorted(A.basis[n]) for n in range(1, d + 1)}
    t.check(all(forms[n] == sorted(["Y" * (n - 1) + "X", "Y" * n]) for n in forms), "normal forms Y^n, Y^(n-1)X")
    t.details.update(A.to_json())
    t.details["growth"] = "unbounded: each degree contributes 2"
    t.details["note"] = "liftability itself is not decided; this is the dimension witness"
    return t.report()
