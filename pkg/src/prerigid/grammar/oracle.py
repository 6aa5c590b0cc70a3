"""Direct quantifier evaluation of the pomonoid definitions.

Nothing here looks for maxima: each flag is the literal existential
statement, so it serves as an independent check on :func:`classify`.
"""

from __future__ import annotations

import itertools
from typing import Iterator

from .pomonoid import Pomonoid, validate_pomonoid


def brute_force_flags(p: Pomonoid) -> dict:
    n = range(p.size)
    one, le, mul = p.unit, p.le, p.mul

    proto = all(any(le(mul(a, t), one) for a in n) and any(le(mul(t, b), one) for b in n) for t in n)

    def right_galois(t, s):  # ∀a: a·t ≤ 1 ⇔ a ≤ s
        return all(le(mul(a, t), one) == le(a, s) for a in n)

    def left_galois(t, s):  # ∀b: t·b ≤ 1 ⇔ b ≤ s
        return all(le(mul(t, b), one) == le(b, s) for b in n)

    contractive = all(any(right_galois(t, s) for s in n) and any(left_galois(t, s) for s in n) for t in n)
    residuated = all(
        any(all(le(mul(a, b), c) == le(a, x) for a in n) for x in n)
        and any(all(le(mul(b, a), c) == le(a, y) for a in n) for y in n)
        for b in n for c in n
    )
    pregroup = all(
        any(le(mul(x, t), one) and le(one, mul(t, x)) for x in n)
        and any(le(mul(t, y), one) and le(one, mul(y, t)) for y in n)
        for t in n
    )
    return {"is_protogroup": proto, "is_contractive": contractive,
            "is_residuated": residuated, "is_pregroup": pregroup}


def _partial_orders(size: int) -> Iterator[tuple]:
    pairs = [(a, b) for a in range(size) for b in range(size) if a != b]
    for mask in range(1 << len(pairs)):
        rel = [[a == b for b in range(size)] for a in range(size)]
        for k, (a, b) in enumerate(pairs):
            if mask >> k & 1:
                rel[a][b] = True
        if any(rel[a][b] and rel[b][a] for a, b in pairs):
            continue
        if any(rel[a][b] and rel[b][c] and not rel[a][c]
               for a in range(size) for b in range(size) for c in range(size)):
            continue
        yield tuple(tuple(r) for r in rel)


def all_pomonoids(size: int) -> Iterator[Pomonoid]:
    """Every pomonoid on {0..size-1} with unit 0 (labelled, not up to iso)."""
    names = [f"e{i}" for i in range(size)]
    free = [(a, b) for a in range(1, size) for b in range(1, size)]
    orders = list(_partial_orders(size))
    for values in itertools.product(range(size), repeat=len(free)):
        table = [[b if a == 0 else (a if b == 0 else 0) for b in range(size)] for a in range(size)]
        for (a, b), v in zip(free, values):
            table[a][b] = v
        if any(table[table[a][b]][c] != table[a][table[b][c]]
               for a in range(size) for b in range(size) for c in range(size)):
            continue
        for leq in orders:
            p = Pomonoid.build(names, leq, table, 0)
            if validate_pomonoid(p).passed:
                yield p
