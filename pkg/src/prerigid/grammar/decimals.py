"""Bounded refutation: terminating decimals >= 1 with the reversed order.

With the opposite order 1 is the maximum, so t* = *t = 1 makes the pomonoid
contractive. The residual 4/3 (in the reversed order, the least a with
3a >= 4) does not exist: every candidate with k digits is beaten by one with
k+1 digits. We certify this on finite slices.
"""

from __future__ import annotations

from fractions import Fraction

from ..report import Report, Tally


def _slice(digits: int, cap: int) -> range:
    # values m / 10**digits with 1 <= value <= cap
    scale = 10 ** digits
    return range(scale, cap * scale + 1)


def _decimal(m: int, digits: int) -> str:
    return f"{m // 10 ** digits}.{m % 10 ** digits:0{digits}d}"


def decimals_counterexample_check(bound_n: int, cap: int = 4) -> Report:
    t = Tally("terminating decimals >= 1 (reversed order) are contractive but not residuated",
              "decimals pomonoid counterexample")
    t.details["bound"] = bound_n
    # (i) 1 is the least element of every slice, hence the maximum of the reversed order;
    # products of elements >= 1 are >= 1, so a.b <=op 1 always holds and t* = *t = 1
    for k in range(1, max(bound_n, 1) + 1):
        sl = _slice(k, cap)
        t.check(min(sl) == 10 ** k, f"1 is the reversed-order maximum at {k} digits")
    # (ii) candidate residuals are beaten one digit later
    chain = []
    target = Fraction(4, 3)
    for k in range(1, max(bound_n, 1) + 1):
        scale = 10 ** k
        cands = [m for m in _slice(k, cap) if 3 * m >= 4 * scale]
        best = Fraction(min(cands), scale)
        finer = [m for m in _slice(k + 1, cap) if 3 * m >= 4 * scale * 10]
        beat = Fraction(min(finer), scale * 10)
        ok = beat < best and best > target and 3 * target == 4 and best - Fraction(1, scale) < target
        t.check(ok, f"{k}-digit candidate beaten", {"candidate": best, "beaten_by": beat})
        chain.append({"candidate": _decimal(min(cands), k), "beaten_by": _decimal(min(finer), k + 1)})
    # no terminating decimal equals 4/3
    t.check(all((4 * 10 ** k) % 3 for k in range(bound_n + 2)), "4/3 has no terminating expansion")
    t.details["chain"] = chain
    if bound_n < 2:
        t.details["inconclusive"] = True
        t.fail("slice size", "bound below 2: slice too small to exhibit the pattern")
    return t.report()
