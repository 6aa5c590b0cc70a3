"""Check reports and JSON conversion of witnesses."""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from typing import Any

PASS = "pass"
FAIL = "fail"


def jsonable(x: Any) -> Any:
    """Convert witnesses (matrices, fractions, frozensets...) into plain JSON values."""
    from .linalg import Matrix

    if x is None or isinstance(x, (bool, int, str)):
        return x
    if isinstance(x, float):
        return x
    if isinstance(x, Fraction):
        return str(x)
    if isinstance(x, Matrix):
        return x.to_json()
    if hasattr(x, "to_json"):
        return x.to_json()
    if isinstance(x, dict):
        return {str(k): jsonable(v) for k, v in x.items()}
    if isinstance(x, (frozenset, set)):
        return sorted((jsonable(v) for v in x), key=repr)
    if isinstance(x, (list, tuple)):
        return [jsonable(v) for v in x]
    return repr(x)


@dataclass
class Report:
    claim: str
    status: str
    test_set: list[str] = field(default_factory=list)
    witness: Any = None
    anchor: str = ""
    details: dict = field(default_factory=dict)

    @property
    def passed(self) -> bool:
        return self.status == PASS

    def to_json(self) -> dict:
        out: dict[str, Any] = {"claim": self.claim, "anchor": self.anchor, "status": self.status}
        if self.witness is not None:
            out["witness"] = jsonable(self.witness)
        out["test_set"] = list(self.test_set)
        if self.details:
            out["details"] = jsonable(self.details)
        return out


class Tally:
    """Accumulates individual checks into one Report.

    Only the first failing witness is kept, alongside a failure count.
    """

    def __init__(self, claim: str, anchor: str = ""):
        self.claim = claim
        self.anchor = anchor
        self.tests: list[str] = []
        self.failures = 0
        self.first_witness: Any = None
        self.details: dict = {}

    def note(self, label: str) -> None:
        if label not in self.tests:
            self.tests.append(label)

    def check(self, ok: bool, label: str, witness: Any = None) -> bool:
        self.note(label)
        if not ok:
            self.failures += 1
            if self.first_witness is None:
                self.first_witness = {"case": label, "detail": witness}
        return ok

    def fail(self, label: str, witness: Any = None) -> None:
        self.check(False, label, witness)

    def report(self) -> Report:
        details = dict(self.details)
        if self.failures:
            details["failures"] = self.failures
        return Report(
            claim=self.claim,
            status=FAIL if self.failures else PASS,
            test_set=self.tests,
            witness=self.first_witness,
            anchor=self.anchor,
            details=details,
        )


def merge(claim: str, reports: list[Report], anchor: str = "") -> Report:
    """Combine sub-reports; passes iff all pass."""
    failed = [r for r in reports if not r.passed]
    tests = [t for r in reports for t in r.test_set]
    return Report(
        claim=claim,
        status=FAIL if failed else PASS,
        test_set=tests,
        witness=None if not failed else {"claim": failed[0].claim, "witness": failed[0].witness},
        anchor=anchor,
        details={"parts": [r.claim for r in reports]},
    )
