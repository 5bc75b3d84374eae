"""
Check results and per-instance reports.
"""

import logging
from dataclasses import dataclass, field
from enum import Enum
from typing import Iterable, List

import pandas as pd


logger = logging.getLogger(__name__)


class PreconditionError(ValueError):
    """Raised when the inputs of a suite do not meet its structural requirements"""


class Status(str, Enum):
    PASS = "pass"
    FAIL = "fail"
    SKIPPED = "skipped-hypothesis"


@dataclass
class Check:
    """One claim checked on one instance"""
    claim: str
    statement: str
    status: Status
    witness: str = ""
    detail: str = ""

    def line(self, suite: str, instance: str) -> str:
        return "\t".join([suite, instance, self.claim, self.status.value, self.witness or "-", self.detail or "-"])


@dataclass
class Report:
    """All checks of one suite on one instance"""
    suite: str
    instance: str
    checks: List[Check] = field(default_factory=list)

    def passed(self, claim: str, statement: str, detail: str = "") -> Check:
        return self._add(Check(claim, statement, Status.PASS, detail=detail))

    def failed(self, claim: str, statement: str, witness: str, detail: str = "") -> Check:
        if not witness:
            raise ValueError(f"failed check '{claim}' needs a witness")
        logger.error(f"[{self.suite}] {self.instance}: {claim} FAILED, witness {witness}")
        return self._add(Check(claim, statement, Status.FAIL, witness, detail))

    def skipped(self, claim: str, statement: str, reason: str) -> Check:
        logger.warning(f"[{self.suite}] {self.instance}: {claim} skipped ({reason})")
        return self._add(Check(claim, statement, Status.SKIPPED, detail=reason))

    def record(self, claim: str, statement: str, holds: bool, witness: str = "", detail: str = "") -> Check:
        """PASS when holds, else FAIL with the witness"""
        if holds:
            return self.passed(claim, statement, detail)
        return self.failed(claim, statement, witness, detail)

    def _add(self, check: Check) -> Check:
        self.checks.append(check)
        return check

    @property
    def failures(self) -> List[Check]:
        return [c for c in self.checks if c.status == Status.FAIL]

    @property
    def ok(self) -> bool:
        return not self.failures

    def lines(self) -> List[str]:
        """Tab-separated: suite, instance, claim, status, witness, detail"""
        return [c.line(self.suite, self.instance) for c in self.checks]


def reports_frame(reports: Iterable[Report]) -> pd.DataFrame:
    """One row per check"""
    rows = [
        {"suite": r.suite, "instance": r.instance, "claim": c.claim, "status": c.status.value,
         "witness": c.witness, "detail": c.detail}
        for r in reports for c in r.checks
    ]
    return pd.DataFrame(rows, columns=["suite", "instance", "claim", "status", "witness", "detail"])


def summarize(reports: Iterable[Report]) -> pd.DataFrame:
    """Counts per suite and status"""
    frame = reports_frame(reports)
    if frame.empty:
        return pd.DataFrame(columns=[s.value for s in Status])
    table = frame.groupby(["suite", "status"]).size().unstack(fill_value=0)
    return table.reindex(columns=[s.value for s in Status], fill_value=0)


def difference_witness(left, right, left_name: str = "left", right_name: str = "right") -> str:
    """First element of the symmetric difference of two ElementSets, or '' when equal"""
    for v in left:
        if v not in right:
            return f"{left.algebra.format_element(v)} in {left_name} only"
    for v in right:
        if v not in left:
            return f"{right.algebra.format_element(v)} in {right_name} only"
    return ""


def subset_witness(small, big, small_name: str = "left", big_name: str = "right") -> str:
    """First element of small missing from big, or ''"""
    for v in small:
        if v not in big:
            return f"{small.algebra.format_element(v)} in {small_name} but not in {big_name}"
    return ""
