"""Verification results and their serializable form."""

# src/circlespace/reporter.py
import math
from dataclasses import dataclass


@dataclass(frozen=True)
class CaseResult:
    """One checked identity: the largest observed error against its tolerance."""

    id: str
    max_error: float
    tolerance: float

    @property
    def passed(self) -> bool:
        # NaN never passes.
        return self.max_error <= self.tolerance

    def to_record(self) -> dict:
        return {"id": self.id, "max_error": self.max_error, "tolerance": self.tolerance, "pass": self.passed}


@dataclass(frozen=True)
class VerificationReport:
    suite: str
    cases: tuple[CaseResult, ...]

    @property
    def overall(self) -> bool:
        return all(case.passed for case in self.cases)

    @property
    def failures(self) -> list[CaseResult]:
        return [case for case in self.cases if not case.passed]

    def to_record(self) -> dict:
        return {"suite": self.suite, "overall": self.overall, "cases": [case.to_record() for case in self.cases]}


def _case(item) -> CaseResult:
    if isinstance(item, CaseResult):
        return item
    if isinstance(item, dict):
        return CaseResult(str(item["id"]), float(item["max_error"]), float(item["tolerance"]))
    if isinstance(item, (list, tuple)) and len(item) == 3:
        case_id, max_error, tolerance = item
        return CaseResult(str(case_id), float(max_error), float(tolerance))
    raise TypeError(f"Cannot build a verification case from {item!r}")


def generate_report(suite: str, results) -> VerificationReport:
    """
    Normalize raw suite results into a report.

    Args:
        suite: name of the suite that produced the results.
        results: CaseResult objects, dicts with id/max_error/tolerance, or (id, max_error, tolerance) tuples.

    Returns:
        VerificationReport with cases in the given order.
    """
    cases = []
    for item in results:
        case = _case(item)
        if math.isinf(case.max_error) or math.isnan(case.max_error):
            # Keep reports serializable as strict JSON.
            case = CaseResult(case.id, 1.7976931348623157e308, case.tolerance)
        cases.append(case)
    return VerificationReport(suite, tuple(cases))


def merge_reports(suite: str, reports: list[VerificationReport]) -> VerificationReport:
    """Concatenate reports, prefixing each case id with its suite name."""
    cases = [CaseResult(f"{r.suite}/{c.id}", c.max_error, c.tolerance) for r in reports for c in r.cases]
    return VerificationReport(suite, tuple(cases))
