"""
Verification reports and their JSON, CSV and text renderings.
"""

import csv
import io
import json
import logging
from dataclasses import dataclass, field
from pathlib import Path
from typing import Any, Callable, Dict, List, Optional

from utils.errors import IoError

logger = logging.getLogger(__name__)

REPORT_VERSION = "1.0.0"

PASS = "pass"
FAIL = "fail"
CONJECTURE_AGREE = "conjecture:agree"
CONJECTURE_DISAGREE = "conjecture:disagree"

FORMATS = ("json", "csv", "text")
CSV_COLUMNS = ("name", "status", "millis", "params", "expected", "computed")


def statusFor(passed: bool, conjecture: bool) -> str:
    if conjecture:
        return CONJECTURE_AGREE if passed else CONJECTURE_DISAGREE
    return PASS if passed else FAIL


@dataclass
class CheckRecord:
    """One check: its parameters, expected value with the formula it comes from, and the computed value."""

    name: str
    params: Dict[str, Any]
    expected: Any
    computed: Any
    status: str
    millis: int = 0

    @property
    def isConjecture(self) -> bool:
        return self.status.startswith("conjecture:")

    def asDict(self) -> Dict[str, Any]:
        return {
            "name": self.name,
            "params": self.params,
            "expected": self.expected,
            "computed": self.computed,
            "status": self.status,
            "millis": self.millis,
        }


@dataclass
class Report:
    """All check records of a run, ordered by check name."""

    config: Dict[str, Any] = field(default_factory=dict)
    records: List[CheckRecord] = field(default_factory=list)
    version: str = REPORT_VERSION

    @property
    def passed(self) -> bool:
        """Conjunction of the non-conjecture checks."""
        return all(record.status == PASS for record in self.records if not record.isConjecture)

    @property
    def status(self) -> str:
        return PASS if self.passed else FAIL

    def counts(self) -> Dict[str, int]:
        counts = {PASS: 0, FAIL: 0, CONJECTURE_AGREE: 0, CONJECTURE_DISAGREE: 0}
        for record in self.records:
            counts[record.status] += 1
        return counts

    def failures(self) -> List[CheckRecord]:
        return [record for record in self.records if record.status == FAIL]

    def asDict(self) -> Dict[str, Any]:
        return {
            "version": self.version,
            "config": self.config,
            "checks": [record.asDict() for record in self.records],
            "status": self.status,
        }


def _compact(value: Any) -> str:
    return json.dumps(value, sort_keys=True, separators=(",", ":"))


def renderJson(report: Report) -> str:
    return json.dumps(report.asDict(), indent=2) + "\n"


def renderCsv(report: Report) -> str:
    """One row per check; structured cells hold compact JSON."""
    buffer = io.StringIO()
    writer = csv.writer(buffer, lineterminator="\n")
    writer.writerow(CSV_COLUMNS)
    for record in report.records:
        writer.writerow([
            record.name,
            record.status,
            record.millis,
            _compact(record.params),
            _compact(record.expected),
            _compact(record.computed),
        ])
    return buffer.getvalue()


def renderText(report: Report) -> str:
    """A terminal table of check names and statuses followed by a summary."""
    width = max([len(record.name) for record in report.records] + [len("check")])
    lines = [f"{'check'.ljust(width)}  {'status':<20} {'ms':>8}", "-" * (width + 31)]
    for record in report.records:
        lines.append(f"{record.name.ljust(width)}  {record.status:<20} {record.millis:>8}")
    for record in report.failures():
        lines.append("")
        lines.append(f"FAILED {record.name}")
        lines.append(f"  expected: {_compact(record.expected)}")
        lines.append(f"  computed: {_compact(record.computed)}")
    counts = report.counts()
    lines.append("")
    lines.append(
        f"{len(report.records)} checks: {counts[PASS]} passed, {counts[FAIL]} failed, "
        f"{counts[CONJECTURE_AGREE]} conjecture agreed, {counts[CONJECTURE_DISAGREE]} conjecture disagreed"
    )
    lines.append(f"Status: {report.status}")
    return "\n".join(lines) + "\n"


RENDERERS: Dict[str, Callable[[Report], str]] = {
    "json": renderJson,
    "csv": renderCsv,
    "text": renderText,
}


def emitReport(report: Report, outputFormat: str = "json", path: Optional[str] = None) -> str:
    """
    Render a report and optionally write it.

    Args:
        report: Report to render
        outputFormat: json, csv or text
        path: File to write; nothing is written when None

    Returns:
        The rendered document

    Raises:
        IoError: If the file cannot be written
    """
    if outputFormat not in RENDERERS:
        raise ValueError(f"Unknown report format {outputFormat!r}; expected one of {', '.join(FORMATS)}")
    text = RENDERERS[outputFormat](report)
    if path is not None:
        try:
            Path(path).write_text(text, encoding="utf-8")
        except OSError as e:
            raise IoError(path, e.strerror or str(e)) from e
        logger.info("Wrote %s report with %d checks to %s", outputFormat, len(report.records), path)
    return text
