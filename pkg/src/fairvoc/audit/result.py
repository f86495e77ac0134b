"""Audit finding type shared by every check in the toolkit."""
from __future__ import annotations

import enum
from dataclasses import dataclass, field
from typing import Tuple


class CheckStatus(str, enum.Enum):
    PASS = "pass"
    FAIL = "fail"
    WARN = "warn"
    SKIPPED = "skipped"
    INFO = "info"


class Severity(str, enum.Enum):
    RECOMMENDED = "recommended"
    OPTIONAL = "optional"
    INFORMATIONAL = "informational"


@dataclass(frozen=True)
class CheckResult:
    """One audit finding.

    status=SKIPPED is reserved for checks whose precondition (offline mode,
    missing prerequisite data) prevented evaluation. A RECOMMENDED check
    with status FAIL is the only combination that drives a nonzero exit.
    """

    check_id: str
    status: CheckStatus
    severity: Severity
    evidence: str
    paper_ref: str
    values: Tuple[str, ...] = field(default_factory=tuple)

    def failed(self) -> bool:
        return self.status is CheckStatus.FAIL and self.severity is Severity.RECOMMENDED
