"""Scored report: groups findings into the four FAIR categories."""
from __future__ import annotations

import enum
import json
from dataclasses import dataclass
from typing import Dict, List, Mapping, Optional, Sequence, Tuple

from .audit.catalog import CATALOG
from .audit.result import CheckResult, CheckStatus, Severity
from .config import AuditConfig


class FairCategory(str, enum.Enum):
    FINDABLE = "findable"
    ACCESSIBLE = "accessible"
    INTEROPERABLE = "interoperable"
    REUSABLE = "reusable"


_CATEGORY_ORDER = list(FairCategory)


def category_for(check_id: str) -> FairCategory:
    """Total mapping over the check catalog; raises on unknown families."""
    if check_id.startswith("negotiation."):
        # HTML documentation reachability is an access concern; serving the
        # machine-readable serializations is interoperability
        if check_id.endswith(".html"):
            return FairCategory.ACCESSIBLE
        return FairCategory.INTEROPERABLE
    if check_id.startswith(("metadata.", "terms.")):
        return FairCategory.REUSABLE
    if check_id.startswith(("versioning.", "uri.")):
        return FairCategory.ACCESSIBLE
    if check_id.startswith(("prefix.", "findable.")):
        return FairCategory.FINDABLE
    raise KeyError(f"check id {check_id!r} belongs to no category")


def _effective_weight(result: CheckResult, config: AuditConfig) -> float:
    # informational outcomes don't gate anything: they carry weight zero,
    # like informational severity
    if result.status in (CheckStatus.INFO, CheckStatus.SKIPPED):
        return 0.0
    return {
        Severity.RECOMMENDED: config.weight_recommended,
        Severity.OPTIONAL: config.weight_optional,
        Severity.INFORMATIONAL: config.weight_informational,
    }[result.severity]


def _score(results: Sequence[CheckResult], config: AuditConfig) -> Optional[float]:
    total = sum(_effective_weight(r, config) for r in results)
    if total == 0:
        return None
    passed = sum(
        _effective_weight(r, config) for r in results if r.status is CheckStatus.PASS
    )
    return round(100.0 * passed / total, 1)


@dataclass(frozen=True)
class Report:
    subject: str
    tool_version: str
    timestamp: str
    scores: Mapping[str, Optional[float]]
    checks: Tuple[CheckResult, ...]
    environment: Mapping[str, object]

    def recommended_failures(self) -> List[CheckResult]:
        return [r for r in self.checks if r.failed()]


def assemble_report(
    results: Sequence[CheckResult],
    subject: str,
    tool_version: str,
    timestamp: str,
    environment: Optional[Mapping[str, object]] = None,
    config: Optional[AuditConfig] = None,
) -> Report:
    """Order results by (category, check id) and compute category scores."""
    config = config or AuditConfig()
    ordered = tuple(
        sorted(
            results,
            key=lambda r: (_CATEGORY_ORDER.index(category_for(r.check_id)), r.check_id),
        )
    )
    scores: Dict[str, Optional[float]] = {}
    for category in FairCategory:
        members = [r for r in ordered if category_for(r.check_id) is category]
        scores[category.value] = _score(members, config)
    scores["overall"] = _score(ordered, config)
    return Report(
        subject=subject,
        tool_version=tool_version,
        timestamp=timestamp,
        scores=scores,
        checks=ordered,
        environment=dict(environment or {}),
    )


def exit_code(results: Sequence[CheckResult], runtime_error: bool = False) -> int:
    """0: clean; 1: at least one recommended check failed; 2: runtime error."""
    if runtime_error:
        return 2
    return 1 if any(r.failed() for r in results) else 0


# --- rendering -----------------------------------------------------------------


def report_to_dict(report: Report) -> dict:
    return {
        "subject": report.subject,
        "tool_version": report.tool_version,
        "timestamp": report.timestamp,
        "scores": dict(report.scores),
        "checks": [
            {
                "id": r.check_id,
                "category": category_for(r.check_id).value,
                "severity": r.severity.value,
                "status": r.status.value,
                "evidence": r.evidence,
                "paper_ref": r.paper_ref,
                "values": list(r.values),
            }
            for r in report.checks
        ],
        "environment": dict(report.environment),
    }


def report_from_json(text: str) -> Report:
    raw = json.loads(text)
    checks = tuple(
        CheckResult(
            check_id=item["id"],
            status=CheckStatus(item["status"]),
            severity=Severity(item["severity"]),
            evidence=item["evidence"],
            paper_ref=item["paper_ref"],
            values=tuple(item.get("values", [])),
        )
        for item in raw["checks"]
    )
    return Report(
        subject=raw["subject"],
        tool_version=raw["tool_version"],
        timestamp=raw["timestamp"],
        scores=raw["scores"],
        checks=checks,
        environment=raw.get("environment", {}),
    )


_STATUS_ORDER = [
    CheckStatus.FAIL,
    CheckStatus.WARN,
    CheckStatus.SKIPPED,
    CheckStatus.INFO,
    CheckStatus.PASS,
]

_STATUS_MARKS = {
    CheckStatus.PASS: "ok",
    CheckStatus.FAIL: "FAIL",
    CheckStatus.WARN: "warn",
    CheckStatus.SKIPPED: "skip",
    CheckStatus.INFO: "info",
}


def _render_markdown(report: Report) -> str:
    lines = [f"# Vocabulary audit: {report.subject}", ""]
    lines.append(f"Generated {report.timestamp} by fairvoc {report.tool_version}.")
    env = ", ".join(f"{k}={v}" for k, v in sorted(report.environment.items()))
    if env:
        lines.append(f"Environment: {env}.")
    lines.append("")
    lines.append("| Category | Score |")
    lines.append("| --- | --- |")
    for key in ("findable", "accessible", "interoperable", "reusable", "overall"):
        value = report.scores.get(key)
        shown = "n/a" if value is None else f"{value:g}"
        lines.append(f"| {key} | {shown} |")
    lines.append("")
    lines.append("## Checks")
    lines.append("")
    for status in _STATUS_ORDER:
        group = [r for r in report.checks if r.status is status]
        for result in group:
            mark = _STATUS_MARKS[status]
            category = category_for(result.check_id).value
            lines.append(
                f"- [{mark}] `{result.check_id}` ({category}, {result.severity.value}): "
                f"{result.evidence}"
            )
    return "\n".join(lines) + "\n"


def render_report(report: Report, fmt: str = "json") -> str:
    """fmt 'json' (schema-stable, round-trips) or 'md' (failures first)."""
    if fmt == "json":
        return json.dumps(report_to_dict(report), indent=2, ensure_ascii=False) + "\n"
    if fmt == "md":
        return _render_markdown(report)
    raise ValueError(f"unknown report format {fmt!r}")
