"""Findability lookups against prefix and vocabulary registries."""
from __future__ import annotations

import enum
import json
from dataclasses import dataclass
from datetime import datetime, timezone
from typing import Callable, Optional
from urllib.parse import quote

from ..audit.checks import strip_terminator
from ..audit.result import CheckResult, CheckStatus, Severity
from .transport import OfflineError, Transport, TransportError

REF_FINDABILITY = "publication/findability"

PREFIX_CC = "prefix.cc"
LOV = "lov"

DEFAULT_PREFIX_CC_TEMPLATE = "https://prefix.cc/{prefix}.file.txt"
DEFAULT_LOV_API_BASE = "https://lov.linkeddata.es/dataset/lov/api/v2"


class Outcome(str, enum.Enum):
    FOUND = "found"
    NOT_FOUND = "not-found"
    UNREACHABLE = "unreachable"


def _now_utc() -> str:
    return datetime.now(timezone.utc).strftime("%Y-%m-%dT%H:%M:%SZ")


@dataclass(frozen=True)
class RegistryFinding:
    registry: str
    queried: str
    outcome: Outcome
    value: Optional[str] = None
    detail: str = ""
    fetched_at: str = ""


def lookup_prefix(
    prefix: str,
    transport: Transport,
    endpoint_template: str = DEFAULT_PREFIX_CC_TEMPLATE,
    timeout: float = 30.0,
    clock: Callable[[], str] = _now_utc,
) -> RegistryFinding:
    """Query the plain-text prefix lookup; Found carries the registered namespace."""
    url = endpoint_template.format(prefix=quote(prefix))
    try:
        reply = transport.send("GET", url, {"Accept": "text/plain"}, timeout)
    except (OfflineError, TransportError) as exc:
        return RegistryFinding(PREFIX_CC, prefix, Outcome.UNREACHABLE, detail=str(exc), fetched_at=clock())
    if reply.status == 404:
        return RegistryFinding(PREFIX_CC, prefix, Outcome.NOT_FOUND, fetched_at=clock())
    if reply.status != 200:
        return RegistryFinding(
            PREFIX_CC, prefix, Outcome.UNREACHABLE, detail=f"HTTP {reply.status}", fetched_at=clock()
        )
    for line in reply.body.decode("utf-8", errors="replace").splitlines():
        if "\t" in line:
            found_prefix, namespace = line.split("\t", 1)
            if found_prefix.strip() == prefix:
                return RegistryFinding(
                    PREFIX_CC, prefix, Outcome.FOUND, value=namespace.strip(), fetched_at=clock()
                )
    return RegistryFinding(
        PREFIX_CC, prefix, Outcome.NOT_FOUND, detail="no mapping line in response", fetched_at=clock()
    )


def lookup_lov(
    namespace: str,
    transport: Transport,
    api_base: str = DEFAULT_LOV_API_BASE,
    timeout: float = 30.0,
    clock: Callable[[], str] = _now_utc,
) -> RegistryFinding:
    """Search the vocabulary registry for the namespace."""
    url = f"{api_base}/vocabulary/search?q={quote(namespace, safe='')}"
    try:
        reply = transport.send("GET", url, {"Accept": "application/json"}, timeout)
    except (OfflineError, TransportError) as exc:
        return RegistryFinding(LOV, namespace, Outcome.UNREACHABLE, detail=str(exc), fetched_at=clock())
    if reply.status != 200:
        return RegistryFinding(
            LOV, namespace, Outcome.UNREACHABLE, detail=f"HTTP {reply.status}", fetched_at=clock()
        )
    try:
        payload = json.loads(reply.body.decode("utf-8"))
    except (json.JSONDecodeError, UnicodeDecodeError) as exc:
        return RegistryFinding(LOV, namespace, Outcome.UNREACHABLE, detail=f"bad JSON: {exc}", fetched_at=clock())

    wanted = strip_terminator(namespace)
    for item in payload.get("results", []):
        candidates = item.get("uri", [])
        if isinstance(candidates, str):
            candidates = [candidates]
        prefixed = item.get("prefixedName", [])
        if isinstance(prefixed, str):
            prefixed = [prefixed]
        for candidate in candidates:
            if strip_terminator(str(candidate)) == wanted:
                label = prefixed[0] if prefixed else str(candidate)
                return RegistryFinding(LOV, namespace, Outcome.FOUND, value=str(label), fetched_at=clock())
    return RegistryFinding(LOV, namespace, Outcome.NOT_FOUND, fetched_at=clock())


def prefix_check(finding: RegistryFinding, audited_namespace: Optional[str]) -> CheckResult:
    """Judge a prefix lookup: a registration pointing elsewhere is a collision."""
    check_id = "findable.prefix_registered"
    if finding.outcome is Outcome.UNREACHABLE:
        return CheckResult(
            check_id,
            CheckStatus.SKIPPED,
            Severity.RECOMMENDED,
            f"prefix registry not consulted: {finding.detail}",
            REF_FINDABILITY,
        )
    if finding.outcome is Outcome.NOT_FOUND:
        return CheckResult(
            check_id,
            CheckStatus.WARN,
            Severity.RECOMMENDED,
            f'prefix "{finding.queried}" is not registered; registering it helps '
            "others find the vocabulary",
            REF_FINDABILITY,
        )
    assert finding.value is not None
    if audited_namespace and strip_terminator(finding.value) == strip_terminator(audited_namespace):
        return CheckResult(
            check_id,
            CheckStatus.PASS,
            Severity.RECOMMENDED,
            f'prefix "{finding.queried}" is registered for this namespace',
            REF_FINDABILITY,
            values=(finding.value,),
        )
    return CheckResult(
        check_id,
        CheckStatus.FAIL,
        Severity.RECOMMENDED,
        f'prefix "{finding.queried}" is already registered for <{finding.value}>, '
        "which is a different namespace; pick another prefix",
        REF_FINDABILITY,
        values=(finding.value,),
    )


def lov_check(finding: RegistryFinding) -> CheckResult:
    check_id = "findable.lov_registered"
    if finding.outcome is Outcome.UNREACHABLE:
        return CheckResult(
            check_id,
            CheckStatus.SKIPPED,
            Severity.OPTIONAL,
            f"vocabulary registry not consulted: {finding.detail}",
            REF_FINDABILITY,
        )
    if finding.outcome is Outcome.FOUND:
        return CheckResult(
            check_id,
            CheckStatus.PASS,
            Severity.OPTIONAL,
            f"namespace registered in the vocabulary registry as {finding.value}",
            REF_FINDABILITY,
            values=(finding.value or "",),
        )
    return CheckResult(
        check_id,
        CheckStatus.INFO,
        Severity.OPTIONAL,
        "namespace not found in the vocabulary registry; registering it improves "
        "findability",
        REF_FINDABILITY,
    )
