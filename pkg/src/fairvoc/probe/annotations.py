"""Detection of machine-readable JSON-LD annotations in documentation pages."""
from __future__ import annotations

import json
import re
from html.parser import HTMLParser
from typing import List, Optional, Tuple

from ..audit.result import CheckResult, CheckStatus, Severity

REF_FINDABILITY = "publication/findability"

_TRAILING_COMMA = re.compile(r",(\s*[}\]])")


class _ScriptCollector(HTMLParser):
    def __init__(self):
        super().__init__(convert_charrefs=True)
        self.blocks: List[str] = []
        self._in_jsonld = False
        self._buffer: List[str] = []

    def handle_starttag(self, tag, attrs):
        if tag.lower() != "script":
            return
        attr_map = {k.lower(): (v or "") for k, v in attrs}
        if attr_map.get("type", "").strip().lower() == "application/ld+json":
            self._in_jsonld = True
            self._buffer = []

    def handle_endtag(self, tag):
        if tag.lower() == "script" and self._in_jsonld:
            self.blocks.append("".join(self._buffer))
            self._in_jsonld = False

    def handle_data(self, data):
        if self._in_jsonld:
            self._buffer.append(data)


def _parse_block(block: str) -> Tuple[Optional[dict], bool, str]:
    """(document, was_lenient, error). Tolerates trailing commas on retry."""
    try:
        return json.loads(block), False, ""
    except json.JSONDecodeError as first_error:
        cleaned = _TRAILING_COMMA.sub(r"\1", block)
        try:
            return json.loads(cleaned), True, ""
        except json.JSONDecodeError:
            return None, False, f"invalid JSON: {first_error.msg} (line {first_error.lineno})"


def _references_schema_org(context: object) -> bool:
    if isinstance(context, str):
        return "schema.org" in context
    if isinstance(context, list):
        return any(_references_schema_org(item) for item in context)
    if isinstance(context, dict):
        return any(_references_schema_org(v) for v in context.values())
    return False


def detect_jsonld_annotations(html: str) -> CheckResult:
    """Pass iff some application/ld+json script parses and carries a schema.org
    @context plus a url or name member."""
    check_id = "findable.jsonld_annotations"
    collector = _ScriptCollector()
    collector.feed(html)

    if not collector.blocks:
        return CheckResult(
            check_id,
            CheckStatus.FAIL,
            Severity.RECOMMENDED,
            "no <script type=\"application/ld+json\"> block in the documentation page",
            REF_FINDABILITY,
        )

    errors = []
    for block in collector.blocks:
        document, lenient, error = _parse_block(block)
        if document is None:
            errors.append(error)
            continue
        candidates = document if isinstance(document, list) else [document]
        for doc in candidates:
            if not isinstance(doc, dict):
                continue
            if not _references_schema_org(doc.get("@context")):
                errors.append("@context does not reference schema.org")
                continue
            members = sorted(k for k in doc.keys() if not k.startswith("@"))
            if "url" in doc or "name" in doc:
                note = " (non-strict JSON: trailing comma tolerated)" if lenient else ""
                return CheckResult(
                    check_id,
                    CheckStatus.PASS,
                    Severity.RECOMMENDED,
                    "JSON-LD annotations found with members: " + ", ".join(members) + note,
                    REF_FINDABILITY,
                    values=tuple(members),
                )
            errors.append("JSON-LD block lacks both url and name members")

    return CheckResult(
        check_id,
        CheckStatus.FAIL,
        Severity.RECOMMENDED,
        "JSON-LD blocks present but unusable: " + "; ".join(sorted(set(errors))),
        REF_FINDABILITY,
    )
