"""Audit orchestration: offline checks, then the network phase."""
from __future__ import annotations

from dataclasses import dataclass
from typing import Dict, List, Optional, Tuple

from .audit import (
    check_optional_metadata,
    check_prefix_sanity,
    check_recommended_metadata,
    check_spelling_variants,
    check_term_annotations,
    check_versioning,
    coverage_checks,
    extract_metadata,
    profile_uri,
    uri_profile_checks,
)
from .audit.result import CheckResult, CheckStatus, Severity
from .config import AuditConfig
from .probe import (
    BodyOutcome,
    NegotiationTrace,
    Transport,
    detect_jsonld_annotations,
    lookup_lov,
    lookup_prefix,
    lov_check,
    prefix_check,
    run_matrix,
)
from .probe.registry import REF_FINDABILITY
from .rdf import OntologyModel


@dataclass
class AuditOutcome:
    results: List[CheckResult]
    traces: Dict[str, NegotiationTrace]


def _version_iris(meta) -> List[str]:
    # the current release and its predecessor are the versions a conformant
    # server must keep resolvable
    candidates = []
    for field_name in ("version_iri", "prior_version"):
        for value in meta.get(field_name):
            if value.is_iri and value.value.startswith(("http://", "https://")):
                candidates.append(value.value)
    return sorted(set(candidates))


def audit_model(
    model: OntologyModel,
    transport: Transport,
    config: Optional[AuditConfig] = None,
) -> AuditOutcome:
    """Run every check over a parsed model.

    The network phase goes through `transport`; an offline transport turns
    those checks into Skipped results rather than failures.
    """
    config = config or AuditConfig()
    meta = extract_metadata(model)
    namespace = meta.namespace_uri or model.ontology_iri

    results: List[CheckResult] = []
    results += check_recommended_metadata(meta)
    results += check_optional_metadata(meta)
    results += check_spelling_variants(meta)
    results += check_versioning(meta, namespace)
    profile = profile_uri(namespace, model)
    results += uri_profile_checks(profile, namespace)
    coverage = check_term_annotations(model)
    results += coverage_checks(
        coverage, config.term_pass_threshold, config.term_warn_threshold
    )
    results += check_prefix_sanity(meta)

    matrix_results, traces = run_matrix(
        namespace,
        _version_iris(meta),
        transport,
        advertised=config.advertised_formats,
        timeout=config.timeout,
        max_redirects=config.max_redirects,
        concurrency=config.concurrency,
        direct_200_fail=config.direct_200_fail,
    )
    results += matrix_results

    html_trace = traces.get("negotiation.ontology.html")
    if (
        html_trace is not None
        and html_trace.final_status == 200
        and html_trace.body.outcome is BodyOutcome.HTML_DETECTED
    ):
        results.append(
            detect_jsonld_annotations(html_trace.final_body.decode("utf-8", errors="replace"))
        )
    else:
        reason = (
            html_trace.failure
            if html_trace is not None and html_trace.failure
            else "no HTML documentation page retrieved"
        )
        results.append(
            CheckResult(
                "findable.jsonld_annotations",
                CheckStatus.SKIPPED,
                Severity.RECOMMENDED,
                f"documentation page not inspected: {reason}",
                REF_FINDABILITY,
            )
        )

    if meta.prefix:
        finding = lookup_prefix(
            meta.prefix, transport, config.prefix_cc_template, config.timeout
        )
        results.append(prefix_check(finding, namespace))
    else:
        results.append(
            CheckResult(
                "findable.prefix_registered",
                CheckStatus.SKIPPED,
                Severity.RECOMMENDED,
                "no declared prefix to look up",
                REF_FINDABILITY,
            )
        )
    lov_finding = lookup_lov(namespace, transport, config.lov_api_base, config.timeout)
    results.append(lov_check(lov_finding))

    return AuditOutcome(results=results, traces=traces)
