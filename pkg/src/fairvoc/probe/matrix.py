"""The Accept-header × target matrix that exercises a published ontology."""
from __future__ import annotations

from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass
from typing import Dict, Iterable, List, Optional, Sequence, Tuple

from ..audit.result import CheckResult, CheckStatus, Severity
from ..rdf import RdfFormat
from .core import BodyOutcome, NegotiationTrace, ProbeRequest, probe
from .transport import Transport

REF_NEGOTIATION = "publication/content-negotiation"

#: media type -> short slug used in check ids
_SLUGS = {
    "text/html": "html",
    "text/turtle": "turtle",
    "application/rdf+xml": "rdfxml",
    "application/n-triples": "ntriples",
    "application/ld+json": "jsonld",
    None: "default",
}

DEFAULT_ADVERTISED: Tuple[str, ...] = ("text/html", "text/turtle")


@dataclass(frozen=True)
class MatrixCell:
    check_id: str
    target_iri: str
    accept: Optional[str]
    expected: str  # "html" or an RDF media type (for `accept=None`, the default Turtle)


def _version_key(version_iri: str) -> str:
    return version_iri.rstrip("#/").rsplit("/", 1)[-1]


def build_cells(
    ontology_iri: str,
    version_iris: Sequence[str],
    advertised: Sequence[str],
) -> List[MatrixCell]:
    cells = [
        MatrixCell("negotiation.ontology.html", ontology_iri, "text/html", "html"),
        MatrixCell("negotiation.ontology.turtle", ontology_iri, "text/turtle", "text/turtle"),
        MatrixCell(
            "negotiation.ontology.rdfxml",
            ontology_iri,
            "application/rdf+xml",
            "application/rdf+xml",
        ),
        MatrixCell("negotiation.ontology.default", ontology_iri, None, "text/turtle"),
    ]
    # advertised RDF formats beyond the standard probe set get their own cell
    for media in advertised:
        slug = _SLUGS.get(media)
        if slug in (None, "html", "turtle", "rdfxml", "default"):
            continue
        cells.append(MatrixCell(f"negotiation.ontology.{slug}", ontology_iri, media, media))
    for version_iri in sorted(set(version_iris)):
        key = _version_key(version_iri)
        cells.append(
            MatrixCell(f"negotiation.version.{key}.html", version_iri, "text/html", "html")
        )
        cells.append(
            MatrixCell(
                f"negotiation.version.{key}.turtle", version_iri, "text/turtle", "text/turtle"
            )
        )
    return cells


def _hop_summary(trace: NegotiationTrace) -> str:
    statuses = "->".join(str(h.status) for h in trace.hops)
    return f"{statuses} ending at {trace.final_url}"


def evaluate_cell(
    cell: MatrixCell,
    trace: NegotiationTrace,
    advertised: Sequence[str],
    direct_200_fail: bool = False,
) -> CheckResult:
    def result(status: CheckStatus, evidence: str) -> CheckResult:
        return CheckResult(
            cell.check_id,
            status,
            Severity.RECOMMENDED,
            evidence,
            REF_NEGOTIATION,
            values=tuple(f"{h.status} {h.url}" for h in trace.hops),
        )

    if trace.failure is not None:
        if trace.failure.startswith("offline:"):
            return result(CheckStatus.SKIPPED, trace.failure)
        return result(CheckStatus.FAIL, trace.failure)

    if trace.final_status == 406:
        if cell.accept is not None and cell.accept not in advertised:
            return result(
                CheckStatus.INFO,
                f"406 for unadvertised format {cell.accept} (deliberate refusal)",
            )
        return result(
            CheckStatus.FAIL, f"406 for advertised format {cell.accept}: {_hop_summary(trace)}"
        )

    if trace.final_status != 200:
        return result(CheckStatus.FAIL, f"unexpected final status: {_hop_summary(trace)}")

    if cell.expected == "html":
        content_ok = trace.body.outcome is BodyOutcome.HTML_DETECTED
        media_ok = content_ok
        describe = "HTML documentation"
    else:
        fmt = RdfFormat.from_media_type(cell.expected)
        content_ok = trace.body.outcome is BodyOutcome.PARSED and trace.body.format is fmt
        media_ok = trace.final_media_type == cell.expected
        describe = f"{cell.expected} serialization"

    if not content_ok:
        return result(
            CheckStatus.FAIL,
            f"final body is not the expected {describe} "
            f"({trace.body.outcome.value}{': ' + trace.body.detail if trace.body.detail else ''}); "
            + _hop_summary(trace),
        )
    if not media_ok:
        return result(
            CheckStatus.WARN,
            f"content parses but is served as {trace.final_media_type!r} instead of "
            f"{cell.expected}; {_hop_summary(trace)}",
        )
    if trace.saw_303():
        return result(CheckStatus.PASS, f"303 negotiation to {describe}: {_hop_summary(trace)}")
    if trace.saw_redirect():
        redirect_status = next(h.status for h in trace.hops if h.status != 200)
        return result(
            CheckStatus.WARN,
            f"correct content but redirected with {redirect_status} instead of 303; "
            + _hop_summary(trace),
        )
    status = CheckStatus.FAIL if direct_200_fail else CheckStatus.WARN
    return result(
        status,
        f"correct content served directly with 200 (no 303 indirection); "
        + _hop_summary(trace),
    )


def run_matrix(
    ontology_iri: str,
    version_iris: Sequence[str],
    transport: Transport,
    advertised: Optional[Sequence[str]] = None,
    timeout: float = 30.0,
    max_redirects: int = 10,
    concurrency: int = 4,
    direct_200_fail: bool = False,
) -> Tuple[List[CheckResult], Dict[str, NegotiationTrace]]:
    """Probe every cell (bounded concurrency) and judge each one.

    Results come back in cell order regardless of completion order.
    """
    advertised = tuple(advertised) if advertised else DEFAULT_ADVERTISED
    cells = build_cells(ontology_iri, version_iris, advertised)

    def run(cell: MatrixCell) -> NegotiationTrace:
        request = ProbeRequest(
            cell.target_iri, accept=cell.accept, max_redirects=max_redirects, timeout=timeout
        )
        return probe(request, transport)

    with ThreadPoolExecutor(max_workers=max(1, concurrency)) as pool:
        traces = list(pool.map(run, cells))

    by_cell = {cell.check_id: trace for cell, trace in zip(cells, traces)}
    results = [
        evaluate_cell(cell, trace, advertised, direct_200_fail)
        for cell, trace in zip(cells, traces)
    ]
    return results, by_cell


def check_negotiation_matrix(
    ontology_iri: str,
    version_iris: Sequence[str],
    transport: Transport,
    advertised: Optional[Sequence[str]] = None,
    **kwargs,
) -> List[CheckResult]:
    results, _ = run_matrix(ontology_iri, version_iris, transport, advertised, **kwargs)
    return results
