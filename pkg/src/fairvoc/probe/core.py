"""Single-URI content-negotiation probe with manual redirect tracing."""
from __future__ import annotations

import enum
from dataclasses import dataclass, field
from typing import Dict, Optional, Tuple
from urllib.parse import urldefrag, urljoin

from ..rdf import RdfFormat, RdfSyntaxError, parse_triples
from .transport import OfflineError, Transport, TransportError, TransportReply

REDIRECT_STATUSES = frozenset({301, 302, 303, 307, 308})


@dataclass(frozen=True)
class ProbeRequest:
    """target_iri fetched with the given Accept header (None = no header)."""

    target_iri: str
    accept: Optional[str] = None
    max_redirects: int = 10
    timeout: float = 30.0

    def __post_init__(self) -> None:
        if self.max_redirects < 1:
            raise ValueError("max_redirects must be >= 1")
        if self.timeout <= 0:
            raise ValueError("timeout must be positive")


@dataclass(frozen=True)
class Hop:
    url: str
    status: int


class BodyOutcome(str, enum.Enum):
    NOT_ATTEMPTED = "not-attempted"
    PARSED = "parsed"
    PARSE_FAILED = "parse-failed"
    HTML_DETECTED = "html-detected"


@dataclass(frozen=True)
class BodyClassification:
    outcome: BodyOutcome
    format: Optional[RdfFormat] = None
    detail: str = ""


@dataclass(frozen=True)
class NegotiationTrace:
    request: ProbeRequest
    hops: Tuple[Hop, ...]
    final_status: int
    final_media_type: Optional[str]
    body: BodyClassification
    failure: Optional[str] = None
    final_body: bytes = b""

    def saw_303(self) -> bool:
        return any(hop.status == 303 for hop in self.hops[:-1])

    def saw_redirect(self) -> bool:
        return any(hop.status in REDIRECT_STATUSES for hop in self.hops[:-1])

    @property
    def final_url(self) -> str:
        return self.hops[-1].url


def sniff_html(body: bytes) -> bool:
    head = body[:2048].lstrip().lower()
    return head.startswith(b"<!doctype html") or b"<html" in head


def classify_body(reply: TransportReply, accept: Optional[str]) -> BodyClassification:
    """Classify a final 200 body: RDF parse attempt per media type, HTML sniff."""
    media_type = reply.media_type
    looks_html = media_type == "text/html" or (
        media_type in (None, "application/xhtml+xml", "application/octet-stream", "text/plain")
        and sniff_html(reply.body)
    )
    if looks_html:
        return BodyClassification(BodyOutcome.HTML_DETECTED)

    fmt = RdfFormat.from_media_type(media_type) if media_type else None
    if fmt is None and accept:
        fmt = RdfFormat.from_media_type(accept)
    if fmt is None:
        if sniff_html(reply.body):
            return BodyClassification(BodyOutcome.HTML_DETECTED)
        return BodyClassification(
            BodyOutcome.PARSE_FAILED, detail=f"unrecognized media type {media_type!r}"
        )
    try:
        parse_triples(reply.body, fmt)
        return BodyClassification(BodyOutcome.PARSED, format=fmt)
    except (RdfSyntaxError, UnicodeDecodeError) as exc:
        return BodyClassification(
            BodyOutcome.PARSE_FAILED, format=fmt, detail=str(exc)
        )


def probe(request: ProbeRequest, transport: Transport) -> NegotiationTrace:
    """Fetch following redirects manually, recording every hop.

    Transport failures (timeout, refused, offline, replay miss) come back as
    trace-level failures, never exceptions.
    """
    headers: Dict[str, str] = {}
    if request.accept is not None:
        headers["Accept"] = request.accept

    url = urldefrag(request.target_iri)[0]
    hops = []
    visited = set()
    failure = None
    reply: Optional[TransportReply] = None

    while True:
        if (url, request.accept) in visited:
            failure = f"redirect loop detected at {url}"
            hops.append(Hop(url, 0))
            break
        visited.add((url, request.accept))
        try:
            reply = transport.send("GET", url, headers, request.timeout)
        except OfflineError as exc:
            failure = f"offline: {exc}"
            hops.append(Hop(url, 0))
            break
        except TransportError as exc:
            failure = f"{exc.__class__.__name__}: {exc}"
            hops.append(Hop(url, 0))
            break
        hops.append(Hop(url, reply.status))
        if reply.status in REDIRECT_STATUSES:
            location = reply.header("location")
            if not location:
                failure = f"{reply.status} redirect without a Location header"
                break
            if len(hops) > request.max_redirects:
                failure = f"too many redirects (> {request.max_redirects})"
                break
            url = urldefrag(urljoin(url, location))[0]
            continue
        break

    if failure is not None:
        return NegotiationTrace(
            request=request,
            hops=tuple(hops),
            final_status=hops[-1].status,
            final_media_type=None,
            body=BodyClassification(BodyOutcome.NOT_ATTEMPTED),
            failure=failure,
        )

    assert reply is not None
    if reply.status == 200:
        body = classify_body(reply, request.accept)
    else:
        body = BodyClassification(BodyOutcome.NOT_ATTEMPTED)
    return NegotiationTrace(
        request=request,
        hops=tuple(hops),
        final_status=reply.status,
        final_media_type=reply.media_type,
        body=body,
        final_body=reply.body,
    )
