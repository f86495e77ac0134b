"""Format detection: hints win, then leading-token sniffing, then trial parses."""
from __future__ import annotations

from typing import Optional

from .errors import RdfSyntaxError, UndetectableFormat
from .model import RdfFormat
from .ntriples import try_parse_ntriples

_EXTENSION_HINTS = {
    ".ttl": RdfFormat.TURTLE,
    ".turtle": RdfFormat.TURTLE,
    ".n3": RdfFormat.TURTLE,
    ".rdf": RdfFormat.RDF_XML,
    ".owl": RdfFormat.RDF_XML,
    ".xml": RdfFormat.RDF_XML,
    ".nt": RdfFormat.NTRIPLES,
    ".ntriples": RdfFormat.NTRIPLES,
    ".jsonld": RdfFormat.JSON_LD,
    ".json": RdfFormat.JSON_LD,
}


def _from_hint(hint: str) -> Optional[RdfFormat]:
    hint = hint.strip().lower()
    if "/" in hint and not hint.startswith((".", "/")):
        return RdfFormat.from_media_type(hint)
    for ext, fmt in _EXTENSION_HINTS.items():
        if hint.endswith(ext):
            return fmt
    return None


def _decode_head(data: bytes) -> str:
    head = data[:4096]
    if head.startswith(b"\xef\xbb\xbf"):
        head = head[3:]
    return head.decode("utf-8", errors="replace")


def detect_format(data: bytes, hint: Optional[str] = None) -> RdfFormat:
    """Most probable serialization for the given bytes.

    The hint (a filename or media type) wins over sniffing. Raises
    UndetectableFormat when no heuristic fires and no hint was given.
    """
    if not data:
        raise UndetectableFormat("empty input")
    if hint:
        fmt = _from_hint(hint)
        if fmt is not None:
            return fmt

    text = _decode_head(data)
    significant = ""
    for line in text.splitlines():
        stripped = line.strip()
        if stripped and not stripped.startswith("#"):
            significant = stripped
            break

    if significant.startswith("<?xml") or significant.startswith("<rdf:RDF"):
        return RdfFormat.RDF_XML
    if significant.startswith(("{", "[")):
        return RdfFormat.JSON_LD
    lowered = significant.lower()
    if lowered.startswith(("@prefix", "@base", "prefix ", "base ")):
        return RdfFormat.TURTLE

    full_text = data.decode("utf-8", errors="replace")
    if try_parse_ntriples(full_text) is not None:
        return RdfFormat.NTRIPLES
    try:
        from .turtle import parse_turtle

        parse_turtle(full_text)
        return RdfFormat.TURTLE
    except RdfSyntaxError:
        pass
    raise UndetectableFormat("no format heuristic matched and no usable hint given")
