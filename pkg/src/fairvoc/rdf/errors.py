"""Typed errors raised by the RDF layer."""
from __future__ import annotations

from typing import Optional


class RdfError(Exception):
    """Base class for all RDF ingestion errors."""


class UndetectableFormat(RdfError):
    """No format hint was given and no sniffing heuristic fired."""


class InputTooLarge(RdfError):
    """Input exceeds the 64 MiB desk-scale cap."""


class RdfSyntaxError(RdfError):
    """Malformed document. line/col are 1-based where the format permits."""

    def __init__(self, message: str, line: Optional[int] = None, col: Optional[int] = None):
        self.line = line
        self.col = col
        where = ""
        if line is not None:
            where = f" at line {line}" + (f", col {col}" if col is not None else "")
        super().__init__(message + where)


class NoOntologyDeclaration(RdfError):
    """The graph declares no owl:Ontology with an IRI subject."""


class MultipleOntologyDeclarations(RdfError):
    """The graph declares more than one owl:Ontology subject."""


class SerializationError(RdfError):
    """The graph cannot be expressed in the requested serialization."""
