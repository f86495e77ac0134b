"""RDF ingestion: parse ontology documents into a queryable model."""
from __future__ import annotations

from typing import List, Optional, Union

from .detect import detect_format
from .errors import (
    InputTooLarge,
    MultipleOntologyDeclarations,
    NoOntologyDeclaration,
    RdfError,
    RdfSyntaxError,
    SerializationError,
    UndetectableFormat,
)
from .jsonld import parse_jsonld
from .model import (
    KNOWN_ANNOTATION_PROPERTIES,
    MAX_INPUT_BYTES,
    OntologyModel,
    RdfFormat,
    TermDecl,
    TermKind,
    build_model,
    get_annotations,
)
from .ntriples import parse_ntriples
from .rdfxml import parse_rdfxml
from .serialize import serialize, serialize_triples
from .terms import (
    BIBO,
    DCTERMS,
    FOAF,
    OWL,
    RDF,
    RDFS,
    SW,
    VAEM,
    VANN,
    XSD,
    BlankNode,
    Iri,
    Literal,
    Namespace,
    Node,
    Subject,
    Triple,
    local_name,
    qname,
)
from .turtle import parse_turtle


def parse_triples(
    data: Union[bytes, str], fmt: RdfFormat, base: Optional[str] = None
) -> List[Triple]:
    """Syntax-level parse into raw triples, without ontology-header checks."""
    if isinstance(data, bytes):
        if len(data) > MAX_INPUT_BYTES:
            raise InputTooLarge(
                f"input is {len(data)} bytes; the limit is {MAX_INPUT_BYTES}"
            )
        text = data.decode("utf-8")
    else:
        text = data
    if fmt is RdfFormat.TURTLE:
        return parse_turtle(text, base=base)
    if fmt is RdfFormat.RDF_XML:
        return parse_rdfxml(text, base=base)
    if fmt is RdfFormat.NTRIPLES:
        return parse_ntriples(text)
    return parse_jsonld(text)


def parse_ontology(
    data: Union[bytes, str], fmt: RdfFormat, base: Optional[str] = None
) -> OntologyModel:
    """Parse a document and build the ontology model.

    Raises RdfSyntaxError, NoOntologyDeclaration, MultipleOntologyDeclarations
    or InputTooLarge; never returns a model without an ontology IRI.
    """
    return build_model(parse_triples(data, fmt, base=base))


__all__ = [
    "BIBO",
    "BlankNode",
    "DCTERMS",
    "FOAF",
    "InputTooLarge",
    "Iri",
    "KNOWN_ANNOTATION_PROPERTIES",
    "Literal",
    "MAX_INPUT_BYTES",
    "MultipleOntologyDeclarations",
    "Namespace",
    "NoOntologyDeclaration",
    "Node",
    "OntologyModel",
    "OWL",
    "RDF",
    "RDFS",
    "RdfError",
    "RdfFormat",
    "RdfSyntaxError",
    "SerializationError",
    "SW",
    "Subject",
    "TermDecl",
    "TermKind",
    "Triple",
    "UndetectableFormat",
    "VAEM",
    "VANN",
    "XSD",
    "build_model",
    "detect_format",
    "get_annotations",
    "local_name",
    "parse_ontology",
    "parse_triples",
    "qname",
    "serialize",
    "serialize_triples",
]
