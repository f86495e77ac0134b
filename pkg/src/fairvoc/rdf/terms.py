"""RDF term model: IRIs, blank nodes, literals, and well-known namespaces."""
from __future__ import annotations

from dataclasses import dataclass
from typing import Optional, Tuple, Union

XSD_STRING = "http://www.w3.org/2001/XMLSchema#string"


@dataclass(frozen=True)
class Iri:
    value: str

    def __str__(self) -> str:
        return self.value


@dataclass(frozen=True)
class BlankNode:
    label: str

    def __str__(self) -> str:
        return "_:" + self.label


@dataclass(frozen=True)
class Literal:
    """A literal term.

    Plain literals carry neither language nor datatype (xsd:string is
    normalized away); language-tagged literals have language set and no
    datatype; typed literals the reverse.
    """

    lexical: str
    language: Optional[str] = None
    datatype: Optional[str] = None

    def __post_init__(self) -> None:
        # language tags compare case-insensitively; store them lowercased
        if self.language is not None:
            object.__setattr__(self, "language", self.language.lower())
            object.__setattr__(self, "datatype", None)
        elif self.datatype == XSD_STRING:
            object.__setattr__(self, "datatype", None)

    def __str__(self) -> str:
        if self.language:
            return f'"{self.lexical}"@{self.language}'
        if self.datatype:
            return f'"{self.lexical}"^^<{self.datatype}>'
        return f'"{self.lexical}"'


Subject = Union[Iri, BlankNode]
Node = Union[Iri, BlankNode, Literal]
Triple = Tuple[Subject, Iri, Node]


def term_sort_key(term: Node) -> tuple:
    """Stable ordering: IRIs, then blank nodes, then literals, each lexical."""
    if isinstance(term, Iri):
        return (0, term.value, "", "")
    if isinstance(term, BlankNode):
        return (1, term.label, "", "")
    return (2, term.lexical, term.language or "", term.datatype or "")


def triple_sort_key(triple: Triple) -> tuple:
    s, p, o = triple
    return (term_sort_key(s), p.value, term_sort_key(o))


def local_name(iri: str) -> str:
    """The portion after the last '#' or '/' (the term's local name)."""
    trimmed = iri.rstrip("#/")
    for sep in ("#", "/"):
        if sep in trimmed:
            trimmed = trimmed.rsplit(sep, 1)[1]
    return trimmed or iri


class Namespace:
    """Builds Iri terms by attribute or item access, rdflib-style."""

    def __init__(self, base: str):
        self._base = base

    @property
    def base(self) -> str:
        return self._base

    def __getattr__(self, name: str) -> Iri:
        if name.startswith("_"):
            raise AttributeError(name)
        return Iri(self._base + name)

    def __getitem__(self, name: str) -> Iri:
        return Iri(self._base + name)

    def __contains__(self, iri: object) -> bool:
        value = iri.value if isinstance(iri, Iri) else str(iri)
        return value.startswith(self._base)


RDF = Namespace("http://www.w3.org/1999/02/22-rdf-syntax-ns#")
RDFS = Namespace("http://www.w3.org/2000/01/rdf-schema#")
OWL = Namespace("http://www.w3.org/2002/07/owl#")
XSD = Namespace("http://www.w3.org/2001/XMLSchema#")
DCTERMS = Namespace("http://purl.org/dc/terms/")
VANN = Namespace("http://purl.org/vocab/vann/")
FOAF = Namespace("http://xmlns.com/foaf/0.1/")
BIBO = Namespace("http://purl.org/ontology/bibo/")
VAEM = Namespace("http://www.linkedmodel.org/schema/vaem#")
SW = Namespace("http://www.w3.org/2003/06/sw-vocab-status/ns#")
SCHEMA = Namespace("https://schema.org/")
SCHEMA_HTTP = Namespace("http://schema.org/")

#: Prefixes used when serializing Turtle and for qname display.
WELL_KNOWN_PREFIXES: Tuple[Tuple[str, str], ...] = (
    ("rdf", RDF.base),
    ("rdfs", RDFS.base),
    ("owl", OWL.base),
    ("xsd", XSD.base),
    ("dcterms", DCTERMS.base),
    ("vann", VANN.base),
    ("foaf", FOAF.base),
    ("bibo", BIBO.base),
    ("vaem", VAEM.base),
    ("sw", SW.base),
    ("schema", SCHEMA_HTTP.base),
)


def qname(iri: str) -> str:
    """Compact display form using the well-known prefixes, else the local name."""
    for prefix, base in WELL_KNOWN_PREFIXES:
        if iri.startswith(base) and len(iri) > len(base):
            return f"{prefix}:{iri[len(base):]}"
    return local_name(iri)
