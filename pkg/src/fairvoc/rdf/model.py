"""The queryable ontology model every other module consumes."""
from __future__ import annotations

import enum
from dataclasses import dataclass, field
from typing import Dict, Iterable, List, Mapping, Optional, Tuple

from .errors import (
    InputTooLarge,
    MultipleOntologyDeclarations,
    NoOntologyDeclaration,
)
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
    BlankNode,
    Iri,
    Literal,
    Node,
    Subject,
    Triple,
    term_sort_key,
    triple_sort_key,
)

MAX_INPUT_BYTES = 64 * 1024 * 1024


class RdfFormat(enum.Enum):
    TURTLE = "text/turtle"
    RDF_XML = "application/rdf+xml"
    NTRIPLES = "application/n-triples"
    JSON_LD = "application/ld+json"

    @property
    def media_type(self) -> str:
        return self.value

    @property
    def extension(self) -> str:
        return _EXTENSIONS[self]

    @classmethod
    def from_media_type(cls, media_type: str) -> Optional["RdfFormat"]:
        bare = media_type.split(";")[0].strip().lower()
        return _MEDIA_TYPES.get(bare)


_EXTENSIONS = {
    RdfFormat.TURTLE: ".ttl",
    RdfFormat.RDF_XML: ".rdf",
    RdfFormat.NTRIPLES: ".nt",
    RdfFormat.JSON_LD: ".jsonld",
}

_MEDIA_TYPES: Dict[str, RdfFormat] = {fmt.value: fmt for fmt in RdfFormat}
# common aliases seen in the wild
_MEDIA_TYPES.update(
    {
        "application/x-turtle": RdfFormat.TURTLE,
        "text/n3": RdfFormat.TURTLE,
        "application/xml": RdfFormat.RDF_XML,
        "text/plain": RdfFormat.NTRIPLES,
        "application/json": RdfFormat.JSON_LD,
    }
)


class TermKind(enum.Enum):
    CLASS = "class"
    OBJECT_PROPERTY = "object-property"
    DATATYPE_PROPERTY = "datatype-property"
    ANNOTATION_PROPERTY = "annotation-property"
    NAMED_INDIVIDUAL = "named-individual"


_KIND_BY_TYPE = {
    OWL.Class.value: TermKind.CLASS,
    RDFS.Class.value: TermKind.CLASS,
    OWL.ObjectProperty.value: TermKind.OBJECT_PROPERTY,
    OWL.DatatypeProperty.value: TermKind.DATATYPE_PROPERTY,
    OWL.AnnotationProperty.value: TermKind.ANNOTATION_PROPERTY,
    OWL.NamedIndividual.value: TermKind.NAMED_INDIVIDUAL,
}

#: Annotation properties recognized without an explicit declaration.
KNOWN_ANNOTATION_PROPERTIES = frozenset(
    iri.value
    for iri in (
        RDFS.label,
        RDFS.comment,
        RDFS.seeAlso,
        RDFS.isDefinedBy,
        VANN.example,
        VANN.preferredNamespacePrefix,
        VANN.preferredNamespaceUri,
        VAEM.rationale,
        SW.term_status,
        SW.status,
        DCTERMS.source,
        DCTERMS.license,
        DCTERMS.creator,
        DCTERMS.contributor,
        DCTERMS.created,
        DCTERMS.title,
        DCTERMS.description,
        DCTERMS.bibliographicCitation,
        DCTERMS.abstract,
        DCTERMS.modified,
        DCTERMS.issued,
        DCTERMS.publisher,
        DCTERMS.published,
        BIBO.doi,
        FOAF.logo,
        FOAF.depiction,
        OWL.versionInfo,
        OWL.priorVersion,
        OWL.backwardCompatibleWith,
        OWL.backwardCompatibility,
        OWL.incompatibleWith,
    )
)


@dataclass(frozen=True)
class TermDecl:
    iri: str
    kinds: Tuple[TermKind, ...]
    annotations: Mapping[str, Tuple[Node, ...]] = field(default_factory=dict)

    def annotation_values(self, predicate: str) -> Tuple[Node, ...]:
        return self.annotations.get(predicate, ())


@dataclass(frozen=True)
class OntologyModel:
    """Immutable graph view centred on one owl:Ontology declaration."""

    ontology_iri: str
    triples: frozenset[Triple]
    declared_terms: Tuple[TermDecl, ...]

    def objects(self, subject: Subject, predicate: Iri) -> Tuple[Node, ...]:
        found = [o for s, p, o in self.triples if s == subject and p == predicate]
        return tuple(sorted(found, key=term_sort_key))

    def subjects(self, predicate: Iri, obj: Node) -> Tuple[Subject, ...]:
        found = {s for s, p, o in self.triples if p == predicate and o == obj}
        return tuple(sorted(found, key=term_sort_key))

    def ontology_annotations(self) -> Tuple[Triple, ...]:
        subject = Iri(self.ontology_iri)
        return tuple(
            sorted((t for t in self.triples if t[0] == subject), key=triple_sort_key)
        )

    def term(self, iri: str) -> Optional[TermDecl]:
        for decl in self.declared_terms:
            if decl.iri == iri:
                return decl
        return None

    def sorted_triples(self) -> Tuple[Triple, ...]:
        return tuple(sorted(self.triples, key=triple_sort_key))


def _term_annotations(
    triples: Iterable[Triple], subject: Iri, declared_annotation_props: frozenset[str]
) -> Dict[str, Tuple[Node, ...]]:
    collected: Dict[str, List[Node]] = {}
    for s, p, o in triples:
        if s != subject or p == RDF.type:
            continue
        is_annotation = (
            p.value in KNOWN_ANNOTATION_PROPERTIES
            or p.value in declared_annotation_props
            or isinstance(o, Literal)
        )
        if is_annotation:
            collected.setdefault(p.value, []).append(o)
    return {
        pred: tuple(sorted(values, key=term_sort_key))
        for pred, values in sorted(collected.items())
    }


def build_model(triples: Iterable[Triple]) -> OntologyModel:
    """Deduplicate, locate the single ontology header, and index terms."""
    triple_set = frozenset(triples)

    ontology_subjects = sorted(
        {s for s, p, o in triple_set if p == RDF.type and o == OWL.Ontology},
        key=term_sort_key,
    )
    iri_subjects = [s for s in ontology_subjects if isinstance(s, Iri)]
    if len(ontology_subjects) > 1:
        raise MultipleOntologyDeclarations(
            "multiple owl:Ontology declarations: "
            + ", ".join(str(s) for s in ontology_subjects)
        )
    if not iri_subjects:
        if ontology_subjects:
            raise NoOntologyDeclaration(
                "the only owl:Ontology header is a blank node; a resolvable "
                "ontology IRI is required"
            )
        raise NoOntologyDeclaration("no owl:Ontology declaration found")
    ontology_iri = iri_subjects[0].value

    declared_annotation_props = frozenset(
        s.value
        for s, p, o in triple_set
        if p == RDF.type and o == OWL.AnnotationProperty and isinstance(s, Iri)
    )

    kinds_by_term: Dict[str, set] = {}
    class_iris: set[str] = set()
    for s, p, o in triple_set:
        if p != RDF.type or not isinstance(s, Iri) or not isinstance(o, Iri):
            continue
        kind = _KIND_BY_TYPE.get(o.value)
        if kind is not None and s.value != ontology_iri:
            kinds_by_term.setdefault(s.value, set()).add(kind)
            if kind is TermKind.CLASS:
                class_iris.add(s.value)

    # individuals typed by a class declared in this very model
    for s, p, o in triple_set:
        if (
            p == RDF.type
            and isinstance(s, Iri)
            and isinstance(o, Iri)
            and o.value in class_iris
            and s.value != ontology_iri
        ):
            existing = kinds_by_term.setdefault(s.value, set())
            if not existing & {
                TermKind.CLASS,
                TermKind.OBJECT_PROPERTY,
                TermKind.DATATYPE_PROPERTY,
                TermKind.ANNOTATION_PROPERTY,
            }:
                existing.add(TermKind.NAMED_INDIVIDUAL)

    kind_order = list(TermKind)
    declared = tuple(
        TermDecl(
            iri=term_iri,
            kinds=tuple(sorted(kinds, key=kind_order.index)),
            annotations=_term_annotations(triple_set, Iri(term_iri), declared_annotation_props),
        )
        for term_iri, kinds in sorted(kinds_by_term.items())
    )
    return OntologyModel(ontology_iri=ontology_iri, triples=triple_set, declared_terms=declared)


def replace_triples(model: OntologyModel, triples: Iterable[Triple]) -> OntologyModel:
    """Rebuild a model from an edited triple set (validation re-runs)."""
    return build_model(triples)


def get_annotations(model: OntologyModel, subject: str, predicate: str) -> List[Node]:
    """All objects of (subject, predicate, _), lexically sorted. Empty on no match."""
    return list(model.objects(Iri(subject), Iri(predicate)))
