"""Ontology-level metadata extraction: the 23-row recommended/optional table."""
from __future__ import annotations

from dataclasses import dataclass, field
from typing import Dict, Iterable, Mapping, Optional, Tuple

from ..rdf import (
    BIBO,
    DCTERMS,
    FOAF,
    OWL,
    RDF,
    RDFS,
    SW,
    VANN,
    BlankNode,
    Iri,
    Literal,
    Node,
    OntologyModel,
)

_SCHEMA_BASES = ("http://schema.org/", "https://schema.org/")


def _schema(name: str) -> Tuple[str, ...]:
    return tuple(base + name for base in _SCHEMA_BASES)


@dataclass(frozen=True)
class FieldSpec:
    """One metadata-table row: accepted properties, preferred first."""

    name: str
    label: str
    predicates: Tuple[str, ...]
    recommended: bool
    rationale: str
    # spellings that work but should nudge the author to the standard IRI
    nonstandard: Tuple[str, ...] = ()


#: The ontology-metadata table, recommended rows first, in table order.
ONTOLOGY_FIELDS: Tuple[FieldSpec, ...] = (
    FieldSpec("license", "License", (DCTERMS.license.value, *_schema("license")), True, "usage conditions"),
    FieldSpec("creator", "Creator", (DCTERMS.creator.value, *_schema("creator")), True, "provenance and attribution"),
    FieldSpec("contributor", "Contributor", (DCTERMS.contributor.value, *_schema("contributor")), True, "provenance and attribution"),
    FieldSpec("created", "Creation date", (DCTERMS.created.value, *_schema("dateCreated")), True, "provenance"),
    FieldSpec("prior_version", "Previous version", (OWL.priorVersion.value,), True, "provenance and comparison"),
    FieldSpec("namespace_uri", "Namespace URI", (VANN.preferredNamespaceUri.value,), True, "identifying the ontology"),
    FieldSpec("version_iri", "Version IRI", (OWL.versionIRI.value,), True, "versioning"),
    FieldSpec("prefix", "Prefix", (VANN.preferredNamespacePrefix.value,), True, "identifying the ontology"),
    FieldSpec("title", "Title", (DCTERMS.title.value, *_schema("name")), True, "understanding"),
    FieldSpec("description", "Description", (DCTERMS.description.value, *_schema("description")), True, "understanding"),
    FieldSpec("citation", "Citation", (DCTERMS.bibliographicCitation.value, *_schema("citation")), True, "credit"),
    FieldSpec("abstract", "Abstract", (DCTERMS.abstract.value, *_schema("abstract")), False, "additional information"),
    FieldSpec("see_also", "See also", (RDFS.seeAlso.value,), False, "additional information"),
    FieldSpec("status", "Status", (SW.status.value,), False, "maturity information"),
    FieldSpec(
        "backward_compat",
        "Backward compatibility",
        (OWL.backwardCompatibility.value, OWL.backwardCompatibleWith.value),
        False,
        "version compatibility",
        nonstandard=(OWL.backwardCompatibility.value,),
    ),
    FieldSpec("incompatible_with", "Incompatibility", (OWL.incompatibleWith.value,), False, "version compatibility"),
    FieldSpec("modified", "Modification date", (DCTERMS.modified.value, *_schema("dateModified")), False, "provenance and timeliness"),
    FieldSpec("issued", "Issued date", (DCTERMS.issued.value, *_schema("datePublished")), False, "provenance and timeliness"),
    FieldSpec("source", "Source", (DCTERMS.source.value,), False, "provenance"),
    FieldSpec(
        "publisher",
        "Publisher",
        (DCTERMS.published.value, DCTERMS.publisher.value, *_schema("publisher")),
        False,
        "provenance",
        nonstandard=(DCTERMS.published.value,),
    ),
    FieldSpec("doi", "DOI", (BIBO.doi.value,), False, "bibliographic information"),
    FieldSpec("logo", "Logo", (FOAF.logo.value,), False, "identifying the ontology"),
    FieldSpec("diagram", "Diagram", (FOAF.depiction.value,), False, "visual documentation"),
)

VERSION_INFO_SPEC = FieldSpec(
    "version_info", "Version info", (OWL.versionInfo.value,), True, "versioning"
)

RECOMMENDED_FIELDS: Tuple[FieldSpec, ...] = tuple(f for f in ONTOLOGY_FIELDS if f.recommended)
OPTIONAL_FIELDS: Tuple[FieldSpec, ...] = tuple(f for f in ONTOLOGY_FIELDS if not f.recommended)

_STANDARD_FOR = {
    OWL.backwardCompatibility.value: OWL.backwardCompatibleWith.value,
    DCTERMS.published.value: DCTERMS.publisher.value,
}


@dataclass(frozen=True)
class MetadataValue:
    predicate: str
    value: str
    language: Optional[str] = None
    is_iri: bool = False


@dataclass(frozen=True)
class OntologyMetadata:
    """Table-row values found on the ontology IRI, with their source triples."""

    ontology_iri: str
    fields: Mapping[str, Tuple[MetadataValue, ...]]
    unknown_annotations: Tuple[str, ...] = field(default_factory=tuple)

    def get(self, name: str) -> Tuple[MetadataValue, ...]:
        return self.fields.get(name, ())

    def has(self, name: str) -> bool:
        return bool(self.fields.get(name))

    def first(self, name: str) -> Optional[str]:
        values = self.get(name)
        return values[0].value if values else None

    @property
    def title(self) -> Optional[str]:
        return self.first("title")

    @property
    def prefix(self) -> Optional[str]:
        return self.first("prefix")

    @property
    def namespace_uri(self) -> Optional[str]:
        return self.first("namespace_uri")

    @property
    def version_iri(self) -> Optional[str]:
        return self.first("version_iri")

    @property
    def version_info(self) -> Optional[str]:
        return self.first("version_info")

    @property
    def prior_version(self) -> Optional[str]:
        return self.first("prior_version")

    def populated_count(self) -> int:
        return sum(1 for values in self.fields.values() if values)

    def nonstandard_spellings(self) -> Dict[str, Tuple[str, str]]:
        """Fields present only under a deprecated spelling → (found, standard)."""
        out: Dict[str, Tuple[str, str]] = {}
        for spec in ONTOLOGY_FIELDS:
            if not spec.nonstandard:
                continue
            values = self.get(spec.name)
            if not values:
                continue
            used = {v.predicate for v in values}
            bad = used & set(spec.nonstandard)
            if bad and not (used - set(spec.nonstandard)):
                found = sorted(bad)[0]
                out[spec.name] = (found, _STANDARD_FOR[found])
        return out


def _display(node: Node) -> MetadataValue:
    if isinstance(node, Iri):
        return MetadataValue(predicate="", value=node.value, is_iri=True)
    if isinstance(node, BlankNode):
        return MetadataValue(predicate="", value=str(node), is_iri=False)
    assert isinstance(node, Literal)
    return MetadataValue(predicate="", value=node.lexical, language=node.language)


def extract_metadata(
    model: OntologyModel,
    extra_aliases: Optional[Mapping[str, Iterable[str]]] = None,
) -> OntologyMetadata:
    """Map annotations on the ontology IRI onto the metadata-table fields.

    extra_aliases extends a field's accepted property IRIs (the shipped
    defaults already accept the common schema.org equivalents). Annotations
    that match no field are kept as unknown_annotations.
    """
    subject = Iri(model.ontology_iri)
    predicate_to_field: Dict[str, str] = {}
    all_specs = ONTOLOGY_FIELDS + (VERSION_INFO_SPEC,)
    for spec in all_specs:
        accepted = list(spec.predicates)
        if extra_aliases and spec.name in extra_aliases:
            accepted.extend(extra_aliases[spec.name])
        for pred in accepted:
            predicate_to_field.setdefault(pred, spec.name)

    collected: Dict[str, list] = {spec.name: [] for spec in all_specs}
    unknown = set()
    for s, p, o in sorted(model.triples, key=lambda t: str(t)):
        if s != subject or p == RDF.type:
            continue
        field_name = predicate_to_field.get(p.value)
        if field_name is None:
            unknown.add(p.value)
            continue
        value = _display(o)
        collected[field_name].append(
            MetadataValue(p.value, value.value, value.language, value.is_iri)
        )
    return OntologyMetadata(
        ontology_iri=model.ontology_iri,
        fields={
            name: tuple(sorted(vs, key=lambda v: (v.value, v.predicate)))
            for name, vs in collected.items()
        },
        unknown_annotations=tuple(sorted(unknown)),
    )
