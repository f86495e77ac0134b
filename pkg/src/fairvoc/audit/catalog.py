"""Machine-readable catalog of every check the toolkit can emit."""
from __future__ import annotations

from dataclasses import dataclass
from typing import Optional, Tuple

from .checks import (
    REF_HASH_SLASH,
    REF_META_ONTOLOGY,
    REF_META_TERMS,
    REF_NAME_PREFIX,
    REF_OPAQUE,
    REF_PERMANENT,
    REF_VERSIONING,
)
from .metadata import ONTOLOGY_FIELDS
from .result import Severity

REF_NEGOTIATION = "publication/content-negotiation"
REF_FINDABILITY = "publication/findability"


@dataclass(frozen=True)
class CatalogEntry:
    """check_id may contain one '*' for families instantiated per probe target."""

    check_id: str
    description: str
    severity: Severity
    ref: str

    def matches(self, check_id: str) -> bool:
        if "*" in self.check_id:
            head, _, tail = self.check_id.partition("*")
            return check_id.startswith(head) and check_id.endswith(tail)
        return check_id == self.check_id


def _metadata_entries() -> Tuple[CatalogEntry, ...]:
    entries = []
    for spec in ONTOLOGY_FIELDS:
        severity = Severity.RECOMMENDED if spec.recommended else Severity.OPTIONAL
        entries.append(
            CatalogEntry(
                f"metadata.{spec.name}",
                f"{spec.label} declared on the ontology ({spec.rationale})",
                severity,
                REF_META_ONTOLOGY,
            )
        )
    return tuple(entries)


CATALOG: Tuple[CatalogEntry, ...] = _metadata_entries() + (
    CatalogEntry(
        "metadata.spelling.*",
        "Field declared only under a nonstandard property spelling",
        Severity.INFORMATIONAL,
        REF_META_ONTOLOGY,
    ),
    CatalogEntry(
        "versioning.version_iri_present",
        "Each release identified by its own owl:versionIRI",
        Severity.RECOMMENDED,
        REF_VERSIONING,
    ),
    CatalogEntry(
        "versioning.semver_version_info",
        "owl:versionInfo follows the X.Y.Z semantic-versioning shape",
        Severity.RECOMMENDED,
        REF_VERSIONING,
    ),
    CatalogEntry(
        "versioning.no_version_in_namespace",
        "Ontology URI stays version-independent",
        Severity.RECOMMENDED,
        REF_VERSIONING,
    ),
    CatalogEntry(
        "versioning.version_iri_matches_info",
        "owl:versionIRI ends with the owl:versionInfo text",
        Severity.RECOMMENDED,
        REF_VERSIONING,
    ),
    CatalogEntry(
        "uri.termination",
        "Namespace ends in '#' or '/'",
        Severity.RECOMMENDED,
        REF_HASH_SLASH,
    ),
    CatalogEntry(
        "uri.permanent_host",
        "Ontology URI served from a permanent-URI service",
        Severity.RECOMMENDED,
        REF_PERMANENT,
    ),
    CatalogEntry(
        "uri.opaque_terms",
        "Share of terms using opaque identifiers (informational)",
        Severity.INFORMATIONAL,
        REF_OPAQUE,
    ),
    CatalogEntry(
        "prefix.simple",
        "Declared prefix is short and simple",
        Severity.RECOMMENDED,
        REF_NAME_PREFIX,
    ),
    CatalogEntry(
        "prefix.collision_note",
        "Reminder to check prefix registries for collisions",
        Severity.INFORMATIONAL,
        REF_NAME_PREFIX,
    ),
    CatalogEntry(
        "terms.labels",
        "Every term carries a human-readable label",
        Severity.RECOMMENDED,
        REF_META_TERMS,
    ),
    CatalogEntry(
        "terms.comments",
        "Every term carries a definition",
        Severity.RECOMMENDED,
        REF_META_TERMS,
    ),
    CatalogEntry(
        "terms.example",
        "Terms illustrated with usage examples",
        Severity.OPTIONAL,
        REF_META_TERMS,
    ),
    CatalogEntry(
        "terms.status",
        "Terms annotated with their maturity status",
        Severity.OPTIONAL,
        REF_META_TERMS,
    ),
    CatalogEntry(
        "terms.rationale",
        "Terms annotated with the rationale for their inclusion",
        Severity.OPTIONAL,
        REF_META_TERMS,
    ),
    CatalogEntry(
        "terms.source",
        "Terms annotated with their source material",
        Severity.OPTIONAL,
        REF_META_TERMS,
    ),
    CatalogEntry(
        "negotiation.ontology.html",
        "Ontology URI 303-redirects HTML requests to the documentation",
        Severity.RECOMMENDED,
        REF_NEGOTIATION,
    ),
    CatalogEntry(
        "negotiation.ontology.turtle",
        "Ontology URI 303-redirects Turtle requests to a parseable serialization",
        Severity.RECOMMENDED,
        REF_NEGOTIATION,
    ),
    CatalogEntry(
        "negotiation.ontology.rdfxml",
        "Ontology URI serves RDF/XML or answers 406 if unsupported",
        Severity.RECOMMENDED,
        REF_NEGOTIATION,
    ),
    CatalogEntry(
        "negotiation.ontology.ntriples",
        "Ontology URI serves N-Triples or answers 406 if unsupported",
        Severity.RECOMMENDED,
        REF_NEGOTIATION,
    ),
    CatalogEntry(
        "negotiation.ontology.jsonld",
        "Ontology URI serves JSON-LD or answers 406 if unsupported",
        Severity.RECOMMENDED,
        REF_NEGOTIATION,
    ),
    CatalogEntry(
        "negotiation.ontology.default",
        "Requests without an Accept header get the default Turtle response",
        Severity.RECOMMENDED,
        REF_NEGOTIATION,
    ),
    CatalogEntry(
        "negotiation.version.*.html",
        "Version IRIs redirect to the matching release documentation",
        Severity.RECOMMENDED,
        REF_NEGOTIATION,
    ),
    CatalogEntry(
        "negotiation.version.*.turtle",
        "Version IRIs redirect to the matching release serialization",
        Severity.RECOMMENDED,
        REF_NEGOTIATION,
    ),
    CatalogEntry(
        "findable.prefix_registered",
        "Prefix registered (and not colliding) in the prefix registry",
        Severity.RECOMMENDED,
        REF_FINDABILITY,
    ),
    CatalogEntry(
        "findable.lov_registered",
        "Namespace registered in a vocabulary metadata registry",
        Severity.OPTIONAL,
        REF_FINDABILITY,
    ),
    CatalogEntry(
        "findable.jsonld_annotations",
        "Documentation page embeds machine-readable JSON-LD annotations",
        Severity.RECOMMENDED,
        REF_FINDABILITY,
    ),
)


def find_entry(check_id: str) -> Optional[CatalogEntry]:
    exact = [e for e in CATALOG if not e.check_id.endswith("*") and e.matches(check_id)]
    if exact:
        return exact[0]
    for entry in CATALOG:
        if entry.matches(check_id):
            return entry
    return None
