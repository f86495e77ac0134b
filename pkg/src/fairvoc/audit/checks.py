"""URI-design and metadata-completeness checks."""
from __future__ import annotations

import enum
import re
from dataclasses import dataclass
from typing import Dict, List, Mapping, Optional, Tuple
from urllib.parse import urlsplit

from ..rdf import DCTERMS, RDFS, SW, VAEM, VANN, Iri, Literal, OntologyModel, qname
from .metadata import (
    OPTIONAL_FIELDS,
    RECOMMENDED_FIELDS,
    FieldSpec,
    OntologyMetadata,
)
from .result import CheckResult, CheckStatus, Severity
from .semver import MalformedVersion, is_semver, parse_semver

REF_META_ONTOLOGY = "metadata-table/ontology"
REF_META_TERMS = "metadata-table/terms"
REF_VERSIONING = "uri-design/versioning"
REF_NAME_PREFIX = "uri-design/name-and-prefix"
REF_HASH_SLASH = "uri-design/hash-vs-slash"
REF_OPAQUE = "uri-design/opaque-uris"
REF_PERMANENT = "uri-design/permanent-uris"


class InvalidIri(ValueError):
    """Not an absolute IRI."""


# --- metadata-table completeness -------------------------------------------


def _field_result(spec: FieldSpec, meta: OntologyMetadata) -> CheckResult:
    check_id = f"metadata.{spec.name}"
    severity = Severity.RECOMMENDED if spec.recommended else Severity.OPTIONAL
    values = meta.get(spec.name)
    if values:
        shown = tuple(v.value for v in values)
        return CheckResult(
            check_id,
            CheckStatus.PASS,
            severity,
            f"{spec.label} present ({qname(values[0].predicate)}): " + "; ".join(shown),
            REF_META_ONTOLOGY,
            values=shown,
        )
    preferred = qname(spec.predicates[0])
    if spec.recommended:
        return CheckResult(
            check_id,
            CheckStatus.FAIL,
            severity,
            f"{spec.label} missing: add {preferred} ({spec.rationale})",
            REF_META_ONTOLOGY,
        )
    return CheckResult(
        check_id,
        CheckStatus.INFO,
        severity,
        f"{spec.label} not declared; {preferred} would add {spec.rationale}",
        REF_META_ONTOLOGY,
    )


def _prior_version_result(spec: FieldSpec, meta: OntologyMetadata) -> CheckResult:
    if meta.has("prior_version"):
        return _field_result(spec, meta)
    info = meta.version_info
    if info is not None:
        try:
            version = parse_semver(info)
        except MalformedVersion:
            version = None
        if version is not None:
            if version.is_major_release():
                return CheckResult(
                    "metadata.prior_version",
                    CheckStatus.WARN,
                    Severity.RECOMMENDED,
                    f"No owl:priorVersion, but {version} is a first major release "
                    "(x.0.0) and may have no predecessor",
                    REF_META_ONTOLOGY,
                )
            return CheckResult(
                "metadata.prior_version",
                CheckStatus.FAIL,
                Severity.RECOMMENDED,
                f"owl:priorVersion missing although version {version} implies "
                "an earlier release",
                REF_META_ONTOLOGY,
            )
    return CheckResult(
        "metadata.prior_version",
        CheckStatus.WARN,
        Severity.RECOMMENDED,
        "owl:priorVersion missing and no parseable version info to tell whether "
        "this is a first release",
        REF_META_ONTOLOGY,
    )


def check_recommended_metadata(meta: OntologyMetadata) -> List[CheckResult]:
    """One result per recommended metadata-table row (11 in total)."""
    results = []
    for spec in RECOMMENDED_FIELDS:
        if spec.name == "prior_version":
            results.append(_prior_version_result(spec, meta))
        else:
            results.append(_field_result(spec, meta))
    return results


def check_optional_metadata(meta: OntologyMetadata) -> List[CheckResult]:
    """One result per optional row (12); absence is informational, never a failure."""
    return [_field_result(spec, meta) for spec in OPTIONAL_FIELDS]


def check_spelling_variants(meta: OntologyMetadata) -> List[CheckResult]:
    """Warn when a field is present only under a nonstandard property spelling."""
    results = []
    for name, (found, standard) in sorted(meta.nonstandard_spellings().items()):
        results.append(
            CheckResult(
                f"metadata.spelling.{name}",
                CheckStatus.WARN,
                Severity.INFORMATIONAL,
                f"<{found}> is not defined by its vocabulary; use <{standard}>",
                REF_META_ONTOLOGY,
                values=(found, standard),
            )
        )
    return results


# --- versioning --------------------------------------------------------------

_SEMVER_SEGMENT = re.compile(r"\d+\.\d+\.\d+$")


def strip_terminator(iri: str) -> str:
    return iri.rstrip("#/")


def has_version_in_namespace(iri: str) -> bool:
    """True when the IRI (ignoring a trailing '#'/'/') ends in an X.Y.Z segment."""
    stripped = strip_terminator(iri)
    last = stripped.rsplit("/", 1)[-1]
    return bool(_SEMVER_SEGMENT.fullmatch(last))


def check_versioning(meta: OntologyMetadata, ontology_iri: str) -> List[CheckResult]:
    """Version-annotation checks; multi-valued annotations pass if any value does."""
    results = []

    version_iris = tuple(v.value for v in meta.get("version_iri"))
    infos = tuple(v.value for v in meta.get("version_info"))

    version_iri = meta.version_iri
    if version_iri:
        results.append(
            CheckResult(
                "versioning.version_iri_present",
                CheckStatus.PASS,
                Severity.RECOMMENDED,
                f"owl:versionIRI = {version_iri}",
                REF_VERSIONING,
                values=(version_iri,),
            )
        )
    else:
        results.append(
            CheckResult(
                "versioning.version_iri_present",
                CheckStatus.FAIL,
                Severity.RECOMMENDED,
                "no owl:versionIRI; each release should have its own version IRI",
                REF_VERSIONING,
            )
        )

    semver_infos = [i for i in infos if is_semver(i)]
    if not infos:
        results.append(
            CheckResult(
                "versioning.semver_version_info",
                CheckStatus.WARN,
                Severity.RECOMMENDED,
                "no owl:versionInfo to validate against the X.Y.Z convention",
                REF_VERSIONING,
            )
        )
    elif semver_infos:
        results.append(
            CheckResult(
                "versioning.semver_version_info",
                CheckStatus.PASS,
                Severity.RECOMMENDED,
                f'owl:versionInfo "{semver_infos[0]}" follows X.Y.Z',
                REF_VERSIONING,
                values=tuple(semver_infos),
            )
        )
    else:
        results.append(
            CheckResult(
                "versioning.semver_version_info",
                CheckStatus.FAIL,
                Severity.RECOMMENDED,
                f'owl:versionInfo "{infos[0]}" does not follow the X.Y.Z convention',
                REF_VERSIONING,
                values=infos,
            )
        )

    if has_version_in_namespace(ontology_iri):
        results.append(
            CheckResult(
                "versioning.no_version_in_namespace",
                CheckStatus.FAIL,
                Severity.RECOMMENDED,
                f"ontology URI {ontology_iri} embeds a version number; term URIs "
                "would change on every release",
                REF_VERSIONING,
                values=(ontology_iri,),
            )
        )
    else:
        results.append(
            CheckResult(
                "versioning.no_version_in_namespace",
                CheckStatus.PASS,
                Severity.RECOMMENDED,
                "ontology URI is version-independent",
                REF_VERSIONING,
            )
        )

    if version_iris and infos:
        consistent = [
            (vi, info)
            for vi in version_iris
            for info in infos
            if strip_terminator(vi).endswith(info)
        ]
        if consistent:
            vi, info = consistent[0]
            results.append(
                CheckResult(
                    "versioning.version_iri_matches_info",
                    CheckStatus.PASS,
                    Severity.RECOMMENDED,
                    f"version IRI ends with the declared version {info}",
                    REF_VERSIONING,
                )
            )
        else:
            results.append(
                CheckResult(
                    "versioning.version_iri_matches_info",
                    CheckStatus.FAIL,
                    Severity.RECOMMENDED,
                    f'owl:versionIRI {version_iris[0]} does not end with '
                    f'owl:versionInfo "{infos[0]}"',
                    REF_VERSIONING,
                    values=version_iris + infos,
                )
            )
    else:
        results.append(
            CheckResult(
                "versioning.version_iri_matches_info",
                CheckStatus.SKIPPED,
                Severity.RECOMMENDED,
                "needs both owl:versionIRI and owl:versionInfo to compare",
                REF_VERSIONING,
            )
        )
    return results


# --- URI profile ---------------------------------------------------------------


class Termination(str, enum.Enum):
    HASH = "hash"
    SLASH = "slash"
    OTHER = "other"


class PermanentHost(str, enum.Enum):
    NONE = "none"
    W3ID = "w3id"
    PURL = "purl"
    OTHER_KNOWN = "other-known"


_PERMANENT_HOSTS = {
    "w3id.org": PermanentHost.W3ID,
    "purl.org": PermanentHost.PURL,
    "purl.archive.org": PermanentHost.PURL,
    "purl.obolibrary.org": PermanentHost.OTHER_KNOWN,
    "identifiers.org": PermanentHost.OTHER_KNOWN,
}

_OPAQUE_LOCAL = re.compile(r"[A-Z][A-Z0-9]*_[A-Z]*\d+$")


@dataclass(frozen=True)
class UriProfile:
    termination: Termination
    permanent_host: PermanentHost
    version_in_namespace: bool
    opaque_terms_fraction: float
    opaque_terms: Tuple[str, ...] = ()


def profile_uri(ontology_iri: str, model: OntologyModel) -> UriProfile:
    parts = urlsplit(ontology_iri)
    if not parts.scheme or not parts.netloc:
        raise InvalidIri(f"{ontology_iri!r} is not an absolute IRI")

    if ontology_iri.endswith("#"):
        termination = Termination.HASH
    elif ontology_iri.endswith("/"):
        termination = Termination.SLASH
    else:
        termination = Termination.OTHER

    host = parts.netloc.lower().split(":")[0]
    permanent = _PERMANENT_HOSTS.get(host, PermanentHost.NONE)

    opaque = []
    terms = model.declared_terms
    for decl in terms:
        local = decl.iri.rstrip("#/").rsplit("#", 1)[-1].rsplit("/", 1)[-1]
        if _OPAQUE_LOCAL.fullmatch(local):
            opaque.append(decl.iri)
    fraction = len(opaque) / len(terms) if terms else 0.0
    return UriProfile(
        termination=termination,
        permanent_host=permanent,
        version_in_namespace=has_version_in_namespace(ontology_iri),
        opaque_terms_fraction=fraction,
        opaque_terms=tuple(opaque),
    )


def uri_profile_checks(profile: UriProfile, ontology_iri: str) -> List[CheckResult]:
    results = []
    if profile.termination is Termination.OTHER:
        results.append(
            CheckResult(
                "uri.termination",
                CheckStatus.WARN,
                Severity.RECOMMENDED,
                f"{ontology_iri} ends in neither '#' nor '/'; pick one so term "
                "URIs resolve predictably",
                REF_HASH_SLASH,
            )
        )
    else:
        results.append(
            CheckResult(
                "uri.termination",
                CheckStatus.PASS,
                Severity.RECOMMENDED,
                f"namespace uses a {profile.termination.value} terminator",
                REF_HASH_SLASH,
                values=(profile.termination.value,),
            )
        )
    if profile.permanent_host is PermanentHost.NONE:
        results.append(
            CheckResult(
                "uri.permanent_host",
                CheckStatus.WARN,
                Severity.RECOMMENDED,
                f"{ontology_iri} is not served from a permanent-URI service "
                "(w3id.org, purl.org); long-term resolution depends on this host",
                REF_PERMANENT,
            )
        )
    else:
        results.append(
            CheckResult(
                "uri.permanent_host",
                CheckStatus.PASS,
                Severity.RECOMMENDED,
                f"served from permanent-URI service: {profile.permanent_host.value}",
                REF_PERMANENT,
                values=(profile.permanent_host.value,),
            )
        )
    pct = round(100 * profile.opaque_terms_fraction)
    results.append(
        CheckResult(
            "uri.opaque_terms",
            CheckStatus.INFO,
            Severity.INFORMATIONAL,
            f"{pct}% of terms use opaque identifiers; a style choice, with "
            "trade-offs either way",
            REF_OPAQUE,
            values=profile.opaque_terms,
        )
    )
    return results


# --- term-level annotations ---------------------------------------------------

TERM_FIELDS_RECOMMENDED: Tuple[Tuple[str, str], ...] = (
    (RDFS.label.value, "label"),
    (RDFS.comment.value, "definition"),
)
TERM_FIELDS_OPTIONAL: Tuple[Tuple[str, str], ...] = (
    (VANN.example.value, "example"),
    (SW.term_status.value, "status"),
    (VAEM.rationale.value, "rationale"),
    (DCTERMS.source.value, "source"),
)


@dataclass(frozen=True)
class TermCoverage:
    counts: Mapping[str, int]
    total: int
    labeled_fraction: float
    defined_fraction: float
    missing: Mapping[str, Tuple[str, ...]]
    label_languages: Mapping[str, Tuple[str, ...]]


def check_term_annotations(model: OntologyModel) -> TermCoverage:
    """Per-term coverage of the term-metadata table over all declared terms."""
    terms = model.declared_terms
    total = len(terms)
    counts: Dict[str, int] = {}
    for decl in terms:
        for kind in decl.kinds:
            counts[kind.value] = counts.get(kind.value, 0) + 1

    missing: Dict[str, List[str]] = {
        prop: [] for prop, _ in TERM_FIELDS_RECOMMENDED + TERM_FIELDS_OPTIONAL
    }
    label_languages: Dict[str, Tuple[str, ...]] = {}
    for decl in terms:
        for prop, _name in TERM_FIELDS_RECOMMENDED + TERM_FIELDS_OPTIONAL:
            if not decl.annotation_values(prop):
                missing[prop].append(decl.iri)
        labels = decl.annotation_values(RDFS.label.value)
        langs = sorted({v.language for v in labels if isinstance(v, Literal) and v.language})
        if langs:
            label_languages[decl.iri] = tuple(langs)

    def fraction(prop: str) -> float:
        return (total - len(missing[prop])) / total if total else 1.0

    return TermCoverage(
        counts=counts,
        total=total,
        labeled_fraction=fraction(RDFS.label.value),
        defined_fraction=fraction(RDFS.comment.value),
        missing={prop: tuple(iris) for prop, iris in missing.items()},
        label_languages=label_languages,
    )


def coverage_checks(
    coverage: TermCoverage,
    pass_threshold: float = 1.0,
    warn_threshold: float = 0.8,
) -> List[CheckResult]:
    """Turn coverage fractions into findings using the configured thresholds."""

    def summarize(prop: str, fraction: float) -> str:
        have = coverage.total - len(coverage.missing[prop])
        text = f"{have}/{coverage.total} terms carry {qname(prop)}"
        missing = coverage.missing[prop]
        if missing:
            text += "; missing: " + ", ".join(sorted(missing)[:5])
            if len(missing) > 5:
                text += f" (+{len(missing) - 5} more)"
        return text

    results = []
    for (prop, _name), check_id, fraction in (
        (TERM_FIELDS_RECOMMENDED[0], "terms.labels", coverage.labeled_fraction),
        (TERM_FIELDS_RECOMMENDED[1], "terms.comments", coverage.defined_fraction),
    ):
        if fraction >= pass_threshold:
            status = CheckStatus.PASS
        elif fraction >= warn_threshold:
            status = CheckStatus.WARN
        else:
            status = CheckStatus.FAIL
        results.append(
            CheckResult(
                check_id,
                status,
                Severity.RECOMMENDED,
                summarize(prop, fraction),
                REF_META_TERMS,
                values=coverage.missing[prop],
            )
        )
    for prop, name in TERM_FIELDS_OPTIONAL:
        complete = not coverage.missing[prop]
        results.append(
            CheckResult(
                f"terms.{name}",
                CheckStatus.PASS if complete else CheckStatus.INFO,
                Severity.OPTIONAL,
                summarize(prop, 0.0),
                REF_META_TERMS,
                values=coverage.missing[prop],
            )
        )
    return results


# --- prefix sanity --------------------------------------------------------------

_PREFIX_MAX_LENGTH = 10

#: Prefixes so widely registered that reusing them for a different namespace
#: is a collision even before a live registry lookup.
COMMON_REGISTERED_PREFIXES: Mapping[str, str] = {
    "rdf": "http://www.w3.org/1999/02/22-rdf-syntax-ns#",
    "rdfs": "http://www.w3.org/2000/01/rdf-schema#",
    "owl": "http://www.w3.org/2002/07/owl#",
    "xsd": "http://www.w3.org/2001/XMLSchema#",
    "foaf": "http://xmlns.com/foaf/0.1/",
    "dc": "http://purl.org/dc/elements/1.1/",
    "dcterms": "http://purl.org/dc/terms/",
    "skos": "http://www.w3.org/2004/02/skos/core#",
    "schema": "http://schema.org/",
    "example": "http://example.org/",
    "ex": "http://example.org/",
    "vann": "http://purl.org/vocab/vann/",
    "void": "http://rdfs.org/ns/void#",
    "prov": "http://www.w3.org/ns/prov#",
    "dcat": "http://www.w3.org/ns/dcat#",
    "sh": "http://www.w3.org/ns/shacl#",
    "geo": "http://www.w3.org/2003/01/geo/wgs84_pos#",
    "time": "http://www.w3.org/2006/time#",
    "org": "http://www.w3.org/ns/org#",
    "qb": "http://purl.org/linked-data/cube#",
    "sioc": "http://rdfs.org/sioc/ns#",
    "vcard": "http://www.w3.org/2006/vcard/ns#",
    "doap": "http://usefulinc.com/ns/doap#",
    "cc": "http://creativecommons.org/ns#",
    "sosa": "http://www.w3.org/ns/sosa/",
    "ssn": "http://www.w3.org/ns/ssn/",
}


def check_prefix_sanity(meta: OntologyMetadata) -> List[CheckResult]:
    results = []
    prefix = meta.prefix
    audited_ns = meta.namespace_uri or meta.ontology_iri
    if prefix is None:
        results.append(
            CheckResult(
                "prefix.simple",
                CheckStatus.SKIPPED,
                Severity.RECOMMENDED,
                "no vann:preferredNamespacePrefix to assess",
                REF_NAME_PREFIX,
            )
        )
    elif len(prefix) > _PREFIX_MAX_LENGTH or not prefix.isalnum():
        results.append(
            CheckResult(
                "prefix.simple",
                CheckStatus.WARN,
                Severity.RECOMMENDED,
                f'prefix "{prefix}" is long or uses non-alphanumeric characters; '
                "short simple prefixes are easier to remember",
                REF_NAME_PREFIX,
                values=(prefix,),
            )
        )
    elif (
        prefix in COMMON_REGISTERED_PREFIXES
        and strip_terminator(COMMON_REGISTERED_PREFIXES[prefix])
        != strip_terminator(audited_ns)
    ):
        taken = COMMON_REGISTERED_PREFIXES[prefix]
        results.append(
            CheckResult(
                "prefix.simple",
                CheckStatus.WARN,
                Severity.RECOMMENDED,
                f'prefix "{prefix}" is already registered for <{taken}>; '
                "overloading it will confuse re-users (registry lookup confirms "
                "in the network phase)",
                REF_NAME_PREFIX,
                values=(prefix, taken),
            )
        )
    else:
        results.append(
            CheckResult(
                "prefix.simple",
                CheckStatus.PASS,
                Severity.RECOMMENDED,
                f'prefix "{prefix}" is short and simple',
                REF_NAME_PREFIX,
                values=(prefix,),
            )
        )
    results.append(
        CheckResult(
            "prefix.collision_note",
            CheckStatus.INFO,
            Severity.INFORMATIONAL,
            "check prefix registries for collisions with existing vocabularies; "
            "an overloaded prefix confuses re-users (live lookup runs in the "
            "network phase)",
            REF_NAME_PREFIX,
        )
    )
    return results
