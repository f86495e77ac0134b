"""Audits of URI design and metadata completeness."""
from .catalog import CATALOG, CatalogEntry, find_entry
from .checks import (
    InvalidIri,
    PermanentHost,
    TermCoverage,
    Termination,
    UriProfile,
    check_optional_metadata,
    check_prefix_sanity,
    check_recommended_metadata,
    check_spelling_variants,
    check_term_annotations,
    check_versioning,
    coverage_checks,
    has_version_in_namespace,
    profile_uri,
    strip_terminator,
    uri_profile_checks,
)
from .metadata import (
    OPTIONAL_FIELDS,
    RECOMMENDED_FIELDS,
    ONTOLOGY_FIELDS,
    FieldSpec,
    MetadataValue,
    OntologyMetadata,
    extract_metadata,
)
from .result import CheckResult, CheckStatus, Severity
from .semver import MalformedVersion, SemVer, is_semver, parse_semver

__all__ = [
    "CATALOG",
    "CatalogEntry",
    "CheckResult",
    "CheckStatus",
    "FieldSpec",
    "InvalidIri",
    "MalformedVersion",
    "MetadataValue",
    "OntologyMetadata",
    "OPTIONAL_FIELDS",
    "PermanentHost",
    "RECOMMENDED_FIELDS",
    "SemVer",
    "Severity",
    "ONTOLOGY_FIELDS",
    "TermCoverage",
    "Termination",
    "UriProfile",
    "check_optional_metadata",
    "check_prefix_sanity",
    "check_recommended_metadata",
    "check_spelling_variants",
    "check_term_annotations",
    "check_versioning",
    "coverage_checks",
    "extract_metadata",
    "find_entry",
    "has_version_in_namespace",
    "is_semver",
    "parse_semver",
    "profile_uri",
    "strip_terminator",
    "uri_profile_checks",
]
