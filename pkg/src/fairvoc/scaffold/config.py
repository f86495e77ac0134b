"""Publication-scaffold configuration."""
from __future__ import annotations

from dataclasses import dataclass, field
from pathlib import Path
from typing import Dict, Mapping, Optional, Tuple
from urllib.parse import urlsplit

from ..audit.checks import Termination, strip_terminator
from ..audit.semver import MalformedVersion, SemVer, parse_semver
from ..rdf import RdfFormat


class InvalidConfig(ValueError):
    """Scaffold configuration violates its invariants."""


_FORMAT_NAMES = {
    "turtle": RdfFormat.TURTLE,
    "ttl": RdfFormat.TURTLE,
    "rdfxml": RdfFormat.RDF_XML,
    "rdf/xml": RdfFormat.RDF_XML,
    "xml": RdfFormat.RDF_XML,
    "ntriples": RdfFormat.NTRIPLES,
    "nt": RdfFormat.NTRIPLES,
    "jsonld": RdfFormat.JSON_LD,
    "json-ld": RdfFormat.JSON_LD,
}


@dataclass(frozen=True)
class ScaffoldConfig:
    ontology_iri: str
    latest_version: SemVer
    all_versions: Tuple[SemVer, ...]
    doc_base_url: str
    termination: Termination = Termination.HASH
    supported_formats: Tuple[RdfFormat, ...] = (RdfFormat.TURTLE,)
    html_doc_filename: str = "index-en.html"
    serialization_filename: str = "ontology.ttl"

    def __post_init__(self) -> None:
        if not self.all_versions:
            raise InvalidConfig("all_versions must not be empty")
        if self.latest_version not in self.all_versions:
            raise InvalidConfig(
                f"latest_version {self.latest_version} is not in all_versions"
            )
        if RdfFormat.TURTLE not in self.supported_formats:
            raise InvalidConfig("Turtle support is mandatory")
        if self.termination not in (Termination.HASH, Termination.SLASH):
            raise InvalidConfig("termination must be hash or slash")
        for url_name, url in (("ontology_iri", self.ontology_iri), ("doc_base_url", self.doc_base_url)):
            parts = urlsplit(url)
            if not parts.scheme or not parts.netloc:
                raise InvalidConfig(f"{url_name} must be an absolute URL, got {url!r}")
        if not self.html_doc_filename or "/" in self.html_doc_filename:
            raise InvalidConfig("html_doc_filename must be a bare filename")
        if not self.serialization_filename.endswith(".ttl"):
            raise InvalidConfig("serialization_filename must end in .ttl")
        if len(set(self.all_versions)) != len(self.all_versions):
            raise InvalidConfig("all_versions contains duplicates")

    @property
    def namespace_root(self) -> str:
        return strip_terminator(self.ontology_iri)

    @property
    def namespace(self) -> str:
        terminator = "#" if self.termination is Termination.HASH else "/"
        return self.namespace_root + terminator

    @property
    def doc_root(self) -> str:
        return self.doc_base_url.rstrip("/")

    @property
    def serialization_stem(self) -> str:
        return self.serialization_filename[: -len(".ttl")]

    def serialization_file(self, fmt: RdfFormat) -> str:
        return self.serialization_stem + fmt.extension

    def version_iri(self, version: SemVer) -> str:
        return f"{self.namespace_root}/{version}"

    def sorted_versions(self) -> Tuple[SemVer, ...]:
        return tuple(sorted(self.all_versions))


def _parse_versions(raw: str) -> Tuple[SemVer, ...]:
    out = []
    for piece in raw.replace(",", " ").split():
        out.append(parse_semver(piece))
    return tuple(out)


def parse_key_values(text: str) -> Dict[str, str]:
    """Parse the simple `key = value` configuration dialect."""
    values: Dict[str, str] = {}
    for line_no, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        if "=" not in line:
            raise InvalidConfig(f"line {line_no}: expected key=value, got {line!r}")
        key, _, value = line.partition("=")
        values[key.strip()] = value.strip()
    return values


def load_scaffold_config(path: Path) -> Tuple[ScaffoldConfig, Path]:
    """Read a scaffold config file; returns the config and the ontology path
    (resolved relative to the config file)."""
    path = Path(path)
    values = parse_key_values(path.read_text())

    missing = [key for key in ("ontology", "ontology_iri", "latest_version", "doc_base_url") if key not in values]
    if missing:
        raise InvalidConfig(f"missing required keys: {', '.join(missing)}")

    try:
        latest = parse_semver(values["latest_version"])
        versions = _parse_versions(values.get("versions", values["latest_version"]))
    except MalformedVersion as exc:
        raise InvalidConfig(str(exc)) from exc
    if latest not in versions:
        versions = tuple(sorted(set(versions) | {latest}))

    formats = [RdfFormat.TURTLE]
    for name in values.get("formats", "turtle").replace(",", " ").split():
        fmt = _FORMAT_NAMES.get(name.strip().lower())
        if fmt is None:
            raise InvalidConfig(f"unknown serialization format {name!r}")
        if fmt not in formats:
            formats.append(fmt)

    iri = values["ontology_iri"]
    if "termination" in values:
        term_raw = values["termination"].strip().lower()
        if term_raw not in ("hash", "slash"):
            raise InvalidConfig("termination must be 'hash' or 'slash'")
        termination = Termination.HASH if term_raw == "hash" else Termination.SLASH
    elif iri.endswith("/"):
        termination = Termination.SLASH
    else:
        termination = Termination.HASH

    config = ScaffoldConfig(
        ontology_iri=iri,
        latest_version=latest,
        all_versions=versions,
        doc_base_url=values["doc_base_url"],
        termination=termination,
        supported_formats=tuple(formats),
        html_doc_filename=values.get("html_filename", "index-en.html"),
        serialization_filename=values.get("serialization_filename", "ontology.ttl"),
    )
    ontology_path = (path.parent / values["ontology"]).resolve()
    return config, ontology_path
