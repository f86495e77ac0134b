"""Versioned release layout: planning, content generation, writing."""
from __future__ import annotations

from dataclasses import dataclass
from pathlib import Path
from typing import Dict, Optional, Tuple, Union

from ..audit.checks import has_version_in_namespace, strip_terminator
from ..audit.metadata import extract_metadata
from ..audit.semver import SemVer
from ..rdf import (
    OWL,
    Iri,
    Literal,
    OntologyModel,
    RdfFormat,
    build_model,
    serialize,
)
from .config import InvalidConfig, ScaffoldConfig
from .snippet import MissingTitle, embed_in_script, generate_jsonld_snippet


class VersionInNamespace(ValueError):
    """Refusing to stamp: the ontology URI already embeds a version number."""


@dataclass(frozen=True)
class Generated:
    artifact_id: str

    def __str__(self) -> str:
        return f"generated:{self.artifact_id}"


@dataclass(frozen=True)
class Copy:
    source: str

    def __str__(self) -> str:
        return f"copy:{self.source}"


ContentSource = Union[Generated, Copy]


@dataclass(frozen=True)
class ReleaseLayout:
    entries: Tuple[Tuple[str, ContentSource], ...]

    def __post_init__(self) -> None:
        paths = [path for path, _ in self.entries]
        if len(paths) != len(set(paths)):
            raise InvalidConfig("release layout contains duplicate paths")

    def paths(self) -> Tuple[str, ...]:
        return tuple(path for path, _ in self.entries)

    def describe(self) -> str:
        width = max((len(path) for path, _ in self.entries), default=0)
        return "\n".join(f"{path.ljust(width)}  <- {source}" for path, source in self.entries)


def stamp_version(
    model: OntologyModel, version: SemVer, prior: Optional[SemVer] = None
) -> OntologyModel:
    """A copy of the model whose version annotations describe `version`.

    Idempotent per version: existing owl:versionIRI/owl:versionInfo triples
    are replaced, and owl:priorVersion too when `prior` is given.
    """
    if has_version_in_namespace(model.ontology_iri):
        raise VersionInNamespace(
            f"{model.ontology_iri} already carries a version segment; fix the "
            "ontology URI instead of stamping releases onto it"
        )
    subject = Iri(model.ontology_iri)
    root = strip_terminator(model.ontology_iri)

    replaced = {OWL.versionIRI, OWL.versionInfo}
    if prior is not None:
        replaced.add(OWL.priorVersion)
    triples = [t for t in model.triples if not (t[0] == subject and t[1] in replaced)]
    triples.append((subject, OWL.versionIRI, Iri(f"{root}/{version}")))
    triples.append((subject, OWL.versionInfo, Literal(str(version), language="en")))
    if prior is not None:
        triples.append((subject, OWL.priorVersion, Iri(f"{root}/{prior}")))
    return build_model(triples)


_DOC_PAGE = """<!DOCTYPE html>
<html lang="en">
<head>
<meta charset="utf-8">
<title>%(title)s</title>
%(snippet)s
</head>
<body>
<h1>%(title)s</h1>
<p>%(description)s</p>
<p>Release %(version)s. Serializations: %(links)s.</p>
<p>This page is a placeholder; generate full documentation with an
ontology-documentation tool and replace it.</p>
</body>
</html>
"""

_406_PAGE = """<!DOCTYPE html>
<html lang="en">
<head><meta charset="utf-8"><title>406 Not Acceptable</title></head>
<body>
<h1>406 Not Acceptable</h1>
<p>The requested representation is not published. Supported: %(supported)s.</p>
</body>
</html>
"""


def plan_release(config: ScaffoldConfig, ontology: OntologyModel) -> ReleaseLayout:
    """Paths the publication needs: rewrite rules, 406 page, and one
    directory per version holding every serialization plus the doc page."""
    if not ontology.ontology_iri:
        raise InvalidConfig("ontology model lacks an IRI")
    entries = [
        (".htaccess", Generated("htaccess")),
        ("406.html", Generated("406-page")),
    ]
    for version in config.sorted_versions():
        for fmt in config.supported_formats:
            entries.append(
                (
                    f"release/{version}/{config.serialization_file(fmt)}",
                    Generated(f"serialization:{fmt.name.lower()}:{version}"),
                )
            )
        entries.append(
            (f"release/{version}/{config.html_doc_filename}", Generated(f"doc-page:{version}"))
        )
    return ReleaseLayout(tuple(entries))


def materialize_release(
    config: ScaffoldConfig, ontology: OntologyModel
) -> Dict[str, bytes]:
    """Generate the bytes for every Generated entry of plan_release."""
    from .htaccess import generate_htaccess  # local import avoids a cycle

    layout = plan_release(config, ontology)
    versions = config.sorted_versions()
    prior_of: Dict[SemVer, Optional[SemVer]] = {}
    previous: Optional[SemVer] = None
    for version in versions:
        prior_of[version] = previous
        previous = version

    stamped: Dict[SemVer, OntologyModel] = {
        version: stamp_version(ontology, version, prior_of[version])
        for version in versions
    }

    contents: Dict[str, bytes] = {}
    for path, source in layout.entries:
        assert isinstance(source, Generated)
        kind, _, rest = source.artifact_id.partition(":")
        if kind == "htaccess":
            contents[path] = generate_htaccess(config).encode()
        elif kind == "406-page":
            supported = ", ".join(
                ["text/html"] + [fmt.media_type for fmt in config.supported_formats]
            )
            contents[path] = (_406_PAGE % {"supported": supported}).encode()
        elif kind == "serialization":
            fmt_name, _, version_text = rest.partition(":")
            fmt = RdfFormat[fmt_name.upper()]
            version = next(v for v in versions if str(v) == version_text)
            contents[path] = serialize(stamped[version], fmt).encode()
        elif kind == "doc-page":
            version = next(v for v in versions if str(v) == rest)
            model = stamped[version]
            meta = extract_metadata(model)
            try:
                snippet = embed_in_script(generate_jsonld_snippet(meta, config.namespace))
            except MissingTitle:
                snippet = "<!-- add a title to the ontology to get JSON-LD annotations -->"
            links = ", ".join(
                f'<a href="{config.serialization_file(fmt)}">{fmt.media_type}</a>'
                for fmt in config.supported_formats
            )
            contents[path] = (
                _DOC_PAGE
                % {
                    "title": meta.title or config.namespace_root,
                    "description": meta.first("description") or "",
                    "version": version,
                    "snippet": snippet,
                    "links": links,
                }
            ).encode()
    return contents


def write_release(
    contents: Dict[str, bytes], out_dir: Path, copies: Optional[Dict[str, Path]] = None
) -> Tuple[str, ...]:
    """Write generated contents (and any copied inputs) under out_dir."""
    out_dir = Path(out_dir)
    written = []
    for rel_path, data in sorted(contents.items()):
        target = out_dir / rel_path
        target.parent.mkdir(parents=True, exist_ok=True)
        target.write_bytes(data)
        written.append(rel_path)
    for rel_path, source in sorted((copies or {}).items()):
        target = out_dir / rel_path
        target.parent.mkdir(parents=True, exist_ok=True)
        target.write_bytes(Path(source).read_bytes())
        written.append(rel_path)
    return tuple(sorted(written))
