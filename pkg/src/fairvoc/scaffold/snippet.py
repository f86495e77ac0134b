"""schema.org JSON-LD snippet for crawler-visible ontology metadata."""
from __future__ import annotations

import json
from typing import Optional

from ..audit.checks import strip_terminator
from ..audit.metadata import OntologyMetadata


class MissingTitle(ValueError):
    """The snippet needs at least a title (its schema.org name)."""


def generate_jsonld_snippet(meta: OntologyMetadata, ontology_iri: str) -> str:
    """Script-embeddable JSON. Absent fields are omitted, never null.

    The url is the ontology URI without its '#'/'/' terminator; authors
    become schema.org Person objects.
    """
    if not meta.title:
        raise MissingTitle("the ontology has no title to use as the snippet name")

    document = {
        "@context": "http://schema.org",
        "@type": "WebPage",
        "url": strip_terminator(ontology_iri),
        "name": meta.title,
    }
    date_published = meta.first("issued") or meta.first("created")
    if date_published:
        document["datePublished"] = date_published
    if meta.version_info:
        document["version"] = meta.version_info
    license_value = meta.first("license")
    if license_value:
        document["license"] = license_value
    creators = meta.get("creator")
    if creators:
        document["author"] = [
            {"@type": "Person", "name": creator.value} for creator in creators
        ]
    return json.dumps(document, indent=2, ensure_ascii=False) + "\n"


def embed_in_script(snippet: str) -> str:
    return f'<script type="application/ld+json">{snippet}</script>'
