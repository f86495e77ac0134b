"""Apache mod_rewrite recipe for content-negotiated vocabulary hosting."""
from __future__ import annotations

import re
from typing import List, Tuple

from ..rdf import RdfFormat
from .config import ScaffoldConfig

_HTML_ACCEPTS: Tuple[str, ...] = ("text/html", "application/xhtml+xml")

#: formats whose media type stock servers don't map from the extension
_NEEDS_ADDTYPE = (RdfFormat.TURTLE, RdfFormat.NTRIPLES, RdfFormat.JSON_LD)


def _accept_pattern(media_type: str) -> str:
    return re.escape(media_type)


def _rdf_formats(config: ScaffoldConfig) -> List[RdfFormat]:
    ordered = [RdfFormat.TURTLE]
    for fmt in config.supported_formats:
        if fmt is not RdfFormat.TURTLE:
            ordered.append(fmt)
    return ordered


def generate_htaccess(config: ScaffoldConfig) -> str:
    """The rewrite rules to drop next to the vocabulary URI.

    Order: MultiViews off, AddType lines, engine on, latest-version rules
    (HTML then each RDF serialization), per-version rules with the version
    captured from the path, the 406 catch-all for unsupported formats, and
    the default rule serving Turtle.
    """
    doc = config.doc_root
    latest = config.latest_version
    versions = config.sorted_versions()
    version_alternation = "|".join(re.escape(str(v)) for v in versions)
    rdf_formats = _rdf_formats(config)

    lines: List[str] = []
    lines.append("# Keep the server from guessing representations on its own;")
    lines.append("# every response below is an explicit rewrite decision.")
    lines.append("Options -MultiViews")
    lines.append("")
    lines.append("# Media types the stock server does not map from file extensions.")
    for fmt in rdf_formats:
        if fmt in _NEEDS_ADDTYPE:
            lines.append(f"AddType {fmt.media_type} {fmt.extension}")
    lines.append("")
    lines.append("RewriteEngine on")
    lines.append("")

    lines.append("# Latest release, human-readable documentation.")
    lines.append(f"RewriteCond %{{HTTP_ACCEPT}} {_accept_pattern(_HTML_ACCEPTS[0])} [OR]")
    lines.append(f"RewriteCond %{{HTTP_ACCEPT}} {_accept_pattern(_HTML_ACCEPTS[1])}")
    lines.append(
        f"RewriteRule ^$ {doc}/release/{latest}/{config.html_doc_filename} [R=303,L]"
    )
    lines.append("")

    for fmt in rdf_formats:
        lines.append(f"# Latest release, {fmt.media_type} serialization.")
        lines.append(f"RewriteCond %{{HTTP_ACCEPT}} {_accept_pattern(fmt.media_type)}")
        lines.append(
            f"RewriteRule ^$ {doc}/release/{latest}/{config.serialization_file(fmt)} [R=303,L]"
        )
        lines.append("")

    lines.append("# A specific release, human-readable documentation.")
    lines.append(f"RewriteCond %{{HTTP_ACCEPT}} {_accept_pattern(_HTML_ACCEPTS[0])} [OR]")
    lines.append(f"RewriteCond %{{HTTP_ACCEPT}} {_accept_pattern(_HTML_ACCEPTS[1])}")
    lines.append(
        f"RewriteRule ^({version_alternation})$ {doc}/release/$1/{config.html_doc_filename} [R=303,L]"
    )
    lines.append("")

    for fmt in rdf_formats:
        lines.append(f"# A specific release, {fmt.media_type} serialization.")
        lines.append(f"RewriteCond %{{HTTP_ACCEPT}} {_accept_pattern(fmt.media_type)}")
        lines.append(
            f"RewriteRule ^({version_alternation})$ {doc}/release/$1/{config.serialization_file(fmt)} [R=303,L]"
        )
        lines.append("")

    lines.append("# Decline formats nobody publishes here. Wildcard Accept values")
    lines.append("# fall through to the default rule instead.")
    lines.append("RewriteCond %{HTTP_ACCEPT} !^$")
    lines.append(r"RewriteCond %{HTTP_ACCEPT} !\*/\*")
    for accept in _HTML_ACCEPTS:
        lines.append(f"RewriteCond %{{HTTP_ACCEPT}} !{_accept_pattern(accept)}")
    for fmt in rdf_formats:
        lines.append(f"RewriteCond %{{HTTP_ACCEPT}} !{_accept_pattern(fmt.media_type)}")
    lines.append(f"RewriteRule ^.*$ {doc}/406.html [R=406,L]")
    lines.append("")

    lines.append("# Default response for agents that did not ask for anything specific.")
    lines.append(
        f"RewriteRule ^$ {doc}/release/{latest}/{config.serialization_file(RdfFormat.TURTLE)} [R=303,L]"
    )
    return "\n".join(lines) + "\n"
