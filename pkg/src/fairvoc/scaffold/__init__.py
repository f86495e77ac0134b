"""Publication artifacts: rewrite rules, JSON-LD snippet, release layout."""
from .config import InvalidConfig, ScaffoldConfig, load_scaffold_config, parse_key_values
from .htaccess import generate_htaccess
from .release import (
    ContentSource,
    Copy,
    Generated,
    ReleaseLayout,
    VersionInNamespace,
    materialize_release,
    plan_release,
    stamp_version,
    write_release,
)
from .snippet import MissingTitle, embed_in_script, generate_jsonld_snippet

__all__ = [
    "ContentSource",
    "Copy",
    "Generated",
    "InvalidConfig",
    "MissingTitle",
    "ReleaseLayout",
    "ScaffoldConfig",
    "VersionInNamespace",
    "embed_in_script",
    "generate_htaccess",
    "generate_jsonld_snippet",
    "load_scaffold_config",
    "materialize_release",
    "parse_key_values",
    "plan_release",
    "stamp_version",
    "write_release",
]
