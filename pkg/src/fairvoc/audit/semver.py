"""Semantic version parsing for ontology version annotations."""
from __future__ import annotations

import unicodedata
from dataclasses import dataclass


class MalformedVersion(ValueError):
    """Text does not have the X.Y.Z shape."""


@dataclass(frozen=True, order=True)
class SemVer:
    major: int
    minor: int
    patch: int

    def __post_init__(self) -> None:
        if min(self.major, self.minor, self.patch) < 0:
            raise MalformedVersion("version components must be non-negative")

    def __str__(self) -> str:
        return f"{self.major}.{self.minor}.{self.patch}"

    def is_major_release(self) -> bool:
        return self.minor == 0 and self.patch == 0


def _is_digits(part: str) -> bool:
    # decimal digits only (unicode Nd, matching what int() accepts)
    return bool(part) and all(unicodedata.category(ch) == "Nd" for ch in part)


def parse_semver(text: str) -> SemVer:
    """Parse exactly X.Y.Z with decimal integer components.

    No 'v' prefix, no pre-release or build metadata suffix.
    """
    parts = text.split(".")
    if len(parts) != 3 or not all(_is_digits(p) for p in parts):
        raise MalformedVersion(f"{text!r} is not an X.Y.Z version")
    return SemVer(int(parts[0]), int(parts[1]), int(parts[2]))


def is_semver(text: str) -> bool:
    try:
        parse_semver(text)
        return True
    except MalformedVersion:
        return False
