"""fairvoc: audit web vocabularies against FAIR publication practices."""

__version__ = "0.1.0"
