from __future__ import annotations

from pathlib import Path

import pytest

from fairvoc.rdf import OntologyModel, RdfFormat, parse_ontology

FIXTURES = Path(__file__).parent / "fixtures"


@pytest.fixture(scope="session")
def fixtures_dir() -> Path:
    return FIXTURES


@pytest.fixture(scope="session")
def example_model() -> OntologyModel:
    data = (FIXTURES / "example_ontology.ttl").read_bytes()
    return parse_ontology(data, RdfFormat.TURTLE)


@pytest.fixture(scope="session")
def versioning_model() -> OntologyModel:
    data = (FIXTURES / "versioning_header.ttl").read_bytes()
    return parse_ontology(data, RdfFormat.TURTLE)
