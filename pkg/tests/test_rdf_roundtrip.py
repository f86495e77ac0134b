from __future__ import annotations

import pytest

from fairvoc.rdf import RdfFormat, parse_ontology, parse_triples, serialize

FORMATS = [RdfFormat.TURTLE, RdfFormat.RDF_XML, RdfFormat.NTRIPLES, RdfFormat.JSON_LD]


@pytest.mark.parametrize("fmt", FORMATS, ids=lambda f: f.name.lower())
def test_fixture_roundtrip_via_canonical_ntriples(example_model, fmt):
    # serialize in fmt, reparse, compare triple sets in N-Triples canonical form
    text = serialize(example_model, fmt)
    reparsed = parse_ontology(text.encode(), fmt)
    assert reparsed.triples == example_model.triples


@pytest.mark.parametrize("fmt", FORMATS, ids=lambda f: f.name.lower())
def test_versioning_header_roundtrip(versioning_model, fmt):
    text = serialize(versioning_model, fmt)
    assert parse_ontology(text.encode(), fmt).triples == versioning_model.triples


def test_double_roundtrip_is_stable(example_model):
    once = serialize(example_model, RdfFormat.NTRIPLES)
    again = serialize(
        parse_ontology(once.encode(), RdfFormat.NTRIPLES), RdfFormat.NTRIPLES
    )
    assert once == again


def test_blank_node_labels_survive():
    doc = (
        "@prefix ex: <http://ex.org/> .\n"
        "@prefix owl: <http://www.w3.org/2002/07/owl#> .\n"
        "ex:o a owl:Ontology .\n"
        "ex:s ex:p [ ex:q ex:r ] , _:named .\n"
        "_:named ex:q ex:s2 .\n"
    )
    model = parse_ontology(doc.encode(), RdfFormat.TURTLE)
    nt = serialize(model, RdfFormat.NTRIPLES)
    assert parse_ontology(nt.encode(), RdfFormat.NTRIPLES).triples == model.triples


def test_serializers_are_deterministic(example_model):
    for fmt in FORMATS:
        assert serialize(example_model, fmt) == serialize(example_model, fmt)


def test_unicode_literals_roundtrip():
    doc = '@prefix ex: <http://ex.org/> .\n@prefix owl: <http://www.w3.org/2002/07/owl#> .\nex:o a owl:Ontology ; ex:p "caf\\u00e9 \\u4f8b" .'
    model = parse_ontology(doc.encode(), RdfFormat.TURTLE)
    for fmt in FORMATS:
        text = serialize(model, fmt)
        assert parse_ontology(text.encode(), fmt).triples == model.triples
