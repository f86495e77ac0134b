from __future__ import annotations

import pytest
from hypothesis import given
from hypothesis import strategies as st

import fairvoc.rdf as rdf
from fairvoc.rdf import (
    OWL,
    BlankNode,
    Iri,
    Literal,
    MultipleOntologyDeclarations,
    NoOntologyDeclaration,
    RdfFormat,
    RdfSyntaxError,
    UndetectableFormat,
    detect_format,
    get_annotations,
    parse_ontology,
    parse_triples,
)

TTL_HEADER = """\
@prefix rdf: <http://www.w3.org/1999/02/22-rdf-syntax-ns#> .
@prefix owl: <http://www.w3.org/2002/07/owl#> .

<https://w3id.org/example> rdf:type owl:Ontology ;
    owl:versionIRI <https://w3id.org/example/1.0.0> ;
    owl:versionInfo "1.0.0"@en .
"""


class TestDetectFormat:
    def test_turtle_directive_without_hint(self):
        assert detect_format(b"@prefix exo: <https://w3id.org/example#> .") is RdfFormat.TURTLE

    def test_xml_prolog_with_rdf_hint(self):
        assert detect_format(b"<?xml version='1.0'?>", hint="onto.rdf") is RdfFormat.RDF_XML

    def test_ttl_filename_hint(self, fixtures_dir):
        data = (fixtures_dir / "example_ontology.ttl").read_bytes()
        assert detect_format(data, hint="ontology.ttl") is RdfFormat.TURTLE

    def test_hint_wins_over_sniffing(self):
        assert detect_format(b"<?xml version='1.0'?>", hint="text/turtle") is RdfFormat.TURTLE

    def test_brace_sniffs_jsonld(self):
        assert detect_format(b'{"@graph": []}') is RdfFormat.JSON_LD

    def test_ntriples_trial(self):
        line = b"<http://a.example/s> <http://a.example/p> <http://a.example/o> .\n"
        assert detect_format(line) is RdfFormat.NTRIPLES

    def test_undetectable(self):
        with pytest.raises(UndetectableFormat):
            detect_format(b"\x00\x01\x02 garbage that is nothing")

    def test_empty_input(self):
        with pytest.raises(UndetectableFormat):
            detect_format(b"")

    @given(
        data=st.binary(min_size=1, max_size=64),
        hint=st.sampled_from([None, "x.ttl", "x.rdf", "x.nt", "x.jsonld", "text/turtle"]),
    )
    def test_deterministic(self, data, hint):
        def run():
            try:
                return detect_format(data, hint=hint)
            except UndetectableFormat:
                return None

        assert run() == run()


class TestParseOntology:
    def test_versioning_header(self):
        model = parse_ontology(TTL_HEADER.encode(), RdfFormat.TURTLE)
        assert model.ontology_iri == "https://w3id.org/example"
        assert len(model.ontology_annotations()) == 3

    def test_empty_document(self):
        with pytest.raises(NoOntologyDeclaration):
            parse_ontology(b"", RdfFormat.TURTLE)

    def test_two_ontology_subjects(self, fixtures_dir):
        data = (fixtures_dir / "two_ontologies.ttl").read_bytes()
        with pytest.raises(MultipleOntologyDeclarations):
            parse_ontology(data, RdfFormat.TURTLE)

    def test_blank_node_header_rejected(self):
        doc = "@prefix owl: <http://www.w3.org/2002/07/owl#> .\n[] a owl:Ontology .\n"
        with pytest.raises(NoOntologyDeclaration):
            parse_ontology(doc.encode(), RdfFormat.TURTLE)

    def test_syntax_error_carries_position(self):
        with pytest.raises(RdfSyntaxError) as err:
            parse_ontology(b"@prefix x <http://x/> .", RdfFormat.TURTLE)
        assert err.value.line == 1

    def test_input_size_cap(self, monkeypatch):
        monkeypatch.setattr(rdf, "MAX_INPUT_BYTES", 64)
        with pytest.raises(rdf.InputTooLarge):
            parse_ontology(b"#" * 100, RdfFormat.TURTLE)

    def test_fixture_corpus_is_total(self, fixtures_dir):
        for path in sorted(fixtures_dir.glob("*.ttl")):
            try:
                parse_ontology(path.read_bytes(), RdfFormat.TURTLE)
            except rdf.RdfError:
                pass

    def test_declared_terms_are_subjects(self, example_model):
        subjects = {s.value for s, _, _ in example_model.triples if isinstance(s, Iri)}
        for decl in example_model.declared_terms:
            assert decl.iri in subjects

    def test_term_kinds(self, example_model):
        kinds = {t.iri.rsplit("#", 1)[-1]: t.kinds for t in example_model.declared_terms}
        assert rdf.TermKind.CLASS in kinds["ExampleClassA"]
        assert rdf.TermKind.OBJECT_PROPERTY in kinds["relatesTo"]
        assert rdf.TermKind.DATATYPE_PROPERTY in kinds["identifier"]
        assert kinds["sampleInstance"] == (rdf.TermKind.NAMED_INDIVIDUAL,)


class TestGetAnnotations:
    def test_version_info(self, versioning_model):
        values = get_annotations(
            versioning_model, versioning_model.ontology_iri, OWL.versionInfo.value
        )
        assert values == [Literal("1.0.0", language="en")]

    def test_unknown_predicate(self, versioning_model):
        assert get_annotations(versioning_model, versioning_model.ontology_iri, "http://nope/x") == []

    def test_multiple_creators_sorted(self, example_model):
        values = get_annotations(
            example_model, example_model.ontology_iri, "http://purl.org/dc/terms/creator"
        )
        assert [v.lexical for v in values] == ["Alex Doe", "Jane Roe"]


class TestTurtleGrammar:
    def test_collections_and_anonymous_nodes(self):
        doc = """
        @prefix owl: <http://www.w3.org/2002/07/owl#> .
        @prefix ex: <http://ex.org/> .
        ex:C a owl:Class ; owl:equivalentClass [ owl:intersectionOf ( ex:A ex:B ) ] .
        """
        triples = parse_triples(doc, RdfFormat.TURTLE)
        preds = {p.value for _, p, _ in triples}
        assert "http://www.w3.org/1999/02/22-rdf-syntax-ns#first" in preds
        firsts = [o for _, p, o in triples if p.value.endswith("#first")]
        assert Iri("http://ex.org/A") in firsts and Iri("http://ex.org/B") in firsts

    def test_long_strings_and_escapes(self):
        doc = '@prefix ex: <http://ex.org/> .\nex:s ex:p """line1\nline2 "quoted\"""" , "tab\\there" .'
        triples = parse_triples(doc, RdfFormat.TURTLE)
        lexicals = sorted(o.lexical for _, _, o in triples)
        assert lexicals == ['line1\nline2 "quoted"', "tab\there"]

    def test_numeric_and_boolean_shorthand(self):
        doc = "@prefix ex: <http://ex.org/> .\nex:s ex:p 42, 3.14, 1.0e3, true ."
        objects = {o.lexical: o.datatype for _, _, o in parse_triples(doc, RdfFormat.TURTLE)}
        assert objects["42"].endswith("integer")
        assert objects["3.14"].endswith("decimal")
        assert objects["1.0e3"].endswith("double")
        assert objects["true"].endswith("boolean")

    def test_base_resolution(self):
        doc = "@base <http://ex.org/dir/> .\n<s> <p> <o> ."
        (triple,) = parse_triples(doc, RdfFormat.TURTLE)
        assert triple[0] == Iri("http://ex.org/dir/s")

    def test_sparql_style_prefix(self):
        doc = "PREFIX ex: <http://ex.org/>\nex:s ex:p ex:o ."
        (triple,) = parse_triples(doc, RdfFormat.TURTLE)
        assert triple[2] == Iri("http://ex.org/o")

    def test_undeclared_prefix_fails(self):
        with pytest.raises(RdfSyntaxError):
            parse_triples("nope:s nope:p nope:o .", RdfFormat.TURTLE)


class TestRdfXml:
    DOC = """<?xml version="1.0"?>
<rdf:RDF xmlns:rdf="http://www.w3.org/1999/02/22-rdf-syntax-ns#"
         xmlns:owl="http://www.w3.org/2002/07/owl#"
         xmlns:rdfs="http://www.w3.org/2000/01/rdf-schema#"
         xml:base="https://w3id.org/example">
  <owl:Ontology rdf:about="https://w3id.org/example">
    <owl:versionIRI rdf:resource="https://w3id.org/example/1.0.0"/>
    <owl:versionInfo xml:lang="en">1.0.0</owl:versionInfo>
  </owl:Ontology>
  <owl:Class rdf:about="https://w3id.org/example#ExampleClassA">
    <rdfs:label xml:lang="en">Example class A</rdfs:label>
  </owl:Class>
</rdf:RDF>
"""

    def test_typed_nodes_and_literals(self):
        model = parse_ontology(self.DOC.encode(), RdfFormat.RDF_XML)
        assert model.ontology_iri == "https://w3id.org/example"
        values = get_annotations(model, model.ontology_iri, OWL.versionInfo.value)
        assert values == [Literal("1.0.0", language="en")]

    def test_parsetype_collection(self):
        doc = """<?xml version="1.0"?>
<rdf:RDF xmlns:rdf="http://www.w3.org/1999/02/22-rdf-syntax-ns#"
         xmlns:owl="http://www.w3.org/2002/07/owl#">
  <owl:Class rdf:about="http://ex.org/C">
    <owl:intersectionOf rdf:parseType="Collection">
      <owl:Class rdf:about="http://ex.org/A"/>
      <owl:Class rdf:about="http://ex.org/B"/>
    </owl:intersectionOf>
  </owl:Class>
</rdf:RDF>
"""
        triples = parse_triples(doc, RdfFormat.RDF_XML)
        firsts = [o for _, p, o in triples if p.value.endswith("#first")]
        assert Iri("http://ex.org/A") in firsts and Iri("http://ex.org/B") in firsts

    def test_malformed_xml_has_position(self):
        with pytest.raises(RdfSyntaxError) as err:
            parse_triples("<rdf:RDF", RdfFormat.RDF_XML)
        assert err.value.line is not None


class TestNTriples:
    def test_basic_statements(self):
        doc = (
            '<http://ex.org/s> <http://ex.org/p> "v"@en .\n'
            "<http://ex.org/s> <http://ex.org/q> _:b1 .\n"
            '_:b1 <http://ex.org/r> "1"^^<http://www.w3.org/2001/XMLSchema#integer> .\n'
        )
        triples = parse_triples(doc, RdfFormat.NTRIPLES)
        assert len(triples) == 3
        assert triples[0][2] == Literal("v", language="en")
        assert triples[1][2] == BlankNode("b1")

    def test_malformed_line_number(self):
        with pytest.raises(RdfSyntaxError) as err:
            parse_triples("<http://ex.org/s> <http://ex.org/p> .\n", RdfFormat.NTRIPLES)
        assert err.value.line == 1


class TestJsonLd:
    def test_flat_document(self):
        doc = """{
  "@context": {"owl": "http://www.w3.org/2002/07/owl#",
               "info": {"@id": "http://www.w3.org/2002/07/owl#versionInfo"}},
  "@id": "https://w3id.org/example",
  "@type": "owl:Ontology",
  "info": {"@value": "1.0.0", "@language": "en"}
}"""
        model = parse_ontology(doc.encode(), RdfFormat.JSON_LD)
        assert model.ontology_iri == "https://w3id.org/example"
        assert get_annotations(model, model.ontology_iri, OWL.versionInfo.value) == [
            Literal("1.0.0", language="en")
        ]

    def test_remote_context_rejected(self):
        doc = '{"@context": "http://schema.org", "@id": "http://ex.org/x"}'
        with pytest.raises(RdfSyntaxError):
            parse_triples(doc, RdfFormat.JSON_LD)

    def test_invalid_json_position(self):
        with pytest.raises(RdfSyntaxError) as err:
            parse_triples('{"@id": }', RdfFormat.JSON_LD)
        assert err.value.line == 1
