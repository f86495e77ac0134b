from __future__ import annotations

import pytest

from fairvoc.diagram import (
    DanglingEdge,
    DiagramEdge,
    DiagramNode,
    EdgeKind,
    NodeKind,
    NotationStyle,
    build_diagram,
    emit_diagram,
)
from fairvoc.rdf import OWL, RDF, RDFS, Iri, Literal, build_model
from notation_fixture import (
    COVERED_CASES,
    NS,
    edge_tuple,
    expected_arrows,
    expected_diamonds,
    n,
    node_tuple,
    notation_model,
)


def simple_model(*extra):
    triples = [
        (Iri("http://ex.org/onto"), RDF.type, OWL.Ontology),
        (Iri("http://ex.org/onto#ClassA"), RDF.type, OWL.Class),
        (Iri("http://ex.org/onto#ClassB"), RDF.type, OWL.Class),
    ]
    triples.extend(extra)
    return build_model(triples)


class TestBuildDiagram:
    def test_subclass_in_arrows_style(self):
        model = simple_model(
            (Iri("http://ex.org/onto#ClassB"), RDFS.subClassOf, Iri("http://ex.org/onto#ClassA"))
        )
        diagram = build_diagram(model, NotationStyle.ARROWS)
        boxes = [node for node in diagram.nodes if node.kind is NodeKind.CLASS_BOX]
        assert len(boxes) == 2
        (edge,) = diagram.edges
        assert edge.kind is EdgeKind.GENERALIZATION
        assert edge.stereotype is None

    def test_subclass_in_diamonds_style(self):
        model = simple_model(
            (Iri("http://ex.org/onto#ClassB"), RDFS.subClassOf, Iri("http://ex.org/onto#ClassA"))
        )
        (edge,) = build_diagram(model, NotationStyle.DIAMONDS).edges
        assert edge.kind is EdgeKind.DEPENDENCY
        assert edge.stereotype == "<<rdfs:subClassOf>>"

    def test_functional_datatype_property_label(self):
        model = simple_model(
            (Iri("http://ex.org/onto#age"), RDF.type, OWL.DatatypeProperty),
            (Iri("http://ex.org/onto#age"), RDF.type, OWL.FunctionalProperty),
            (Iri("http://ex.org/onto#age"), RDFS.domain, Iri("http://ex.org/onto#ClassA")),
            (
                Iri("http://ex.org/onto#age"),
                RDFS.range,
                Iri("http://www.w3.org/2001/XMLSchema#integer"),
            ),
        )
        diagram = build_diagram(model, NotationStyle.ARROWS)
        box = next(node for node in diagram.nodes if node.id.endswith("#age"))
        assert box.label == "age :: xsd:integer (F)"

    def test_empty_ontology(self):
        model = build_model([(Iri("http://ex.org/onto"), RDF.type, OWL.Ontology)])
        diagram = build_diagram(model, NotationStyle.ARROWS)
        assert diagram.nodes == () and diagram.edges == ()
        assert diagram.axiom_count == 0

    def test_annotations_are_not_axioms(self):
        model = simple_model(
            (Iri("http://ex.org/onto#ClassA"), RDFS.label, Literal("A", language="en"))
        )
        diagram = build_diagram(model, NotationStyle.ARROWS)
        assert diagram.axiom_count == 2  # the two class declarations
        assert diagram.skipped == ()

    def test_unmappable_axiom_lands_in_skipped(self):
        instance_link = (
            Iri("http://ex.org/onto#i1"),
            Iri("http://ex.org/onto#relatesTo"),
            Iri("http://ex.org/onto#i2"),
        )
        model = simple_model(instance_link)
        diagram = build_diagram(model, NotationStyle.ARROWS)
        assert instance_link in diagram.skipped
        assert diagram.mapped_count + len(diagram.skipped) == diagram.axiom_count


class TestNotationCoverage:
    @pytest.mark.parametrize(
        "style,expected",
        [
            (NotationStyle.ARROWS, expected_arrows),
            (NotationStyle.DIAMONDS, expected_diamonds),
        ],
        ids=["arrows", "diamonds"],
    )
    def test_hand_enumerated_table(self, style, expected):
        diagram = build_diagram(notation_model(), style)
        expected_nodes, expected_edges = expected()

        got_nodes = sorted(node_tuple(node) for node in diagram.nodes)
        want_nodes = sorted(expected_nodes)
        assert got_nodes == want_nodes

        got_edges = sorted(edge_tuple(edge) for edge in diagram.edges)
        want_edges = sorted(expected_edges)
        assert got_edges == want_edges

        assert diagram.skipped == ()

    def test_case_list_is_complete(self):
        # every notation item appears, with both variants where two exist
        assert len(COVERED_CASES) == len(set(COVERED_CASES)) == 39
        items = {case.split(".")[0] + "." + case.split(".")[1] for case in COVERED_CASES}
        assert items == {
            "1.a", "1.b", "1.c", "1.d", "1.e", "1.f", "1.g",
            "2.a", "2.b", "2.c", "2.d", "2.e", "2.f", "2.g", "2.h",
            "3.a", "3.b", "3.c", "3.d", "3.e",
            "4.a", "4.b",
        }

    def test_restriction_tooltip(self):
        diagram = build_diagram(notation_model(), NotationStyle.ARROWS)
        anon = next(node for node in diagram.nodes if node.id == "_:rb")
        assert anon.tooltip == "someValuesFrom(opDR, B)"

    def test_style_purity(self):
        arrows = build_diagram(notation_model(), NotationStyle.ARROWS)
        diamonds = build_diagram(notation_model(), NotationStyle.DIAMONDS)
        assert not any(n_.kind is NodeKind.PROPERTY_DIAMOND for n_ in arrows.nodes)
        assert not any(e.kind is EdgeKind.GENERALIZATION for e in diamonds.edges)

    def test_accounting_holds_in_both_styles(self):
        for style in NotationStyle:
            diagram = build_diagram(notation_model(), style)
            assert diagram.mapped_count + len(diagram.skipped) == diagram.axiom_count


class TestEmitDiagram:
    def test_two_node_subclass_dot(self):
        model = simple_model(
            (Iri("http://ex.org/onto#ClassB"), RDFS.subClassOf, Iri("http://ex.org/onto#ClassA"))
        )
        text = emit_diagram(build_diagram(model, NotationStyle.ARROWS))
        assert '"http://ex.org/onto#ClassA" [shape=box, label="ClassA"];' in text
        assert '"http://ex.org/onto#ClassB" -> "http://ex.org/onto#ClassA" [arrowhead=onormal];' in text

    def test_byte_determinism(self):
        model = notation_model()
        first = emit_diagram(build_diagram(model, NotationStyle.ARROWS))
        second = emit_diagram(build_diagram(model, NotationStyle.ARROWS))
        assert first == second

    def test_dangling_edge_rejected(self):
        nodes = [DiagramNode("a", NodeKind.CLASS_BOX, label="a")]
        edges = [DiagramEdge("x", "a", "missing", EdgeKind.DEPENDENCY)]
        with pytest.raises(DanglingEdge):
            emit_diagram(nodes, edges)

    def test_edge_to_edge_becomes_junction(self):
        diagram = build_diagram(notation_model(), NotationStyle.ARROWS)
        text = emit_diagram(diagram)
        assert f'"junction:{NS}opSub"' in text
        assert f'"junction:{NS}opSub" -> "junction:{NS}opSuper"' in text

    def test_underlined_individuals(self):
        diagram = build_diagram(notation_model(), NotationStyle.ARROWS)
        text = emit_diagram(diagram)
        assert "label=<<u>ind2 : A</u>>" in text

    def test_golden_files(self, fixtures_dir):
        model = notation_model()
        for style, name in (
            (NotationStyle.ARROWS, "notation_arrows.dot"),
            (NotationStyle.DIAMONDS, "notation_diamonds.dot"),
        ):
            golden = (fixtures_dir / name).read_text()
            assert emit_diagram(build_diagram(model, style)) == golden
