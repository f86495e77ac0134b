"""Maps OWL axioms onto the notation graph, exhaustively and accountably.

Every structural triple (the axiom universe: everything except ontology-header
triples, annotation assertions, annotation-property declarations, and rdf
list plumbing) is either consumed by a production below or reported in the
skipped list, so nothing silently disappears from a diagram.
"""
from __future__ import annotations

from typing import Dict, List, Optional, Sequence, Set, Tuple

from ..rdf import (
    KNOWN_ANNOTATION_PROPERTIES,
    OWL,
    RDF,
    RDFS,
    BlankNode,
    Iri,
    Literal,
    Node,
    OntologyModel,
    Subject,
    Triple,
    local_name,
    qname,
)
from .graph import (
    Diagram,
    DiagramEdge,
    DiagramNode,
    EdgeKind,
    NodeKind,
    NotationStyle,
    OPERATOR_STEREOTYPES,
    OPERATOR_SYMBOLS,
    SetOperator,
)

_CLASS_TYPES = (OWL.Class, RDFS.Class)
_CHARACTERISTICS = (
    (OWL.FunctionalProperty, "F", "<<owl:FunctionalProperty>>"),
    (OWL.TransitiveProperty, "T", "<<owl:TransitiveProperty>>"),
    (OWL.SymmetricProperty, "S", "<<owl:SymmetricProperty>>"),
)
_RESTRICTION_PREDICATES = (
    OWL.onProperty,
    OWL.someValuesFrom,
    OWL.allValuesFrom,
    OWL.hasValue,
    OWL.cardinality,
    OWL.minCardinality,
    OWL.maxCardinality,
    OWL.onClass,
    OWL.qualifiedCardinality,
)


def _term_id(term: Subject) -> str:
    return term.value if isinstance(term, Iri) else "_:" + term.label


class _Builder:
    def __init__(self, model: OntologyModel, style: NotationStyle):
        self.model = model
        self.style = style
        self.arrows = style is NotationStyle.ARROWS
        self.nodes: Dict[str, DiagramNode] = {}
        self.edges: List[DiagramEdge] = []
        self.consumed: Set[Triple] = set()
        self.association_ids: Set[str] = set()

        triples = model.sorted_triples()
        self.by_subject: Dict[Subject, List[Triple]] = {}
        for t in triples:
            self.by_subject.setdefault(t[0], []).append(t)

        annotation_props = set(KNOWN_ANNOTATION_PROPERTIES)
        for s, p, o in triples:
            if p == RDF.type and o == OWL.AnnotationProperty and isinstance(s, Iri):
                annotation_props.add(s.value)

        ontology_subject = Iri(model.ontology_iri)
        self.universe: List[Triple] = []
        for s, p, o in triples:
            if s == ontology_subject:
                continue
            if p.value in annotation_props:
                continue
            if p in (RDF.first, RDF.rest):
                continue
            if p == RDF.type and o == OWL.AnnotationProperty:
                continue
            if p == RDF.type and o == OWL.Ontology:
                continue
            self.universe.append((s, p, o))

        self.classes: Set[str] = set()
        self.object_props: Set[str] = set()
        self.datatype_props: Set[str] = set()
        self.individuals: Set[str] = set()
        self.flags: Dict[str, List[Tuple[str, str]]] = {}
        for s, p, o in self.universe:
            if p != RDF.type or not isinstance(s, Iri):
                continue
            if o in _CLASS_TYPES:
                self.classes.add(s.value)
            elif o == OWL.ObjectProperty:
                self.object_props.add(s.value)
            elif o == OWL.DatatypeProperty:
                self.datatype_props.add(s.value)
            elif o == OWL.NamedIndividual:
                self.individuals.add(s.value)
            else:
                for char_type, letter, stereotype in _CHARACTERISTICS:
                    if o == char_type:
                        self.flags.setdefault(s.value, []).append((letter, stereotype))

    # --- bookkeeping -------------------------------------------------------

    def consume(self, *triples: Triple) -> None:
        self.consumed.update(triples)

    def objects_of(self, subject: Subject, predicate: Iri) -> List[Node]:
        return [o for s, p, o in self.by_subject.get(subject, []) if p == predicate]

    def list_items(self, head: Node) -> List[Node]:
        items: List[Node] = []
        seen = set()
        while isinstance(head, BlankNode) and head not in seen:
            seen.add(head)
            firsts = self.objects_of(head, RDF.first)
            rests = self.objects_of(head, RDF.rest)
            if not firsts:
                break
            items.append(firsts[0])
            head = rests[0] if rests else RDF.nil
        return items

    # --- node helpers ------------------------------------------------------

    def add_node(self, node: DiagramNode) -> str:
        existing = self.nodes.get(node.id)
        if existing is None or existing != node:
            self.nodes[node.id] = node
        return node.id

    def class_box(self, iri: str) -> str:
        return self.add_node(
            DiagramNode(iri, NodeKind.CLASS_BOX, label=self._class_label(iri))
        )

    def _class_label(self, iri: str) -> str:
        return qname(iri) if ":" in qname(iri) else local_name(iri)

    def anonymous_box(self, node_id: str, tooltip: Optional[str] = None) -> str:
        return self.add_node(
            DiagramNode(node_id, NodeKind.ANONYMOUS_CLASS_BOX, tooltip=tooltip)
        )

    def operator_circle(self, node_id: str, operator: SetOperator) -> str:
        # arrows style shows the stereotype text in the circle, diamonds style
        # the bare operator symbol
        label = (
            OPERATOR_STEREOTYPES[operator] if self.arrows else OPERATOR_SYMBOLS[operator]
        )
        return self.add_node(
            DiagramNode(
                node_id,
                NodeKind.SET_OPERATOR_CIRCLE,
                label=label,
                operator=operator,
            )
        )

    # --- class expressions ---------------------------------------------------

    def _blank_expression_kind(self, blank: BlankNode) -> str:
        if self.objects_of(blank, OWL.intersectionOf):
            return "intersection"
        if self.objects_of(blank, OWL.unionOf):
            return "union"
        if any(self.objects_of(blank, pred) for pred in _RESTRICTION_PREDICATES):
            return "restriction"
        if Iri(OWL.Restriction.value) in self.objects_of(blank, RDF.type):
            return "restriction"
        return "plain"

    def _restriction_tooltip(self, blank: BlankNode) -> str:
        pieces = []
        on_property = self.objects_of(blank, OWL.onProperty)
        prop = local_name(on_property[0].value) if on_property and isinstance(on_property[0], Iri) else "?"
        for predicate in _RESTRICTION_PREDICATES[1:]:
            for value in self.objects_of(blank, predicate):
                if isinstance(value, Iri):
                    shown = self._class_label(value.value)
                elif isinstance(value, Literal):
                    shown = value.lexical
                else:
                    shown = "..."
                pieces.append(f"{local_name(predicate.value)}({prop}, {shown})")
        return "; ".join(pieces) or f"restriction on {prop}"

    def _consume_expression_triples(self, blank: BlankNode) -> None:
        for triple in self.by_subject.get(blank, []):
            s, p, o = triple
            if p in (OWL.intersectionOf, OWL.unionOf) or p in _RESTRICTION_PREDICATES:
                self.consume(triple)
            elif p == RDF.type and o in (OWL.Restriction, OWL.Class):
                self.consume(triple)

    def expression_node(self, term: Node) -> Optional[str]:
        """Node id standing for a class expression (IRI class, set-operator
        circle, restriction box); None when the term is no class expression."""
        if isinstance(term, Iri):
            return self.class_box(term.value)
        if not isinstance(term, BlankNode):
            return None
        kind = self._blank_expression_kind(term)
        node_id = _term_id(term)
        self._consume_expression_triples(term)
        if kind in ("intersection", "union"):
            operator = SetOperator.INTERSECTION if kind == "intersection" else SetOperator.UNION
            circle = self.operator_circle(node_id, operator)
            predicate = OWL.intersectionOf if kind == "intersection" else OWL.unionOf
            heads = self.objects_of(term, predicate)
            for item in self.list_items(heads[0]) if heads else []:
                operand = self.expression_node(item)
                if operand:
                    self.edges.append(
                        DiagramEdge(
                            f"operand:{circle}->{operand}",
                            circle,
                            operand,
                            EdgeKind.SOLID_ASSOCIATION,
                        )
                    )
            return circle
        tooltip = self._restriction_tooltip(term) if kind == "restriction" else None
        return self.anonymous_box(node_id, tooltip=tooltip)

    # --- properties -----------------------------------------------------------

    def _flag_suffix(self, prop: str) -> str:
        letters = sorted({letter for letter, _ in self.flags.get(prop, [])})
        return "".join(f"({letter})" for letter in letters)

    def _flag_stereotypes(self, prop: str) -> Tuple[str, ...]:
        return tuple(sorted({st for _, st in self.flags.get(prop, [])}))

    def _consume_characteristics(self, prop: str) -> None:
        subject = Iri(prop)
        for char_type, _, _ in _CHARACTERISTICS:
            self.consume((subject, RDF.type, char_type))

    def _domains_and_ranges(self, prop: str) -> Tuple[List[Node], List[Node]]:
        subject = Iri(prop)
        domains = self.objects_of(subject, RDFS.domain)
        ranges = self.objects_of(subject, RDFS.range)
        for triple in self.by_subject.get(subject, []):
            if triple[1] in (RDFS.domain, RDFS.range):
                self.consume(triple)
        return domains, ranges

    def _property_label(self, prop: str) -> str:
        suffix = self._flag_suffix(prop)
        return local_name(prop) + (f" {suffix}" if suffix else "")

    def build_object_property(self, prop: str) -> None:
        subject = Iri(prop)
        self.consume((subject, RDF.type, OWL.ObjectProperty))
        self._consume_characteristics(prop)
        domains, ranges = self._domains_and_ranges(prop)
        domain_ids = [n for n in (self.expression_node(d) for d in domains) if n]
        range_ids = [n for n in (self.expression_node(r) for r in ranges) if n]

        if self.arrows:
            label = self._property_label(prop)
            if domain_ids and range_ids:
                index = 0
                for d in domain_ids:
                    for r in range_ids:
                        edge_id = prop if index == 0 else f"{prop}#{index + 1}"
                        index += 1
                        self.edges.append(
                            DiagramEdge(edge_id, d, r, EdgeKind.SOLID_ASSOCIATION, label=label)
                        )
                self.association_ids.add(prop)
            else:
                d = domain_ids[0] if domain_ids else self.anonymous_box(f"{prop}?domain")
                r = range_ids[0] if range_ids else self.anonymous_box(f"{prop}?range")
                self.edges.append(
                    DiagramEdge(prop, d, r, EdgeKind.DOTTED_ASSOCIATION, label=label)
                )
                self.association_ids.add(prop)
            return

        stereotypes = list(self._flag_stereotypes(prop))
        if not domain_ids and not range_ids:
            stereotypes.insert(0, "<<owl:ObjectProperty>>")
        diamond = self.add_node(
            DiagramNode(
                prop,
                NodeKind.PROPERTY_DIAMOND,
                label=local_name(prop),
                stereotypes=tuple(stereotypes),
            )
        )
        for d in domain_ids:
            self.edges.append(
                DiagramEdge(
                    f"domain:{prop}->{d}", diamond, d, EdgeKind.DOTTED_ASSOCIATION,
                    stereotype="<<rdfs:domain>>",
                )
            )
        for r in range_ids:
            self.edges.append(
                DiagramEdge(
                    f"range:{prop}->{r}", diamond, r, EdgeKind.DOTTED_ASSOCIATION,
                    stereotype="<<rdfs:range>>",
                )
            )

    def build_datatype_property(self, prop: str) -> None:
        subject = Iri(prop)
        self.consume((subject, RDF.type, OWL.DatatypeProperty))
        self._consume_characteristics(prop)
        domains, ranges = self._domains_and_ranges(prop)
        domain_ids = [n for n in (self.expression_node(d) for d in domains) if n]
        range_names = [qname(r.value) for r in ranges if isinstance(r, Iri)]

        if self.arrows:
            label = local_name(prop)
            if range_names:
                label += " :: " + range_names[0]
            suffix = self._flag_suffix(prop)
            if suffix:
                label += f" {suffix}"
            box = self.add_node(
                DiagramNode(
                    prop,
                    NodeKind.CLASS_BOX,
                    label=label,
                    dashed=not (domain_ids and range_names),
                )
            )
            attach_kind = (
                EdgeKind.SOLID_ASSOCIATION if domain_ids else EdgeKind.DOTTED_ASSOCIATION
            )
            anchor = domain_ids[0] if domain_ids else self.anonymous_box(f"{prop}?domain")
            self.edges.append(DiagramEdge(f"attach:{prop}", anchor, box, attach_kind))
            for extra in domain_ids[1:]:
                self.edges.append(
                    DiagramEdge(f"attach:{prop}#{extra}", extra, box, attach_kind)
                )
            return

        stereotypes = list(self._flag_stereotypes(prop))
        if not domain_ids and not range_names:
            stereotypes.insert(0, "<<owl:DatatypeProperty>>")
        diamond = self.add_node(
            DiagramNode(
                prop,
                NodeKind.PROPERTY_DIAMOND,
                label=local_name(prop),
                stereotypes=tuple(stereotypes),
            )
        )
        for d in domain_ids:
            self.edges.append(
                DiagramEdge(
                    f"domain:{prop}->{d}", diamond, d, EdgeKind.DOTTED_ASSOCIATION,
                    stereotype="<<rdfs:domain>>",
                )
            )
        for r in ranges:
            if isinstance(r, Iri):
                datatype_box = self.class_box(r.value)
                self.edges.append(
                    DiagramEdge(
                        f"range:{prop}->{datatype_box}", diamond, datatype_box,
                        EdgeKind.DOTTED_ASSOCIATION, stereotype="<<rdfs:range>>",
                    )
                )

    # --- axiom edges ------------------------------------------------------------

    def class_axioms(self) -> None:
        for triple in list(self.universe):
            s, p, o = triple
            if p == RDFS.subClassOf:
                source = self.expression_node(s)
                target = self.expression_node(o)
                if source and target:
                    self.consume(triple)
                    if self.arrows:
                        self.edges.append(
                            DiagramEdge(
                                f"subclass:{source}->{target}", source, target,
                                EdgeKind.GENERALIZATION,
                            )
                        )
                    else:
                        self.edges.append(
                            DiagramEdge(
                                f"subclass:{source}->{target}", source, target,
                                EdgeKind.DEPENDENCY, stereotype="<<rdfs:subClassOf>>",
                            )
                        )
            elif p in (OWL.equivalentClass, OWL.disjointWith):
                operator = (
                    SetOperator.EQUIVALENT if p == OWL.equivalentClass else SetOperator.DISJOINT
                )
                stereotype = OPERATOR_STEREOTYPES[operator]
                # an expression object (set circle, restriction box) hangs off
                # the defined class by a plain connector
                if isinstance(o, BlankNode):
                    source = self.expression_node(s)
                    target = self.expression_node(o)
                    if source and target:
                        self.consume(triple)
                        self.edges.append(
                            DiagramEdge(
                                f"defines:{source}->{target}", source, target,
                                EdgeKind.SOLID_ASSOCIATION,
                            )
                        )
                    continue
                if not (isinstance(s, (Iri, BlankNode)) and isinstance(o, Iri)):
                    continue
                source = self.expression_node(s)
                target = self.expression_node(o)
                if not (source and target):
                    continue
                self.consume(triple)
                if self.arrows:
                    self.edges.append(
                        DiagramEdge(
                            f"{operator.value}:{source}->{target}", source, target,
                            EdgeKind.DEPENDENCY, stereotype=stereotype, bidirectional=True,
                        )
                    )
                else:
                    pair = sorted((source, target))
                    circle = self.operator_circle(
                        f"{operator.value}:{pair[0]}|{pair[1]}", operator
                    )
                    for endpoint in pair:
                        self.edges.append(
                            DiagramEdge(
                                f"link:{circle}->{endpoint}", circle, endpoint,
                                EdgeKind.SOLID_ASSOCIATION,
                            )
                        )
            elif p in (OWL.intersectionOf, OWL.unionOf) and isinstance(s, Iri):
                # a named class defined directly as a set expression
                operator = (
                    SetOperator.INTERSECTION if p == OWL.intersectionOf else SetOperator.UNION
                )
                owner = self.class_box(s.value)
                circle = self.operator_circle(f"{owner}!{operator.value}", operator)
                self.consume(triple)
                self.edges.append(
                    DiagramEdge(
                        f"defines:{owner}->{circle}", owner, circle,
                        EdgeKind.SOLID_ASSOCIATION,
                    )
                )
                for item in self.list_items(o):
                    operand = self.expression_node(item)
                    if operand:
                        self.edges.append(
                            DiagramEdge(
                                f"operand:{circle}->{operand}", circle, operand,
                                EdgeKind.SOLID_ASSOCIATION,
                            )
                        )

    def property_axioms(self) -> None:
        axioms = (
            (RDFS.subPropertyOf, "<<owl:subPropertyOf>>", False),
            (OWL.equivalentProperty, "<<owl:equivalentProperty>>", True),
            (OWL.inverseOf, "<<owl:inverseOf>>", True),
        )
        known = self.object_props | self.datatype_props
        for triple in list(self.universe):
            s, p, o = triple
            for predicate, stereotype, bidirectional in axioms:
                if p != predicate:
                    continue
                if not (isinstance(s, Iri) and isinstance(o, Iri)):
                    continue
                if s.value not in known or o.value not in known:
                    continue
                self.consume(triple)
                self.edges.append(
                    DiagramEdge(
                        f"prop-axiom:{s.value}->{o.value}:{stereotype}",
                        s.value,
                        o.value,
                        EdgeKind.DEPENDENCY,
                        stereotype=stereotype,
                        bidirectional=bidirectional,
                    )
                )

    def individuals_and_membership(self) -> None:
        # membership: instances typed by a class present in this model
        memberships: Dict[str, List[str]] = {}
        for triple in list(self.universe):
            s, p, o = triple
            if (
                p == RDF.type
                and isinstance(s, Iri)
                and isinstance(o, Iri)
                and o.value in self.classes
                and s.value not in self.classes | self.object_props | self.datatype_props
            ):
                memberships.setdefault(s.value, []).append(o.value)
                self.consume(triple)
                self.individuals.add(s.value)

        for individual in sorted(self.individuals):
            subject = Iri(individual)
            self.consume((subject, RDF.type, OWL.NamedIndividual))
            classes = sorted(memberships.get(individual, []))
            if self.arrows and classes:
                shown = ", ".join(self._class_label(c) for c in classes)
                label = f"{local_name(individual)} : {shown}"
            else:
                label = local_name(individual)
            self.add_node(
                DiagramNode(individual, NodeKind.INDIVIDUAL_BOX, label=label, underlined=True)
            )
            if not self.arrows:
                for class_iri in classes:
                    box = self.class_box(class_iri)
                    self.edges.append(
                        DiagramEdge(
                            f"member:{individual}->{box}", individual, box,
                            EdgeKind.DEPENDENCY, stereotype="<<rdf:type>>",
                        )
                    )

    # --- top level ---------------------------------------------------------------

    def build(self) -> Diagram:
        for class_iri in sorted(self.classes):
            self.class_box(class_iri)
            self.consume((Iri(class_iri), RDF.type, OWL.Class))
            self.consume((Iri(class_iri), RDF.type, RDFS.Class))
        for prop in sorted(self.object_props):
            self.build_object_property(prop)
        for prop in sorted(self.datatype_props):
            self.build_datatype_property(prop)
        self.class_axioms()
        self.property_axioms()
        self.individuals_and_membership()

        skipped = tuple(t for t in self.universe if t not in self.consumed)
        nodes = tuple(self.nodes[node_id] for node_id in sorted(self.nodes))
        edges = tuple(
            sorted(
                self.edges,
                key=lambda e: (e.source, e.target, e.kind.value, e.stereotype or "", e.label or "", e.id),
            )
        )
        return Diagram(nodes=nodes, edges=edges, skipped=skipped, axiom_count=len(self.universe))


def build_diagram(model: OntologyModel, style: NotationStyle) -> Diagram:
    """Apply the notation mapping to every axiom of the model."""
    return _Builder(model, style).build()
