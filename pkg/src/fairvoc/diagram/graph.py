"""Abstract notation graph for the UML-flavoured ontology diagrams."""
from __future__ import annotations

import enum
from dataclasses import dataclass, field
from typing import Optional, Tuple

from ..rdf import Triple


class NotationStyle(enum.Enum):
    """The two rendering families: association arrows with labels, or explicit
    diamond/circle nodes carrying stereotypes. One style per diagram."""

    ARROWS = "arrows"
    DIAMONDS = "diamonds"


class NodeKind(enum.Enum):
    CLASS_BOX = "class-box"
    ANONYMOUS_CLASS_BOX = "anonymous-class-box"
    SET_OPERATOR_CIRCLE = "set-operator-circle"
    PROPERTY_DIAMOND = "property-diamond"
    INDIVIDUAL_BOX = "individual-box"


class SetOperator(enum.Enum):
    INTERSECTION = "intersection"
    UNION = "union"
    EQUIVALENT = "equivalent"
    DISJOINT = "disjoint"


OPERATOR_SYMBOLS = {
    SetOperator.INTERSECTION: "⊓",  # square cap
    SetOperator.UNION: "⊔",  # square cup
    SetOperator.EQUIVALENT: "≡",  # identical to
    SetOperator.DISJOINT: "⊥",  # up tack
}

OPERATOR_STEREOTYPES = {
    SetOperator.INTERSECTION: "<<owl:intersectionOf>>",
    SetOperator.UNION: "<<owl:unionOf>>",
    SetOperator.EQUIVALENT: "<<owl:equivalentClass>>",
    SetOperator.DISJOINT: "<<owl:disjointWith>>",
}


class EdgeKind(enum.Enum):
    GENERALIZATION = "generalization"
    DEPENDENCY = "dependency"
    SOLID_ASSOCIATION = "solid-association"
    DOTTED_ASSOCIATION = "dotted-association"


#: The closed stereotype vocabulary for edges.
EDGE_STEREOTYPES = frozenset(
    {
        "<<rdfs:subClassOf>>",
        "<<owl:equivalentClass>>",
        "<<owl:disjointWith>>",
        "<<rdf:type>>",
        "<<rdfs:domain>>",
        "<<rdfs:range>>",
        "<<owl:subPropertyOf>>",
        "<<owl:inverseOf>>",
        "<<owl:equivalentProperty>>",
    }
)

#: Stereotypes that may sit on a diamond or circle node.
NODE_STEREOTYPES = frozenset(
    {
        "<<owl:ObjectProperty>>",
        "<<owl:DatatypeProperty>>",
        "<<owl:FunctionalProperty>>",
        "<<owl:TransitiveProperty>>",
        "<<owl:SymmetricProperty>>",
        "<<owl:intersectionOf>>",
        "<<owl:unionOf>>",
    }
)


@dataclass(frozen=True)
class DiagramNode:
    id: str
    kind: NodeKind
    label: Optional[str] = None
    underlined: bool = False
    operator: Optional[SetOperator] = None
    stereotypes: Tuple[str, ...] = ()
    dashed: bool = False
    tooltip: Optional[str] = None

    def __post_init__(self) -> None:
        if self.kind is NodeKind.CLASS_BOX and not self.label:
            raise ValueError(f"class box {self.id} needs a label")
        if self.kind is NodeKind.ANONYMOUS_CLASS_BOX and self.label:
            raise ValueError(f"anonymous class box {self.id} must not carry a label")
        if self.kind is NodeKind.INDIVIDUAL_BOX and not self.underlined:
            raise ValueError(f"individual box {self.id} must be underlined")
        if self.underlined and self.kind is not NodeKind.INDIVIDUAL_BOX:
            raise ValueError("only individual boxes are underlined")
        for stereotype in self.stereotypes:
            if stereotype not in NODE_STEREOTYPES:
                raise ValueError(f"unknown node stereotype {stereotype}")


@dataclass(frozen=True)
class DiagramEdge:
    """Endpoints name node ids, or — for property-axiom edges in the arrows
    style — the id of an association edge standing for a property."""

    id: str
    source: str
    target: str
    kind: EdgeKind
    stereotype: Optional[str] = None
    bidirectional: bool = False
    label: Optional[str] = None

    def __post_init__(self) -> None:
        if self.stereotype is not None:
            if self.kind is EdgeKind.GENERALIZATION:
                raise ValueError("generalization edges carry no stereotype")
            if self.stereotype not in EDGE_STEREOTYPES:
                raise ValueError(f"unknown edge stereotype {self.stereotype}")


@dataclass(frozen=True)
class Diagram:
    nodes: Tuple[DiagramNode, ...]
    edges: Tuple[DiagramEdge, ...]
    skipped: Tuple[Triple, ...] = field(default_factory=tuple)
    axiom_count: int = 0

    @property
    def mapped_count(self) -> int:
        return self.axiom_count - len(self.skipped)
