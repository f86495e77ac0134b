"""OWL-axiom to UML-flavoured notation mapping and DOT emission."""
from .build import build_diagram
from .emit import DanglingEdge, emit_diagram
from .graph import (
    EDGE_STEREOTYPES,
    NODE_STEREOTYPES,
    OPERATOR_STEREOTYPES,
    OPERATOR_SYMBOLS,
    Diagram,
    DiagramEdge,
    DiagramNode,
    EdgeKind,
    NodeKind,
    NotationStyle,
    SetOperator,
)

__all__ = [
    "DanglingEdge",
    "Diagram",
    "DiagramEdge",
    "DiagramNode",
    "EDGE_STEREOTYPES",
    "EdgeKind",
    "NODE_STEREOTYPES",
    "NodeKind",
    "NotationStyle",
    "OPERATOR_STEREOTYPES",
    "OPERATOR_SYMBOLS",
    "SetOperator",
    "build_diagram",
    "emit_diagram",
]
