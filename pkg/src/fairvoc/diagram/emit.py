"""Deterministic DOT rendering of the notation graph."""
from __future__ import annotations

from typing import Dict, List, Sequence, Set, Union

from .graph import Diagram, DiagramEdge, DiagramNode, EdgeKind, NodeKind


class DanglingEdge(ValueError):
    """An edge references an id that is neither a node nor an association edge."""


def _quote(text: str) -> str:
    return '"' + text.replace("\\", "\\\\").replace('"', '\\"') + '"'


def _label_attr(lines: Sequence[str]) -> str:
    escaped = [line.replace("\\", "\\\\").replace('"', '\\"') for line in lines]
    return 'label="' + "\\n".join(escaped) + '"'


def _html_escape(text: str) -> str:
    return text.replace("&", "&amp;").replace("<", "&lt;").replace(">", "&gt;")


def _node_attrs(node: DiagramNode) -> List[str]:
    attrs: List[str] = []
    label_lines = list(node.stereotypes)
    if node.label is not None and node.label not in label_lines:
        label_lines.append(node.label)

    if node.kind in (NodeKind.CLASS_BOX, NodeKind.ANONYMOUS_CLASS_BOX):
        attrs.append("shape=box")
        attrs.append(_label_attr(label_lines))
        if node.kind is NodeKind.ANONYMOUS_CLASS_BOX:
            attrs.append("width=0.6")
            attrs.append("height=0.35")
        if node.dashed:
            attrs.append("style=dashed")
    elif node.kind is NodeKind.SET_OPERATOR_CIRCLE:
        attrs.append("shape=circle")
        attrs.append(_label_attr(label_lines))
    elif node.kind is NodeKind.PROPERTY_DIAMOND:
        attrs.append("shape=diamond")
        attrs.append(_label_attr(label_lines))
    else:  # individual box: underline via an HTML-like label
        attrs.append("shape=box")
        html_lines = "<br/>".join(_html_escape(line) for line in label_lines)
        attrs.append(f"label=<<u>{html_lines}</u>>")
    if node.tooltip:
        attrs.append(f"tooltip={_quote(node.tooltip)}")
    return attrs


def _edge_attrs(edge: DiagramEdge) -> List[str]:
    attrs: List[str] = []
    plain = edge.label is None and edge.stereotype is None and not edge.bidirectional
    if edge.kind is EdgeKind.GENERALIZATION:
        attrs.append("arrowhead=onormal")
    elif edge.kind is EdgeKind.DEPENDENCY:
        attrs.append("style=dashed")
        attrs.append("arrowhead=vee")
    elif edge.kind is EdgeKind.SOLID_ASSOCIATION:
        attrs.append("dir=none" if plain else "arrowhead=vee")
    else:
        attrs.append("style=dotted")
        attrs.append("dir=none" if plain else "arrowhead=vee")
    if edge.bidirectional:
        attrs.append("dir=both")
        attrs.append("arrowtail=vee")
    label_lines = []
    if edge.stereotype:
        label_lines.append(edge.stereotype)
    if edge.label:
        label_lines.append(edge.label)
    if label_lines:
        attrs.append(_label_attr(label_lines))
    return attrs


def emit_diagram(
    nodes: Union[Sequence[DiagramNode], Diagram],
    edges: Sequence[DiagramEdge] = (),
    graph_name: str = "ontology_notation",
) -> str:
    """Stable-sorted DOT text; same input, byte-identical output.

    Accepts either a Diagram or explicit (nodes, edges). Edges whose id other
    edges reference are split at an invisible junction point so property-axiom
    arrows can attach to association arrows.
    """
    if isinstance(nodes, Diagram):
        nodes, edges = nodes.nodes, nodes.edges

    node_ids = {node.id for node in nodes}
    association_ids = {
        edge.id
        for edge in edges
        if edge.kind in (EdgeKind.SOLID_ASSOCIATION, EdgeKind.DOTTED_ASSOCIATION)
    }
    referenced_edges: Set[str] = set()
    for edge in edges:
        for endpoint in (edge.source, edge.target):
            if endpoint in node_ids:
                continue
            if endpoint in association_ids and endpoint != edge.id:
                referenced_edges.add(endpoint)
            else:
                raise DanglingEdge(
                    f"edge {edge.id} references unknown endpoint {endpoint!r}"
                )

    lines = [f"digraph {graph_name} {{"]
    lines.append("  rankdir=BT;")
    lines.append('  node [fontname="Helvetica", fontsize=10];')
    lines.append('  edge [fontname="Helvetica", fontsize=9];')
    lines.append("")

    for node in sorted(nodes, key=lambda n: n.id):
        lines.append(f"  {_quote(node.id)} [{', '.join(_node_attrs(node))}];")

    junction: Dict[str, str] = {}
    for edge_id in sorted(referenced_edges):
        junction[edge_id] = f"junction:{edge_id}"
        lines.append(
            f'  {_quote(junction[edge_id])} [shape=point, width=0.02, label=""];'
        )
    lines.append("")

    def sort_key(edge: DiagramEdge):
        return (
            edge.source,
            edge.target,
            edge.kind.value,
            edge.stereotype or "",
            edge.label or "",
            edge.id,
        )

    for edge in sorted(edges, key=sort_key):
        if edge.id in junction:
            mid = junction[edge.id]
            style = "style=dotted, " if edge.kind is EdgeKind.DOTTED_ASSOCIATION else ""
            label = f", {_label_attr([edge.label])}" if edge.label else ""
            lines.append(
                f"  {_quote(edge.source)} -> {_quote(mid)} [{style}dir=none{label}];"
            )
            lines.append(
                f"  {_quote(mid)} -> {_quote(edge.target)} [{style}arrowhead=vee];"
            )
            continue
        source = junction.get(edge.source, edge.source)
        target = junction.get(edge.target, edge.target)
        lines.append(
            f"  {_quote(source)} -> {_quote(target)} [{', '.join(_edge_attrs(edge))}];"
        )
    lines.append("}")
    return "\n".join(lines) + "\n"
