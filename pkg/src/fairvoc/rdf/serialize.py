"""Deterministic writers for the four supported serializations."""
from __future__ import annotations

import json
import re
from typing import Dict, Iterable, List, Tuple
from xml.sax.saxutils import escape as xml_escape
from xml.sax.saxutils import quoteattr

from .errors import SerializationError
from .model import OntologyModel, RdfFormat
from .terms import (
    RDF,
    WELL_KNOWN_PREFIXES,
    BlankNode,
    Iri,
    Literal,
    Node,
    Triple,
    term_sort_key,
    triple_sort_key,
)

_NCNAME = re.compile(r"[A-Za-z_][A-Za-z0-9_.-]*$")


def _escape_string(value: str) -> str:
    out = value.replace("\\", "\\\\").replace('"', '\\"')
    out = out.replace("\n", "\\n").replace("\r", "\\r").replace("\t", "\\t")
    return out


def _nt_term(term: Node) -> str:
    if isinstance(term, Iri):
        return f"<{term.value}>"
    if isinstance(term, BlankNode):
        return f"_:{term.label}"
    lex = f'"{_escape_string(term.lexical)}"'
    if term.language:
        return f"{lex}@{term.language}"
    if term.datatype:
        return f"{lex}^^<{term.datatype}>"
    return lex


def to_ntriples(triples: Iterable[Triple]) -> str:
    lines = sorted(
        f"{_nt_term(s)} {_nt_term(p)} {_nt_term(o)} ." for s, p, o in triples
    )
    return "\n".join(lines) + ("\n" if lines else "")


def _turtle_prefixes(triples: Iterable[Triple]) -> List[Tuple[str, str]]:
    used: Dict[str, str] = {}
    def visit(term: Node) -> None:
        if not isinstance(term, Iri):
            return
        for prefix, base in WELL_KNOWN_PREFIXES:
            rest = term.value[len(base):]
            if term.value.startswith(base) and rest and _NCNAME.match(rest):
                used[prefix] = base
                return
    for s, p, o in triples:
        visit(s)
        visit(p)
        visit(o)
    return sorted(used.items())


def _turtle_term(term: Node, prefixes: List[Tuple[str, str]]) -> str:
    if isinstance(term, Iri):
        if term == RDF.type:
            return "a"
        for prefix, base in prefixes:
            rest = term.value[len(base):]
            if term.value.startswith(base) and rest and _NCNAME.match(rest):
                return f"{prefix}:{rest}"
        return f"<{term.value}>"
    return _nt_term(term)


def to_turtle(triples: Iterable[Triple]) -> str:
    triples = sorted(triples, key=triple_sort_key)
    prefixes = _turtle_prefixes(triples)
    lines = [f"@prefix {prefix}: <{base}> ." for prefix, base in prefixes]
    if lines:
        lines.append("")

    by_subject: Dict[Node, List[Triple]] = {}
    for t in triples:
        by_subject.setdefault(t[0], []).append(t)

    for subject in sorted(by_subject, key=term_sort_key):
        subject_text = _turtle_term(subject, prefixes)
        parts = []
        for s, p, o in by_subject[subject]:
            parts.append(f"{_turtle_term(p, prefixes)} {_turtle_term(o, prefixes)}")
        if len(parts) == 1:
            lines.append(f"{subject_text} {parts[0]} .")
        else:
            lines.append(f"{subject_text} {parts[0]} ;")
            for part in parts[1:-1]:
                lines.append(f"    {part} ;")
            lines.append(f"    {parts[-1]} .")
        lines.append("")
    while lines and lines[-1] == "":
        lines.pop()
    return "\n".join(lines) + "\n"


def _split_iri(iri: str) -> Tuple[str, str]:
    for idx in range(len(iri) - 1, -1, -1):
        if iri[idx] in "#/":
            local = iri[idx + 1 :]
            if local and _NCNAME.match(local):
                return iri[: idx + 1], local
            break
    raise SerializationError(f"cannot derive an XML QName for predicate <{iri}>")


def to_rdfxml(triples: Iterable[Triple]) -> str:
    triples = sorted(triples, key=triple_sort_key)
    namespaces: Dict[str, str] = {RDF.base: "rdf"}
    for _, p, _ in triples:
        ns, _local = _split_iri(p.value)
        if ns not in namespaces:
            namespaces[ns] = f"ns{len(namespaces)}"
    decls = " ".join(
        f'xmlns:{prefix}={quoteattr(ns)}'
        for ns, prefix in sorted(namespaces.items(), key=lambda kv: kv[1])
    )

    lines = ['<?xml version="1.0" encoding="UTF-8"?>', f"<rdf:RDF {decls}>"]
    by_subject: Dict[Node, List[Triple]] = {}
    for t in triples:
        by_subject.setdefault(t[0], []).append(t)
    for subject in sorted(by_subject, key=term_sort_key):
        if isinstance(subject, Iri):
            lines.append(f"  <rdf:Description rdf:about={quoteattr(subject.value)}>")
        else:
            lines.append(f"  <rdf:Description rdf:nodeID={quoteattr(subject.label)}>")
        for _, p, o in by_subject[subject]:
            ns, local = _split_iri(p.value)
            tag = f"{namespaces[ns]}:{local}"
            if isinstance(o, Iri):
                lines.append(f"    <{tag} rdf:resource={quoteattr(o.value)}/>")
            elif isinstance(o, BlankNode):
                lines.append(f"    <{tag} rdf:nodeID={quoteattr(o.label)}/>")
            else:
                attrs = ""
                if o.language:
                    attrs = f" xml:lang={quoteattr(o.language)}"
                elif o.datatype:
                    attrs = f" rdf:datatype={quoteattr(o.datatype)}"
                lines.append(f"    <{tag}{attrs}>{xml_escape(o.lexical)}</{tag}>")
        lines.append("  </rdf:Description>")
    lines.append("</rdf:RDF>")
    return "\n".join(lines) + "\n"


def _jsonld_value(term: Node) -> object:
    if isinstance(term, Iri):
        return {"@id": term.value}
    if isinstance(term, BlankNode):
        return {"@id": f"_:{term.label}"}
    if term.language:
        return {"@value": term.lexical, "@language": term.language}
    if term.datatype:
        return {"@value": term.lexical, "@type": term.datatype}
    return {"@value": term.lexical}


def to_jsonld(triples: Iterable[Triple]) -> str:
    by_subject: Dict[Node, List[Triple]] = {}
    for t in sorted(triples, key=triple_sort_key):
        by_subject.setdefault(t[0], []).append(t)
    graph = []
    for subject in sorted(by_subject, key=term_sort_key):
        ident = subject.value if isinstance(subject, Iri) else f"_:{subject.label}"
        node: Dict[str, object] = {"@id": ident}
        types = []
        props: Dict[str, List[object]] = {}
        for _, p, o in by_subject[subject]:
            if p == RDF.type and isinstance(o, Iri):
                types.append(o.value)
            else:
                props.setdefault(p.value, []).append(_jsonld_value(o))
        if types:
            node["@type"] = sorted(types)
        for pred in sorted(props):
            node[pred] = props[pred]
        graph.append(node)
    return json.dumps({"@graph": graph}, indent=2, sort_keys=False) + "\n"


_WRITERS = {
    RdfFormat.TURTLE: to_turtle,
    RdfFormat.NTRIPLES: to_ntriples,
    RdfFormat.RDF_XML: to_rdfxml,
    RdfFormat.JSON_LD: to_jsonld,
}


def serialize(model: OntologyModel, fmt: RdfFormat) -> str:
    return serialize_triples(model.triples, fmt)


def serialize_triples(triples: Iterable[Triple], fmt: RdfFormat) -> str:
    return _WRITERS[fmt](triples)
