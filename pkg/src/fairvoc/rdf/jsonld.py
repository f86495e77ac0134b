"""JSON-LD reader for the flat subset this tool emits and audits.

Supported: inline @context maps (prefix strings and {"@id":..,"@type":"@id"}
term definitions), @graph, @id, @type, @value/@language, @list, nested node
objects, and compact IRIs. Remote contexts (a string @context other than a
schema-less ignore) are rejected with a typed error rather than fetched.
"""
from __future__ import annotations

import json
import re
from typing import Any, Dict, List, Optional, Union

from .errors import RdfSyntaxError
from .terms import RDF, XSD, BlankNode, Iri, Literal, Node, Subject, Triple

_ABSOLUTE_IRI = re.compile(r"^[A-Za-z][A-Za-z0-9+.-]*:")


class _Context:
    def __init__(self):
        self.terms: Dict[str, str] = {}
        self.iri_typed: set[str] = set()

    def load(self, raw: Any) -> None:
        if raw is None:
            return
        if isinstance(raw, list):
            for item in raw:
                self.load(item)
            return
        if isinstance(raw, str):
            raise RdfSyntaxError(f"remote @context {raw!r} is not supported")
        if not isinstance(raw, dict):
            raise RdfSyntaxError("@context must be an object")
        for term, definition in raw.items():
            if term.startswith("@"):
                continue
            if isinstance(definition, str):
                self.terms[term] = definition
            elif isinstance(definition, dict) and "@id" in definition:
                self.terms[term] = definition["@id"]
                if definition.get("@type") == "@id":
                    self.iri_typed.add(term)
            else:
                raise RdfSyntaxError(f"unsupported @context entry for {term!r}")

    def expand(self, key: str) -> Optional[str]:
        if key in self.terms:
            expanded = self.terms[key]
            if _ABSOLUTE_IRI.match(expanded):
                return expanded
        if ":" in key:
            prefix, suffix = key.split(":", 1)
            if prefix in self.terms:
                return self.terms[prefix] + suffix
        if _ABSOLUTE_IRI.match(key):
            return key
        return None


class JsonLdParser:
    def __init__(self):
        self.triples: List[Triple] = []
        self._blank_counter = 0

    def parse(self, text: str) -> List[Triple]:
        try:
            doc = json.loads(text)
        except json.JSONDecodeError as exc:
            raise RdfSyntaxError(f"invalid JSON: {exc.msg}", exc.lineno, exc.colno) from exc
        ctx = _Context()
        nodes: List[Any]
        if isinstance(doc, list):
            nodes = doc
        elif isinstance(doc, dict):
            ctx.load(doc.get("@context"))
            if "@graph" in doc:
                graph = doc["@graph"]
                nodes = graph if isinstance(graph, list) else [graph]
            else:
                nodes = [doc]
        else:
            raise RdfSyntaxError("JSON-LD document must be an object or array")
        for node in nodes:
            self._node(node, ctx)
        return self.triples

    def _fresh_blank(self) -> BlankNode:
        label = f"genid-{self._blank_counter}"
        self._blank_counter += 1
        return BlankNode(label)

    def _subject_for(self, obj: Dict[str, Any], ctx: _Context) -> Subject:
        ident = obj.get("@id")
        if ident is None:
            return self._fresh_blank()
        if not isinstance(ident, str):
            raise RdfSyntaxError("@id must be a string")
        if ident.startswith("_:"):
            return BlankNode(ident[2:])
        expanded = ctx.expand(ident)
        if expanded is None:
            raise RdfSyntaxError(f"@id {ident!r} is not an absolute IRI")
        return Iri(expanded)

    def _node(self, obj: Any, ctx: _Context) -> Subject:
        if not isinstance(obj, dict):
            raise RdfSyntaxError("node object expected")
        if "@context" in obj:
            ctx = _Context() if ctx is None else ctx
            ctx.load(obj["@context"])
        subject = self._subject_for(obj, ctx)

        types = obj.get("@type", [])
        if isinstance(types, str):
            types = [types]
        for t in types:
            expanded = ctx.expand(t)
            if expanded:
                self.triples.append((subject, RDF.type, Iri(expanded)))

        for key, raw_values in obj.items():
            if key.startswith("@"):
                continue
            predicate = ctx.expand(key)
            if predicate is None:
                continue
            values = raw_values if isinstance(raw_values, list) else [raw_values]
            for value in values:
                self.triples.append((subject, Iri(predicate), self._value(value, key, ctx)))
        return subject

    def _value(self, value: Any, term: str, ctx: _Context) -> Node:
        if isinstance(value, dict):
            if "@value" in value:
                return self._literal(value, ctx)
            if "@list" in value:
                return self._list(value["@list"], term, ctx)
            return self._node(value, ctx)
        if isinstance(value, bool):
            return Literal("true" if value else "false", datatype=XSD.boolean.value)
        if isinstance(value, int):
            return Literal(str(value), datatype=XSD.integer.value)
        if isinstance(value, float):
            return Literal(repr(value), datatype=XSD.double.value)
        if isinstance(value, str):
            if term in ctx.iri_typed:
                expanded = ctx.expand(value)
                if expanded:
                    return Iri(expanded)
            return Literal(value)
        raise RdfSyntaxError(f"unsupported JSON-LD value {value!r}")

    def _literal(self, obj: Dict[str, Any], ctx: _Context) -> Literal:
        value = obj["@value"]
        if isinstance(value, bool):
            lexical, default_dt = ("true" if value else "false"), XSD.boolean.value
        elif isinstance(value, (int, float)):
            lexical, default_dt = str(value), (
                XSD.integer.value if isinstance(value, int) else XSD.double.value
            )
        else:
            lexical, default_dt = str(value), None
        language = obj.get("@language")
        datatype = obj.get("@type")
        if datatype is not None:
            datatype = ctx.expand(datatype) or datatype
        return Literal(lexical, language=language, datatype=datatype or default_dt)

    def _list(self, items: Any, term: str, ctx: _Context) -> Node:
        if not isinstance(items, list) or not items:
            return RDF.nil
        head = self._fresh_blank()
        current = head
        for index, item in enumerate(items):
            self.triples.append((current, RDF.first, self._value(item, term, ctx)))
            if index == len(items) - 1:
                self.triples.append((current, RDF.rest, RDF.nil))
            else:
                nxt = self._fresh_blank()
                self.triples.append((current, RDF.rest, nxt))
                current = nxt
        return head


def parse_jsonld(text: str) -> List[Triple]:
    return JsonLdParser().parse(text)
