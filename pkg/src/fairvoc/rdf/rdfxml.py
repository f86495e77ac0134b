"""RDF/XML parser built on xml.etree.

Handles the striped syntax ontology exports use: rdf:RDF roots, typed
node elements, rdf:about/ID/nodeID/resource, property attributes,
rdf:datatype and inherited xml:lang, and parseType Resource/Collection/
Literal. Containers (rdf:li) and reification are outside scope.
"""
from __future__ import annotations

import xml.etree.ElementTree as ET
from typing import List, Optional
from urllib.parse import urljoin

from .errors import RdfSyntaxError
from .terms import RDF, BlankNode, Iri, Literal, Node, Subject, Triple

_RDF_NS = RDF.base
_XML_NS = "http://www.w3.org/XML/1998/namespace"

_RDF_RDF = f"{{{_RDF_NS}}}RDF"
_RDF_DESCRIPTION = f"{{{_RDF_NS}}}Description"
_A_ABOUT = f"{{{_RDF_NS}}}about"
_A_ID = f"{{{_RDF_NS}}}ID"
_A_NODEID = f"{{{_RDF_NS}}}nodeID"
_A_RESOURCE = f"{{{_RDF_NS}}}resource"
_A_DATATYPE = f"{{{_RDF_NS}}}datatype"
_A_PARSETYPE = f"{{{_RDF_NS}}}parseType"
_A_LANG = f"{{{_XML_NS}}}lang"
_A_BASE = f"{{{_XML_NS}}}base"

# rdf:-namespace attributes that are syntax markers, not property attributes
_SYNTAX_ATTRS = {_A_ABOUT, _A_ID, _A_NODEID, _A_RESOURCE, _A_DATATYPE, _A_PARSETYPE}


def _expand(tag: str) -> str:
    """ElementTree '{ns}local' notation to a full IRI."""
    if tag.startswith("{"):
        ns, local = tag[1:].split("}", 1)
        return ns + local
    return tag


class RdfXmlParser:
    def __init__(self, base: Optional[str] = None):
        self.triples: List[Triple] = []
        self._blank_counter = 0
        self._default_base = base or ""

    def parse(self, text: str) -> List[Triple]:
        try:
            root = ET.fromstring(text)
        except ET.ParseError as exc:
            line, col = exc.position if exc.position else (None, None)
            raise RdfSyntaxError(f"XML not well-formed: {exc.msg.split(':')[0]}", line, col) from exc
        base = root.get(_A_BASE, self._default_base)
        lang = root.get(_A_LANG)
        if root.tag == _RDF_RDF:
            for child in root:
                self._node_element(child, base, lang)
        else:
            self._node_element(root, base, lang)
        return self.triples

    def _fresh_blank(self) -> BlankNode:
        label = f"genid-{self._blank_counter}"
        self._blank_counter += 1
        return BlankNode(label)

    def _resolve(self, ref: str, base: str) -> str:
        if not base:
            return ref
        return urljoin(base, ref)

    def _node_element(self, elem: ET.Element, base: str, lang: Optional[str]) -> Subject:
        base = elem.get(_A_BASE, base)
        lang = elem.get(_A_LANG, lang)

        subject: Subject
        if _A_ABOUT in elem.attrib:
            subject = Iri(self._resolve(elem.get(_A_ABOUT, ""), base))
        elif _A_ID in elem.attrib:
            subject = Iri(self._resolve("#" + elem.get(_A_ID, ""), base))
        elif _A_NODEID in elem.attrib:
            subject = BlankNode(elem.get(_A_NODEID, ""))
        else:
            subject = self._fresh_blank()

        if elem.tag != _RDF_DESCRIPTION:
            self.triples.append((subject, RDF.type, Iri(_expand(elem.tag))))

        for attr, value in sorted(elem.attrib.items()):
            if attr in _SYNTAX_ATTRS or attr.startswith(f"{{{_XML_NS}}}"):
                continue
            if attr == f"{{{_RDF_NS}}}type":
                self.triples.append((subject, RDF.type, Iri(self._resolve(value, base))))
            else:
                self.triples.append((subject, Iri(_expand(attr)), Literal(value, language=lang)))

        for child in elem:
            self._property_element(subject, child, base, lang)
        return subject

    def _property_element(self, subject: Subject, elem: ET.Element, base: str, lang: Optional[str]) -> None:
        base = elem.get(_A_BASE, base)
        lang = elem.get(_A_LANG, lang)
        predicate = Iri(_expand(elem.tag))
        parse_type = elem.get(_A_PARSETYPE)

        if parse_type == "Resource":
            node = self._fresh_blank()
            self.triples.append((subject, predicate, node))
            for child in elem:
                self._property_element(node, child, base, lang)
            return
        if parse_type == "Collection":
            items = [self._node_element(child, base, lang) for child in elem]
            self.triples.append((subject, predicate, self._as_list(items)))
            return
        if parse_type == "Literal":
            xml_text = (elem.text or "") + "".join(
                ET.tostring(child, encoding="unicode") for child in elem
            )
            self.triples.append(
                (subject, predicate, Literal(xml_text, datatype=RDF.XMLLiteral.value))
            )
            return

        if _A_RESOURCE in elem.attrib:
            obj: Node = Iri(self._resolve(elem.get(_A_RESOURCE, ""), base))
            self.triples.append((subject, predicate, obj))
            return
        if _A_NODEID in elem.attrib:
            self.triples.append((subject, predicate, BlankNode(elem.get(_A_NODEID, ""))))
            return

        children = list(elem)
        if children:
            if len(children) > 1:
                raise RdfSyntaxError(
                    f"property element <{elem.tag}> has multiple child node elements"
                )
            obj = self._node_element(children[0], base, lang)
            self.triples.append((subject, predicate, obj))
            return

        text = elem.text or ""
        datatype = elem.get(_A_DATATYPE)
        if datatype is not None:
            self.triples.append((subject, predicate, Literal(text, datatype=datatype)))
        else:
            self.triples.append((subject, predicate, Literal(text, language=lang)))

    def _as_list(self, items: List[Subject]) -> Node:
        if not items:
            return RDF.nil
        head = self._fresh_blank()
        current = head
        for index, item in enumerate(items):
            self.triples.append((current, RDF.first, item))
            if index == len(items) - 1:
                self.triples.append((current, RDF.rest, RDF.nil))
            else:
                nxt = self._fresh_blank()
                self.triples.append((current, RDF.rest, nxt))
                current = nxt
        return head


def parse_rdfxml(text: str, base: Optional[str] = None) -> List[Triple]:
    return RdfXmlParser(base=base).parse(text)
