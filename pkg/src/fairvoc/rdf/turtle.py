"""Recursive-descent Turtle parser.

Covers the Turtle 1.1 constructs ontology documents use: prefix/base
directives (both @-style and SPARQL-style), predicate-object and object
lists, the 'a' keyword, all literal quote forms with escapes, language
tags and datatypes, numeric and boolean shorthand, anonymous and labelled
blank nodes, and RDF collections.
"""
from __future__ import annotations

import re
from typing import Dict, List, Optional, Tuple
from urllib.parse import urljoin

from .errors import RdfSyntaxError
from .terms import RDF, XSD, BlankNode, Iri, Literal, Node, Subject, Triple

_WS = " \t\r\n"
_PN_LOCAL_ESCAPABLE = set("_~.-!$&'()*+,;=/?#@%")
_LANGTAG = re.compile(r"[a-zA-Z]+(-[a-zA-Z0-9]+)*")
_INTEGER = re.compile(r"[+-]?[0-9]+")
_DECIMAL = re.compile(r"[+-]?[0-9]*\.[0-9]+")
_DOUBLE = re.compile(
    r"[+-]?(?:[0-9]+\.[0-9]*[eE][+-]?[0-9]+|\.?[0-9]+[eE][+-]?[0-9]+)"
)


class _Scanner:
    """Character cursor with 1-based line/col tracking."""

    def __init__(self, text: str):
        self.text = text
        self.pos = 0
        self.line = 1
        self.col = 1

    def at_end(self) -> bool:
        return self.pos >= len(self.text)

    def peek(self, ahead: int = 0) -> str:
        idx = self.pos + ahead
        return self.text[idx] if idx < len(self.text) else ""

    def advance(self, count: int = 1) -> str:
        taken = self.text[self.pos : self.pos + count]
        for ch in taken:
            if ch == "\n":
                self.line += 1
                self.col = 1
            else:
                self.col += 1
        self.pos += count
        return taken

    def skip_ws(self) -> None:
        while not self.at_end():
            ch = self.peek()
            if ch in _WS:
                self.advance()
            elif ch == "#":
                while not self.at_end() and self.peek() != "\n":
                    self.advance()
            else:
                return

    def error(self, message: str) -> RdfSyntaxError:
        return RdfSyntaxError(message, self.line, self.col)

    def expect(self, literal: str) -> None:
        if self.text.startswith(literal, self.pos):
            self.advance(len(literal))
        else:
            raise self.error(f"expected {literal!r}")

    def match(self, literal: str) -> bool:
        if self.text.startswith(literal, self.pos):
            self.advance(len(literal))
            return True
        return False

    def match_keyword(self, word: str) -> bool:
        """Case-insensitive match that must not run into a name character."""
        end = self.pos + len(word)
        if self.text[self.pos : end].lower() != word.lower():
            return False
        nxt = self.text[end : end + 1]
        if nxt and (nxt.isalnum() or nxt in "_:"):
            return False
        self.advance(len(word))
        return True


class TurtleParser:
    def __init__(self, text: str, base: Optional[str] = None):
        self.scan = _Scanner(text)
        self.base = base or ""
        self.prefixes: Dict[str, str] = {}
        self.triples: List[Triple] = []
        self._blank_counter = 0
        self._seen_labels: set[str] = set()

    def parse(self) -> List[Triple]:
        s = self.scan
        s.skip_ws()
        while not s.at_end():
            if not self._directive():
                self._triples_block()
                s.skip_ws()
                s.expect(".")
            s.skip_ws()
        return self.triples

    # directives ----------------------------------------------------------

    def _directive(self) -> bool:
        s = self.scan
        if s.match("@prefix"):
            self._prefix_body()
            s.skip_ws()
            s.expect(".")
            return True
        if s.match("@base"):
            self._base_body()
            s.skip_ws()
            s.expect(".")
            return True
        if s.peek().lower() == "p" and s.match_keyword("prefix"):
            self._prefix_body()
            return True
        if s.peek().lower() == "b" and s.match_keyword("base"):
            self._base_body()
            return True
        return False

    def _prefix_body(self) -> None:
        s = self.scan
        s.skip_ws()
        prefix = self._pname_ns()
        s.skip_ws()
        iri = self._iriref()
        self.prefixes[prefix] = iri

    def _base_body(self) -> None:
        self.scan.skip_ws()
        self.base = self._iriref()

    def _pname_ns(self) -> str:
        s = self.scan
        start = s.pos
        while not s.at_end() and s.peek() != ":" and s.peek() not in _WS:
            s.advance()
        if s.peek() != ":":
            raise s.error("expected prefix name ending in ':'")
        name = s.text[start : s.pos]
        s.advance()
        return name

    # triple productions --------------------------------------------------

    def _triples_block(self) -> None:
        s = self.scan
        s.skip_ws()
        if s.peek() == "[":
            subject = self._blank_node_property_list()
            s.skip_ws()
            if s.peek() != ".":
                self._predicate_object_list(subject)
            return
        subject = self._subject()
        self._predicate_object_list(subject)

    def _subject(self) -> Subject:
        s = self.scan
        s.skip_ws()
        ch = s.peek()
        if ch == "(":
            return self._collection()
        if ch == "_":
            return self._blank_node_label()
        term = self._iri()
        return term

    def _predicate_object_list(self, subject: Subject) -> None:
        s = self.scan
        while True:
            s.skip_ws()
            predicate = self._verb()
            self._object_list(subject, predicate)
            s.skip_ws()
            if not s.match(";"):
                return
            s.skip_ws()
            # permit trailing ';' before '.', ']' and further ';'
            while s.match(";"):
                s.skip_ws()
            if s.peek() in (".", "]", "") :
                return

    def _verb(self) -> Iri:
        s = self.scan
        if s.peek() == "a" and s.match_keyword("a"):
            return RDF.type
        return self._iri()

    def _object_list(self, subject: Subject, predicate: Iri) -> None:
        s = self.scan
        while True:
            s.skip_ws()
            obj = self._object()
            self.triples.append((subject, predicate, obj))
            s.skip_ws()
            if not s.match(","):
                return

    def _object(self) -> Node:
        s = self.scan
        ch = s.peek()
        if ch == "(":
            return self._collection()
        if ch == "[":
            return self._blank_node_property_list()
        if ch == "_":
            return self._blank_node_label()
        if ch in "\"'":
            return self._quoted_literal()
        if ch.isdigit() or (ch in "+-." and (s.peek(1).isdigit() or s.peek(1) == ".")):
            return self._numeric_literal()
        if ch == "t" and s.match_keyword("true"):
            return Literal("true", datatype=XSD.boolean.value)
        if ch == "f" and s.match_keyword("false"):
            return Literal("false", datatype=XSD.boolean.value)
        return self._iri()

    # terms ----------------------------------------------------------------

    def _fresh_blank(self) -> BlankNode:
        while True:
            label = f"genid-{self._blank_counter}"
            self._blank_counter += 1
            if label not in self._seen_labels:
                self._seen_labels.add(label)
                return BlankNode(label)

    def _blank_node_label(self) -> BlankNode:
        s = self.scan
        s.expect("_:")
        start = s.pos
        while not s.at_end() and (s.peek().isalnum() or s.peek() in "_-."):
            # a trailing '.' terminates the statement, not the label
            if s.peek() == "." and not (s.peek(1).isalnum() or s.peek(1) in "_-."):
                break
            s.advance()
        label = s.text[start : s.pos]
        if not label:
            raise s.error("empty blank node label")
        self._seen_labels.add(label)
        return BlankNode(label)

    def _blank_node_property_list(self) -> BlankNode:
        s = self.scan
        s.expect("[")
        node = self._fresh_blank()
        s.skip_ws()
        if not s.match("]"):
            self._predicate_object_list(node)
            s.skip_ws()
            s.expect("]")
        return node

    def _collection(self) -> Node:
        s = self.scan
        s.expect("(")
        items: List[Node] = []
        while True:
            s.skip_ws()
            if s.match(")"):
                break
            items.append(self._object())
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

    def _iri(self) -> Iri:
        s = self.scan
        if s.peek() == "<":
            return Iri(self._iriref())
        return self._prefixed_name()

    def _iriref(self) -> str:
        s = self.scan
        s.expect("<")
        out: List[str] = []
        while True:
            if s.at_end():
                raise s.error("unterminated IRI")
            ch = s.advance()
            if ch == ">":
                break
            if ch in " <\"{}|^`":
                raise s.error(f"character {ch!r} not allowed in IRI")
            if ch == "\\":
                out.append(self._unicode_escape())
            else:
                out.append(ch)
        raw = "".join(out)
        if self.base and not re.match(r"^[A-Za-z][A-Za-z0-9+.-]*:", raw):
            return urljoin(self.base, raw)
        return raw

    def _unicode_escape(self) -> str:
        s = self.scan
        kind = s.advance()
        if kind == "u":
            digits = s.advance(4)
        elif kind == "U":
            digits = s.advance(8)
        else:
            raise s.error(f"invalid IRI escape '\\{kind}'")
        try:
            return chr(int(digits, 16))
        except ValueError:
            raise s.error(f"invalid unicode escape '\\{kind}{digits}'") from None

    def _prefixed_name(self) -> Iri:
        s = self.scan
        start_line, start_col = s.line, s.col
        prefix_chars: List[str] = []
        while not s.at_end() and (s.peek().isalnum() or s.peek() in "_-."):
            prefix_chars.append(s.advance())
        if s.peek() != ":":
            raise RdfSyntaxError("expected IRI or prefixed name", start_line, start_col)
        s.advance()
        prefix = "".join(prefix_chars)
        if prefix not in self.prefixes:
            raise RdfSyntaxError(f"undeclared prefix '{prefix}:'", start_line, start_col)
        local: List[str] = []
        while not s.at_end():
            ch = s.peek()
            if ch == "\\" and s.peek(1) in _PN_LOCAL_ESCAPABLE:
                s.advance()
                local.append(s.advance())
            elif ch == "%" and s.peek(1) and s.peek(2):
                local.append(s.advance(3))
            elif ch.isalnum() or ch in "_-:":
                local.append(s.advance())
            elif ch == "." and (s.peek(1).isalnum() or s.peek(1) in "_-.%:"):
                local.append(s.advance())
            else:
                break
        return Iri(self.prefixes[prefix] + "".join(local))

    def _quoted_literal(self) -> Literal:
        s = self.scan
        lexical = self._string_body()
        if s.peek() == "@":
            s.advance()
            m = _LANGTAG.match(s.text, s.pos)
            if not m:
                raise s.error("malformed language tag")
            s.advance(m.end() - s.pos)
            return Literal(lexical, language=m.group(0))
        if s.match("^^"):
            datatype = self._iri()
            return Literal(lexical, datatype=datatype.value)
        return Literal(lexical)

    def _string_body(self) -> str:
        s = self.scan
        quote = s.peek()
        long_form = s.text.startswith(quote * 3, s.pos)
        delim = quote * 3 if long_form else quote
        s.advance(len(delim))
        out: List[str] = []
        while True:
            if s.at_end():
                raise s.error("unterminated string")
            if s.text.startswith(delim, s.pos):
                if long_form:
                    # in a quote run of n>3, the final three close the string
                    run = 0
                    while s.peek(run) == quote:
                        run += 1
                    for _ in range(run - 3):
                        out.append(s.advance())
                s.advance(len(delim))
                return "".join(out)
            ch = s.advance()
            if ch == "\\":
                out.append(self._string_escape())
            elif ch in "\r\n" and not long_form:
                raise s.error("newline in single-line string")
            else:
                out.append(ch)

    def _string_escape(self) -> str:
        s = self.scan
        simple = {"t": "\t", "b": "\b", "n": "\n", "r": "\r", "f": "\f", '"': '"', "'": "'", "\\": "\\"}
        ch = s.advance()
        if ch in simple:
            return simple[ch]
        if ch in "uU":
            s.pos -= 1
            s.col -= 1
            return self._unicode_escape()
        raise s.error(f"invalid string escape '\\{ch}'")

    def _numeric_literal(self) -> Literal:
        s = self.scan
        for pattern, datatype in (
            (_DOUBLE, XSD.double),
            (_DECIMAL, XSD.decimal),
            (_INTEGER, XSD.integer),
        ):
            m = pattern.match(s.text, s.pos)
            if m:
                s.advance(m.end() - s.pos)
                return Literal(m.group(0), datatype=datatype.value)
        raise s.error("malformed numeric literal")


def parse_turtle(text: str, base: Optional[str] = None) -> List[Triple]:
    return TurtleParser(text, base=base).parse()
