"""Line-oriented N-Triples parser."""
from __future__ import annotations

import re
from typing import List, Optional, Tuple

from .errors import RdfSyntaxError
from .terms import BlankNode, Iri, Literal, Node, Triple

_IRIREF = r"<([^<>\"{}|^`\\\x00-\x20]*)>"
_BLANK = r"_:([A-Za-z0-9][A-Za-z0-9_.-]*)"
_STRING = r'"((?:[^"\\\n\r]|\\.)*)"'
_LITERAL = rf'{_STRING}(?:@([a-zA-Z]+(?:-[a-zA-Z0-9]+)*)|\^\^{_IRIREF})?'

_LINE = re.compile(
    rf"^\s*(?:{_IRIREF}|{_BLANK})\s+{_IRIREF}\s+(?:{_IRIREF}|{_BLANK}|{_LITERAL})\s*\.\s*(?:#.*)?$"
)

_ESCAPES = {
    "t": "\t",
    "b": "\b",
    "n": "\n",
    "r": "\r",
    "f": "\f",
    '"': '"',
    "'": "'",
    "\\": "\\",
}


def _unescape(value: str, line_no: int) -> str:
    out: List[str] = []
    i = 0
    while i < len(value):
        ch = value[i]
        if ch != "\\":
            out.append(ch)
            i += 1
            continue
        code = value[i + 1]
        if code in _ESCAPES:
            out.append(_ESCAPES[code])
            i += 2
        elif code == "u":
            out.append(chr(int(value[i + 2 : i + 6], 16)))
            i += 6
        elif code == "U":
            out.append(chr(int(value[i + 2 : i + 10], 16)))
            i += 10
        else:
            raise RdfSyntaxError(f"invalid escape '\\{code}'", line_no)
    return "".join(out)


def parse_ntriples(text: str) -> List[Triple]:
    triples: List[Triple] = []
    for line_no, raw in enumerate(text.split("\n"), start=1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        m = _LINE.match(raw)
        if not m:
            raise RdfSyntaxError("malformed N-Triples statement", line_no, 1)
        (s_iri, s_blank, pred, o_iri, o_blank, o_lex, o_lang, o_dt) = m.groups()
        subject = Iri(_unescape(s_iri, line_no)) if s_iri is not None else BlankNode(s_blank)
        obj: Node
        if o_iri is not None:
            obj = Iri(_unescape(o_iri, line_no))
        elif o_blank is not None:
            obj = BlankNode(o_blank)
        else:
            obj = Literal(
                _unescape(o_lex, line_no),
                language=o_lang,
                datatype=_unescape(o_dt, line_no) if o_dt else None,
            )
        triples.append((subject, Iri(_unescape(pred, line_no)), obj))
    return triples


def try_parse_ntriples(text: str) -> Optional[List[Triple]]:
    """Parse attempt used by format sniffing; None instead of raising."""
    try:
        return parse_ntriples(text)
    except (RdfSyntaxError, ValueError, IndexError):
        return None
