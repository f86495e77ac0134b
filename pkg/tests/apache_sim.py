"""A small Apache mod_rewrite interpreter used as the serving-side oracle.

Parses actual htaccess text (the subset the scaffold emits: Options,
AddType, RewriteEngine, RewriteCond on %{HTTP_ACCEPT} with [OR] and
negation, RewriteRule with R=NNN,L) and serves two hosts: the vocabulary
URI host, where the rewrite rules run, and the documentation host, a plain
file tree. Implements Apache semantics, not the generator's intent, so
generator bugs surface as negotiation failures.
"""
from __future__ import annotations

import re
from dataclasses import dataclass, field
from typing import Dict, List, Mapping, Optional, Tuple

from fairvoc.probe import TransportReply, make_reply

DEFAULT_MIME = {
    ".html": "text/html",
    ".htm": "text/html",
    ".xml": "application/xml",
    ".rdf": "application/rdf+xml",
    ".txt": "text/plain",
}


@dataclass
class Cond:
    pattern: str
    negated: bool
    or_next: bool

    def matches(self, value: str) -> bool:
        hit = re.search(self.pattern, value) is not None
        return not hit if self.negated else hit


@dataclass
class Rule:
    conds: List[Cond]
    pattern: str
    target: str
    status: int
    last: bool

    def conds_satisfied(self, accept: str) -> bool:
        # RewriteCond lines AND together; [OR] joins a cond with the next one
        index = 0
        while index < len(self.conds):
            group = [self.conds[index]]
            while self.conds[index].or_next:
                index += 1
                group.append(self.conds[index])
            if not any(cond.matches(accept) for cond in group):
                return False
            index += 1
        return True


@dataclass
class HtaccessProgram:
    addtypes: Dict[str, str] = field(default_factory=dict)
    rules: List[Rule] = field(default_factory=list)
    rewrite_on: bool = False
    multiviews_off: bool = False


_FLAGS = re.compile(r"\[([^\]]*)\]\s*$")


def parse_htaccess(text: str) -> HtaccessProgram:
    program = HtaccessProgram()
    pending_conds: List[Cond] = []
    for raw in text.splitlines():
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        parts = line.split()
        directive = parts[0]
        if directive == "Options":
            program.multiviews_off = "-MultiViews" in parts[1:]
        elif directive == "AddType":
            mime, ext = parts[1], parts[2]
            program.addtypes[ext if ext.startswith(".") else "." + ext] = mime
        elif directive == "RewriteEngine":
            program.rewrite_on = parts[1].lower() == "on"
        elif directive == "RewriteCond":
            variable, pattern = parts[1], parts[2]
            if variable != "%{HTTP_ACCEPT}":
                raise NotImplementedError(f"unsupported RewriteCond variable {variable}")
            flags = _FLAGS.search(line)
            or_next = bool(flags and "OR" in flags.group(1).split(","))
            negated = pattern.startswith("!")
            pending_conds.append(Cond(pattern.lstrip("!"), negated, or_next))
        elif directive == "RewriteRule":
            pattern, target = parts[1], parts[2]
            flags = _FLAGS.search(line)
            status = 302
            last = False
            if flags:
                for flag in flags.group(1).split(","):
                    flag = flag.strip()
                    if flag.startswith("R="):
                        status = int(flag[2:])
                    elif flag == "R":
                        status = 302
                    elif flag == "L":
                        last = True
            program.rules.append(Rule(pending_conds, pattern, target, status, last))
            pending_conds = []
        else:
            raise NotImplementedError(f"unsupported directive {directive}")
    return program


class ApacheSim:
    """Serves the vocabulary host through the rewrite program and the doc
    host from a path->bytes mapping."""

    def __init__(
        self,
        htaccess_text: str,
        vocab_base: str,
        doc_base: str,
        files: Mapping[str, bytes],
    ):
        self.program = parse_htaccess(htaccess_text)
        self.vocab_base = vocab_base.rstrip("#/")
        self.doc_base = doc_base.rstrip("/")
        self.files = dict(files)

    def _mime_for(self, path: str) -> str:
        for ext, mime in self.program.addtypes.items():
            if path.endswith(ext):
                return mime
        for ext, mime in DEFAULT_MIME.items():
            if path.endswith(ext):
                return mime
        return "application/octet-stream"

    def _serve_doc(self, rel: str) -> TransportReply:
        if rel in self.files:
            return make_reply(200, {"Content-Type": self._mime_for(rel)}, self.files[rel])
        return make_reply(404, {"Content-Type": "text/plain"}, b"not found")

    def _error_page(self, status: int) -> TransportReply:
        body = self.files.get("406.html", b"not acceptable")
        return make_reply(status, {"Content-Type": "text/html"}, body)

    def __call__(self, method: str, url: str, headers: Mapping[str, str]) -> TransportReply:
        accept = ""
        for name, value in headers.items():
            if name.lower() == "accept":
                accept = value

        if url.startswith(self.doc_base + "/"):
            return self._serve_doc(url[len(self.doc_base) + 1 :])

        if url == self.vocab_base or url.startswith(self.vocab_base + "/"):
            if not self.program.rewrite_on:
                return make_reply(404, {}, b"rewriting disabled")
            rel = url[len(self.vocab_base) :].lstrip("/")
            for rule in self.program.rules:
                match = re.search(rule.pattern, rel)
                if not match:
                    continue
                if not rule.conds_satisfied(accept):
                    continue
                target = rule.target
                for group_index, group in enumerate(match.groups(), start=1):
                    target = target.replace(f"${group_index}", group or "")
                if 300 <= rule.status < 400:
                    return make_reply(rule.status, {"Location": target})
                return self._error_page(rule.status)
            return make_reply(404, {"Content-Type": "text/plain"}, b"no rule matched")

        return make_reply(404, {"Content-Type": "text/plain"}, b"unknown host")
