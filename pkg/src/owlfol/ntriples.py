"""Line-oriented N-Triples reader.

This is the bulk-data ingestion path: it accepts a string, an open text
file, or any iterable of lines, and keeps per-triple memory bounded (no
full-document token buffer). Duplicate lines collapse via Graph set
semantics.
"""

from __future__ import annotations

import re
from typing import Iterable, Iterator, Union

from .rdfmodel import BlankNodeId, Graph, Iri, Literal, Node, Triple

_IRI = r"<([^<>\s]*)>"
_BLANK = r"_:([A-Za-z0-9_][A-Za-z0-9_\-]*)"
_STRING = r'"((?:[^"\\]|\\.)*)"'
_LITERAL = rf"{_STRING}(?:@([A-Za-z0-9\-]+)|\^\^{_IRI})?"

_SUBJECT = rf"(?:{_IRI}|{_BLANK})"
_OBJECT = rf"(?:{_IRI}|{_BLANK}|{_LITERAL})"
_LINE_RE = re.compile(rf"^\s*{_SUBJECT}\s+{_IRI}\s+{_OBJECT}\s*\.\s*$")

_UNESCAPE_RE = re.compile(r"\\(?:u([0-9A-Fa-f]{4})|U([0-9A-Fa-f]{8})|(.))")
_SIMPLE_UNESCAPES = {"t": "\t", "n": "\n", "r": "\r", "b": "\b", "f": "\f", '"': '"', "\\": "\\", "'": "'"}


class NTriplesError(ValueError):
    pass


def _unescape(s: str) -> str:
    def repl(m: re.Match) -> str:
        if m.group(1):
            return chr(int(m.group(1), 16))
        if m.group(2):
            return chr(int(m.group(2), 16))
        ch = m.group(3)
        if ch in _SIMPLE_UNESCAPES:
            return _SIMPLE_UNESCAPES[ch]
        raise NTriplesError(f"bad escape \\{ch}")

    return _UNESCAPE_RE.sub(repl, s)


def iter_ntriples(source: Union[str, Iterable[str]]) -> Iterator[Triple]:
    """Yield triples one line at a time; malformed lines report their number."""
    lines = source.splitlines() if isinstance(source, str) else source
    for lineno, line in enumerate(lines, start=1):
        stripped = line.strip()
        if not stripped or stripped.startswith("#"):
            continue
        m = _LINE_RE.match(line)
        if m is None:
            raise NTriplesError(f"malformed N-Triples line {lineno}: {stripped[:120]!r}")
        s_iri, s_blank, p_iri, o_iri, o_blank, o_lex, o_lang, o_dt = m.groups()
        subject: Node = Iri(s_iri) if s_iri is not None else BlankNodeId(s_blank)
        predicate = Iri(p_iri)
        obj: Node
        if o_iri is not None:
            obj = Iri(o_iri)
        elif o_blank is not None:
            obj = BlankNodeId(o_blank)
        else:
            lex = _unescape(o_lex)
            if o_lang is not None:
                obj = Literal(lex, lang=o_lang)
            elif o_dt is not None:
                obj = Literal(lex, datatype=Iri(o_dt))
            else:
                obj = Literal(lex)
        yield Triple(subject, predicate, obj)


def parse_ntriples(source: Union[str, Iterable[str]]) -> Graph:
    return Graph(iter_ntriples(source))
