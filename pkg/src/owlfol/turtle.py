"""Turtle parser for the subset used by the bundled reasoning tests.

Supported: `@prefix`/`@base`, the `a` keyword, `;`/`,` lists, blank node
property lists `[...]`, collections `(...)`, plain/language-tagged/typed
literals, `_:label` blank nodes, and `#` comments. Numeric and boolean
shorthand is rejected on purpose: the test corpus always writes typed
literals explicitly (e.g. `"1"^^xsd:nonNegativeInteger`), and a quiet
string-vs-number mismatch would silently change reasoning problems.

Collections desugar to fresh blank nodes chained through rdf:first/rdf:rest
and terminated by rdf:nil; `[...]` becomes a fresh blank node. Fresh labels
are `gen1`, `gen2`, ... in document order, so parsing is deterministic.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Optional
from urllib.parse import urljoin

from .rdfmodel import (
    BlankNodeId,
    Graph,
    Iri,
    Literal,
    Node,
    PrefixMap,
    RDF_FIRST,
    RDF_NIL,
    RDF_REST,
    RDF_TYPE,
    Triple,
)


class TurtleSyntaxError(ValueError):
    def __init__(self, message: str, line: int, column: int):
        super().__init__(f"{message} (line {line}, column {column})")
        self.line = line
        self.column = column


@dataclass(frozen=True, slots=True)
class _Token:
    kind: str
    value: str
    line: int
    column: int


_PUNCT = {
    ".": "DOT",
    ";": "SEMI",
    ",": "COMMA",
    "[": "LBRACKET",
    "]": "RBRACKET",
    "(": "LPAREN",
    ")": "RPAREN",
}

_ESCAPES = {"t": "\t", "n": "\n", "r": "\r", "b": "\b", "f": "\f", '"': '"', "\\": "\\", "'": "'"}


def _tokenize(text: str) -> list[_Token]:
    tokens: list[_Token] = []
    i, line, col = 0, 1, 1
    n = len(text)

    def err(msg: str) -> TurtleSyntaxError:
        return TurtleSyntaxError(msg, line, col)

    while i < n:
        ch = text[i]
        if ch == "\n":
            i, line, col = i + 1, line + 1, 1
            continue
        if ch.isspace():
            i, col = i + 1, col + 1
            continue
        if ch == "#":
            while i < n and text[i] != "\n":
                i += 1
            continue
        start_line, start_col = line, col
        if ch in _PUNCT:
            tokens.append(_Token(_PUNCT[ch], ch, start_line, start_col))
            i, col = i + 1, col + 1
            continue
        if ch == "<":
            j = text.find(">", i + 1)
            if j < 0:
                raise err("unterminated IRI reference")
            value = text[i + 1 : j]
            tokens.append(_Token("IRIREF", value, start_line, start_col))
            col += j + 1 - i
            i = j + 1
            continue
        if ch == '"':
            j = i + 1
            out: list[str] = []
            while True:
                if j >= n:
                    raise err("unterminated string literal")
                c = text[j]
                if c == "\\":
                    if j + 1 >= n:
                        raise err("bad escape at end of input")
                    e = text[j + 1]
                    if e in _ESCAPES:
                        out.append(_ESCAPES[e])
                        j += 2
                    elif e == "u":
                        out.append(chr(int(text[j + 2 : j + 6], 16)))
                        j += 6
                    elif e == "U":
                        out.append(chr(int(text[j + 2 : j + 10], 16)))
                        j += 10
                    else:
                        raise err(f"unsupported string escape \\{e}")
                elif c == '"':
                    j += 1
                    break
                elif c == "\n":
                    raise err("newline in string literal")
                else:
                    out.append(c)
                    j += 1
            tokens.append(_Token("STRING", "".join(out), start_line, start_col))
            col += j - i
            i = j
            continue
        if ch == "@":
            j = i + 1
            while j < n and (text[j].isalnum() or text[j] == "-"):
                j += 1
            word = text[i + 1 : j]
            if word == "prefix":
                tokens.append(_Token("PREFIX", word, start_line, start_col))
            elif word == "base":
                tokens.append(_Token("BASE", word, start_line, start_col))
            else:
                tokens.append(_Token("LANGTAG", word, start_line, start_col))
            col += j - i
            i = j
            continue
        if ch == "^":
            if text[i : i + 2] != "^^":
                raise err("stray '^'")
            tokens.append(_Token("CARET", "^^", start_line, start_col))
            i, col = i + 2, col + 2
            continue
        if ch == "_" and text[i : i + 2] == "_:":
            j = i + 2
            while j < n and (text[j].isalnum() or text[j] in "_-"):
                j += 1
            if j == i + 2:
                raise err("empty blank node label")
            tokens.append(_Token("BLANK", text[i + 2 : j], start_line, start_col))
            col += j - i
            i = j
            continue
        if ch.isalpha() or ch == ":" or ch == "_":
            # prefixed name: PN_PREFIX? ':' PN_LOCAL?  (or the bare keyword 'a')
            j = i
            while j < n and (text[j].isalnum() or text[j] in "_-"):
                j += 1
            prefix = text[i:j]
            if j < n and text[j] == ":":
                j += 1
                k = j
                while k < n and (text[k].isalnum() or text[k] in "_-."):
                    k += 1
                while k > j and text[k - 1] == ".":
                    k -= 1  # trailing dots terminate the statement instead
                local = text[j:k]
                tokens.append(_Token("PNAME", f"{prefix}:{local}", start_line, start_col))
                col += k - i
                i = k
                continue
            if prefix == "a":
                tokens.append(_Token("A", "a", start_line, start_col))
                col += j - i
                i = j
                continue
            if prefix in ("true", "false"):
                raise err(
                    "boolean shorthand is not supported; write a typed literal "
                    f'like "{prefix}"^^xsd:boolean'
                )
            raise err(f"bare identifier {prefix!r} (missing prefix?)")
        if ch.isdigit() or (ch in "+-" and i + 1 < n and text[i + 1].isdigit()):
            raise err(
                "numeric shorthand is not supported; write a typed literal "
                'like "1"^^xsd:nonNegativeInteger'
            )
        raise err(f"unexpected character {ch!r}")
    tokens.append(_Token("EOF", "", line, col))
    return tokens


class _Parser:
    def __init__(self, tokens: list[_Token], base: Optional[str]):
        self.tokens = tokens
        self.pos = 0
        self.prefixes = PrefixMap()
        if base:
            self.prefixes = self.prefixes.with_base(base)
        self.triples: list[Triple] = []
        self.gen_counter = 0

    def peek(self) -> _Token:
        return self.tokens[self.pos]

    def next(self) -> _Token:
        tok = self.tokens[self.pos]
        self.pos += 1
        return tok

    def expect(self, kind: str) -> _Token:
        tok = self.next()
        if tok.kind != kind:
            raise TurtleSyntaxError(f"expected {kind}, found {tok.kind} {tok.value!r}", tok.line, tok.column)
        return tok

    def error(self, msg: str) -> TurtleSyntaxError:
        tok = self.peek()
        return TurtleSyntaxError(msg, tok.line, tok.column)

    def fresh_blank(self) -> BlankNodeId:
        self.gen_counter += 1
        return BlankNodeId(f"gen{self.gen_counter}")

    def resolve_iri(self, ref: str, tok: _Token) -> Iri:
        if self.prefixes.base and "://" not in ref:
            ref = urljoin(self.prefixes.base, ref)
        try:
            return Iri(ref)
        except ValueError as exc:
            raise TurtleSyntaxError(str(exc), tok.line, tok.column) from None

    def resolve_pname(self, pname: str, tok: _Token) -> Iri:
        prefix, _, local = pname.partition(":")
        ns = self.prefixes.resolve(prefix)
        if ns is None:
            raise TurtleSyntaxError(f"undefined prefix {prefix!r}", tok.line, tok.column)
        return Iri(ns + local)

    def parse(self) -> Graph:
        while self.peek().kind != "EOF":
            tok = self.peek()
            if tok.kind == "PREFIX":
                self.next()
                label_tok = self.expect("PNAME")
                if not label_tok.value.endswith(":"):
                    raise TurtleSyntaxError("prefix declaration must end in ':'", label_tok.line, label_tok.column)
                ns = self.expect("IRIREF")
                self.expect("DOT")
                self.prefixes = self.prefixes.bind(label_tok.value[:-1], ns.value)
                continue
            if tok.kind == "BASE":
                self.next()
                ns = self.expect("IRIREF")
                self.expect("DOT")
                self.prefixes = self.prefixes.with_base(ns.value)
                continue
            self.parse_statement()
        return Graph(self.triples, self.prefixes)

    def parse_statement(self) -> None:
        subject = self.parse_subject()
        self.parse_predicate_object_list(subject)
        self.expect("DOT")

    def parse_subject(self) -> Node:
        tok = self.peek()
        if tok.kind == "IRIREF":
            return self.resolve_iri(self.next().value, tok)
        if tok.kind == "PNAME":
            return self.resolve_pname(self.next().value, tok)
        if tok.kind == "BLANK":
            return BlankNodeId(self.next().value)
        if tok.kind == "LBRACKET":
            return self.parse_blank_property_list()
        if tok.kind == "LPAREN":
            return self.parse_collection()
        if tok.kind == "STRING":
            raise self.error("literal in subject position")
        raise self.error(f"bad subject: {tok.kind} {tok.value!r}")

    def parse_predicate(self) -> Iri:
        tok = self.peek()
        if tok.kind == "A":
            self.next()
            return Iri(RDF_TYPE)
        if tok.kind == "IRIREF":
            return self.resolve_iri(self.next().value, tok)
        if tok.kind == "PNAME":
            return self.resolve_pname(self.next().value, tok)
        if tok.kind in ("STRING", "BLANK"):
            raise self.error("predicate must be an IRI")
        raise self.error(f"bad predicate: {tok.kind} {tok.value!r}")

    def parse_predicate_object_list(self, subject: Node) -> None:
        while True:
            predicate = self.parse_predicate()
            while True:
                obj = self.parse_object()
                self.triples.append(Triple(subject, predicate, obj))
                if self.peek().kind == "COMMA":
                    self.next()
                    continue
                break
            if self.peek().kind == "SEMI":
                self.next()
                # tolerate trailing ';' before '.' or ']'
                if self.peek().kind in ("DOT", "RBRACKET"):
                    return
                continue
            return

    def parse_object(self) -> Node:
        tok = self.peek()
        if tok.kind == "IRIREF":
            return self.resolve_iri(self.next().value, tok)
        if tok.kind == "PNAME":
            return self.resolve_pname(self.next().value, tok)
        if tok.kind == "BLANK":
            return BlankNodeId(self.next().value)
        if tok.kind == "LBRACKET":
            return self.parse_blank_property_list()
        if tok.kind == "LPAREN":
            return self.parse_collection()
        if tok.kind == "STRING":
            return self.parse_literal()
        raise self.error(f"bad object: {tok.kind} {tok.value!r}")

    def parse_literal(self) -> Literal:
        lex = self.next().value
        tok = self.peek()
        if tok.kind == "LANGTAG":
            self.next()
            return Literal(lex, lang=tok.value)
        if tok.kind == "CARET":
            self.next()
            dt_tok = self.peek()
            if dt_tok.kind == "IRIREF":
                return Literal(lex, datatype=self.resolve_iri(self.next().value, dt_tok))
            if dt_tok.kind == "PNAME":
                return Literal(lex, datatype=self.resolve_pname(self.next().value, dt_tok))
            raise self.error("datatype must be an IRI")
        return Literal(lex)

    def parse_blank_property_list(self) -> BlankNodeId:
        self.expect("LBRACKET")
        node = self.fresh_blank()
        if self.peek().kind != "RBRACKET":
            self.parse_predicate_object_list(node)
        self.expect("RBRACKET")
        return node

    def parse_collection(self) -> Node:
        self.expect("LPAREN")
        elements: list[Node] = []
        while self.peek().kind != "RPAREN":
            elements.append(self.parse_object())
        self.expect("RPAREN")
        if not elements:
            return Iri(RDF_NIL)
        cells = [self.fresh_blank() for _ in elements]
        first = Iri(RDF_FIRST)
        rest = Iri(RDF_REST)
        for idx, (cell, elem) in enumerate(zip(cells, elements)):
            self.triples.append(Triple(cell, first, elem))
            tail: Node = cells[idx + 1] if idx + 1 < len(cells) else Iri(RDF_NIL)
            self.triples.append(Triple(cell, rest, tail))
        return cells[0]


def parse_turtle(text: str, base: Optional[str] = None) -> Graph:
    """Parse a Turtle document into a Graph.

    Raises TurtleSyntaxError (with line/column) on malformed input, undefined
    prefixes, literals in subject/predicate position, and on numeric/boolean
    shorthand.
    """
    return _Parser(_tokenize(text), base).parse()
