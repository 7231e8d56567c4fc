"""Deterministic mapping from RDF nodes to first-order constant names.

IRIs become `uri_<prefix>_<local>` constants using the document's prefix map
plus the built-in namespaces (rdf, rdfs, owl, xsd, ex, foaf, skos); literal
lexical forms become `lex_<...>` constants and language tags `lang_<...>`.
Characters outside [A-Za-z0-9] are escaped byte-wise as `_hh` (two lowercase
hex digits per UTF-8 byte), which keeps the per-string encoding injective.
IRIs that no known namespace covers fall back to `uri_x_<h>` where `<h>` is
the first 8 hex digits of the SHA-256 of the full IRI.

Name collisions across different inputs are still possible at the
prefix/local seam, so a `Mangler` tracks every assignment for one document
and appends `_2`, `_3`, ... discriminators in first-seen order, making the
map injective on the document's node set.
"""

from __future__ import annotations

import hashlib
from typing import Optional

from .fol import Const, FolTerm, Func, Var
from .rdfmodel import BUILTIN_PREFIXES, BlankNodeId, Iri, Literal, Node, PrefixMap

LITERAL_PLAIN = "literal_plain"
LITERAL_LANG = "literal_lang"
LITERAL_TYPED = "literal_typed"


def escape_word(s: str) -> str:
    out = []
    for ch in s:
        if ch.isascii() and ch.isalnum():
            out.append(ch)
        else:
            out.extend(f"_{b:02x}" for b in ch.encode("utf-8"))
    return "".join(out)


def iri_hash8(iri: str) -> str:
    return hashlib.sha256(iri.encode("utf-8")).hexdigest()[:8]


def _namespace_candidates(prefixes: Optional[PrefixMap]) -> list[tuple[str, str]]:
    merged = dict(BUILTIN_PREFIXES)
    if prefixes is not None:
        merged.update(prefixes.bindings)
    # longest namespace wins; ties break on the label so the choice is stable
    return sorted(merged.items(), key=lambda kv: (-len(kv[1]), kv[0]))


class Mangler:
    """Document-scoped node-to-constant namer (injective per document)."""

    def __init__(self, prefixes: Optional[PrefixMap] = None):
        self._candidates = _namespace_candidates(prefixes)
        self._by_name: dict[str, tuple[str, str]] = {}
        self._by_key: dict[tuple[str, str], str] = {}

    def _assign(self, kind: str, source: str, base: str) -> str:
        key = (kind, source)
        known = self._by_key.get(key)
        if known is not None:
            return known
        name = base
        k = 2
        while name in self._by_name:
            name = f"{base}_{k}"
            k += 1
        self._by_name[name] = key
        self._by_key[key] = name
        return name

    def constant_for_iri(self, iri: Iri) -> str:
        for label, ns in self._candidates:
            if iri.value.startswith(ns) and len(iri.value) > len(ns):
                local = iri.value[len(ns):]
                return self._assign("iri", iri.value, f"uri_{escape_word(label)}_{escape_word(local)}")
        return self._assign("iri", iri.value, f"uri_x_{iri_hash8(iri.value)}")

    def constant_for_lexical(self, lexical: str) -> str:
        return self._assign("lex", lexical, f"lex_{escape_word(lexical)}")

    def constant_for_langtag(self, tag: str) -> str:
        return self._assign("lang", tag, f"lang_{escape_word(tag)}")

    def term_for_node(self, node: Node, blank_vars: Optional[dict[str, Var]] = None) -> FolTerm:
        if isinstance(node, Iri):
            return Const(self.constant_for_iri(node))
        if isinstance(node, BlankNodeId):
            if blank_vars is None or node.label not in blank_vars:
                raise KeyError(f"blank node _:{node.label} has no bound variable")
            return blank_vars[node.label]
        if isinstance(node, Literal):
            lex = Const(self.constant_for_lexical(node.lexical))
            if node.lang is not None:
                return Func(LITERAL_LANG, (lex, Const(self.constant_for_langtag(node.lang))))
            if node.datatype is not None:
                return Func(LITERAL_TYPED, (lex, Const(self.constant_for_iri(node.datatype))))
            return Func(LITERAL_PLAIN, (lex,))
        raise TypeError(f"not an RDF node: {node!r}")


def mangle_iri(iri: Iri, prefixes: Optional[PrefixMap] = None) -> str:
    """One-shot IRI mangling (no cross-IRI collision tracking).

    Use a `Mangler` when naming the whole node set of a document; this
    wrapper is the context-free common case.
    """
    return Mangler(prefixes).constant_for_iri(iri)


def blank_var_name(label: str) -> str:
    return "B_" + escape_word(label)
