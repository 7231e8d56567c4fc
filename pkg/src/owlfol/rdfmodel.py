"""RDF data model: nodes, triples, graphs, prefix maps.

The model is deliberately small: exactly what an entailment/consistency task
needs to carry around. Graphs are immutable value objects with set semantics
(no duplicate triples) that preserve first-insertion order, so downstream
serialization is deterministic. Blank node labels are graph-scoped; two
graphs may reuse a label without aliasing, and `graph_union` renames apart.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Iterable, Iterator, Optional, Union

RDF_NS = "http://www.w3.org/1999/02/22-rdf-syntax-ns#"
RDFS_NS = "http://www.w3.org/2000/01/rdf-schema#"
OWL_NS = "http://www.w3.org/2002/07/owl#"
XSD_NS = "http://www.w3.org/2001/XMLSchema#"
EX_NS = "http://www.example.org/"
FOAF_NS = "http://xmlns.com/foaf/0.1/"
SKOS_NS = "http://www.w3.org/2004/02/skos/core#"

#: Namespaces every document may use without declaring them (the mangler
#: also consults these when shortening IRIs to constant names).
BUILTIN_PREFIXES: dict[str, str] = {
    "rdf": RDF_NS,
    "rdfs": RDFS_NS,
    "owl": OWL_NS,
    "xsd": XSD_NS,
    "ex": EX_NS,
    "foaf": FOAF_NS,
    "skos": SKOS_NS,
}

RDF_TYPE = RDF_NS + "type"
RDF_FIRST = RDF_NS + "first"
RDF_REST = RDF_NS + "rest"
RDF_NIL = RDF_NS + "nil"


class RdfError(ValueError):
    """Malformed RDF data (bad node positions, invalid IRIs)."""


@dataclass(frozen=True, slots=True)
class Iri:
    """An absolute IRI."""

    value: str

    def __post_init__(self) -> None:
        if not self.value or any(c.isspace() for c in self.value):
            raise RdfError(f"not a valid IRI: {self.value!r}")

    def __repr__(self) -> str:
        return f"Iri({self.value!r})"


@dataclass(frozen=True, slots=True)
class BlankNodeId:
    """A graph-scoped blank node label (without the `_:` sigil)."""

    label: str

    def __repr__(self) -> str:
        return f"BlankNodeId({self.label!r})"


@dataclass(frozen=True, slots=True)
class Literal:
    """A plain, language-tagged, or typed literal.

    `lang` is set iff the literal is language-tagged, `datatype` iff typed;
    never both.
    """

    lexical: str
    lang: Optional[str] = None
    datatype: Optional[Iri] = None

    def __post_init__(self) -> None:
        if self.lang is not None and self.datatype is not None:
            raise RdfError("literal cannot be both language-tagged and typed")

    @property
    def kind(self) -> str:
        if self.lang is not None:
            return "LangTagged"
        if self.datatype is not None:
            return "Typed"
        return "Plain"


Node = Union[Iri, BlankNodeId, Literal]


@dataclass(frozen=True, slots=True)
class Triple:
    subject: Node
    predicate: Iri
    object: Node

    def __post_init__(self) -> None:
        if isinstance(self.subject, Literal):
            raise RdfError("literal in subject position")
        if not isinstance(self.predicate, Iri):
            raise RdfError("triple predicate must be an IRI")


@dataclass(frozen=True)
class PrefixMap:
    """Prefix label -> namespace bindings plus an optional base IRI.

    Turtle allows rebinding a label; the later binding wins, but every
    replaced binding is kept in `rebound` for diagnostics.
    """

    bindings: dict[str, str] = field(default_factory=dict)
    base: Optional[str] = None
    rebound: tuple[tuple[str, str, str], ...] = ()

    def bind(self, label: str, namespace: str) -> "PrefixMap":
        rebound = self.rebound
        old = self.bindings.get(label)
        if old is not None and old != namespace:
            rebound = rebound + ((label, old, namespace),)
        bindings = dict(self.bindings)
        bindings[label] = namespace
        return PrefixMap(bindings, self.base, rebound)

    def with_base(self, base: str) -> "PrefixMap":
        return PrefixMap(dict(self.bindings), base, self.rebound)

    def resolve(self, label: str) -> Optional[str]:
        if label in self.bindings:
            return self.bindings[label]
        return BUILTIN_PREFIXES.get(label)


class Graph:
    """An ordered, duplicate-free set of triples."""

    __slots__ = ("triples", "blank_labels", "prefixes", "_tripleset")

    def __init__(self, triples: Iterable[Triple] = (), prefixes: Optional[PrefixMap] = None):
        seen: dict[Triple, None] = {}
        for t in triples:
            seen.setdefault(t)
        self.triples: tuple[Triple, ...] = tuple(seen)
        self._tripleset = frozenset(self.triples)
        labels = set()
        for t in self.triples:
            if isinstance(t.subject, BlankNodeId):
                labels.add(t.subject.label)
            if isinstance(t.object, BlankNodeId):
                labels.add(t.object.label)
        self.blank_labels: frozenset[str] = frozenset(labels)
        self.prefixes = prefixes or PrefixMap()

    def __len__(self) -> int:
        return len(self.triples)

    def __iter__(self) -> Iterator[Triple]:
        return iter(self.triples)

    def __contains__(self, t: Triple) -> bool:
        return t in self._tripleset

    def __eq__(self, other: object) -> bool:
        # Exact equality (label-sensitive); use `isomorphic` for equality up
        # to blank-label bijection.
        if not isinstance(other, Graph):
            return NotImplemented
        return self._tripleset == other._tripleset

    def __hash__(self) -> int:
        return hash(self._tripleset)

    def node_iris(self) -> frozenset[str]:
        """All IRIs occurring anywhere in the graph (incl. literal datatypes)."""
        out = set()
        for t in self.triples:
            for n in (t.subject, t.predicate, t.object):
                if isinstance(n, Iri):
                    out.add(n.value)
                elif isinstance(n, Literal) and n.datatype is not None:
                    out.add(n.datatype.value)
        return frozenset(out)


def _escape_ntriples(s: str) -> str:
    out = []
    for ch in s:
        if ch == "\\":
            out.append("\\\\")
        elif ch == '"':
            out.append('\\"')
        elif ch == "\n":
            out.append("\\n")
        elif ch == "\r":
            out.append("\\r")
        elif ch == "\t":
            out.append("\\t")
        else:
            out.append(ch)
    return "".join(out)


def node_to_ntriples(n: Node) -> str:
    if isinstance(n, Iri):
        return f"<{n.value}>"
    if isinstance(n, BlankNodeId):
        return f"_:{n.label}"
    if isinstance(n, Literal):
        lex = f'"{_escape_ntriples(n.lexical)}"'
        if n.lang is not None:
            return f"{lex}@{n.lang}"
        if n.datatype is not None:
            return f"{lex}^^<{n.datatype.value}>"
        return lex
    raise RdfError(f"not an RDF node: {n!r}")


def triple_to_ntriples(t: Triple) -> str:
    return (
        f"{node_to_ntriples(t.subject)} {node_to_ntriples(t.predicate)} "
        f"{node_to_ntriples(t.object)} ."
    )


def write_ntriples(g: Graph, sort: bool = True) -> str:
    """Canonical N-Triples text: one triple per line, lexicographically sorted."""
    lines = [triple_to_ntriples(t) for t in g.triples]
    if sort:
        lines.sort()
    return "".join(line + "\n" for line in lines)


def canonical_triple_order(g: Graph) -> tuple[Triple, ...]:
    """Triples in sorted N-Triples order (the canonical conjunct order)."""
    return tuple(sorted(g.triples, key=triple_to_ntriples))


def graph_union(a: Graph, b: Graph) -> Graph:
    """Set union of two graphs, renaming b's blank labels apart from a's.

    Renaming is deterministic: a colliding label `x` becomes `x_u2`, `x_u3`,
    ... (first suffix not already taken on either side).
    """
    used = set(a.blank_labels)
    mapping: dict[str, str] = {}
    for label in sorted(b.blank_labels):
        if label not in used:
            mapping[label] = label
            used.add(label)
            continue
        k = 2
        while f"{label}_u{k}" in used or f"{label}_u{k}" in b.blank_labels:
            k += 1
        mapping[label] = f"{label}_u{k}"
        used.add(mapping[label])

    def rename(n: Node) -> Node:
        if isinstance(n, BlankNodeId):
            return BlankNodeId(mapping[n.label])
        return n

    renamed = (Triple(rename(t.subject), t.predicate, rename(t.object)) for t in b.triples)
    merged_prefixes = a.prefixes
    for label, ns in b.prefixes.bindings.items():
        merged_prefixes = merged_prefixes.bind(label, ns)
    return Graph(tuple(a.triples) + tuple(renamed), merged_prefixes)


def isomorphic(a: Graph, b: Graph) -> bool:
    """Graph equality up to a bijection of blank node labels."""
    if len(a.triples) != len(b.triples):
        return False
    if len(a.blank_labels) != len(b.blank_labels):
        return False
    ground_a = {t for t in a.triples if _is_ground(t)}
    ground_b = {t for t in b.triples if _is_ground(t)}
    if ground_a != ground_b:
        return False
    rest_a = [t for t in a.triples if not _is_ground(t)]
    rest_b = {t for t in b.triples if not _is_ground(t)}
    labels_a = sorted(a.blank_labels, key=lambda l: _label_signature(a, l))
    return _match(rest_a, rest_b, {}, set(), labels_a)


def _is_ground(t: Triple) -> bool:
    return not isinstance(t.subject, BlankNodeId) and not isinstance(t.object, BlankNodeId)


def _label_signature(g: Graph, label: str) -> tuple:
    # Refinement key: how often the label occurs in each position, plus the
    # multiset of ground parts of its triples. Cuts the search space before
    # backtracking.
    subj = obj = 0
    parts = []
    for t in g.triples:
        s_is = isinstance(t.subject, BlankNodeId) and t.subject.label == label
        o_is = isinstance(t.object, BlankNodeId) and t.object.label == label
        if s_is:
            subj += 1
        if o_is:
            obj += 1
        if s_is or o_is:
            parts.append(
                (
                    t.predicate.value,
                    "B" if isinstance(t.subject, BlankNodeId) else node_to_ntriples(t.subject),
                    "B" if isinstance(t.object, BlankNodeId) else node_to_ntriples(t.object),
                )
            )
    return (subj, obj, tuple(sorted(parts)))


def _match(
    remaining: list[Triple],
    candidates: set[Triple],
    mapping: dict[str, str],
    used: set[str],
    label_order: list[str],
) -> bool:
    if not remaining:
        return True
    t = remaining[0]

    def mapped(n: Node, to: dict[str, str]) -> Optional[Node]:
        if isinstance(n, BlankNodeId):
            if n.label in to:
                return BlankNodeId(to[n.label])
            return None
        return n

    for cand in candidates:
        trial = dict(mapping)
        trial_used = set(used)
        ok = True
        for mine, theirs in ((t.subject, cand.subject), (t.object, cand.object)):
            if isinstance(mine, BlankNodeId):
                if not isinstance(theirs, BlankNodeId):
                    ok = False
                    break
                bound = trial.get(mine.label)
                if bound is None:
                    if theirs.label in trial_used:
                        ok = False
                        break
                    trial[mine.label] = theirs.label
                    trial_used.add(theirs.label)
                elif bound != theirs.label:
                    ok = False
                    break
            elif mine != theirs:
                ok = False
                break
        if ok and t.predicate == cand.predicate:
            if _match(remaining[1:], candidates - {cand}, trial, trial_used, label_order):
                return True
    return False
