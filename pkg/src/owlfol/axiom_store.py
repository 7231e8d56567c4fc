"""The curated first-order axiomatization of the OWL 2 Full semantic
conditions, with named profiles, per-test minimal subsets, and the
symbol-reachability relevance filter.

Axioms live as TPTP data files under `axioms/`, one file per feature group,
so profiles are diffable and exportable verbatim. Each entry carries its
feature tag and profile memberships in `%` comments; this module parses
them once and caches the result.
"""

from __future__ import annotations

import math
import re
from dataclasses import dataclass
from functools import lru_cache
from importlib import resources
from typing import Iterable, Optional, Sequence, Union

from .fol import (
    And,
    Atom,
    Const,
    Equal,
    FolFormula,
    Forall,
    Iff,
    Implies,
    NamedFormula,
    Not,
    Or,
    TRUE,
    Var,
    is_closed,
    collect_symbols,
)
from .tptp import iter_fof_blocks, parse_tptp

PROFILES = ("owl2-full", "alco-full", "rdfs-ext", "datatype-facts")

#: Fixed load order of the group files (defines store order).
GROUP_FILES = (
    "rdf.p",
    "rdfs.p",
    "rdfsext.p",
    "parts.p",
    "cext.p",
    "prop.p",
    "bool.p",
    "enum.p",
    "restrict.p",
    "eqdis.p",
    "chain.p",
    "inv.p",
    "char.p",
    "npa.p",
    "dtype.p",
)


class StoreError(ValueError):
    pass


@dataclass(frozen=True)
class AxiomEntry:
    name: str
    formula: FolFormula
    profiles: frozenset[str]
    feature: str
    symbols: frozenset[str]

    def named(self) -> NamedFormula:
        return NamedFormula(self.name, "axiom", self.formula)


@dataclass(frozen=True)
class Profile:
    id: str
    entries: tuple[str, ...]


_COMMENT_KEY = re.compile(r"%\s*(profiles|feature|group):\s*(.*)")


def _axioms_dir():
    return resources.files("owlfol") / "axioms"


def _parse_group_file(text: str, filename: str) -> list[AxiomEntry]:
    header_profiles: frozenset[str] = frozenset()
    lines = text.splitlines()
    for line in lines:
        stripped = line.strip()
        if not stripped:
            break
        m = _COMMENT_KEY.match(stripped)
        if m and m.group(1) == "profiles":
            header_profiles = frozenset(m.group(2).split())
    entries = []
    for comment, block in iter_fof_blocks(text):
        profiles = header_profiles
        feature = ""
        for line in comment.splitlines():
            m = _COMMENT_KEY.match(line.strip())
            if not m:
                continue
            if m.group(1) == "profiles":
                profiles = frozenset(m.group(2).split())
            elif m.group(1) == "feature":
                feature = m.group(2).strip()
        units = parse_tptp(block)
        if len(units) != 1:
            raise StoreError(f"{filename}: expected one fof per block")
        nf = units[0]
        unknown = profiles - set(PROFILES)
        if unknown:
            raise StoreError(f"{filename}:{nf.name}: unknown profiles {sorted(unknown)}")
        if not is_closed(nf.formula):
            raise StoreError(f"{filename}:{nf.name}: formula has free variables")
        entries.append(
            AxiomEntry(nf.name, nf.formula, profiles, feature, collect_symbols(nf.formula))
        )
    return entries


@lru_cache(maxsize=1)
def load_store() -> tuple[AxiomEntry, ...]:
    """All axiom entries in store order."""
    entries: list[AxiomEntry] = []
    seen = set()
    for filename in GROUP_FILES:
        text = (_axioms_dir() / filename).read_text(encoding="utf-8")
        for e in _parse_group_file(text, filename):
            if e.name in seen:
                raise StoreError(f"duplicate axiom name {e.name}")
            seen.add(e.name)
            entries.append(e)
    return tuple(entries)


def load_profile(profile_id: str) -> list[AxiomEntry]:
    """The entries of a named profile, in store order."""
    if profile_id not in PROFILES:
        raise StoreError(f"unknown profile {profile_id!r} (known: {', '.join(PROFILES)})")
    return [e for e in load_store() if profile_id in e.profiles]


def profile(profile_id: str) -> Profile:
    return Profile(profile_id, tuple(e.name for e in load_profile(profile_id)))


def get_entry(name: str) -> AxiomEntry:
    for e in load_store():
        if e.name == name:
            return e
    raise StoreError(f"no axiom named {name!r}")


@lru_cache(maxsize=1)
def _subset_manifest() -> dict[str, tuple[str, ...]]:
    text = (_axioms_dir() / "subsets.manifest").read_text(encoding="utf-8")
    out: dict[str, tuple[str, ...]] = {}
    for line in text.splitlines():
        line = line.strip()
        if not line or line.startswith("#"):
            continue
        test_id, _, names = line.partition(":")
        out[test_id.strip()] = tuple(names.split())
    return out


def subset_manifest() -> dict[str, tuple[str, ...]]:
    return dict(_subset_manifest())


def get_subset(test_id: str) -> list[AxiomEntry]:
    """The hand-curated minimal subset for a bundled test."""
    manifest = _subset_manifest()
    if test_id not in manifest:
        # allow lookup by numeric prefix ("020" for 020_Logical_Complications)
        hits = [k for k in manifest if k.startswith(test_id)]
        if len(hits) != 1:
            raise StoreError(f"unknown test id {test_id!r}")
        test_id = hits[0]
    return [get_entry(name) for name in _subset_manifest()[test_id]]


# ------------------------------------------------------------- relevance

Hops = Union[int, float, None]


def select_relevant(
    axioms: Sequence[AxiomEntry],
    goal_symbols: Iterable[str],
    hops: Hops = None,
) -> list[AxiomEntry]:
    """Reachability filter over the bipartite axiom-symbol graph.

    Level 0 is the given symbol set; each hop admits every axiom sharing at
    least one constant/function symbol with the reached set and folds the
    axiom's symbols in. `hops=None` (or infinity) runs to fixpoint. Axioms
    with no symbols at all are always admitted. Store order is preserved.
    """
    if hops is None or hops == math.inf:
        max_rounds = None
    else:
        if hops < 0:
            raise ValueError("hops must be >= 0")
        max_rounds = int(hops)
    selected = {e.name for e in axioms if not e.symbols}
    reached = set(goal_symbols)
    rounds = 0
    while max_rounds is None or rounds < max_rounds:
        fresh = [e for e in axioms if e.name not in selected and e.symbols & reached]
        if not fresh:
            break
        for e in fresh:
            selected.add(e.name)
            reached |= e.symbols
        rounds += 1
    return [e for e in axioms if e.name in selected]


# ------------------------------------------------------ schema instances

_SCHEMA_FEATURES = (
    "bool.unionOf",
    "bool.intersectionOf",
    "enum.oneOf",
    "chain.propertyChainAxiom",
    "alldiff.AllDifferent",
)


def _list_guard(cells: list[Var], items: list[Var]) -> list[FolFormula]:
    first = Const("uri_rdf_first")
    rest = Const("uri_rdf_rest")
    nil = Const("uri_rdf_nil")
    out: list[FolFormula] = []
    for i, (cell, item) in enumerate(zip(cells, items)):
        out.append(Atom("iext", (first, cell, item)))
        tail = cells[i + 1] if i + 1 < len(cells) else nil
        out.append(Atom("iext", (rest, cell, tail)))
    return out


def _conj(parts: list[FolFormula]) -> FolFormula:
    return parts[0] if len(parts) == 1 else And(tuple(parts))


def _disj(parts: list[FolFormula]) -> FolFormula:
    return parts[0] if len(parts) == 1 else Or(tuple(parts))


def instantiate_schema(feature: str, arity: int) -> FolFormula:
    """One size-instance of a list-parameterized semantic condition.

    Mirrors the stored axioms exactly for the shipped features/arities;
    raises on arities outside 1..3 or non-parameterized features.
    """
    if feature not in _SCHEMA_FEATURES:
        raise StoreError(f"feature {feature!r} is not size-parameterized")
    if not 1 <= arity <= 3:
        raise StoreError(f"arity {arity} outside the supported range 1..3")

    z = Var("Z")
    x = Var("X")
    cells = [Var(f"S{i+1}") for i in range(arity)]

    if feature in ("bool.unionOf", "bool.intersectionOf"):
        items = [Var(f"C{i+1}") for i in range(arity)]
        guard = _conj(_list_guard(cells, items))
        pred = "uri_owl_unionOf" if feature == "bool.unionOf" else "uri_owl_intersectionOf"
        joiner = _disj if feature == "bool.unionOf" else _conj
        core_inner = joiner([Atom("icext", (c, x)) for c in items])
        core = And(
            tuple(
                [Atom("ic", (z,))]
                + [Atom("ic", (c,)) for c in items]
                + [Forall((x.name,), Iff(Atom("icext", (z, x)), core_inner))]
            )
        )
        head = Atom("iext", (Const(pred), z, cells[0]))
        body = Implies(guard, Iff(head, core))
        vars_ = [z.name] + [v.name for pair in zip(cells, items) for v in pair]
        return Forall(tuple(vars_), body)

    if feature == "enum.oneOf":
        items = [Var(f"W{i+1}") for i in range(arity)]
        guard = _conj(_list_guard(cells, items))
        core_inner = _disj([Equal(x, w) for w in items])
        core = And((Atom("ic", (z,)), Forall((x.name,), Iff(Atom("icext", (z, x)), core_inner))))
        head = Atom("iext", (Const("uri_owl_oneOf"), z, cells[0]))
        vars_ = [z.name] + [v.name for pair in zip(cells, items) for v in pair]
        return Forall(tuple(vars_), Implies(guard, Iff(head, core)))

    if feature == "chain.propertyChainAxiom":
        p = Var("P")
        items = [Var(f"P{i+1}") for i in range(arity)]
        guard = _conj(_list_guard(cells, items))
        ys = [Var(f"Y{i}") for i in range(arity + 1)]
        steps = [Atom("iext", (items[i], ys[i], ys[i + 1])) for i in range(arity)]
        closure = Forall(
            tuple(v.name for v in ys),
            Implies(_conj(steps), Atom("iext", (p, ys[0], ys[-1]))),
        )
        consequent = Implies(
            Atom("iext", (Const("uri_owl_propertyChainAxiom"), p, cells[0])),
            And(tuple([Atom("ip", (q,)) for q in items] + [closure])),
        )
        vars_ = [p.name] + [v.name for pair in zip(cells, items) for v in pair]
        return Forall(tuple(vars_), Implies(guard, consequent))

    # alldiff.AllDifferent: pairwise distinctness of a members list
    items = [Var(f"W{i+1}") for i in range(arity)]
    guard = _conj(_list_guard(cells, items))
    head = And(
        (
            Atom("icext", (Const("uri_owl_AllDifferent"), z)),
            Atom("iext", (Const("uri_owl_members"), z, cells[0])),
        )
    )
    pairs = [
        Not(Equal(items[i], items[j]))
        for i in range(arity)
        for j in range(i + 1, arity)
    ]
    consequent: FolFormula = _conj(pairs) if pairs else TRUE
    vars_ = [z.name] + [v.name for pair in zip(cells, items) for v in pair]
    return Forall(tuple(vars_), Implies(guard, Implies(head, consequent)))


def sufficient_profile_check() -> None:
    """Sanity checks on profile nesting; raises StoreError on violation."""
    rdfs = {e.name for e in load_profile("rdfs-ext")}
    alco = {e.name for e in load_profile("alco-full")}
    owl = {e.name for e in load_profile("owl2-full")}
    if not rdfs <= alco or not alco <= owl:
        raise StoreError("profile nesting rdfs-ext <= alco-full <= owl2-full violated")
