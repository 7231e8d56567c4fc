"""First-order formula AST over the fixed reasoning vocabulary.

Predicates are limited to the model-theory vocabulary: iext/3 (property
extensions), icext/2 (class extensions), and the unary domain predicates
ic, ip, ir, idc, lit. Constants and function names are TPTP lower words;
variables are upper words. Everything is immutable and hashable.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from typing import Iterator, Union

PRED_ARITY = {"iext": 3, "icext": 2, "ic": 1, "ip": 1, "ir": 1, "idc": 1, "lit": 1}

_LOWER_WORD = re.compile(r"[a-z][A-Za-z0-9_]*\Z")
_UPPER_WORD = re.compile(r"[A-Z][A-Za-z0-9_]*\Z")


class FolError(ValueError):
    pass


@dataclass(frozen=True, slots=True)
class Const:
    name: str

    def __post_init__(self) -> None:
        if not _LOWER_WORD.match(self.name):
            raise FolError(f"bad constant name: {self.name!r}")


@dataclass(frozen=True, slots=True)
class Var:
    name: str

    def __post_init__(self) -> None:
        if not _UPPER_WORD.match(self.name):
            raise FolError(f"bad variable name: {self.name!r}")


@dataclass(frozen=True, slots=True)
class Func:
    name: str
    args: tuple["FolTerm", ...]

    def __post_init__(self) -> None:
        if not _LOWER_WORD.match(self.name):
            raise FolError(f"bad function name: {self.name!r}")
        if not self.args:
            raise FolError("function term needs at least one argument")


FolTerm = Union[Const, Var, Func]


@dataclass(frozen=True, slots=True)
class Atom:
    pred: str
    args: tuple[FolTerm, ...]

    def __post_init__(self) -> None:
        if self.pred not in PRED_ARITY:
            raise FolError(f"unknown predicate: {self.pred!r}")
        if len(self.args) != PRED_ARITY[self.pred]:
            raise FolError(f"{self.pred} expects {PRED_ARITY[self.pred]} args, got {len(self.args)}")


@dataclass(frozen=True, slots=True)
class Equal:
    left: FolTerm
    right: FolTerm


@dataclass(frozen=True, slots=True)
class Not:
    body: "FolFormula"


@dataclass(frozen=True, slots=True)
class And:
    args: tuple["FolFormula", ...]


@dataclass(frozen=True, slots=True)
class Or:
    args: tuple["FolFormula", ...]


@dataclass(frozen=True, slots=True)
class Implies:
    left: "FolFormula"
    right: "FolFormula"


@dataclass(frozen=True, slots=True)
class Iff:
    left: "FolFormula"
    right: "FolFormula"


@dataclass(frozen=True, slots=True)
class Forall:
    vars: tuple[str, ...]
    body: "FolFormula"


@dataclass(frozen=True, slots=True)
class Exists:
    vars: tuple[str, ...]
    body: "FolFormula"


class _TrueF:
    __slots__ = ()

    def __repr__(self) -> str:
        return "TRUE"


class _FalseF:
    __slots__ = ()

    def __repr__(self) -> str:
        return "FALSE"


TRUE = _TrueF()
FALSE = _FalseF()

FolFormula = Union[Atom, Equal, Not, And, Or, Implies, Iff, Forall, Exists, _TrueF, _FalseF]


@dataclass(frozen=True, slots=True)
class NamedFormula:
    name: str
    role: str  # "axiom" | "conjecture"
    formula: FolFormula

    def __post_init__(self) -> None:
        if self.role not in ("axiom", "conjecture"):
            raise FolError(f"bad role {self.role!r}")
        if not _LOWER_WORD.match(self.name):
            raise FolError(f"bad formula name {self.name!r}")


class Problem:
    """An ordered list of named formulas with at most one conjecture."""

    __slots__ = ("formulas",)

    def __init__(self, formulas: "list[NamedFormula] | tuple[NamedFormula, ...]"):
        self.formulas = tuple(formulas)
        names = [nf.name for nf in self.formulas]
        if len(set(names)) != len(names):
            dupes = sorted({n for n in names if names.count(n) > 1})
            raise FolError(f"duplicate formula names: {dupes}")
        if sum(1 for nf in self.formulas if nf.role == "conjecture") > 1:
            raise FolError("at most one conjecture per problem")

    def __iter__(self) -> Iterator[NamedFormula]:
        return iter(self.formulas)

    def __len__(self) -> int:
        return len(self.formulas)

    @property
    def conjecture(self) -> "NamedFormula | None":
        for nf in self.formulas:
            if nf.role == "conjecture":
                return nf
        return None


def subterms(t: FolTerm) -> Iterator[FolTerm]:
    yield t
    if isinstance(t, Func):
        for a in t.args:
            yield from subterms(a)


def subformula_terms(f: FolFormula) -> Iterator[FolTerm]:
    if isinstance(f, Atom):
        for a in f.args:
            yield from subterms(a)
    elif isinstance(f, Equal):
        yield from subterms(f.left)
        yield from subterms(f.right)
    elif isinstance(f, Not):
        yield from subformula_terms(f.body)
    elif isinstance(f, (And, Or)):
        for g in f.args:
            yield from subformula_terms(g)
    elif isinstance(f, (Implies, Iff)):
        yield from subformula_terms(f.left)
        yield from subformula_terms(f.right)
    elif isinstance(f, (Forall, Exists)):
        yield from subformula_terms(f.body)


def collect_symbols(f: FolFormula) -> frozenset[str]:
    """Constant and function names occurring in a formula.

    Variables and predicate names are excluded; this is the symbol set the
    relevance filter reasons over.
    """
    out = set()
    for t in subformula_terms(f):
        if isinstance(t, Const):
            out.add(t.name)
        elif isinstance(t, Func):
            out.add(t.name)
    return frozenset(out)


def free_vars(f: FolFormula, bound: frozenset[str] = frozenset()) -> frozenset[str]:
    if isinstance(f, Atom):
        return frozenset(t.name for t in subformula_terms(f) if isinstance(t, Var)) - bound
    if isinstance(f, Equal):
        names = {t.name for s in (f.left, f.right) for t in subterms(s) if isinstance(t, Var)}
        return frozenset(names) - bound
    if isinstance(f, Not):
        return free_vars(f.body, bound)
    if isinstance(f, (And, Or)):
        out: frozenset[str] = frozenset()
        for g in f.args:
            out |= free_vars(g, bound)
        return out
    if isinstance(f, (Implies, Iff)):
        return free_vars(f.left, bound) | free_vars(f.right, bound)
    if isinstance(f, (Forall, Exists)):
        return free_vars(f.body, bound | frozenset(f.vars))
    return frozenset()


def is_closed(f: FolFormula) -> bool:
    return not free_vars(f)


def alpha_equivalent(f: FolFormula, g: FolFormula) -> bool:
    """Equality up to bound-variable renaming and And/Or argument order.

    Quantifier variable lists are treated as sets (any pairing between the
    two scopes may be chosen), which matches the acceptance notion of
    "canonical variable renaming + sorted conjuncts".
    """
    return _alpha(f, g, {}, {})


def _anon_key(f: FolFormula) -> str:
    # Stable sort key with variables blanked out, so multiset matching tries
    # plausible pairings first.
    if isinstance(f, Atom):
        return f"A:{f.pred}(" + ",".join(_anon_term(t) for t in f.args) + ")"
    if isinstance(f, Equal):
        return "E:" + ",".join(sorted((_anon_term(f.left), _anon_term(f.right))))
    if isinstance(f, Not):
        return "N:" + _anon_key(f.body)
    if isinstance(f, And):
        return "C:" + "|".join(sorted(_anon_key(a) for a in f.args))
    if isinstance(f, Or):
        return "D:" + "|".join(sorted(_anon_key(a) for a in f.args))
    if isinstance(f, Implies):
        return "I:" + _anon_key(f.left) + ">" + _anon_key(f.right)
    if isinstance(f, Iff):
        return "B:" + _anon_key(f.left) + "=" + _anon_key(f.right)
    if isinstance(f, Forall):
        return f"F{len(f.vars)}:" + _anon_key(f.body)
    if isinstance(f, Exists):
        return f"X{len(f.vars)}:" + _anon_key(f.body)
    return "T" if f is TRUE else "Z"


def _anon_term(t: FolTerm) -> str:
    if isinstance(t, Var):
        return "?"
    if isinstance(t, Const):
        return t.name
    return t.name + "(" + ",".join(_anon_term(a) for a in t.args) + ")"


def _alpha(f: FolFormula, g: FolFormula, fwd: dict, bwd: dict) -> bool:
    if type(f) is not type(g):
        return False
    if isinstance(f, Atom):
        if f.pred != g.pred:
            return False
        return _alpha_terms(tuple(f.args), tuple(g.args), fwd, bwd)
    if isinstance(f, Equal):
        snapshot = (dict(fwd), dict(bwd))
        if _alpha_terms((f.left, f.right), (g.left, g.right), fwd, bwd):
            return True
        fwd.clear(), bwd.clear()
        fwd.update(snapshot[0]), bwd.update(snapshot[1])
        return _alpha_terms((f.left, f.right), (g.right, g.left), fwd, bwd)
    if isinstance(f, Not):
        return _alpha(f.body, g.body, fwd, bwd)
    if isinstance(f, (And, Or)):
        if len(f.args) != len(g.args):
            return False
        return _alpha_multiset(sorted(f.args, key=_anon_key), list(g.args), fwd, bwd)
    if isinstance(f, (Implies, Iff)):
        return _alpha(f.left, g.left, fwd, bwd) and _alpha(f.right, g.right, fwd, bwd)
    if isinstance(f, (Forall, Exists)):
        if len(f.vars) != len(g.vars):
            return False
        scope = object()
        for v in f.vars:
            fwd[v] = scope
        for v in g.vars:
            bwd[v] = scope
        ok = _alpha(f.body, g.body, fwd, bwd)
        # bindings made under this scope are left in place on success; on
        # failure the caller's backtracking discards the dict copies
        return ok
    return True  # TRUE/FALSE singletons


def _alpha_multiset(fs: list, gs: list, fwd: dict, bwd: dict) -> bool:
    if not fs:
        return True
    head, rest = fs[0], fs[1:]
    for i, cand in enumerate(gs):
        f2, b2 = dict(fwd), dict(bwd)
        if _alpha(head, cand, f2, b2):
            if _alpha_multiset(rest, gs[:i] + gs[i + 1 :], f2, b2):
                fwd.clear(), bwd.clear()
                fwd.update(f2), bwd.update(b2)
                return True
    return False


def _alpha_terms(ts: tuple, us: tuple, fwd: dict, bwd: dict) -> bool:
    if len(ts) != len(us):
        return False
    for t, u in zip(ts, us):
        if isinstance(t, Var):
            if not isinstance(u, Var):
                return False
            tb, ub = fwd.get(t.name), bwd.get(u.name)
            if isinstance(tb, str) or isinstance(ub, str):
                if tb != u.name or ub != t.name:
                    return False
                continue
            # both unbound vars: allowed only if introduced by matching scopes
            if tb is None or ub is None or tb is not ub:
                return False
            fwd[t.name] = u.name
            bwd[u.name] = t.name
        elif isinstance(t, Const):
            if t != u:
                return False
        else:  # Func
            if not isinstance(u, Func) or t.name != u.name:
                return False
            if not _alpha_terms(t.args, u.args, fwd, bwd):
                return False
    return True
