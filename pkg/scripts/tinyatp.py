#!/usr/bin/env python3
"""tinyatp: a small, self-contained TPTP FOF theorem prover and finite
model finder (stdlib only).

Prove mode runs a given-clause resolution loop (binary resolution +
factoring, forward subsumption, equality via congruence axioms) with a
SInE-style premise-selection schedule for large axiom sets. Model-finding
mode searches domain sizes 1..N with a MACE-style propositional encoding
(constants bridged positionally so clause grounding only enumerates real
first-order variables) solved by a built-in CDCL SAT solver.

    tinyatp.py [--mode prove|modelfind] [--timeout S] [--max-size N] FILE

Output is one standard line: `% SZS status <Status> for <file>`, with
Theorem / Unsatisfiable / CounterSatisfiable / Satisfiable / Timeout /
GaveUp / Error as possible statuses.

This is a fallback tool so the pipeline can be exercised where no
full-scale ATP is installed; any SZS-compliant system (Vampire, E,
iProver, Paradox, ...) drops in via the prover config file instead.
"""

from __future__ import annotations

import argparse
import heapq
import itertools
import re
import sys
import time
from typing import Optional

# ============================================================ TPTP parsing

_TOKEN_RE = re.compile(
    r"""
    (?P<ws>\s+|%[^\n]*)
  | (?P<lpar>\() | (?P<rpar>\))
  | (?P<lbr>\[) | (?P<rbr>\])
  | (?P<comma>,) | (?P<dot>\.) | (?P<colon>:)
  | (?P<iff><=>) | (?P<impl>=>) | (?P<neq>!=)
  | (?P<bang>!) | (?P<quest>\?)
  | (?P<amp>&) | (?P<pipe>\|) | (?P<tilde>~) | (?P<eq>=)
  | (?P<defined>\$(?:true|false))
  | (?P<lower>[a-z][A-Za-z0-9_]*)
  | (?P<upper>[A-Z][A-Za-z0-9_]*)
    """,
    re.VERBOSE,
)

# formula nodes: ("atom", pred, args) ("eq", l, r) ("not", f) ("and", [..])
# ("or", [..]) ("impl", a, b) ("iff", a, b) ("all", vars, f) ("ex", vars, f)
# ("true",) ("false",)
# terms: ("v", name) ("c", name) ("f", name, args)


class ParseError(ValueError):
    pass


class Deadline(Exception):
    pass


def _tokens(text: str):
    pos, out = 0, []
    while pos < len(text):
        m = _TOKEN_RE.match(text, pos)
        if m is None:
            raise ParseError(f"bad input at offset {pos}: {text[pos:pos+30]!r}")
        pos = m.end()
        if m.lastgroup != "ws":
            out.append((m.lastgroup, m.group()))
    out.append(("eof", ""))
    return out


class Parser:
    def __init__(self, text: str):
        self.toks = _tokens(text)
        self.i = 0

    def peek(self):
        return self.toks[self.i]

    def next(self):
        t = self.toks[self.i]
        self.i += 1
        return t

    def expect(self, kind):
        k, v = self.next()
        if k != kind:
            raise ParseError(f"expected {kind}, found {k} {v!r}")
        return v

    def units(self):
        out = []
        while self.peek()[0] != "eof":
            if self.expect("lower") != "fof":
                raise ParseError("only fof units supported")
            self.expect("lpar")
            name = self.expect("lower")
            self.expect("comma")
            role = self.expect("lower")
            self.expect("comma")
            f = self.formula()
            self.expect("rpar")
            self.expect("dot")
            out.append((name, role, f))
        return out

    def formula(self):
        left = self.unit()
        kind = self.peek()[0]
        if kind == "amp":
            args = [left]
            while self.peek()[0] == "amp":
                self.next()
                args.append(self.unit())
            return ("and", args)
        if kind == "pipe":
            args = [left]
            while self.peek()[0] == "pipe":
                self.next()
                args.append(self.unit())
            return ("or", args)
        if kind == "impl":
            self.next()
            return ("impl", left, self.unit())
        if kind == "iff":
            self.next()
            return ("iff", left, self.unit())
        return left

    def unit(self):
        kind, value = self.peek()
        if kind == "lpar":
            self.next()
            f = self.formula()
            self.expect("rpar")
            return f
        if kind == "tilde":
            self.next()
            return ("not", self.unit())
        if kind in ("bang", "quest"):
            self.next()
            self.expect("lbr")
            vs = [self.expect("upper")]
            while self.peek()[0] == "comma":
                self.next()
                vs.append(self.expect("upper"))
            self.expect("rbr")
            self.expect("colon")
            body = self.unit()
            return ("all" if kind == "bang" else "ex", vs, body)
        if kind == "defined":
            self.next()
            return ("true",) if value == "$true" else ("false",)
        if kind in ("lower", "upper"):
            term = self.term()
            nxt = self.peek()[0]
            if nxt == "eq":
                self.next()
                return ("eq", term, self.term())
            if nxt == "neq":
                self.next()
                return ("not", ("eq", term, self.term()))
            if term[0] == "f":
                return ("atom", term[1], term[2])
            raise ParseError(f"bare term in formula position: {term!r}")
        raise ParseError(f"unexpected token {value!r}")

    def term(self):
        kind, value = self.next()
        if kind == "upper":
            return ("v", value)
        if kind != "lower":
            raise ParseError(f"expected term, found {value!r}")
        if self.peek()[0] == "lpar":
            self.next()
            args = [self.term()]
            while self.peek()[0] == "comma":
                self.next()
                args.append(self.term())
            self.expect("rpar")
            return ("f", value, tuple(args))
        return ("c", value)


# ========================================================== clausification

_fresh = itertools.count()


def _rename_bound(f, env):
    kind = f[0]
    if kind == "atom":
        return ("atom", f[1], tuple(_subst_term(t, env) for t in f[2]))
    if kind == "eq":
        return ("eq", _subst_term(f[1], env), _subst_term(f[2], env))
    if kind == "not":
        return ("not", _rename_bound(f[1], env))
    if kind in ("and", "or"):
        return (kind, [_rename_bound(g, env) for g in f[1]])
    if kind in ("impl", "iff"):
        return (kind, _rename_bound(f[1], env), _rename_bound(f[2], env))
    if kind in ("all", "ex"):
        fresh = {v: ("v", f"V{next(_fresh)}") for v in f[1]}
        inner = dict(env)
        inner.update(fresh)
        return (kind, [fresh[v][1] for v in f[1]], _rename_bound(f[2], inner))
    return f


def _subst_term(t, env):
    if t[0] == "v":
        return env.get(t[1], t)
    if t[0] == "f":
        return ("f", t[1], tuple(_subst_term(a, env) for a in t[2]))
    return t


def _nnf(f, sign=True):
    kind = f[0]
    if kind == "not":
        return _nnf(f[1], not sign)
    if kind == "and":
        parts = [_nnf(g, sign) for g in f[1]]
        return ("and" if sign else "or", parts)
    if kind == "or":
        parts = [_nnf(g, sign) for g in f[1]]
        return ("or" if sign else "and", parts)
    if kind == "impl":
        if sign:
            return ("or", [_nnf(f[1], False), _nnf(f[2], True)])
        return ("and", [_nnf(f[1], True), _nnf(f[2], False)])
    if kind == "iff":
        if sign:
            return (
                "and",
                [
                    ("or", [_nnf(f[1], False), _nnf(f[2], True)]),
                    ("or", [_nnf(f[2], False), _nnf(f[1], True)]),
                ],
            )
        return (
            "or",
            [
                ("and", [_nnf(f[1], True), _nnf(f[2], False)]),
                ("and", [_nnf(f[2], True), _nnf(f[1], False)]),
            ],
        )
    if kind == "all":
        return ("all" if sign else "ex", f[1], _nnf(f[2], sign))
    if kind == "ex":
        return ("ex" if sign else "all", f[1], _nnf(f[2], sign))
    if kind == "true":
        return ("true",) if sign else ("false",)
    if kind == "false":
        return ("false",) if sign else ("true",)
    return f if sign else ("not", f)


def _skolemize(f, universals, subst):
    kind = f[0]
    if kind == "all":
        return ("all", f[1], _skolemize(f[2], universals + [("v", v) for v in f[1]], subst))
    if kind == "ex":
        inner = dict(subst)
        for v in f[1]:
            name = f"sk{next(_fresh)}"
            inner[v] = ("f", name, tuple(universals)) if universals else ("c", name)
        return _skolemize(f[2], universals, inner)
    if kind in ("and", "or"):
        return (kind, [_skolemize(g, universals, subst) for g in f[1]])
    if kind == "not":
        return ("not", _skolemize(f[1], universals, subst))
    if kind == "atom":
        return ("atom", f[1], tuple(_subst_term(t, subst) for t in f[2]))
    if kind == "eq":
        return ("eq", _subst_term(f[1], subst), _subst_term(f[2], subst))
    return f


def _drop_quantifiers(f):
    kind = f[0]
    if kind == "all":
        return _drop_quantifiers(f[2])
    if kind in ("and", "or"):
        return (kind, [_drop_quantifiers(g) for g in f[1]])
    if kind == "not":
        return ("not", _drop_quantifiers(f[1]))
    return f


def _cnf(f) -> list[list[tuple]]:
    """Quantifier-free NNF -> clause list; literal = (sign, pred, args)."""
    kind = f[0]
    if kind == "and":
        out = []
        for g in f[1]:
            out.extend(_cnf(g))
        return out
    if kind == "or":
        parts = [_cnf(g) for g in f[1]]
        out = [[]]
        for clauses in parts:
            out = [a + b for a in out for b in clauses]
            if len(out) > 20000:
                raise ParseError("CNF explosion")
        return out
    if kind == "not":
        inner = f[1]
        if inner[0] == "atom":
            return [[(False, inner[1], inner[2])]]
        if inner[0] == "eq":
            return [[(False, "=", (inner[1], inner[2]))]]
        if inner[0] == "true":
            return [[]]
        if inner[0] == "false":
            return []
        raise ParseError(f"not in NNF: {f!r}")
    if kind == "atom":
        return [[(True, f[1], f[2])]]
    if kind == "eq":
        return [[(True, "=", (f[1], f[2]))]]
    if kind == "true":
        return []
    if kind == "false":
        return [[]]
    raise ParseError(f"unexpected formula {f!r}")


def clausify(formula) -> list[list[tuple]]:
    f = _rename_bound(formula, {})
    f = _nnf(f)
    f = _skolemize(f, [], {})
    f = _drop_quantifiers(f)
    return _cnf(f)


# ----------------------------------------------------------- clause utils


def _canon_clause(lits) -> Optional[tuple]:
    """Dedupe, detect tautologies, canonically rename vars.

    A positive t=t literal makes a multi-literal clause redundant (given the
    reflexivity axiom), but a unit t=t clause must survive: it may be the
    reflexivity axiom itself, which resolution with axiomatized equality
    cannot do without.
    """
    lits = list(lits)
    seen = set()
    out = []
    for sign, pred, args in lits:
        if pred == "=" and args[0] == args[1]:
            if sign:
                if len(lits) > 1:
                    return None
            else:
                continue
        key = (sign, pred, args)
        if key in seen:
            continue
        if (not sign, pred, args) in seen:
            return None
        seen.add(key)
        out.append(key)
    out.sort(key=lambda l: (l[1], not l[0], repr(l[2])))
    mapping: dict[str, tuple] = {}

    def ren(t):
        if t[0] == "v":
            if t[1] not in mapping:
                mapping[t[1]] = ("v", f"X{len(mapping)}")
            return mapping[t[1]]
        if t[0] == "f":
            return ("f", t[1], tuple(ren(a) for a in t[2]))
        return t

    return tuple((s, p, tuple(ren(a) for a in args)) for s, p, args in out)


def term_weight(t) -> int:
    if t[0] == "f":
        return 1 + sum(term_weight(a) for a in t[2])
    return 1


def clause_weight(clause) -> int:
    return sum(1 + sum(term_weight(a) for a in args) for _, _, args in clause)


def clause_symbols(clause) -> set[str]:
    out: set[str] = set()

    def walk(t):
        if t[0] == "c":
            out.add(t[1])
        elif t[0] == "f":
            out.add(t[1])
            for a in t[2]:
                walk(a)

    for _, _, args in clause:
        for a in args:
            walk(a)
    return out


def formula_symbols(f) -> set[str]:
    out: set[str] = set()

    def walk_term(t):
        if t[0] == "c":
            out.add(t[1])
        elif t[0] == "f":
            out.add(t[1])
            for a in t[2]:
                walk_term(a)

    def walk(g):
        kind = g[0]
        if kind == "atom":
            for a in g[2]:
                walk_term(a)
        elif kind == "eq":
            walk_term(g[1])
            walk_term(g[2])
        elif kind == "not":
            walk(g[1])
        elif kind in ("and", "or"):
            for h in g[1]:
                walk(h)
        elif kind in ("impl", "iff"):
            walk(g[1])
            walk(g[2])
        elif kind in ("all", "ex"):
            walk(g[2])

    walk(f)
    return out


def problem_signature(clauses):
    funcs: dict[str, int] = {}
    preds: dict[str, int] = {}

    def walk(t):
        if t[0] == "f":
            funcs[t[1]] = len(t[2])
            for a in t[2]:
                walk(a)

    for clause in clauses:
        for _, pred, args in clause:
            if pred != "=":
                preds[pred] = len(args)
            for a in args:
                walk(a)
    return funcs, preds


def equality_axioms(clauses, function_congruence: bool = False) -> list[list[tuple]]:
    """Reflexivity, symmetry, transitivity, per-position predicate
    congruence.

    Function congruence is off by default: congruence over nested skolem
    terms floods the search, and ground demodulation already substitutes
    equations inside terms. Without it the calculus cannot certify
    satisfiability of equality problems over function terms, which the
    caller must account for when reporting saturation.
    """
    if not any(pred == "=" for c in clauses for _, pred, _ in c):
        return []
    funcs, preds = problem_signature(clauses)

    def v(i):
        return ("v", f"X{i}")

    def eq(a, b, s=True):
        return (s, "=", (a, b))

    out = [
        [eq(v(0), v(0))],
        [eq(v(0), v(1), False), eq(v(1), v(0))],
        [eq(v(0), v(1), False), eq(v(1), v(2), False), eq(v(0), v(2))],
    ]
    if function_congruence:
        for name, arity in funcs.items():
            for pos in range(arity):
                xs = [v(i) for i in range(arity)]
                ys = list(xs)
                ys[pos] = v(arity)
                out.append(
                    [
                        eq(xs[pos], ys[pos], False),
                        eq(("f", name, tuple(xs)), ("f", name, tuple(ys))),
                    ]
                )
    for name, arity in preds.items():
        for pos in range(arity):
            xs = [v(i) for i in range(arity)]
            ys = list(xs)
            ys[pos] = v(arity)
            out.append(
                [eq(xs[pos], ys[pos], False), (False, name, tuple(xs)), (True, name, tuple(ys))]
            )
    return out


def _sat_claim_ok(clauses) -> bool:
    """Saturation may be reported as satisfiability only when equality
    reasoning was complete: either no equality at all, or no function
    symbols interacting with it."""
    has_eq = any(pred == "=" for c in clauses for _, pred, _ in c)
    if not has_eq:
        return True
    funcs, _ = problem_signature(clauses)
    return not funcs


# ============================================================== saturation


def _offset_term(t, off):
    if t[0] == "v":
        return ("v", t[1] + off)
    if t[0] == "f":
        return ("f", t[1], tuple(_offset_term(a, off) for a in t[2]))
    return t


def _intern_vars(clause):
    mapping: dict[str, int] = {}

    def ren(t):
        if t[0] == "v":
            if t[1] not in mapping:
                mapping[t[1]] = len(mapping)
            return ("v", mapping[t[1]])
        if t[0] == "f":
            return ("f", t[1], tuple(ren(a) for a in t[2]))
        return t

    return (
        tuple((s, p, tuple(ren(a) for a in args)) for s, p, args in clause),
        len(mapping),
    )


def _deref(t, subst):
    while t[0] == "v" and t[1] in subst:
        t = subst[t[1]]
    return t


def _occurs(v, t, subst):
    t = _deref(t, subst)
    if t[0] == "v":
        return t[1] == v
    if t[0] == "f":
        return any(_occurs(v, a, subst) for a in t[2])
    return False


def _unify(t1, t2, subst, trail):
    stack = [(t1, t2)]
    while stack:
        a, b = stack.pop()
        a = _deref(a, subst)
        b = _deref(b, subst)
        if a == b:
            continue
        if a[0] == "v":
            if _occurs(a[1], b, subst):
                return False
            subst[a[1]] = b
            trail.append(a[1])
        elif b[0] == "v":
            if _occurs(b[1], a, subst):
                return False
            subst[b[1]] = a
            trail.append(b[1])
        elif a[0] == "f" and b[0] == "f" and a[1] == b[1] and len(a[2]) == len(b[2]):
            stack.extend(zip(a[2], b[2]))
        else:
            return False
    return True


def _unify_tuples(ts, us, subst, trail):
    for x, y in zip(ts, us):
        if not _unify(x, y, subst, trail):
            return False
    return True


def _apply(t, subst):
    t = _deref(t, subst)
    if t[0] == "f":
        return ("f", t[1], tuple(_apply(a, subst) for a in t[2]))
    return t


def _apply_clause(lits, subst):
    return [(s, p, tuple(_apply(a, subst) for a in args)) for s, p, args in lits]


def _match(t1, t2, subst):
    if t1[0] == "v":
        bound = subst.get(t1[1])
        if bound is None:
            subst[t1[1]] = t2
            return True
        return bound == t2
    if t1[0] == "c":
        return t1 == t2
    if t2[0] != "f" or t2[1] != t1[1] or len(t2[2]) != len(t1[2]):
        return False
    return all(_match(x, y, subst) for x, y in zip(t1[2], t2[2]))


def _subsumes(c, d) -> bool:
    if len(c) > len(d):
        return False

    def backtrack(i, subst):
        if i == len(c):
            return True
        s, p, args = c[i]
        for s2, p2, args2 in d:
            if s2 != s or p2 != p or len(args2) != len(args):
                continue
            trial = dict(subst)
            if all(_match(a, b, trial) for a, b in zip(args, args2)):
                if backtrack(i + 1, trial):
                    return True
        return False

    return backtrack(0, {})


def _is_ground_term(t) -> bool:
    if t[0] == "v":
        return False
    if t[0] == "f":
        return all(_is_ground_term(a) for a in t[2])
    return True


def _subst_ground(t, env):
    if t[0] == "v":
        return env[t[1]]
    if t[0] == "f":
        return ("f", t[1], tuple(_subst_ground(a, env) for a in t[2]))
    return t


def _is_ground_args(args) -> bool:
    return all(_is_ground_term(a) for a in args)


def _ground_lit_key(lit):
    return (clause_weight((lit,)), lit[1], repr(lit[2]))


def _nonvar_symbols(t) -> int:
    if t[0] == "v":
        return 0
    if t[0] == "f":
        return 1 + sum(_nonvar_symbols(a) for a in t[2])
    return 1


def _selected_indices(clause, order: bool = True) -> tuple[int, ...]:
    """Eligible literals, Bachmair-Ganzinger style: clauses with negative
    literals resolve only on one selected negative literal (preferring
    negative equalities so congruence axioms stay dormant until positive
    equations exist); positive clauses resolve on their maximal literals
    under a fixed total order on ground atoms, with non-ground literals
    conservatively treated as maximal. This keeps ground non-Horn reasoning
    close to case analysis instead of flooding. With order=False, positive
    clauses resolve on every literal."""
    negs = [i for i, (s, _, _) in enumerate(clause) if not s]
    if negs:
        # prefer negative equalities (congruence stays dormant), then the
        # most instantiated literal: general literals match everything
        best = max(
            negs,
            key=lambda i: (
                clause[i][1] == "=",
                sum(_nonvar_symbols(a) for a in clause[i][2]),
                clause_weight((clause[i],)),
            ),
        )
        return (best,)
    if len(clause) == 1 or not order:
        return tuple(range(len(clause)))
    eligible = []
    ground = []
    for i, lit in enumerate(clause):
        if _is_ground_args(lit[2]):
            ground.append(i)
        else:
            eligible.append(i)
    if ground:
        top = max(ground, key=lambda i: _ground_lit_key(clause[i]))
        eligible.append(top)
    return tuple(sorted(eligible))


_ACTIVE_OFFSET = 1 << 20


class Saturation:
    """Given-clause loop: binary resolution (optionally with negative-literal
    selection), positive factoring, forward subsumption."""

    def __init__(
        self,
        clauses,
        goal_flags,
        deadline: float,
        select: bool = True,
        order: bool = True,
        max_clauses: int = 400000,
    ):
        self.deadline = deadline
        self.select = select
        self.order = order
        self.max_clauses = max_clauses
        self.active: list[tuple] = []
        # (sign, pred) -> list of (offset-clause, eligible-literal-index)
        self.index: dict[tuple, list] = {}
        # subsumption candidates: rarest (sign, pred) of a clause -> clauses
        self.subs_index: dict[tuple, list] = {}
        self.pred_counts: dict[tuple, int] = {}
        # unit simplification indexes: ground units by exact literal, units
        # with variables as a small match list per (sign, pred)
        self.ground_units: set[tuple] = set()
        self.general_units: dict[tuple, list] = {}
        # demodulation: oriented ground rewrite rules from unit equations;
        # back-demodulated active clauses are tombstoned in `dead`
        self.rewrites: dict[tuple, tuple] = {}
        self.dead: set[tuple] = set()
        self.goal_of: dict[tuple, bool] = {}
        self.passive: list = []
        self.passive_by_age: list = []
        self.queued: set[tuple] = set()
        self.seen: set[tuple] = set()
        self.age = 0
        self.truncated = False
        self.found_empty = False
        for clause, from_goal in zip(clauses, goal_flags):
            self._push(list(clause), from_goal)

    def _check_time(self):
        if time.monotonic() > self.deadline:
            raise Deadline()

    def _eligible(self, clause) -> tuple[int, ...]:
        if self.select:
            return _selected_indices(clause, self.order)
        return tuple(range(len(clause)))

    def _unit_match(self, uargs, args) -> bool:
        subst: dict = {}
        return all(_match(u, a, subst) for u, a in zip(uargs, args))

    def _unit_hits(self, sign, pred, args) -> bool:
        if (sign, pred, args) in self.ground_units:
            return True
        return any(
            len(uargs) == len(args) and self._unit_match(uargs, args)
            for uargs in self.general_units.get((sign, pred), ())
        )

    def _unit_simplify(self, lits) -> "list | None":
        """Drop clauses subsumed by a unit; delete literals a unit refutes."""
        out = []
        for sign, pred, args in lits:
            if self._unit_hits(sign, pred, args):
                return None
            if not self._unit_hits(not sign, pred, args):
                out.append((sign, pred, args))
        return out

    def _rewrite_term(self, t):
        if t[0] == "v":
            return t
        if t[0] == "f":
            t = ("f", t[1], tuple(self._rewrite_term(a) for a in t[2]))
        for _ in range(64):
            nxt = self.rewrites.get(t)
            if nxt is None:
                return t
            t = nxt
        return t

    def _rewrite_lits(self, lits):
        if not self.rewrites:
            return lits
        return [
            (s, p, tuple(self._rewrite_term(a) for a in args)) for s, p, args in lits
        ]

    @staticmethod
    def _contains_term(lits, target) -> bool:
        def walk(t):
            if t == target:
                return True
            if t[0] == "f":
                return any(walk(a) for a in t[2])
            return False

        return any(walk(a) for _, _, args in lits for a in args)

    def _add_rewrite(self, lhs, rhs):
        if lhs in self.rewrites:
            return
        self.rewrites[lhs] = rhs
        # back-demodulation: retire active clauses mentioning lhs and requeue
        # their normal forms, so stale forms cannot block a refutation
        for clause in self.active:
            if clause in self.dead or not self._contains_term(clause, lhs):
                continue
            self.dead.add(clause)
            self._push(list(clause), self.goal_of.get(clause, False))

    def _push(self, lits, from_goal):
        lits = self._rewrite_lits(lits)
        lits = self._unit_simplify(lits)
        if lits is None:
            return
        canon = _canon_clause(lits)
        if canon is None or canon in self.seen:
            return
        self.seen.add(canon)
        if not canon:
            self.found_empty = True
            return
        w = clause_weight(canon)
        if from_goal:
            w = max(1, int(w * 0.55))
        if len(canon) == 1:
            w = max(1, w - 3)
        self.age += 1
        heapq.heappush(self.passive, (w, self.age, canon, from_goal))
        heapq.heappush(self.passive_by_age, (self.age, canon, from_goal))
        self.queued.add(canon)

    def _forward_subsumed(self, given) -> bool:
        # only short subsumers are worth the scan; unit subsumption is
        # already handled by _unit_simplify
        given_sig = {(s, p) for s, p, _ in given}
        n = len(given)
        checked = 0
        for key in given_sig:
            for cand, sig in self.subs_index.get(key, ()):
                if 1 < len(cand) <= min(n, 3) and sig <= given_sig and cand not in self.dead:
                    checked += 1
                    if checked > 400:
                        return False
                    if _subsumes(cand, given):
                        return True
        return False

    def _activate(self, clause, from_goal):
        offset = tuple(
            (s, p, tuple(_offset_term(a, _ACTIVE_OFFSET) for a in args))
            for s, p, args in _intern_vars(clause)[0]
        )
        self.active.append(clause)
        self.goal_of[clause] = from_goal
        sig = {(s, p) for s, p, _ in clause}
        for key in sig:
            self.pred_counts[key] = self.pred_counts.get(key, 0) + 1
        rarest = min(sig, key=lambda k: self.pred_counts.get(k, 0))
        self.subs_index.setdefault(rarest, []).append((clause, frozenset(sig)))
        if len(clause) == 1:
            s, p, args = clause[0]
            if _is_ground_args(args):
                self.ground_units.add((s, p, args))
                if s and p == "=" and args[0] != args[1]:
                    lhs, rhs = args
                    if (term_weight(lhs), repr(lhs)) < (term_weight(rhs), repr(rhs)):
                        lhs, rhs = rhs, lhs
                    self._add_rewrite(lhs, rhs)
            else:
                self.general_units.setdefault((s, p), []).append(args)
        for j in self._eligible(offset):
            s, p, _ = offset[j]
            self.index.setdefault((s, p), []).append((clause, offset, j))

    def run(self) -> str:
        if self.found_empty:
            return "unsat"
        picks = 0
        while self.passive or self.passive_by_age:
            picks += 1
            if picks % 8 == 0:
                self._check_time()
            if picks % 1500 == 0 and self._ground_unsat():
                return "unsat"
            if len(self.seen) > self.max_clauses:
                self.truncated = True
                return "gaveup"
            given = None
            if picks % 5 == 0:
                while self.passive_by_age:
                    _, cand, from_goal = heapq.heappop(self.passive_by_age)
                    if cand in self.queued:
                        given = cand
                        break
            else:
                while self.passive:
                    _, _, cand, from_goal = heapq.heappop(self.passive)
                    if cand in self.queued:
                        given = cand
                        break
            if given is None:
                if self.passive or self.passive_by_age:
                    continue
                break
            self.queued.discard(given)
            simplified = self._unit_simplify(self._rewrite_lits(list(given)))
            if simplified is None:
                continue
            if _canon_clause(simplified) != given:
                self._push(simplified, from_goal)
                if self.found_empty:
                    return "unsat"
                continue
            if self._forward_subsumed(given):
                continue
            self._infer(given, from_goal)
            if self.found_empty:
                return "unsat"
            self._activate(given, from_goal)
        return "gaveup" if self.truncated else "sat"

    def _ground_unsat(self) -> bool:
        """Sound UNSAT check on the accumulated ground clauses.

        The derived ground fragment often encodes a small case analysis that
        saturation is slow to finish. Hand it (plus occurrence-restricted
        ground equality theory) to the SAT core; propositional
        unsatisfiability of consequences proves the original set
        unsatisfiable. Never claims satisfiability.
        """
        ground: list[tuple] = []
        lifted: list[tuple] = []
        for clause in self.active:
            if clause in self.dead:
                continue
            if all(_is_ground_args(a) for _, _, a in clause):
                ground.append(clause)
            else:
                lifted.append(clause)
        for _, _, clause, _ in self.passive:
            if clause in self.queued and all(_is_ground_args(a) for _, _, a in clause):
                ground.append(clause)
        if len(ground) < 4 or len(ground) > 20000:
            return False

        # candidate terms for instantiating small lifted clauses: ground
        # argument terms of the pool, equality participants first
        freq: dict[tuple, int] = {}
        in_eq: set[tuple] = set()
        for clause in ground:
            for _, p, args in clause:
                for a in args:
                    freq[a] = freq.get(a, 0) + 1
                if p == "=":
                    in_eq.update(args)
        candidates = sorted(freq, key=lambda t: (t not in in_eq, -freq[t], repr(t)))[:20]

        def clause_vars(clause):
            out = []
            for _, _, args in clause:
                for a in args:
                    stack = [a]
                    while stack:
                        t = stack.pop()
                        if t[0] == "v":
                            if t[1] not in out:
                                out.append(t[1])
                        elif t[0] == "f":
                            stack.extend(t[2])
            return out

        instances: list[tuple] = []
        for clause in lifted:
            vs = clause_vars(clause)
            if not 1 <= len(vs) <= 2:
                continue
            for combo in itertools.product(candidates, repeat=len(vs)):
                env = dict(zip(vs, combo))
                inst = tuple(
                    (s, p, tuple(_subst_ground(a, env) for a in args))
                    for s, p, args in clause
                )
                instances.append(inst)
                if len(instances) > 30000:
                    break
            if len(instances) > 30000:
                break
        ground = ground + instances

        def canon_eq(a, b):
            return (a, b) if repr(a) <= repr(b) else (b, a)

        atom_ids: dict[tuple, int] = {}
        eq_terms: set[tuple] = set()
        sat = CDCL(min(self.deadline, time.monotonic() + 8.0))

        def atom_var(pred, args) -> "int | bool":
            if pred == "=":
                a, b = args
                if a == b:
                    return True
                key = ("=",) + canon_eq(a, b)
                eq_terms.update((a, b))
            else:
                key = (pred,) + tuple(args)
            v = atom_ids.get(key)
            if v is None:
                v = sat.new_var()
                atom_ids[key] = v
            return v

        try:
            for clause in ground:
                lits = []
                is_true = False
                for s, p, args in clause:
                    v = atom_var(p, args)
                    if v is True:
                        if s:
                            is_true = True
                            break
                        continue
                    lits.append(v if s else -v)
                if is_true:
                    continue
                if not sat.add_clause(lits):
                    return True
            if len(eq_terms) > 32:
                return False
            terms = sorted(eq_terms, key=repr)
            # transitivity over equality-relevant terms
            for i in range(len(terms)):
                for j in range(i + 1, len(terms)):
                    for k in range(j + 1, len(terms)):
                        a, b, c = terms[i], terms[j], terms[k]
                        vab, vbc, vac = atom_var("=", (a, b)), atom_var("=", (b, c)), atom_var("=", (a, c))
                        if not (
                            sat.add_clause([-vab, -vbc, vac])
                            and sat.add_clause([-vab, -vac, vbc])
                            and sat.add_clause([-vbc, -vac, vab])
                        ):
                            return True
            # occurrence-restricted congruence between existing atoms
            non_eq = [k for k in list(atom_ids) if k[0] != "="]
            by_pred: dict[str, list] = {}
            for key in non_eq:
                by_pred.setdefault(key[0], []).append(key)
            for pred, keys in by_pred.items():
                if len(keys) > 400:
                    continue
                for x in range(len(keys)):
                    for y in range(x + 1, len(keys)):
                        k1, k2 = keys[x], keys[y]
                        diffs = [
                            idx
                            for idx in range(1, len(k1))
                            if k1[idx] != k2[idx]
                        ]
                        if len(diffs) != 1:
                            continue
                        d = diffs[0]
                        a, b = k1[d], k2[d]
                        if a not in eq_terms or b not in eq_terms:
                            continue
                        ve = atom_var("=", (a, b))
                        v1, v2 = atom_ids[k1], atom_ids[k2]
                        if not (
                            sat.add_clause([-ve, -v1, v2])
                            and sat.add_clause([-ve, -v2, v1])
                        ):
                            return True
            return sat.solve() is None
        except Deadline:
            return False

    def _infer(self, given, from_goal):
        interned, nvars = _intern_vars(given)
        if nvars >= _ACTIVE_OFFSET:
            return
        # positive factoring
        if all(s for s, _, _ in interned):
            for i in range(len(interned)):
                s1, p1, a1 = interned[i]
                for j in range(i + 1, len(interned)):
                    s2, p2, a2 = interned[j]
                    if p1 != p2 or len(a1) != len(a2):
                        continue
                    subst: dict = {}
                    trail: list = []
                    if _unify_tuples(a1, a2, subst, trail):
                        rest = [interned[k] for k in range(len(interned)) if k != j]
                        self._push(_apply_clause(rest, subst), from_goal)
                        if self.found_empty:
                            return
        # resolution: eligible literal of given vs indexed eligible literals,
        # plus self-resolution
        self._check_time()
        given_offset = tuple(
            (s, p, tuple(_offset_term(a, _ACTIVE_OFFSET) for a in args))
            for s, p, args in interned
        )
        self_partners = [(None, given_offset, j) for j in self._eligible(given_offset)]
        for i in self._eligible(interned):
            s1, p1, a1 = interned[i]
            partners = self.index.get((not s1, p1), []) + [
                (o, c, j) for o, c, j in self_partners if c[j][0] != s1 and c[j][1] == p1
            ]
            for orig, other, j in partners:
                if orig is not None and orig in self.dead:
                    continue
                s2, p2, a2 = other[j]
                if len(a1) != len(a2):
                    continue
                subst: dict = {}
                trail: list = []
                if _unify_tuples(a1, a2, subst, trail):
                    merged = [interned[k] for k in range(len(interned)) if k != i]
                    merged += [other[k] for k in range(len(other)) if k != j]
                    self._push(_apply_clause(merged, subst), from_goal)
                    if self.found_empty:
                        return


# ===================================================== SInE axiom selection


def sine_select(axioms, seed_symbols, tolerance: float, depth) -> list[int]:
    sym_of = [formula_symbols(f) for _, _, f in axioms]
    occurrences: dict[str, int] = {}
    for syms in sym_of:
        for s in syms:
            occurrences[s] = occurrences.get(s, 0) + 1

    def triggered_by(idx: int, reached: set[str]) -> bool:
        syms = sym_of[idx]
        if not syms & reached:
            return False
        least = min(occurrences.get(s, 1) for s in syms)
        return any(
            s in reached and occurrences.get(s, 1) <= tolerance * least for s in syms
        )

    reached = set(seed_symbols)
    selected: set[int] = {i for i, syms in enumerate(sym_of) if not syms}
    level = 0
    while depth is None or level < depth:
        fresh = [i for i in range(len(axioms)) if i not in selected and triggered_by(i, reached)]
        if not fresh:
            break
        for i in fresh:
            selected.add(i)
            reached |= sym_of[i]
        level += 1
    return sorted(selected)


# ========================================================== finite models


class CDCL:
    """Two-watch CDCL with 1UIP learning and geometric restarts."""

    def __init__(self, deadline: float):
        self.deadline = deadline
        self.nvars = 0
        self.clauses: list[list[int]] = []
        self.watches: dict[int, list[int]] = {}
        self.assign: list[int] = []
        self.level: list[int] = []
        self.reason: list[int] = []
        self.trail: list[int] = []
        self.trail_lim: list[int] = []
        self.activity: list[float] = []
        self.var_inc = 1.0
        self.qhead = 0
        self.conflict_at_zero = False

    def new_var(self) -> int:
        self.nvars += 1
        self.assign.append(0)
        self.level.append(0)
        self.reason.append(-1)
        self.activity.append(0.0)
        return self.nvars

    def value(self, lit: int) -> int:
        v = self.assign[abs(lit) - 1]
        return v if lit > 0 else -v

    def add_clause(self, lits) -> bool:
        """Level-0 clause addition; returns False on immediate conflict."""
        if self.conflict_at_zero:
            return False
        unique = list(dict.fromkeys(lits))
        litset = set(unique)
        if any(-l in litset for l in unique):
            return True
        if any(self.value(l) == 1 for l in unique):
            return True
        remaining = [l for l in unique if self.value(l) == 0]
        if not remaining:
            self.conflict_at_zero = True
            return False
        if len(remaining) == 1:
            if not self._enqueue(remaining[0], -1) or self._propagate() != -1:
                self.conflict_at_zero = True
                return False
            return True
        idx = len(self.clauses)
        self.clauses.append(remaining)
        self.watches.setdefault(remaining[0], []).append(idx)
        self.watches.setdefault(remaining[1], []).append(idx)
        return True

    def _enqueue(self, lit: int, reason: int) -> bool:
        val = self.value(lit)
        if val == 1:
            return True
        if val == -1:
            return False
        var = abs(lit) - 1
        self.assign[var] = 1 if lit > 0 else -1
        self.level[var] = len(self.trail_lim)
        self.reason[var] = reason
        self.trail.append(lit)
        return True

    def _propagate(self) -> int:
        while self.qhead < len(self.trail):
            lit = self.trail[self.qhead]
            self.qhead += 1
            falsified = -lit
            watchers = self.watches.get(falsified)
            if not watchers:
                continue
            i = 0
            while i < len(watchers):
                ci = watchers[i]
                clause = self.clauses[ci]
                if clause[0] == falsified:
                    clause[0], clause[1] = clause[1], clause[0]
                if self.value(clause[0]) == 1:
                    i += 1
                    continue
                moved = False
                for k in range(2, len(clause)):
                    if self.value(clause[k]) != -1:
                        clause[1], clause[k] = clause[k], clause[1]
                        self.watches.setdefault(clause[1], []).append(ci)
                        watchers[i] = watchers[-1]
                        watchers.pop()
                        moved = True
                        break
                if moved:
                    continue
                if not self._enqueue(clause[0], ci):
                    return ci
                i += 1
        return -1

    def _analyze(self, confl: int):
        seen = [False] * self.nvars
        counter = 0
        p = 0
        index = len(self.trail)
        cur = len(self.trail_lim)
        learnt: list[int] = []
        while True:
            for l in self.clauses[confl]:
                if p != 0 and l == p:
                    continue
                var = abs(l) - 1
                if not seen[var] and self.level[var] > 0:
                    seen[var] = True
                    self.activity[var] += self.var_inc
                    if self.level[var] >= cur:
                        counter += 1
                    else:
                        learnt.append(l)
            while True:
                index -= 1
                if seen[abs(self.trail[index]) - 1]:
                    break
            p = self.trail[index]
            var = abs(p) - 1
            seen[var] = False
            counter -= 1
            if counter == 0:
                break
            confl = self.reason[var]
        learnt.insert(0, -p)
        if len(learnt) == 1:
            back = 0
        else:
            # move a max-level literal to the second watch position
            best = max(range(1, len(learnt)), key=lambda k: self.level[abs(learnt[k]) - 1])
            learnt[1], learnt[best] = learnt[best], learnt[1]
            back = self.level[abs(learnt[1]) - 1]
        return learnt, back

    def _backtrack(self, level: int):
        if len(self.trail_lim) <= level:
            return
        limit = self.trail_lim[level]
        for lit in self.trail[limit:]:
            self.assign[abs(lit) - 1] = 0
        del self.trail[limit:]
        del self.trail_lim[level:]
        self.qhead = len(self.trail)

    def solve(self) -> Optional[list[int]]:
        if self.conflict_at_zero:
            return None
        if self._propagate() != -1:
            return None
        conflicts_since_restart = 0
        restart_limit = 200
        order = sorted(range(self.nvars), key=lambda v: -self.activity[v])
        checks = 0
        while True:
            checks += 1
            if checks % 64 == 0 and time.monotonic() > self.deadline:
                raise Deadline()
            confl = self._propagate()
            if confl != -1:
                if not self.trail_lim:
                    return None
                conflicts_since_restart += 1
                learnt, back = self._analyze(confl)
                self._backtrack(back)
                self.var_inc *= 1.05
                if self.var_inc > 1e100:
                    self.activity = [a / 1e100 for a in self.activity]
                    self.var_inc /= 1e100
                if len(learnt) == 1:
                    if not self._enqueue(learnt[0], -1):
                        return None
                else:
                    idx = len(self.clauses)
                    self.clauses.append(learnt)
                    self.watches.setdefault(learnt[0], []).append(idx)
                    self.watches.setdefault(learnt[1], []).append(idx)
                    self._enqueue(learnt[0], idx)
                if conflicts_since_restart >= restart_limit:
                    conflicts_since_restart = 0
                    restart_limit = int(restart_limit * 1.4)
                    self._backtrack(0)
                    order = sorted(range(self.nvars), key=lambda v: -self.activity[v])
                continue
            decision = 0
            for v in order:
                if self.assign[v] == 0:
                    decision = v + 1
                    break
            if decision == 0:
                for v in range(self.nvars):
                    if self.assign[v] == 0:
                        decision = v + 1
                        break
            if decision == 0:
                return list(self.assign)
            self.trail_lim.append(len(self.trail))
            self._enqueue(decision, -1)


def _flatten_clause(clause) -> list[tuple]:
    """Make every literal shallow: p(v/c...), (f(v/c...) = v/c), (v/c = v/c)."""
    counter = itertools.count()
    pending = list(clause)
    done: list[tuple] = []

    def shallow_args(args, out_extra):
        new_args = []
        for a in args:
            if a[0] == "f":
                z = ("v", f"_Z{next(counter)}")
                out_extra.append((False, "=", (a, z)))
                new_args.append(z)
            else:
                new_args.append(a)
        return tuple(new_args)

    while pending:
        sign, pred, args = pending.pop()
        extra: list[tuple] = []
        if pred != "=":
            done.append((sign, pred, shallow_args(args, extra)))
        else:
            l, r = args
            if l[0] != "f" and r[0] == "f":
                l, r = r, l
            if l[0] == "f":
                l = ("f", l[1], shallow_args(l[2], extra))
                if r[0] == "f":
                    z = ("v", f"_Z{next(counter)}")
                    extra.append((False, "=", (r, z)))
                    r = z
            done.append((sign, "=", (l, r)))
        pending.extend(extra)
    return done


class ModelSearch:
    """MACE-style finite model search over one clause set."""

    def __init__(self, clauses, deadline: float):
        self.deadline = deadline
        self.prepped = []
        const_order: list[str] = []

        def collect(t):
            if t[0] == "c":
                if t[1] not in const_order:
                    const_order.append(t[1])
            elif t[0] == "f":
                for a in t[2]:
                    collect(a)

        for clause in clauses:
            flat = _flatten_clause(clause)
            vars_: list[str] = []
            for _, _, args in flat:
                for a in args:
                    stack = [a]
                    while stack:
                        t = stack.pop()
                        if t[0] == "v":
                            if t[1] not in vars_:
                                vars_.append(t[1])
                        elif t[0] == "f":
                            stack.extend(t[2])
            self.prepped.append((flat, vars_))
            for _, _, args in clause:
                for a in args:
                    collect(a)
        self.constants = const_order

    def search(self, n: int) -> bool:
        sat = CDCL(self.deadline)
        self.sat = sat
        self.n = n
        self.const_var: dict[tuple[str, int], int] = {}
        self.atom_var: dict[tuple, int] = {}
        self.cell_var: dict[tuple, int] = {}

        for ci, c in enumerate(self.constants):
            limit = min(ci, n - 1)
            vs = []
            for i in range(n):
                v = sat.new_var()
                self.const_var[(c, i)] = v
                if i > limit:
                    sat.add_clause([-v])
                else:
                    vs.append(v)
            sat.add_clause(vs)
            for i in range(len(vs)):
                for j in range(i + 1, len(vs)):
                    sat.add_clause([-vs[i], -vs[j]])

        for flat, vars_ in self.prepped:
            if time.monotonic() > self.deadline:
                raise Deadline()
            for assignment in itertools.product(range(n), repeat=len(vars_)):
                env = dict(zip(vars_, assignment))
                lits = []
                satisfied = False
                for sign, pred, args in flat:
                    lit = self._ground_literal(sign, pred, args, env)
                    if lit is True:
                        satisfied = True
                        break
                    if lit is False:
                        continue
                    lits.append(lit)
                if satisfied:
                    continue
                if not lits or not sat.add_clause(lits):
                    return False
        return sat.solve() is not None

    # ---- encoding helpers (ints are domain elements; ('c', name) constants;
    # ---- ('cell', (f, args)) shallow function applications)

    def _ground_term(self, t, env):
        if t[0] == "v":
            return env[t[1]]
        if t[0] == "c":
            return ("c", t[1])
        args = tuple(self._ground_term(a, env) for a in t[2])
        return ("cell", (t[1], args))

    def _symbolic_value_lit(self, sym, i: int) -> int:
        if sym[0] == "c":
            return self.const_var[(sym[1], i)]
        return self._cell_value_var(sym[1], i)

    def _cell_value_var(self, cell_key, value: int) -> int:
        fn, args = cell_key
        key = (fn, args, value)
        if key in self.cell_var:
            return self.cell_var[key]
        sym_pos = next((k for k, a in enumerate(args) if not isinstance(a, int)), None)
        if sym_pos is None:
            vs = []
            for i in range(self.n):
                v = self.sat.new_var()
                self.cell_var[(fn, args, i)] = v
                vs.append(v)
            self.sat.add_clause(vs)
            for i in range(len(vs)):
                for j in range(i + 1, len(vs)):
                    self.sat.add_clause([-vs[i], -vs[j]])
            return self.cell_var[key]
        for i in range(self.n):
            v = self.sat.new_var()
            self.cell_var[(fn, args, i)] = v
        a = args[sym_pos]
        for i in range(self.n):
            bridge = self._symbolic_value_lit(a, i)
            reduced = (fn, args[:sym_pos] + (i,) + args[sym_pos + 1 :])
            for val in range(self.n):
                sub = self._cell_value_var(reduced, val)
                mine = self.cell_var[(fn, args, val)]
                self.sat.add_clause([-bridge, -mine, sub])
                self.sat.add_clause([-bridge, mine, -sub])
        return self.cell_var[key]

    def _atom_prop(self, pred: str, args: tuple) -> "int | bool":
        if pred == "_eq" and all(isinstance(a, int) for a in args):
            return args[0] == args[1]
        key = (pred, args)
        if key in self.atom_var:
            return self.atom_var[key]
        v = self.sat.new_var()
        self.atom_var[key] = v
        sym_pos = next((k for k, a in enumerate(args) if not isinstance(a, int)), None)
        if sym_pos is not None:
            a = args[sym_pos]
            for i in range(self.n):
                bridge = self._symbolic_value_lit(a, i)
                sub = self._atom_prop(pred, args[:sym_pos] + (i,) + args[sym_pos + 1 :])
                if sub is True:
                    self.sat.add_clause([-bridge, v])
                elif sub is False:
                    self.sat.add_clause([-bridge, -v])
                else:
                    self.sat.add_clause([-bridge, -v, sub])
                    self.sat.add_clause([-bridge, v, -sub])
        return v

    def _ground_literal(self, sign, pred, args, env):
        if pred == "=":
            a = self._ground_term(args[0], env)
            b = self._ground_term(args[1], env)
            if isinstance(a, int) and isinstance(b, int):
                return (a == b) == sign
            if isinstance(b, int):
                a, b = b, a
            if isinstance(a, int):
                v = self._symbolic_value_lit(b, a)
                return v if sign else -v
            prop = self._atom_prop("_eq", (a, b))
            if isinstance(prop, bool):
                return prop == sign
            return prop if sign else -prop
        ground = tuple(self._ground_term(a, env) for a in args)
        prop = self._atom_prop(pred, ground)
        if isinstance(prop, bool):
            return prop == sign
        return prop if sign else -prop


# ============================================================ entry points


def run_modelfind(units, deadline: float, max_size: int) -> str:
    axioms = [f for _, role, f in units if role != "conjecture"]
    conjectures = [f for _, role, f in units if role == "conjecture"]
    clauses = []
    for f in axioms:
        clauses.extend(clausify(f))
    for f in conjectures:
        clauses.extend(clausify(("not", f)))
    canon = []
    for c in clauses:
        cc = _canon_clause(c)
        if cc is None:
            continue
        if not cc:
            return "Theorem" if conjectures else "Unsatisfiable"
        canon.append(list(cc))
    for n in range(1, max_size + 1):
        if time.monotonic() > deadline:
            return "Timeout"
        try:
            if ModelSearch(canon, deadline).search(n):
                return "CounterSatisfiable" if conjectures else "Satisfiable"
        except Deadline:
            return "Timeout"
    return "GaveUp"


def run_prove(units, deadline: float) -> str:
    axioms = [(name, role, f) for name, role, f in units if role != "conjecture"]
    conjectures = [f for _, role, f in units if role == "conjecture"]

    def clause_set(selected):
        clauses: list[list[tuple]] = []
        flags: list[bool] = []
        for name, _, f in selected:
            for c in clausify(f):
                clauses.append(c)
                flags.append(name.startswith("testcase"))
        for f in conjectures:
            for c in clausify(("not", f)):
                clauses.append(c)
                flags.append(True)
        eqs = equality_axioms(clauses)
        return clauses + eqs, flags + [False] * len(eqs)

    background = [a for a in axioms if not a[0].startswith("testcase")]
    # (sine-tolerance, sine-depth, selection?, time-fraction); tolerance None
    # means the full axiom set
    if len(background) > 24 and conjectures:
        schedule = [
            (1.0, 1, True, 0.10),
            (1.6, 2, True, 0.15),
            (2.5, 4, True, 0.15),
            (2.5, 4, False, 0.15),
            (None, None, True, 0.6),
            (None, None, False, 1.0),
        ]
    else:
        schedule = [(None, None, True, 0.45), (None, None, False, 1.0)]

    seeds: set[str] = set()
    for f in conjectures:
        seeds |= formula_symbols(f)
    for name, _, f in axioms:
        if name.startswith("testcase"):
            seeds |= formula_symbols(f)

    total = max(0.1, deadline - time.monotonic())
    for tolerance, depth, select, fraction in schedule:
        now = time.monotonic()
        if now >= deadline - 0.1:
            return "Timeout"
        slice_deadline = (
            deadline if fraction >= 1.0 else min(deadline, now + max(1.0, total * fraction))
        )
        if tolerance is None:
            chosen = axioms
            complete = True
        else:
            idx = sine_select(axioms, seeds, tolerance, depth)
            chosen = [axioms[i] for i in idx]
            complete = len(chosen) == len(axioms)
        try:
            clauses, flags = clause_set(chosen)
        except ParseError:
            return "Error"
        sat = Saturation(clauses, flags, slice_deadline, select=select)
        try:
            outcome = sat.run()
        except Deadline:
            outcome = "timeout"
        if outcome == "unsat":
            return "Theorem" if conjectures else "Unsatisfiable"
        if outcome == "sat" and complete and _sat_claim_ok(clauses):
            # a saturated complete set without the empty clause is a model
            # existence argument (the calculus is refutationally complete)
            return "CounterSatisfiable" if conjectures else "Satisfiable"
    return "Timeout" if time.monotonic() >= deadline - 0.05 else "GaveUp"


def main(argv=None) -> int:
    ap = argparse.ArgumentParser(description="tiny TPTP FOF prover / finite model finder")
    ap.add_argument("file")
    ap.add_argument("--mode", choices=("prove", "modelfind"), default="prove")
    ap.add_argument("--timeout", type=float, default=300.0)
    ap.add_argument("--max-size", type=int, default=6)
    args = ap.parse_args(argv)

    try:
        with open(args.file, encoding="utf-8") as fh:
            units = Parser(fh.read()).units()
    except (OSError, ParseError) as exc:
        print(f"% error: {exc}")
        print(f"% SZS status Error for {args.file}")
        return 0

    deadline = time.monotonic() + args.timeout
    try:
        if args.mode == "prove":
            status = run_prove(units, deadline)
        else:
            status = run_modelfind(units, deadline, args.max_size)
    except Deadline:
        status = "Timeout"
    except RecursionError:
        status = "GaveUp"
    print(f"% SZS status {status} for {args.file}")
    return 0


if __name__ == "__main__":
    sys.setrecursionlimit(100000)
    sys.exit(main())
