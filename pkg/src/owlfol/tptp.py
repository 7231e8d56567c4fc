"""TPTP FOF serialization and parsing.

The writer emits one `fof(name, role, (formula)).` block per named formula
with the standard connective spellings (& | => <=> ~ ! ? = !=). Output is a
pure function of the input problem: same problem, same bytes, on every
platform. Short formulas stay on one line; longer ones break at the top
conjunction/disjunction so the files stay reviewable.

The reader accepts the same dialect back (plus `%` comments and arbitrary
whitespace), which is how the axiom store loads its data files.
"""

from __future__ import annotations

import re
from typing import Iterator, Optional

from .fol import (
    And,
    Atom,
    Const,
    Equal,
    Exists,
    FALSE,
    FolError,
    FolFormula,
    FolTerm,
    Forall,
    Func,
    Iff,
    Implies,
    NamedFormula,
    Not,
    Or,
    Problem,
    TRUE,
    Var,
    _FalseF,
    _TrueF,
)

_MAX_INLINE = 76


class TptpError(ValueError):
    pass


# ---------------------------------------------------------------- writing


def format_term(t: FolTerm) -> str:
    if isinstance(t, (Const, Var)):
        return t.name
    return t.name + "(" + ", ".join(format_term(a) for a in t.args) + ")"


def _inline(f: FolFormula) -> str:
    if isinstance(f, Atom):
        return f.pred + "(" + ", ".join(format_term(a) for a in f.args) + ")"
    if isinstance(f, Equal):
        return f"{format_term(f.left)} = {format_term(f.right)}"
    if isinstance(f, Not):
        if isinstance(f.body, Equal):
            return f"{format_term(f.body.left)} != {format_term(f.body.right)}"
        if isinstance(f.body, Atom):
            return "~ " + _inline(f.body)
        return "~ ( " + _inline(f.body) + " )"
    if isinstance(f, And):
        return "( " + " & ".join(_inline(a) for a in f.args) + " )"
    if isinstance(f, Or):
        return "( " + " | ".join(_inline(a) for a in f.args) + " )"
    if isinstance(f, Implies):
        return "( " + _inline(f.left) + " => " + _inline(f.right) + " )"
    if isinstance(f, Iff):
        return "( " + _inline(f.left) + " <=> " + _inline(f.right) + " )"
    if isinstance(f, Forall):
        return "! [" + ", ".join(f.vars) + "] : " + _inline_quantified_body(f.body)
    if isinstance(f, Exists):
        return "? [" + ", ".join(f.vars) + "] : " + _inline_quantified_body(f.body)
    if f is TRUE:
        return "$true"
    if f is FALSE:
        return "$false"
    raise TptpError(f"cannot serialize {f!r}")


def _inline_quantified_body(f: FolFormula) -> str:
    # quantifier scope must be a TPTP unit: parenthesize anything binary
    if isinstance(f, (Atom, Equal, Not, Forall, Exists, _TrueF, _FalseF)):
        return _inline(f)
    return "( " + _inline(f) + " )"


def _block(f: FolFormula, indent: str) -> list[str]:
    line = _inline(f)
    if len(line) + len(indent) <= _MAX_INLINE:
        return [indent + line]
    step = indent + "  "
    if isinstance(f, (And, Or)):
        sep = "&" if isinstance(f, And) else "|"
        lines = [indent + "("]
        for i, arg in enumerate(f.args):
            sub = _block(arg, step + "  ")
            if i > 0:
                sub[0] = step + sep + " " + sub[0].lstrip()
            lines.extend(sub)
        lines.append(indent + ")")
        return lines
    if isinstance(f, (Implies, Iff)):
        sep = "=>" if isinstance(f, Implies) else "<=>"
        lines = [indent + "("]
        lines.extend(_block(f.left, step + "  "))
        lines.append(step + sep)
        lines.extend(_block(f.right, step + "  "))
        lines.append(indent + ")")
        return lines
    if isinstance(f, (Forall, Exists)):
        q = "!" if isinstance(f, Forall) else "?"
        head = f"{indent}{q} [" + ", ".join(f.vars) + "] : ("
        inner = f.body
        if isinstance(inner, (Forall, Exists, Not)):
            body = _block(inner, step)
        else:
            body = _block(inner, step)
            # strip one redundant paren level when the body already blocks
            if body[0].strip() == "(" and body[-1].strip() == ")":
                body = body[1:-1]
        return [head] + body + [indent + ")"]
    if isinstance(f, Not):
        return [indent + "~ ("] + _block(f.body, step) + [indent + ")"]
    return [indent + line]


def format_block(nf: NamedFormula) -> str:
    one_line = f"fof({nf.name}, {nf.role}, ( {_inline(nf.formula)} ))."
    if len(one_line) <= _MAX_INLINE + 8:
        return one_line
    body = _block(nf.formula, "    ")
    # merge the opening paren of the fof wrapper with the first body line
    return f"fof({nf.name}, {nf.role}, (\n" + "\n".join(body) + " ))."


def serialize_tptp(p: Problem, header: Optional[list[str]] = None) -> str:
    """Render a problem as TPTP text; optional `%` header lines first."""
    parts = []
    if header:
        parts.extend("% " + h if h else "%" for h in header)
        parts.append("")
    for nf in p:
        parts.append(format_block(nf))
        parts.append("")
    return "\n".join(parts).rstrip("\n") + "\n"


# ---------------------------------------------------------------- parsing

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


def _tokens(text: str) -> list[tuple[str, str]]:
    out = []
    pos = 0
    while pos < len(text):
        m = _TOKEN_RE.match(text, pos)
        if m is None:
            raise TptpError(f"bad TPTP input at offset {pos}: {text[pos:pos+30]!r}")
        pos = m.end()
        kind = m.lastgroup
        if kind == "ws":
            continue
        out.append((kind, m.group()))
    out.append(("eof", ""))
    return out


class _TptpParser:
    def __init__(self, text: str):
        self.toks = _tokens(text)
        self.i = 0

    def peek(self) -> tuple[str, str]:
        return self.toks[self.i]

    def next(self) -> tuple[str, str]:
        tok = self.toks[self.i]
        self.i += 1
        return tok

    def expect(self, kind: str) -> str:
        k, v = self.next()
        if k != kind:
            raise TptpError(f"expected {kind}, found {k} {v!r}")
        return v

    def parse_units(self) -> list[NamedFormula]:
        units = []
        while self.peek()[0] != "eof":
            kw = self.expect("lower")
            if kw != "fof":
                raise TptpError(f"only fof units are supported, found {kw!r}")
            self.expect("lpar")
            name = self.expect("lower")
            self.expect("comma")
            role = self.expect("lower")
            self.expect("comma")
            formula = self.parse_formula()
            self.expect("rpar")
            self.expect("dot")
            units.append(NamedFormula(name, role, formula))
        return units

    def parse_formula(self) -> FolFormula:
        left = self.parse_unit()
        kind, _ = self.peek()
        if kind == "amp":
            args = [left]
            while self.peek()[0] == "amp":
                self.next()
                args.append(self.parse_unit())
            return And(tuple(args))
        if kind == "pipe":
            args = [left]
            while self.peek()[0] == "pipe":
                self.next()
                args.append(self.parse_unit())
            return Or(tuple(args))
        if kind == "impl":
            self.next()
            return Implies(left, self.parse_unit())
        if kind == "iff":
            self.next()
            return Iff(left, self.parse_unit())
        return left

    def parse_unit(self) -> FolFormula:
        kind, value = self.peek()
        if kind == "lpar":
            self.next()
            f = self.parse_formula()
            self.expect("rpar")
            return f
        if kind == "tilde":
            self.next()
            body = self.parse_unit()
            return Not(body)
        if kind in ("bang", "quest"):
            self.next()
            self.expect("lbr")
            vars_ = [self.expect("upper")]
            while self.peek()[0] == "comma":
                self.next()
                vars_.append(self.expect("upper"))
            self.expect("rbr")
            self.expect("colon")
            body = self.parse_unit()
            return Forall(tuple(vars_), body) if kind == "bang" else Exists(tuple(vars_), body)
        if kind == "defined":
            self.next()
            return TRUE if value == "$true" else FALSE
        if kind in ("lower", "upper"):
            term = self.parse_term()
            nxt = self.peek()[0]
            if nxt == "eq":
                self.next()
                return Equal(term, self.parse_term())
            if nxt == "neq":
                self.next()
                return Not(Equal(term, self.parse_term()))
            if isinstance(term, Func):
                try:
                    return Atom(term.name, term.args)
                except FolError as exc:
                    raise TptpError(str(exc)) from None
            raise TptpError(f"bare term {format_term(term)!r} is not a formula")
        raise TptpError(f"unexpected token {value!r} in formula")

    def parse_term(self) -> FolTerm:
        kind, value = self.next()
        if kind == "upper":
            return Var(value)
        if kind != "lower":
            raise TptpError(f"expected a term, found {value!r}")
        if self.peek()[0] == "lpar":
            self.next()
            args = [self.parse_term()]
            while self.peek()[0] == "comma":
                self.next()
                args.append(self.parse_term())
            self.expect("rpar")
            return Func(value, tuple(args))
        return Const(value)


def parse_tptp(text: str) -> list[NamedFormula]:
    """Parse `fof(...)` units (the dialect serialize_tptp emits)."""
    return _TptpParser(text).parse_units()


def iter_fof_blocks(text: str) -> Iterator[tuple[str, str]]:
    """Yield (leading-comment-lines, block-text) pairs for each fof unit."""
    comment: list[str] = []
    buf: list[str] = []
    depth = 0
    in_block = False
    for line in text.splitlines():
        stripped = line.strip()
        if not in_block:
            if stripped.startswith("%"):
                comment.append(stripped)
                continue
            if not stripped:
                comment = []
                continue
            in_block = True
        buf.append(line)
        depth += line.count("(") - line.count(")")
        if in_block and depth == 0 and stripped.endswith("."):
            yield ("\n".join(comment), "\n".join(buf))
            comment, buf, in_block = [], [], False
    if buf:
        raise TptpError("unterminated fof block at end of file")
