"""RDF graph to first-order formula translation.

A graph becomes a conjunction of one `iext(p, s, o)` atom per triple, in
canonical (sorted N-Triples) order so the output is deterministic even when
the source serialization reorders statements. Blank nodes become variables
`B_<label>` bound by a single existential quantifier whose scope is the
whole conjunction. The empty graph translates to `$true`.
"""

from __future__ import annotations

from typing import Optional

from .fol import And, Atom, Exists, FolFormula, NamedFormula, TRUE, Var
from .mangle import Mangler, blank_var_name
from .rdfmodel import BlankNodeId, Graph, canonical_triple_order


def translate_graph(
    g: Graph,
    role: str,
    name: str,
    mangler: Optional[Mangler] = None,
) -> NamedFormula:
    """Translate a graph into a named axiom or conjecture.

    Pass a shared `Mangler` when several graphs (premise, conclusion) must
    agree on constant names within one problem.
    """
    if mangler is None:
        mangler = Mangler(g.prefixes)
    ordered = canonical_triple_order(g)

    blank_vars: dict[str, Var] = {}
    order_of_appearance: list[str] = []
    for t in ordered:
        for node in (t.subject, t.object):
            if isinstance(node, BlankNodeId) and node.label not in blank_vars:
                blank_vars[node.label] = Var(blank_var_name(node.label))
                order_of_appearance.append(node.label)

    atoms = [
        Atom(
            "iext",
            (
                mangler.term_for_node(t.predicate),
                mangler.term_for_node(t.subject, blank_vars),
                mangler.term_for_node(t.object, blank_vars),
            ),
        )
        for t in ordered
    ]

    formula: FolFormula
    if not atoms:
        formula = TRUE
    elif len(atoms) == 1:
        formula = atoms[0]
    else:
        formula = And(tuple(atoms))
    if blank_vars:
        formula = Exists(tuple(blank_vars[l].name for l in order_of_appearance), formula)
    return NamedFormula(name, role, formula)
