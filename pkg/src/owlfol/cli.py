"""Command-line front end.

    owlfol translate INPUT... --role axiom|conjecture [--out FILE]
    owlfol solve --premise F [--conclusion F] --kind K (--profile P | --subset T)
                 [--filter off|N|fixpoint] --prover ID [--config FILE] [...]
    owlfol suite [--prover ID] [--config FILE] [--subset | --profile P] [...]
    owlfol bulk --n N [--seed S] [--out FILE]
    owlfol axioms --profile P [--export FILE]

Exit codes: solve returns 0 for '+', 10 for '-', 11 for '?'; every command
returns 2 on bad flags or parse errors and 3 on I/O or spawn failures.
"""

from __future__ import annotations

import argparse
import sys
from pathlib import Path

from . import axiom_store, suite as suite_mod
from .fol import NamedFormula, Problem
from .mangle import Mangler
from .ntriples import NTriplesError, parse_ntriples
from .prover import Kind, ProverConfig, SzsStatus, Verdict, interpret, load_prover_configs, run_prover
from .rdfmodel import Graph, triple_to_ntriples
from .translate import translate_graph
from .tptp import serialize_tptp
from .turtle import TurtleSyntaxError, parse_turtle

EXIT_OK = 0
EXIT_BADFLAGS = 2
EXIT_IO = 3
EXIT_WRONG = 10
EXIT_UNKNOWN = 11


class CliError(Exception):
    def __init__(self, message: str, code: int):
        super().__init__(message)
        self.code = code


def _read_graph(path: Path) -> Graph:
    try:
        text = path.read_text(encoding="utf-8")
    except OSError as exc:
        raise CliError(f"cannot read {path}: {exc}", EXIT_IO) from None
    try:
        if path.suffix == ".nt":
            return parse_ntriples(text)
        return parse_turtle(text)
    except (TurtleSyntaxError, NTriplesError, ValueError) as exc:
        raise CliError(f"{path}: {exc}", EXIT_BADFLAGS) from None


def _write_out(path: "Path | None", text: str) -> None:
    try:
        if path is None:
            sys.stdout.write(text)
        else:
            path.write_text(text, encoding="utf-8")
    except OSError as exc:
        raise CliError(f"cannot write output: {exc}", EXIT_IO) from None


def _prover_from_args(args) -> ProverConfig:
    configs = {}
    if args.config:
        try:
            configs = load_prover_configs(args.config)
        except OSError as exc:
            raise CliError(f"cannot read prover config: {exc}", EXIT_IO) from None
        except ValueError as exc:
            raise CliError(str(exc), EXIT_BADFLAGS) from None
    if not configs:
        raise CliError("no prover configured (use --config FILE)", EXIT_BADFLAGS)
    name = args.prover or next(iter(configs))
    if name not in configs:
        raise CliError(f"prover {name!r} not in config", EXIT_BADFLAGS)
    cfg = configs[name]
    if getattr(args, "timeout", None):
        cfg = ProverConfig(cfg.id, cfg.command_template, cfg.mode, float(args.timeout))
    return cfg


def _parse_filter(raw: "str | None"):
    if raw is None or raw == "off":
        return None
    if raw == "fixpoint":
        return "fixpoint"
    try:
        return int(raw)
    except ValueError:
        raise CliError(f"bad --filter value {raw!r}", EXIT_BADFLAGS) from None


# ------------------------------------------------------------- commands


def cmd_translate(args) -> int:
    role = args.role
    out_parts = []
    for idx, raw in enumerate(args.input):
        g = _read_graph(Path(raw))
        if len(g) == 0:
            continue  # empty premise contributes no formula
        base = "testcase_premise" if role == "axiom" else "testcase_conclusion"
        name = base if len(args.input) == 1 else f"{base}_{idx + 1}"
        out_parts.append(translate_graph(g, role, name))
    text = serialize_tptp(Problem(out_parts)) if out_parts else ""
    _write_out(Path(args.out) if args.out else None, text)
    return EXIT_OK


def cmd_solve(args) -> int:
    prover = _prover_from_args(args)
    kind = {
        "entailment": Kind.POSITIVE_ENTAILMENT,
        "inconsistency": Kind.INCONSISTENCY,
        "nonentailment": Kind.NON_ENTAILMENT,
        "consistency": Kind.CONSISTENCY,
    }[args.kind]
    if kind in (Kind.POSITIVE_ENTAILMENT, Kind.NON_ENTAILMENT) and not args.conclusion:
        raise CliError("--conclusion is required for entailment kinds", EXIT_BADFLAGS)
    if args.profile and args.subset:
        raise CliError("--profile and --subset are mutually exclusive", EXIT_BADFLAGS)

    premise = _read_graph(Path(args.premise))
    conclusion = _read_graph(Path(args.conclusion)) if args.conclusion else None

    mangler = Mangler(premise.prefixes)
    formulas: list[NamedFormula] = []
    if args.subset:
        entries = axiom_store.get_subset(args.subset)
    else:
        entries = axiom_store.load_profile(args.profile or "owl2-full")
    premise_nf = None
    if len(premise) > 0:
        premise_nf = translate_graph(premise, "axiom", suite_mod.PREMISE_NAME, mangler)
    conjecture_nf = None
    if kind in (Kind.POSITIVE_ENTAILMENT, Kind.NON_ENTAILMENT):
        assert conclusion is not None
        conjecture_nf = translate_graph(
            conclusion, "conjecture", suite_mod.CONJECTURE_NAME, mangler
        )
    elif kind == Kind.INCONSISTENCY:
        from .fol import FALSE

        conjecture_nf = NamedFormula(suite_mod.CONJECTURE_NAME, "conjecture", FALSE)

    flt = _parse_filter(args.filter)
    if flt is not None:
        if args.subset:
            raise CliError("filter cannot be combined with --subset", EXIT_BADFLAGS)
        goal = set()
        for nf in (premise_nf, conjecture_nf):
            if nf is not None:
                from .fol import collect_symbols

                goal |= collect_symbols(nf.formula)
        hops = None if flt == "fixpoint" else flt
        entries = axiom_store.select_relevant(entries, goal, hops)

    formulas.extend(e.named() for e in entries)
    if premise_nf is not None:
        formulas.append(premise_nf)
    if conjecture_nf is not None:
        formulas.append(conjecture_nf)
    text = serialize_tptp(Problem(formulas))

    artifacts = Path(args.keep_artifacts) if args.keep_artifacts else None
    run = run_prover(text, prover, keep_artifacts=artifacts, label="solve")
    if run.status == SzsStatus.ERROR and run.raw.startswith("spawn failed"):
        print(f"? {run.status.value} {run.elapsed_s:.2f}")
        return EXIT_IO
    verdict = interpret(kind, run.status)
    print(f"{verdict.value} {run.status.value} {run.elapsed_s:.2f}")
    return {
        Verdict.SUCCESS: EXIT_OK,
        Verdict.WRONG: EXIT_WRONG,
        Verdict.UNKNOWN: EXIT_UNKNOWN,
    }[verdict]


def cmd_suite(args) -> int:
    prover = _prover_from_args(args)
    cfg = suite_mod.RunConfig(
        prover=prover,
        axiom_mode="subset" if args.subset else "profile",
        profile=args.profile or "owl2-full",
        filter=_parse_filter(args.filter),
        bulk_n=args.bulk,
        bulk_seed=args.seed,
        parallelism=args.parallel,
        task_mode=args.mode,
    )
    tests = suite_mod.load_suite()
    if args.tests:
        wanted = args.tests.split(",")
        tests = [t for t in tests if any(t.id.startswith(w) for w in wanted)]
        if not tests:
            raise CliError("no tests match --tests", EXIT_BADFLAGS)
    artifacts = Path(args.keep_artifacts) if args.keep_artifacts else None
    table = suite_mod.run_suite(tests, cfg, keep_artifacts=artifacts)
    out_dir = Path(args.out)
    out_dir.mkdir(parents=True, exist_ok=True)
    _write_out(out_dir / "results.csv", suite_mod.render_table(table, "csv"))
    _write_out(out_dir / "results.md", suite_mod.render_table(table, "markdown"))
    s, w, u = table.summary
    print(f"Success {s}, Wrong {w}, Unknown {u}")
    return EXIT_OK


def cmd_bulk(args) -> int:
    out = Path(args.out) if args.out else None
    try:
        if out is None:
            for t in suite_mod.iter_bulk(args.n, args.seed):
                sys.stdout.write(triple_to_ntriples(t) + "\n")
        else:
            with out.open("w", encoding="utf-8") as fh:
                for t in suite_mod.iter_bulk(args.n, args.seed):
                    fh.write(triple_to_ntriples(t) + "\n")
    except OSError as exc:
        raise CliError(f"cannot write bulk output: {exc}", EXIT_IO) from None
    return EXIT_OK


def cmd_axioms(args) -> int:
    try:
        entries = axiom_store.load_profile(args.profile)
    except axiom_store.StoreError as exc:
        raise CliError(str(exc), EXIT_BADFLAGS) from None
    problem = Problem([e.named() for e in entries])
    text = serialize_tptp(problem, header=[f"profile: {args.profile}", f"entries: {len(entries)}"])
    _write_out(Path(args.export) if args.export else None, text)
    return EXIT_OK


# ---------------------------------------------------------------- parser


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="owlfol", description=__doc__)
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("translate", help="translate RDF graphs to TPTP formulae")
    p.add_argument("input", nargs="+", help=".ttl or .nt files")
    p.add_argument("--role", choices=("axiom", "conjecture"), default="axiom")
    p.add_argument("--out", help="output file (default stdout)")
    p.set_defaults(func=cmd_translate)

    p = sub.add_parser("solve", help="solve one reasoning task with an external prover")
    p.add_argument("--premise", required=True)
    p.add_argument("--conclusion")
    p.add_argument(
        "--kind",
        choices=("entailment", "inconsistency", "nonentailment", "consistency"),
        default="entailment",
    )
    p.add_argument("--profile")
    p.add_argument("--subset", help="use the curated subset of this bundled test id")
    p.add_argument("--filter", help="off | <hops> | fixpoint")
    p.add_argument("--prover")
    p.add_argument("--config", help="prover config file")
    p.add_argument("--timeout", type=float)
    p.add_argument("--keep-artifacts", help="persist problem files and raw output here")
    p.set_defaults(func=cmd_solve)

    p = sub.add_parser("suite", help="run the bundled test suite")
    p.add_argument("--prover")
    p.add_argument("--config", help="prover config file")
    p.add_argument("--profile")
    p.add_argument("--subset", action="store_true", help="use curated per-test subsets")
    p.add_argument("--filter", help="off | <hops> | fixpoint")
    p.add_argument("--bulk", type=int, default=0, help="append N bulk triples to each premise")
    p.add_argument("--seed", type=int, default=1)
    p.add_argument("--mode", choices=("prove", "modelfind"), default="prove")
    p.add_argument("--parallel", type=int, default=1)
    p.add_argument("--tests", help="comma-separated test id prefixes")
    p.add_argument("--out", default="runs/latest")
    p.add_argument("--keep-artifacts", help="persist problem files and raw outputs here")
    p.set_defaults(func=cmd_suite)

    p = sub.add_parser("bulk", help="generate synthetic bulk triples as N-Triples")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--seed", type=int, default=1)
    p.add_argument("--out")
    p.set_defaults(func=cmd_bulk)

    p = sub.add_parser("axioms", help="export an axiom profile as TPTP")
    p.add_argument("--profile", required=True)
    p.add_argument("--export", help="output file (default stdout)")
    p.set_defaults(func=cmd_axioms)

    return parser


def main(argv: "list[str] | None" = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return EXIT_BADFLAGS if exc.code not in (0, None) else 0
    try:
        return args.func(args)
    except CliError as exc:
        print(f"owlfol: {exc}", file=sys.stderr)
        return exc.code
    except (axiom_store.StoreError, suite_mod.SuiteError) as exc:
        print(f"owlfol: {exc}", file=sys.stderr)
        return EXIT_BADFLAGS


if __name__ == "__main__":
    sys.exit(main())
