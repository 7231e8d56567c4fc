"""The characteristic reasoning test suite: loading, problem assembly,
bulk data generation, suite execution, and result tables.

The 32 bundled tests live under `suite_data/<id>/` as Turtle files plus a
meta file. Problem assembly follows one shape for every kind: axioms
(profile or curated subset, optionally relevance-filtered), then the
premise graph as one axiom, then the conjecture (the translated conclusion
for entailment tasks, `$false` for inconsistency tasks, nothing for plain
consistency checks so a model finder can answer Satisfiable).
"""

from __future__ import annotations

import hashlib
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass
from importlib import resources
from pathlib import Path
from typing import Callable, Iterator, Optional, Sequence

from . import axiom_store
from .fol import FALSE, NamedFormula, Problem, collect_symbols
from .mangle import Mangler
from .prover import Kind, ProverConfig, ProverRun, SzsStatus, Verdict, interpret, run_prover
from .rdfmodel import Graph, Iri, Triple, graph_union
from .translate import translate_graph
from .tptp import serialize_tptp
from .turtle import parse_turtle

BULK_NS = "http://bulk.example.org/"

PREMISE_NAME = "testcase_premise"
CONJECTURE_NAME = "testcase_conclusion"


class SuiteError(ValueError):
    pass


@dataclass(frozen=True)
class TestCase:
    id: str
    kind: Kind  # POSITIVE_ENTAILMENT or INCONSISTENCY
    premise: Graph
    conclusion: Optional[Graph]
    notes: str = ""
    rdfs_mode: str = "countersat"  # entailed | countersat | sat
    alco_mode: str = "unknown"  # entailed | countersat | sat | unknown

    def __post_init__(self) -> None:
        if self.kind == Kind.POSITIVE_ENTAILMENT and self.conclusion is None:
            raise SuiteError(f"{self.id}: entailment test without conclusion")
        if self.kind == Kind.INCONSISTENCY and self.conclusion is not None:
            raise SuiteError(f"{self.id}: inconsistency test with a conclusion")


def data_dir():
    return resources.files("owlfol") / "suite_data"


def _load_one(test_dir) -> TestCase:
    meta: dict[str, str] = {}
    for line in (test_dir / "meta").read_text(encoding="utf-8").splitlines():
        key, _, value = line.partition(":")
        meta[key.strip()] = value.strip()
    kind = Kind.POSITIVE_ENTAILMENT if meta["kind"] == "entailment" else Kind.INCONSISTENCY
    premise = parse_turtle((test_dir / "premise.ttl").read_text(encoding="utf-8"))
    conclusion = None
    conclusion_path = test_dir / "conclusion.ttl"
    if conclusion_path.is_file():
        conclusion = parse_turtle(conclusion_path.read_text(encoding="utf-8"))
    return TestCase(
        id=test_dir.name,
        kind=kind,
        premise=premise,
        conclusion=conclusion,
        notes=meta.get("notes", ""),
        rdfs_mode=meta.get("rdfs", "countersat"),
        alco_mode=meta.get("alco", "unknown"),
    )


def load_suite() -> list[TestCase]:
    """All bundled tests, ordered by id."""
    dirs = sorted((d for d in data_dir().iterdir() if d.is_dir()), key=lambda d: d.name)
    return [_load_one(d) for d in dirs]


def get_test(test_id: str) -> TestCase:
    for t in load_suite():
        if t.id == test_id or t.id.startswith(test_id):
            return t
    raise SuiteError(f"unknown test id {test_id!r}")


# ------------------------------------------------------------- run config


@dataclass(frozen=True)
class RunConfig:
    """How to assemble and execute suite problems.

    `axiom_mode` selects the curated per-test subsets or a named profile;
    the relevance filter only applies in profile mode (subsets are already
    minimal). `task_mode` prove runs tests as stated; modelfind reinterprets
    them as non-entailment/consistency questions (the model-finding
    experiments).
    """

    prover: ProverConfig
    axiom_mode: str = "profile"  # "profile" | "subset"
    profile: str = "owl2-full"
    filter: "int | str | None" = None  # None=off, int=hops, "fixpoint"
    bulk_n: int = 0
    bulk_seed: int = 1
    parallelism: int = 1
    task_mode: str = "prove"  # "prove" | "modelfind"

    def __post_init__(self) -> None:
        if self.axiom_mode not in ("profile", "subset"):
            raise SuiteError(f"bad axiom_mode {self.axiom_mode!r}")
        if self.axiom_mode == "subset" and self.filter is not None:
            raise SuiteError("relevance filter cannot be combined with subset mode")
        if self.bulk_n < 0:
            raise SuiteError("bulk_n must be >= 0")
        if self.parallelism < 1:
            raise SuiteError("parallelism must be >= 1")
        if self.task_mode not in ("prove", "modelfind"):
            raise SuiteError(f"bad task_mode {self.task_mode!r}")


def effective_kind(t: TestCase, cfg: RunConfig) -> Kind:
    if cfg.task_mode == "prove":
        return t.kind
    if t.kind == Kind.POSITIVE_ENTAILMENT:
        return Kind.NON_ENTAILMENT
    return Kind.CONSISTENCY


def _filter_hops(cfg: RunConfig):
    if cfg.filter is None:
        return None, False
    if cfg.filter == "fixpoint":
        return None, True
    return int(cfg.filter), True


def build_task(t: TestCase, cfg: RunConfig, bulk: Optional[Graph] = None) -> Problem:
    """Assemble the complete problem for one test under one configuration."""
    if (bulk is not None and len(bulk) > 0) != (cfg.bulk_n > 0):
        raise SuiteError("bulk graph must be supplied iff bulk_n > 0")

    premise_graph = t.premise if bulk is None else graph_union(t.premise, bulk)
    prefixes = premise_graph.prefixes
    if t.conclusion is not None:
        for label, ns in t.conclusion.prefixes.bindings.items():
            prefixes = prefixes.bind(label, ns)
    mangler = Mangler(prefixes)

    premise_nf = None
    if len(premise_graph) > 0:
        premise_nf = translate_graph(premise_graph, "axiom", PREMISE_NAME, mangler)

    kind = effective_kind(t, cfg)
    conjecture_nf = None
    if kind in (Kind.POSITIVE_ENTAILMENT, Kind.NON_ENTAILMENT):
        assert t.conclusion is not None
        conjecture_nf = translate_graph(t.conclusion, "conjecture", CONJECTURE_NAME, mangler)
    elif kind == Kind.INCONSISTENCY:
        conjecture_nf = NamedFormula(CONJECTURE_NAME, "conjecture", FALSE)
    # Kind.CONSISTENCY: no conjecture at all

    if cfg.axiom_mode == "subset":
        entries = axiom_store.get_subset(t.id)
    else:
        entries = axiom_store.load_profile(cfg.profile)
        hops, filtering = _filter_hops(cfg)
        if filtering:
            goal: set[str] = set()
            if premise_nf is not None:
                goal |= collect_symbols(premise_nf.formula)
            if conjecture_nf is not None:
                goal |= collect_symbols(conjecture_nf.formula)
            entries = axiom_store.select_relevant(entries, goal, hops)

    formulas = [e.named() for e in entries]
    if premise_nf is not None:
        formulas.append(premise_nf)
    if conjecture_nf is not None:
        formulas.append(conjecture_nf)
    return Problem(formulas)


def problem_header(t: TestCase, cfg: RunConfig, problem: Problem) -> list[str]:
    source = cfg.profile if cfg.axiom_mode == "profile" else "subset"
    digest = hashlib.sha256(serialize_tptp(problem).encode("utf-8")).hexdigest()[:16]
    from . import __version__

    return [
        f"owlfol {__version__}",
        f"test: {t.id}",
        f"axioms: {source}",
        f"problem-sha256: {digest}",
    ]


# ------------------------------------------------------------- bulk data


def iter_bulk(n: int, seed: int) -> Iterator[Triple]:
    """Deterministic synthetic triples, streamed.

    Subjects, predicates, and objects cycle with coprime periods so
    predicates repeat realistically while all n triples stay distinct
    (the periods' product exceeds any supported n). None of the generated
    IRIs touches the rdf/rdfs/owl/xsd namespaces or any bundled test IRI.
    """
    if n < 0:
        raise SuiteError("bulk size must be >= 0")
    if n > 1009 * 31 * 1013:
        raise SuiteError("bulk size exceeds the distinctness guarantee")
    for i in range(n):
        s = Iri(f"{BULK_NS}s{seed}_{i % 1009}")
        p = Iri(f"{BULK_NS}p{seed}_{i % 31}")
        o = Iri(f"{BULK_NS}o{seed}_{i % 1013}")
        yield Triple(s, p, o)


def gen_bulk(n: int, seed: int) -> Graph:
    return Graph(iter_bulk(n, seed))


# ------------------------------------------------------------ execution


@dataclass(frozen=True)
class ResultRow:
    test_id: str
    verdict: Verdict
    elapsed_s: float
    szs: SzsStatus


@dataclass(frozen=True)
class ResultTable:
    rows: tuple[ResultRow, ...]

    @property
    def summary(self) -> tuple[int, int, int]:
        s = sum(1 for r in self.rows if r.verdict == Verdict.SUCCESS)
        w = sum(1 for r in self.rows if r.verdict == Verdict.WRONG)
        u = sum(1 for r in self.rows if r.verdict == Verdict.UNKNOWN)
        return (s, w, u)


Runner = Callable[[str, str], ProverRun]


def run_suite(
    suite: Sequence[TestCase],
    cfg: RunConfig,
    runner: Optional[Runner] = None,
    keep_artifacts: Optional[Path] = None,
) -> ResultTable:
    """Execute every test and collect one row each.

    A failed spawn or prover error yields a '?' row, never an aborted
    suite. Rows come back ordered by test id regardless of the parallel
    schedule. `runner` is injectable for tests; the default shells out to
    the configured prover.
    """
    if runner is None:

        def runner(problem_text: str, label: str) -> ProverRun:
            art = keep_artifacts / label if keep_artifacts else None
            return run_prover(problem_text, cfg.prover, keep_artifacts=art, label=label)

    bulk = gen_bulk(cfg.bulk_n, cfg.bulk_seed) if cfg.bulk_n > 0 else None

    def one(t: TestCase) -> ResultRow:
        try:
            problem = build_task(t, cfg, bulk)
            text = serialize_tptp(problem, header=problem_header(t, cfg, problem))
            run = runner(text, t.id)
            verdict = interpret(effective_kind(t, cfg), run.status)
            return ResultRow(t.id, verdict, run.elapsed_s, run.status)
        except Exception:
            return ResultRow(t.id, Verdict.UNKNOWN, 0.0, SzsStatus.ERROR)

    if cfg.parallelism == 1:
        rows = [one(t) for t in suite]
    else:
        with ThreadPoolExecutor(max_workers=cfg.parallelism) as pool:
            rows = list(pool.map(one, suite))
    rows.sort(key=lambda r: r.test_id)
    return ResultTable(tuple(rows))


def render_table(table: ResultTable, fmt: str) -> str:
    """CSV (`test,verdict,seconds,szs`) or markdown with a summary line."""
    if fmt == "csv":
        lines = ["test,verdict,seconds,szs"]
        for r in table.rows:
            lines.append(f"{r.test_id},{r.verdict.value},{r.elapsed_s:.2f},{r.szs.value}")
        return "\n".join(lines) + "\n"
    if fmt == "markdown":
        lines = [
            "| test | verdict | seconds | szs |",
            "| --- | --- | --- | --- |",
        ]
        for r in table.rows:
            lines.append(
                f"| {r.test_id} | {r.verdict.value} | {r.elapsed_s:.2f} | {r.szs.value} |"
            )
        s, w, u = table.summary
        lines.append("")
        lines.append(f"Success {s}, Wrong {w}, Unknown {u}")
        return "\n".join(lines) + "\n"
    raise SuiteError(f"unknown table format {fmt!r}")
