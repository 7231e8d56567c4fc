"""External prover/model-finder harness and verdict classification.

A prover is any executable whose command template takes an {input} problem
file (and optionally {timeout_s}) and prints an `SZS status <word>` line.
`run_prover` owns exactly one child process per call, enforces a wall-clock
timeout with a 2 s kill grace, and never leaves the child's process group
behind. `interpret` maps the SZS outcome to the three verdict markers per
task kind; the table is total over kind x status.
"""

from __future__ import annotations

import configparser
import enum
import os
import re
import shlex
import signal
import subprocess
import tempfile
import time
from dataclasses import dataclass
from pathlib import Path
from typing import Optional

KILL_GRACE_S = 2.0
RAW_OUTPUT_CAP = 65536

TMPDIR_ENV = "OWLFOL_TMPDIR"

_SZS_RE = re.compile(r"SZS status ([A-Za-z]+)")


class SzsStatus(enum.Enum):
    THEOREM = "Theorem"
    UNSATISFIABLE = "Unsatisfiable"
    COUNTERSATISFIABLE = "CounterSatisfiable"
    SATISFIABLE = "Satisfiable"
    TIMEOUT = "Timeout"
    GAVEUP = "GaveUp"
    ERROR = "Error"
    UNKNOWN = "Unknown"


class Verdict(enum.Enum):
    SUCCESS = "+"
    WRONG = "-"
    UNKNOWN = "?"


class Kind(enum.Enum):
    POSITIVE_ENTAILMENT = "entailment"
    INCONSISTENCY = "inconsistency"
    NON_ENTAILMENT = "nonentailment"
    CONSISTENCY = "consistency"


@dataclass(frozen=True)
class ProverConfig:
    id: str
    command_template: str
    mode: str = "prove"  # "prove" | "modelfind"
    timeout_s: float = 300.0

    def __post_init__(self) -> None:
        if "{input}" not in self.command_template:
            raise ValueError(f"prover {self.id!r}: command template lacks {{input}}")
        if self.mode not in ("prove", "modelfind"):
            raise ValueError(f"prover {self.id!r}: bad mode {self.mode!r}")
        if self.timeout_s <= 0:
            raise ValueError(f"prover {self.id!r}: timeout must be positive")


@dataclass(frozen=True)
class ProverRun:
    status: SzsStatus
    elapsed_s: float
    raw: str


def parse_szs_status(output: str) -> SzsStatus:
    m = _SZS_RE.search(output)
    if m is None:
        return SzsStatus.UNKNOWN
    try:
        return SzsStatus(m.group(1))
    except ValueError:
        return SzsStatus.UNKNOWN


def load_prover_configs(path: "str | Path") -> dict[str, ProverConfig]:
    """Read prover definitions from an INI-style config file.

    Each section is one prover: `cmd` (required, with {input} and optional
    {timeout_s} placeholders), `mode` (prove|modelfind), `timeout` seconds.
    """
    parser = configparser.ConfigParser()
    text = Path(path).read_text(encoding="utf-8")
    parser.read_string(text)
    out = {}
    for section in parser.sections():
        sec = parser[section]
        if "cmd" not in sec:
            raise ValueError(f"prover {section!r}: missing cmd")
        out[section] = ProverConfig(
            id=section,
            command_template=sec["cmd"],
            mode=sec.get("mode", "prove"),
            timeout_s=float(sec.get("timeout", "300")),
        )
    return out


def _tmpdir() -> Optional[str]:
    return os.environ.get(TMPDIR_ENV) or None


def run_prover(
    problem_text: str,
    cfg: ProverConfig,
    keep_artifacts: Optional[Path] = None,
    label: str = "problem",
) -> ProverRun:
    """Write the problem to a temp file, run the prover, parse the outcome.

    The child runs in its own process group; on timeout the whole group is
    terminated, then killed after the grace window. When `keep_artifacts`
    names a directory, the problem file and raw output are persisted there
    instead of being deleted.
    """
    if not problem_text:
        raise ValueError("empty problem text")
    if keep_artifacts is not None:
        keep_artifacts.mkdir(parents=True, exist_ok=True)
        problem_path = keep_artifacts / f"{label}.p"
        problem_path.write_text(problem_text, encoding="utf-8")
        cleanup = False
    else:
        fd, name = tempfile.mkstemp(suffix=".p", prefix="owlfol_", dir=_tmpdir())
        with os.fdopen(fd, "w", encoding="utf-8") as fh:
            fh.write(problem_text)
        problem_path = Path(name)
        cleanup = True

    cmd = [
        part.format(input=str(problem_path), timeout_s=int(cfg.timeout_s))
        for part in shlex.split(cfg.command_template)
    ]
    start = time.perf_counter()
    timed_out = False
    try:
        proc = subprocess.Popen(
            cmd,
            stdout=subprocess.PIPE,
            stderr=subprocess.STDOUT,
            text=True,
            start_new_session=True,
        )
    except OSError as exc:
        return ProverRun(SzsStatus.ERROR, 0.0, f"spawn failed: {exc}")
    try:
        try:
            output, _ = proc.communicate(timeout=cfg.timeout_s)
        except subprocess.TimeoutExpired:
            timed_out = True
            _terminate_group(proc)
            try:
                output, _ = proc.communicate(timeout=KILL_GRACE_S)
            except subprocess.TimeoutExpired:
                _kill_group(proc)
                output, _ = proc.communicate()
        elapsed = time.perf_counter() - start
    finally:
        if cleanup:
            problem_path.unlink(missing_ok=True)

    raw = (output or "")[:RAW_OUTPUT_CAP]
    if keep_artifacts is not None:
        (keep_artifacts / f"{label}.out").write_text(raw, encoding="utf-8")
    status = SzsStatus.TIMEOUT if timed_out else parse_szs_status(raw)
    return ProverRun(status, elapsed, raw)


def _terminate_group(proc: subprocess.Popen) -> None:
    try:
        os.killpg(proc.pid, signal.SIGTERM)
    except (ProcessLookupError, PermissionError):
        pass


def _kill_group(proc: subprocess.Popen) -> None:
    try:
        os.killpg(proc.pid, signal.SIGKILL)
    except (ProcessLookupError, PermissionError):
        pass


# ------------------------------------------------------------ verdicts

_S = SzsStatus
_V = Verdict

#: Total verdict table: (kind, status) -> verdict.
VERDICT_TABLE: dict[tuple[Kind, SzsStatus], Verdict] = {}


def _fill(kind: Kind, plus: set[SzsStatus], minus: set[SzsStatus]) -> None:
    for status in SzsStatus:
        if status in plus:
            VERDICT_TABLE[(kind, status)] = _V.SUCCESS
        elif status in minus:
            VERDICT_TABLE[(kind, status)] = _V.WRONG
        else:
            VERDICT_TABLE[(kind, status)] = _V.UNKNOWN


_fill(
    Kind.POSITIVE_ENTAILMENT,
    {_S.THEOREM, _S.UNSATISFIABLE},
    {_S.COUNTERSATISFIABLE, _S.SATISFIABLE},
)
_fill(
    Kind.INCONSISTENCY,
    {_S.THEOREM, _S.UNSATISFIABLE},
    {_S.SATISFIABLE, _S.COUNTERSATISFIABLE},
)
_fill(
    Kind.NON_ENTAILMENT,
    {_S.COUNTERSATISFIABLE, _S.SATISFIABLE},
    {_S.THEOREM, _S.UNSATISFIABLE},
)
_fill(
    Kind.CONSISTENCY,
    {_S.SATISFIABLE},
    {_S.UNSATISFIABLE, _S.THEOREM},
)


def interpret(kind: Kind, status: SzsStatus) -> Verdict:
    """Map an SZS outcome to the +/-/? verdict for the given task kind."""
    return VERDICT_TABLE[(kind, status)]
