"""DIMACS CNF reading/writing and solver-style result text.

DIMACS variables are 1-based; internally ``k`` becomes variable ``k - 1``.
This module is the only place that translation happens.
"""

from __future__ import annotations

import json
import logging
import re
from dataclasses import dataclass, field

from .errors import DimacsSyntaxError, EmptyClauseError
from .model import TAUTOLOGY, Assignment, Formula, FormulaStats, normalize_clause
from .verdict import Outcome, Verdict

log = logging.getLogger(__name__)

EXIT_SAT = 10
EXIT_UNSAT = 20
EXIT_UNKNOWN = 30

_TOKEN = re.compile(r"\S+")


@dataclass
class DimacsDocument:
    formula: Formula
    declared_n: int
    declared_m: int
    comments: int = 0
    warnings: list[str] = field(default_factory=list)

    @property
    def parsed_m(self) -> int:
        return self.formula.m + self.formula.stats.tautologies_dropped


def read_dimacs(text: str) -> DimacsDocument:
    header = None
    comments = 0
    warnings: list[str] = []
    raw_clauses: list[list[tuple[int, bool]]] = []
    current: list[tuple[int, bool]] = []
    current_line = 0

    for lineno, line in enumerate(text.splitlines(), 1):
        stripped = line.strip()
        if not stripped:
            continue
        if stripped[0] == "c":
            comments += 1
            continue
        if stripped[0] == "%":
            break
        if stripped[0] == "p":
            if header is not None:
                raise DimacsSyntaxError("second problem line", lineno, 1)
            parts = stripped.split()
            if len(parts) != 4 or parts[1] != "cnf":
                raise DimacsSyntaxError("expected 'p cnf <vars> <clauses>'", lineno, 1)
            try:
                header = (int(parts[2]), int(parts[3]))
            except ValueError:
                raise DimacsSyntaxError("non-integer count in problem line", lineno, 1) from None
            if header[0] < 0 or header[1] < 0:
                raise DimacsSyntaxError("negative count in problem line", lineno, 1)
            continue
        if header is None:
            raise DimacsSyntaxError("clause before the problem line", lineno, 1)
        n = header[0]
        for m in _TOKEN.finditer(line):
            col = m.start() + 1
            try:
                k = int(m.group())
            except ValueError:
                raise DimacsSyntaxError(f"bad literal {m.group()!r}", lineno, col) from None
            if k == 0:
                if not current:
                    raise EmptyClauseError(f"line {lineno}: empty clause")
                raw_clauses.append(current)
                current = []
                continue
            if abs(k) > n:
                raise DimacsSyntaxError(f"literal {k} exceeds declared {n} variables", lineno, col)
            if not current:
                current_line = lineno
            current.append((abs(k) - 1, k < 0))

    if header is None:
        raise DimacsSyntaxError("missing problem line", 0)
    if current:
        warnings.append(f"line {current_line}: last clause not terminated by 0")
        raw_clauses.append(current)

    n, m_declared = header
    clauses = []
    tautologies = dupes = 0
    for raw in raw_clauses:
        c = normalize_clause(raw, n)
        if c is TAUTOLOGY:
            tautologies += 1
            continue
        dupes += len(raw) - len(c)
        clauses.append(c)
    if tautologies:
        warnings.append(f"dropped {tautologies} tautological clause(s)")
    if len(raw_clauses) != m_declared:
        warnings.append(f"header declares {m_declared} clauses, found {len(raw_clauses)}")
    for w in warnings:
        log.warning(w)
    formula = Formula(n, tuple(clauses), FormulaStats(tautologies, dupes))
    return DimacsDocument(formula, n, m_declared, comments, warnings)


def parse_dimacs(text: str) -> Formula:
    return read_dimacs(text).formula


def emit_dimacs(f: Formula, comments=()) -> str:
    lines = [f"c {c}" for c in comments]
    lines.append(f"p cnf {f.n} {f.m}")
    for c in f.clauses:
        lines.append(" ".join(str(-(lit.var + 1) if lit.negated else lit.var + 1) for lit in c) + " 0")
    return "\n".join(lines) + "\n"


def signed_literals(a: Assignment) -> list[int]:
    """Witness as signed DIMACS literals, highest variable first."""
    return [(v + 1) if a[v] else -(v + 1) for v in range(a.n - 1, -1, -1)]


def exit_code(v) -> int:
    verdict = getattr(v, "verdict", v)
    return {Outcome.SAT: EXIT_SAT, Outcome.UNSAT: EXIT_UNSAT}.get(verdict.outcome, EXIT_UNKNOWN)


_STATUS = {
    Outcome.SAT: "SATISFIABLE",
    Outcome.UNSAT: "UNSATISFIABLE",
    Outcome.INDETERMINATE: "UNKNOWN",
}


def result_record(v) -> dict:
    verdict: Verdict = getattr(v, "verdict", v)
    rec = {
        "status": _STATUS[verdict.outcome],
        "engine": verdict.engine,
        "steps": verdict.steps,
        "reason": verdict.reason.value if verdict.reason else None,
        "detail": verdict.detail or None,
        "witness": signed_literals(verdict.witness) if verdict.witness is not None else None,
        "stats": verdict.stats,
    }
    if verdict is not v:  # a race result
        rec["winner"] = v.winner
        rec["loser_state"] = v.loser_state.value if v.loser_state else None
        rec["wall_time"] = round(v.wall_time, 6)
    return rec


def emit_result(v, json_lines: bool = False) -> str:
    """``s``/``v`` lines in competition format, or one JSON object per line."""
    if json_lines:
        return json.dumps(result_record(v), sort_keys=True, default=str) + "\n"
    verdict: Verdict = getattr(v, "verdict", v)
    out = f"s {_STATUS[verdict.outcome]}\n"
    if verdict.witness is not None:
        out += "v " + " ".join(map(str, signed_literals(verdict.witness) + [0])) + "\n"
    return out


def parse_witness(text: str, n: int) -> Assignment:
    """Read ``v`` lines (or bare integers) into an assignment; unset vars are 0."""
    lines = [ln for ln in text.splitlines() if ln.strip()]
    v_lines = [ln.lstrip()[1:] for ln in lines if ln.lstrip().startswith("v")]
    body = v_lines if v_lines else [ln for ln in lines if not ln.lstrip()[0].isalpha()]
    word = 0
    for ln in body:
        for tok in ln.split():
            k = int(tok)
            if k == 0:
                continue
            if abs(k) > n:
                raise ValueError(f"witness literal {k} exceeds {n} variables")
            if k > 0:
                word |= 1 << (k - 1)
    return Assignment(n, word)
