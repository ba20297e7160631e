"""Single-pass grouped solver.

Clauses are read once.  Each goes to the survivor table of its exact
variable set (keyed by the subset index); a table that loses every
candidate ends the run as unsatisfiable on the spot.  After the last clause
the tables' survivors are joined; an empty join means unsatisfiable and
any joined row is a model.
"""

from __future__ import annotations

import threading
from typing import Iterator

from .errors import ResourceLimit
from .ivindex import iv_rank_fast
from .join import DEFAULT_R_MAX, SolutionRelation, assemble_witness, fold_components, pairwise_incompatible
from .model import Assignment, BinaryClause, Formula, translate
from .ssat import DEFAULT_W_MAX, IngestStatus, SsatGroup
from .verdict import Progress, Reason, Verdict

ENGINE = "grouped"


def clause_router(f: Formula) -> Iterator[tuple[int, BinaryClause]]:
    for c in f.clauses:
        bc = translate(c)
        yield iv_rank_fast(bc.vars, f.n), bc


def group_stats(groups: dict[int, SsatGroup]) -> list[dict]:
    return [
        {
            "iv": iv,
            "vars": list(g.vars.members),
            "clauses": g.ingested,
            "distinct": g.distinct,
            "survivors": g.n_survivors,
        }
        for iv, g in sorted(groups.items())
    ]


def solve_grouped(
    f: Formula,
    *,
    w_max: int = DEFAULT_W_MAX,
    r_max: int = DEFAULT_R_MAX,
    cancel: threading.Event | None = None,
    progress: Progress | None = None,
) -> Verdict:
    groups: dict[int, SsatGroup] = {}
    reads = 0

    def done(kind, *args, **kw):
        stats = {"clauses_read": reads, "groups": group_stats(groups)}
        return kind(ENGINE, *args, steps=reads, stats=stats, **kw)

    for iv, bc in clause_router(f):
        if cancel is not None and cancel.is_set():
            return done(Verdict.indeterminate, Reason.CANCELLED)
        reads += 1
        if progress is not None:
            progress.update(reads)
        g = groups.get(iv)
        if g is None:
            try:
                g = groups[iv] = SsatGroup(bc.vars, w_max)
            except ResourceLimit as exc:
                return done(Verdict.indeterminate, Reason.RESOURCE_CAP, detail=str(exc))
        if g.ingest(bc) is IngestStatus.BLOCKED:
            return done(Verdict.unsat, Reason.BLOCKED_GROUP, detail=f"every candidate over {g.vars} is blocked")

    try:
        relations = [g.survivors(r_max) for g in groups.values()]
    except ResourceLimit as exc:
        return done(Verdict.indeterminate, Reason.RESOURCE_CAP, detail=str(exc))

    clash = _unique_solution_clash(relations)
    if clash is not None:
        a, b = clash
        return done(Verdict.unsat, Reason.EMPTY_THETA, detail=f"unique solutions of {a.vars} and {b.vars} disagree")

    try:
        folded = fold_components(relations, r_max)
    except ResourceLimit as exc:
        return done(Verdict.indeterminate, Reason.RESOURCE_CAP, detail=str(exc))
    if folded and folded[-1].empty:
        return done(Verdict.unsat, Reason.EMPTY_THETA, detail=f"no compatible rows over {folded[-1].vars}")

    # components are independent, so one row from each is a row of the full join
    word = 0
    for rel in folded:
        word |= assemble_witness(rel.rows[0], rel.vars, f.n).word
    return done(Verdict.sat, Assignment(f.n, word))


def _unique_solution_clash(relations: list[SolutionRelation]):
    """Two single-row relations that disagree on a shared variable, if any."""
    fixed: dict[int, tuple[int, SolutionRelation]] = {}
    for rel in relations:
        if len(rel) != 1:
            continue
        row = rel.rows[0]
        for v in rel.vars:
            bit = (row >> rel.vars.bit_of(v)) & 1
            if v not in fixed:
                fixed[v] = (bit, rel)
            elif fixed[v][0] != bit:
                other = fixed[v][1]
                assert pairwise_incompatible(other, rel)
                return other, rel
    return None
