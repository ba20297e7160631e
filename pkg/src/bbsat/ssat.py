"""Per-variable-set survivor tables.

An :class:`SsatGroup` holds every clause of a formula that uses one exact
variable set.  It starts with all ``2^w`` candidate words alive and each
ingested clause word ``b`` kills the candidate ``~b`` (the only assignment
of those variables that falsifies the clause).  The group is blocked once
every candidate is dead, which proves the whole formula unsatisfiable.

Survivors are threaded on a doubly linked list so they can be listed
without scanning dead entries.
"""

from __future__ import annotations

import enum

import numpy as np

from .errors import BlockedGroupError, GroupTooWide, RelationTooLarge, VarSetMismatch
from .model import BinaryClause, VarSet, complement

#: Widest group a solver will allocate unless configured otherwise.
DEFAULT_W_MAX = 24

_NIL = -1


class IngestStatus(enum.Enum):
    UPDATED = "updated"
    DUPLICATE = "duplicate"
    BLOCKED = "blocked"


class SsatGroup:
    """Survivor table over ``[0, 2^w - 1]`` for the variable set ``vars``."""

    def __init__(self, vars: VarSet, w_max: int = DEFAULT_W_MAX):
        w = vars.width
        if w > w_max:
            raise GroupTooWide(w, w_max)
        size = 1 << w
        self.vars = vars
        self.size = size
        self.present = np.ones(size, dtype=bool)
        # int64 keeps -1 representable for any width we accept
        idx = np.arange(size, dtype=np.int64)
        self.prev = idx - 1
        self.next = idx + 1
        self.next[-1] = _NIL
        self.first = 0
        self.last = size - 1
        self.ct = 0
        self.distinct = 0
        self.ingested = 0

    @property
    def width(self) -> int:
        return self.vars.width

    @property
    def blocked(self) -> bool:
        return self.ct == self.size

    @property
    def n_survivors(self) -> int:
        return self.size - self.ct

    def ingest(self, bc: BinaryClause) -> IngestStatus:
        if bc.vars != self.vars:
            raise VarSetMismatch(f"clause over {bc.vars} routed to group {self.vars}")
        self.ingested += 1
        if self.blocked:
            return IngestStatus.BLOCKED
        k = complement(bc.bits, self.width)
        if not self.present[k]:
            return IngestStatus.DUPLICATE
        p, q = int(self.prev[k]), int(self.next[k])
        if p != _NIL:
            self.next[p] = q
        if q != _NIL:
            self.prev[q] = p
        if k == self.first:
            self.first = q
        if k == self.last:
            self.last = p
        self.prev[k] = self.next[k] = _NIL
        self.present[k] = False
        self.ct += 1
        self.distinct += 1
        return IngestStatus.BLOCKED if self.blocked else IngestStatus.UPDATED

    def iter_survivors(self):
        k = self.first
        while k != _NIL:
            yield k
            k = int(self.next[k])

    def survivors(self, r_max: int | None = None):
        """The group's satisfying partial assignments as a relation."""
        from .join import SolutionRelation

        if self.blocked:
            raise BlockedGroupError(f"group {self.vars} has no survivors")
        if r_max is not None and self.n_survivors > r_max:
            raise RelationTooLarge(self.n_survivors, r_max)
        return SolutionRelation(self.vars, tuple(self.iter_survivors()))

    def __repr__(self):
        return f"SsatGroup({self.vars}, ct={self.ct}/{self.size})"


def new_group(vars: VarSet, w_max: int = DEFAULT_W_MAX) -> SsatGroup:
    return SsatGroup(vars, w_max)


def ingest(g: SsatGroup, bc: BinaryClause) -> IngestStatus:
    return g.ingest(bc)


def survivors(g: SsatGroup, r_max: int | None = None):
    return g.survivors(r_max)


class CountDecision(enum.Enum):
    SAT = "sat"
    UNSAT = "unsat"
    UNKNOWN = "unknown"


def decide_by_count(w: int, m_total: int | None = None, distinct_known: int | None = None) -> CountDecision:
    """Decide a single-variable-set formula from clause counts alone.

    Fewer than ``2^w`` clauses cannot kill every candidate; ``2^w`` distinct
    clause words kill all of them.
    """
    if m_total is not None and m_total < (1 << w):
        return CountDecision.SAT
    if distinct_known is not None and distinct_known == (1 << w):
        return CountDecision.UNSAT
    return CountDecision.UNKNOWN
