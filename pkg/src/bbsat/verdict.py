"""Solver outcomes."""

from __future__ import annotations

import enum
from dataclasses import dataclass, field
from typing import Any

from .model import Assignment


class Outcome(enum.Enum):
    SAT = "sat"
    UNSAT = "unsat"
    INDETERMINATE = "indeterminate"


class Reason(enum.Enum):
    BLOCKED_GROUP = "BlockedGroup"
    EMPTY_THETA = "EmptyTheta"
    EXHAUSTED_SPACE = "ExhaustedSpace"
    EMPTY_CLAUSE_AT_INGEST = "EmptyClauseAtIngest"
    RESOURCE_CAP = "ResourceCap"
    BUDGET_EXHAUSTED = "BudgetExhausted"
    CANCELLED = "Cancelled"


UNSAT_REASONS = frozenset(
    {Reason.BLOCKED_GROUP, Reason.EMPTY_THETA, Reason.EXHAUSTED_SPACE, Reason.EMPTY_CLAUSE_AT_INGEST}
)


@dataclass(frozen=True)
class Verdict:
    outcome: Outcome
    engine: str
    steps: int = 0
    witness: Assignment | None = None
    reason: Reason | None = None
    detail: str = ""
    stats: dict[str, Any] = field(default_factory=dict, compare=False)

    def __post_init__(self):
        if self.outcome is Outcome.SAT and self.witness is None:
            raise ValueError("a Sat verdict needs a witness")
        if self.outcome is Outcome.UNSAT and self.reason not in UNSAT_REASONS:
            raise ValueError(f"{self.reason} is not an unsatisfiability reason")

    @classmethod
    def sat(cls, engine, witness, steps=0, **kw):
        return cls(Outcome.SAT, engine, steps, witness=witness, **kw)

    @classmethod
    def unsat(cls, engine, reason, steps=0, **kw):
        return cls(Outcome.UNSAT, engine, steps, reason=reason, **kw)

    @classmethod
    def indeterminate(cls, engine, reason, steps=0, **kw):
        return cls(Outcome.INDETERMINATE, engine, steps, reason=reason, **kw)

    @property
    def definitive(self) -> bool:
        return self.outcome is not Outcome.INDETERMINATE

    @property
    def is_sat(self) -> bool:
        return self.outcome is Outcome.SAT


@dataclass
class Progress:
    """Live iteration counter an engine updates while it runs.

    The race controller reads it when it signals cancellation so tests can
    check how far the losing engine got afterwards.
    """

    steps: int = 0
    steps_at_cancel: int | None = None

    def update(self, steps: int):
        self.steps = steps

