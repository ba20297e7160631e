"""Variables, clauses, assignments and the clause-to-word translation.

Variables are 0-based integers.  A clause over the variable set
``{v_{w-1} > ... > v_0}`` translates to a ``w``-bit word whose bit ``j``
belongs to ``v_j`` (the smallest member sits at bit 0) and is 1 for a
positive literal, 0 for a negated one.  Full assignments use the same rule
over all ``n`` variables, so bit ``i`` of an assignment word is ``x_i``.
"""

from __future__ import annotations

import logging
import re
from dataclasses import dataclass, field
from typing import Iterable, Iterator, Sequence

from .errors import EmptyClauseError

log = logging.getLogger(__name__)


@dataclass(frozen=True, order=True)
class Literal:
    var: int
    negated: bool = False

    def __str__(self):
        return f"~x{self.var}" if self.negated else f"x{self.var}"


@dataclass(frozen=True)
class VarSet:
    """A set of variables kept in descending order."""

    members: tuple[int, ...]

    def __post_init__(self):
        ordered = tuple(sorted(set(self.members), reverse=True))
        if ordered != self.members:
            object.__setattr__(self, "members", ordered)

    @classmethod
    def of(cls, *vars: int) -> "VarSet":
        return cls(tuple(vars))

    @property
    def width(self) -> int:
        return len(self.members)

    def __len__(self):
        return len(self.members)

    def __iter__(self) -> Iterator[int]:
        return iter(self.members)

    def __contains__(self, var):
        return var in self.members

    def ascending(self) -> tuple[int, ...]:
        return self.members[::-1]

    def bit_of(self, var: int) -> int:
        """Bit position of ``var`` inside words over this set."""
        return self.width - 1 - self.members.index(var)

    @property
    def mask(self) -> int:
        """This set as a mask over full ``n``-bit assignment words."""
        m = 0
        for v in self.members:
            m |= 1 << v
        return m

    def union(self, other: "VarSet") -> "VarSet":
        return VarSet(tuple(set(self.members) | set(other.members)))

    def intersection(self, other: "VarSet") -> "VarSet":
        return VarSet(tuple(set(self.members) & set(other.members)))

    def isdisjoint(self, other: "VarSet") -> bool:
        return set(self.members).isdisjoint(other.members)

    def __str__(self):
        return "{" + ",".join(f"x{v}" for v in self.members) + "}"


EMPTY_VARSET = VarSet(())


@dataclass(frozen=True)
class Clause:
    literals: tuple[Literal, ...]

    def __post_init__(self):
        if not self.literals:
            raise EmptyClauseError("clause has no literals")
        vars_ = [lit.var for lit in self.literals]
        if len(set(vars_)) != len(vars_):
            raise ValueError(f"variable repeated in clause {self}")
        ordered = tuple(sorted(self.literals, key=lambda lit: -lit.var))
        if ordered != self.literals:
            object.__setattr__(self, "literals", ordered)

    @property
    def vars(self) -> VarSet:
        return VarSet(tuple(lit.var for lit in self.literals))

    @property
    def width(self) -> int:
        return len(self.literals)

    def __iter__(self):
        return iter(self.literals)

    def __len__(self):
        return len(self.literals)

    def __str__(self):
        return "(" + " | ".join(str(lit) for lit in self.literals) + ")"


class _Tautology:
    def __repr__(self):
        return "TAUTOLOGY"


#: Returned by :func:`normalize_clause` for clauses containing x and ~x.
TAUTOLOGY = _Tautology()


def normalize_clause(raw: Iterable[tuple[int, bool]], n: int) -> Clause | _Tautology:
    """Canonicalize ``(var, negated)`` pairs into a :class:`Clause`.

    Repeated identical literals are merged.  A clause holding both polarities
    of one variable is a tautology and yields :data:`TAUTOLOGY`.  An empty
    input raises :class:`EmptyClauseError`.
    """
    seen: dict[int, bool] = {}
    tautology = False
    count = 0
    for var, negated in raw:
        count += 1
        if not 0 <= var < n:
            raise ValueError(f"variable {var} outside [0, {n - 1}]")
        negated = bool(negated)
        if var in seen:
            if seen[var] != negated:
                tautology = True
            continue
        seen[var] = negated
    if count == 0:
        raise EmptyClauseError("empty clause")
    if tautology:
        return TAUTOLOGY
    return Clause(tuple(Literal(v, neg) for v, neg in seen.items()))


@dataclass(frozen=True)
class BinaryClause:
    vars: VarSet
    bits: int

    def __post_init__(self):
        if not 0 <= self.bits < (1 << self.vars.width):
            raise ValueError(f"word {self.bits} does not fit width {self.vars.width}")

    @property
    def width(self) -> int:
        return self.vars.width

    def __str__(self):
        return format(self.bits, f"0{self.width}b") if self.width else ""


def translate(c: Clause) -> BinaryClause:
    """Clause to word: 1 for a positive literal, 0 for a negated one."""
    bits = 0
    for lit in c.literals:  # descending, so the last literal lands on bit 0
        bits = (bits << 1) | (0 if lit.negated else 1)
    return BinaryClause(c.vars, bits)


def untranslate(bc: BinaryClause) -> Clause:
    w = bc.width
    return Clause(
        tuple(
            Literal(v, not (bc.bits >> (w - 1 - i)) & 1)
            for i, v in enumerate(bc.vars.members)
        )
    )


def complement(bits: int, w: int) -> int:
    if not 0 <= bits < (1 << w):
        raise ValueError(f"word {bits} does not fit width {w}")
    return bits ^ ((1 << w) - 1)


def restrict(word: int, vars: VarSet) -> int:
    """Project a full assignment word onto the bit layout of ``vars``."""
    out = 0
    for v in vars.members:
        out = (out << 1) | ((word >> v) & 1)
    return out


def scatter(row: int, vars: VarSet) -> int:
    """Inverse of :func:`restrict`: lift a word over ``vars`` into full layout."""
    out = 0
    w = vars.width
    for i, v in enumerate(vars.members):
        if (row >> (w - 1 - i)) & 1:
            out |= 1 << v
    return out


@dataclass(frozen=True)
class Assignment:
    """Total assignment of ``n`` variables, packed in ``word`` (bit i is x_i)."""

    n: int
    word: int

    def __post_init__(self):
        if not 0 <= self.word < (1 << self.n):
            raise ValueError(f"assignment word {self.word} does not fit n={self.n}")

    @classmethod
    def from_values(cls, values: Sequence[int] | dict[int, int], n: int | None = None):
        if isinstance(values, dict):
            if n is None:
                n = max(values, default=-1) + 1
            if set(values) != set(range(n)):
                raise ValueError("assignment must be total over [0, n-1]")
            items = values.items()
        else:
            n = len(values)
            items = enumerate(values)
        word = 0
        for var, val in items:
            if val:
                word |= 1 << var
        return cls(n, word)

    def __getitem__(self, var: int) -> int:
        if not 0 <= var < self.n:
            raise IndexError(var)
        return (self.word >> var) & 1

    @property
    def values(self) -> dict[int, int]:
        return {v: self[v] for v in range(self.n)}

    def satisfies(self, lit: Literal) -> bool:
        return self[lit.var] != lit.negated

    def __str__(self):
        return format(self.word, f"0{self.n}b") if self.n else ""


@dataclass(frozen=True)
class FormulaStats:
    tautologies_dropped: int = 0
    duplicate_literals: int = 0


@dataclass(frozen=True)
class Formula:
    n: int
    clauses: tuple[Clause, ...] = ()
    stats: FormulaStats = field(default_factory=FormulaStats, compare=False)

    def __post_init__(self):
        if self.n < 0:
            raise ValueError("negative variable count")
        object.__setattr__(self, "clauses", tuple(self.clauses))
        for c in self.clauses:
            if c.literals[0].var >= self.n:
                raise ValueError(f"clause {c} mentions a variable outside [0, {self.n - 1}]")

    @property
    def m(self) -> int:
        return len(self.clauses)

    def __iter__(self):
        return iter(self.clauses)

    def __len__(self):
        return len(self.clauses)

    @classmethod
    def from_raw(cls, n: int, raw_clauses: Iterable[Iterable[tuple[int, bool]]]) -> "Formula":
        """Build from ``(var, negated)`` lists, dropping tautologies."""
        clauses = []
        tautologies = dupes = 0
        for raw in raw_clauses:
            raw = list(raw)
            c = normalize_clause(raw, n)
            if c is TAUTOLOGY:
                tautologies += 1
                log.warning("dropping tautological clause %s", raw)
                continue
            dupes += len(raw) - len(c)
            clauses.append(c)
        return cls(n, tuple(clauses), FormulaStats(tautologies, dupes))

    @classmethod
    def from_signed(cls, n: int, signed_clauses: Iterable[Iterable[int]]) -> "Formula":
        """Build from DIMACS-style signed 1-based integers (``k`` is ``x_{k-1}``)."""
        return cls.from_raw(
            n, ([(abs(k) - 1, k < 0) for k in clause] for clause in signed_clauses)
        )

    @classmethod
    def from_strings(cls, n: int, texts: Iterable[str]) -> "Formula":
        """Build from text clauses such as ``"x3 ~x2 x0"``."""
        return cls.from_raw(n, (parse_clause_text(t) for t in texts))

    def __str__(self):
        return " & ".join(str(c) for c in self.clauses) or "(empty)"


_LIT_RE = re.compile(r"(~|!|-)?x(\d+)")


def parse_clause_text(text: str) -> list[tuple[int, bool]]:
    lits = [(int(m.group(2)), m.group(1) is not None) for m in _LIT_RE.finditer(text)]
    if not lits and text.strip():
        raise ValueError(f"no literals in {text!r}")
    return lits
