"""Rewrites between general CNF and single-variable-set form, plus generators.

``expand`` pads each clause with every polarity combination of the
variables it lacks, using ``F == (F | v) & (F | ~v)``; ``simplify`` applies
the same identity backwards until no pair of clauses factors.  Both keep
the solution set unchanged.
"""

from __future__ import annotations

import random
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable

from .errors import BlockedPairRequested, EmptyClauseError, ExpansionTooLarge
from .join import DEFAULT_R_MAX
from .model import BinaryClause, Clause, Formula, Literal, VarSet, translate, untranslate

EXTREME_N_MAX = 20


@dataclass(frozen=True)
class ExpansionSpec:
    target_vars: VarSet

    @classmethod
    def full(cls, n: int) -> "ExpansionSpec":
        return cls(VarSet(tuple(range(n))))


def expand_clause(c: Clause, target: VarSet, r_max: int | None = DEFAULT_R_MAX) -> list[Clause]:
    own = set(c.vars)
    if not own <= set(target):
        raise ValueError(f"{c} uses variables outside {target}")
    missing = [v for v in target if v not in own]
    if r_max is not None and (1 << len(missing)) > r_max:
        raise ExpansionTooLarge(f"{c} would expand into 2^{len(missing)} clauses")
    out = []
    for combo in range(1 << len(missing)):
        extra = tuple(Literal(v, not (combo >> i) & 1) for i, v in enumerate(missing))
        out.append(Clause(c.literals + extra))
    return out


def expand(f: Formula, spec: ExpansionSpec, r_max: int | None = DEFAULT_R_MAX) -> Formula:
    clauses = []
    for c in f.clauses:
        clauses.extend(expand_clause(c, spec.target_vars, r_max))
    return Formula(f.n, tuple(clauses))


def _drop_bit(bc: BinaryClause, var: int) -> BinaryClause:
    pos = bc.vars.bit_of(var)
    low = bc.bits & ((1 << pos) - 1)
    high = bc.bits >> (pos + 1)
    rest = VarSet(tuple(v for v in bc.vars if v != var))
    return BinaryClause(rest, (high << pos) | low)


def simplify(f: Formula) -> Formula:
    """Factor clause pairs that differ only in one literal's sign.

    Duplicate clauses are merged.  Passes run over the clauses in sorted
    (variable set, word) order until one pass makes no change.  Raises
    :class:`EmptyClauseError` if ``x`` and ``~x`` are both unit clauses.
    """
    live = {translate(c) for c in f.clauses}
    changed = True
    while changed:
        changed = False
        for bc in sorted(live, key=lambda b: (b.vars.members, b.bits)):
            if bc not in live:
                continue
            for v in bc.vars.members:
                partner = BinaryClause(bc.vars, bc.bits ^ (1 << bc.vars.bit_of(v)))
                if partner not in live:
                    continue
                if bc.width == 1:
                    raise EmptyClauseError(f"x{v} and ~x{v} factor to the empty clause")
                live.discard(bc)
                live.discard(partner)
                live.add(_drop_bit(bc, v))
                changed = True
                break
    ordered = sorted(live, key=lambda b: (b.vars.members, b.bits))
    return Formula(f.n, tuple(untranslate(bc) for bc in ordered))


def extreme_words(n: int, solutions: Iterable[int]) -> list[int]:
    """Clause words whose formula is satisfied exactly by ``solutions``."""
    full = (1 << n) - 1
    sols = set(solutions)
    for s in sols:
        if not 0 <= s <= full:
            raise ValueError(f"solution {s} does not fit n={n}")
        if s ^ full in sols:
            raise BlockedPairRequested(f"{s:0{n}b} and its complement cannot both be solutions")
    blocked = sols | {s ^ full for s in sols}
    return sorted((set(range(full + 1)) - blocked) | sols)


def gen_extreme_ssat(n: int, solutions: Iterable[int] = (), seed=None, duplication: int = 1) -> Formula:
    """Full-width formula whose solution set is exactly ``solutions``.

    Every word except the solutions and their complements is a clause,
    and so is every solution.  With ``duplication > 1`` each clause is
    repeated; a seed shuffles the clause order.
    """
    if not 1 <= n <= EXTREME_N_MAX:
        raise ValueError(f"n must be in [1, {EXTREME_N_MAX}]")
    vars_ = VarSet(tuple(range(n)))
    words = extreme_words(n, solutions) * max(duplication, 1)
    if seed is not None:
        random.Random(seed).shuffle(words)
    return Formula(n, tuple(untranslate(BinaryClause(vars_, w)) for w in words))


def gen_random_sat(n: int, m: int, width_range: tuple[int, int] = (1, 3), seed=None) -> Formula:
    lo, hi = width_range
    if not 1 <= lo <= hi <= n and m:
        raise ValueError(f"clause widths {lo}..{hi} not within [1, {n}]")
    rng = random.Random(seed)
    clauses = []
    for _ in range(m):
        w = rng.randint(lo, hi)
        vars_ = rng.sample(range(n), w)
        clauses.append(Clause(tuple(Literal(v, rng.random() < 0.5) for v in vars_)))
    return Formula(n, tuple(clauses))


@dataclass(frozen=True)
class ProbRow:
    f: int
    p_inner: Fraction
    p_outer: Fraction


def prob_decay_table(n: int, f_max: int) -> list[ProbRow]:
    """Chance of hitting the lone solution after ``f`` tested candidates.

    Inner candidates come from clause words (two words leave the pool per
    test), outer ones from the search space (one word per test).
    """
    space = 1 << n
    if not 0 <= f_max < space // 2:
        raise ValueError(f"f_max must be in [0, 2^{n - 1} - 1]")
    return [
        ProbRow(f, Fraction(1, (space - 2 * f) * space), Fraction(1, (space - f) * space))
        for f in range(f_max + 1)
    ]


def clause_word_count(f: Formula) -> int:
    return len({translate(c) for c in f.clauses})

