"""Ground truth: clause evaluation and exhaustive solving."""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .errors import OracleTooLarge
from .model import Assignment, Formula, complement, restrict, translate

ORACLE_N_MAX = 24
_CHUNK = 1 << 20


@dataclass(frozen=True)
class SolutionSet:
    n: int
    words: tuple[int, ...]

    def __len__(self):
        return len(self.words)

    def __contains__(self, word):
        return word in set(self.words)

    @property
    def satisfiable(self) -> bool:
        return bool(self.words)


def _check(f: Formula, a: Assignment):
    if a.n != f.n:
        raise ValueError(f"assignment over {a.n} variables, formula has {f.n}")


def evaluate_circuit(f: Formula, a: Assignment) -> bool:
    """Every clause has a literal made true by ``a``."""
    _check(f, a)
    return all(any(a.satisfies(lit) for lit in c) for c in f.clauses)


def evaluate_matching(f: Formula, a: Assignment) -> bool:
    """Bit-matching evaluation.

    ``a`` fails a clause exactly when its restriction to the clause's
    variables equals the complement of the clause word.
    """
    _check(f, a)
    for c in f.clauses:
        bc = translate(c)
        if restrict(a.word, bc.vars) == complement(bc.bits, bc.width):
            return False
    return True


def brute_force_solve(f: Formula) -> SolutionSet:
    """Enumerate all ``2^n`` assignments; vectorized circuit evaluation."""
    n = f.n
    if n > ORACLE_N_MAX:
        raise OracleTooLarge(f"brute force limited to n <= {ORACLE_N_MAX}, got {n}")
    found = []
    total = 1 << n
    for start in range(0, total, _CHUNK):
        words = np.arange(start, min(total, start + _CHUNK), dtype=np.int64)
        ok = np.ones(words.shape, dtype=bool)
        for c in f.clauses:
            clause_ok = np.zeros(words.shape, dtype=bool)
            for lit in c:
                bit = ((words >> lit.var) & 1).astype(bool)
                clause_ok |= ~bit if lit.negated else bit
            ok &= clause_ok
        found.extend(int(w) for w in words[ok])
    return SolutionSet(n, tuple(found))


def check_witness(f: Formula, a: Assignment) -> bool:
    return evaluate_circuit(f, a)
