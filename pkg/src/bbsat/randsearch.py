"""Randomized complement-pair search over half of the assignment space.

Candidates ``v`` are drawn without replacement from ``[0, 2^(n-1) - 1]``
(assignments whose top variable is 0).  Each draw tests ``v`` and its
bitwise complement, so ``2^(n-1)`` draws cover every assignment exactly
once and the search never needs more steps than that.
"""

from __future__ import annotations

import random
import threading
from collections import defaultdict

from .errors import FormulaTooWide
from .model import Assignment, Formula
from .verdict import Progress, Reason, Verdict

ENGINE = "random"
DEFAULT_N_MAX = 30


class LazyPermutation:
    """Uniform random permutation of ``range(size)``, produced on demand.

    Sparse Fisher-Yates: only displaced positions are stored, so memory
    grows with the number of values drawn rather than with ``size``.
    """

    def __init__(self, size: int, seed=None, rng: random.Random | None = None):
        if size < 0:
            raise ValueError("size must be non-negative")
        self.size = size
        self.cursor = 0
        self.displaced: dict[int, int] = {}
        self.rng = rng if rng is not None else random.Random(seed)

    def __len__(self):
        return self.size - self.cursor

    def next_candidate(self) -> int | None:
        """Next value of the permutation, or None once all are drawn."""
        i = self.cursor
        if i >= self.size:
            return None
        j = self.rng.randrange(i, self.size)
        value = self.displaced.get(j, j)
        if j != i:
            self.displaced[j] = self.displaced.get(i, i)
        self.displaced.pop(i, None)
        self.cursor = i + 1
        return value

    def __iter__(self):
        while (v := self.next_candidate()) is not None:
            yield v


class CompiledFormula:
    """Clauses bucketed by variable mask for fast candidate tests.

    An assignment ``a`` falsifies a clause with mask ``M`` and negated-variable
    set ``N`` exactly when ``a & M == N``.
    """

    def __init__(self, f: Formula):
        buckets: dict[int, set[int]] = defaultdict(set)
        for c in f.clauses:
            mask = neg = 0
            for lit in c:
                mask |= 1 << lit.var
                if lit.negated:
                    neg |= 1 << lit.var
            buckets[mask].add(neg)
        self.buckets = list(buckets.items())

    def __call__(self, word: int) -> bool:
        for mask, falsifiers in self.buckets:
            if word & mask in falsifiers:
                return False
        return True


def solve_random(
    f: Formula,
    seed=None,
    pair_budget: int | None = None,
    *,
    n_max: int = DEFAULT_N_MAX,
    cancel: threading.Event | None = None,
    progress: Progress | None = None,
) -> Verdict:
    n = f.n
    if n > n_max:
        raise FormulaTooWide(n, n_max)
    test = CompiledFormula(f)
    full = (1 << n) - 1
    perm = LazyPermutation(1 << max(n - 1, 0), seed)
    pairs = 0

    def done(kind, *args, **kw):
        return kind(ENGINE, *args, steps=pairs, stats={"pairs": pairs, "seed": seed}, **kw)

    while True:
        if cancel is not None and cancel.is_set():
            return done(Verdict.indeterminate, Reason.CANCELLED)
        if pair_budget is not None and pairs >= pair_budget and len(perm):
            return done(Verdict.indeterminate, Reason.BUDGET_EXHAUSTED)
        v = perm.next_candidate()
        if v is None:
            return done(Verdict.unsat, Reason.EXHAUSTED_SPACE)
        pairs += 1
        if progress is not None:
            progress.update(pairs)
        if test(v):
            return done(Verdict.sat, Assignment(n, v))
        if n and test(v ^ full):
            return done(Verdict.sat, Assignment(n, v ^ full))
