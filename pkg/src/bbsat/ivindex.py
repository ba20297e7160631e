"""Index of a variable subset in [0, 2^n - 1].

Subsets are ordered by cardinality, then colexicographically on their
descending member tuples::

    {} -> 0, {x0} -> 1, {x1} -> 2, ..., {x1,x0} -> n+1, {x2,x0}, {x2,x1}, ...

Two implementations are kept: :func:`iv_rank_paper` walks the successor
enumeration one set at a time, :func:`iv_rank_fast` uses the combinatorial
number system.  They must agree everywhere.
"""

from __future__ import annotations

from functools import lru_cache
from math import comb
from typing import Iterable

from .model import VarSet


@lru_cache(maxsize=None)
def _pascal_row(n: int) -> tuple[int, ...]:
    return tuple(comb(n, k) for k in range(n + 1))


@lru_cache(maxsize=None)
def _bases(n: int) -> tuple[int, ...]:
    """``base[k]`` = number of subsets with fewer than ``k`` members."""
    row = _pascal_row(n)
    out = [0]
    for k in range(n + 1):
        out.append(out[-1] + row[k])
    return tuple(out)


def _members(s: VarSet | Iterable[int], n: int) -> tuple[int, ...]:
    members = s.members if isinstance(s, VarSet) else VarSet(tuple(s)).members
    if members and not (0 <= members[-1] and members[0] < n):
        raise ValueError(f"subset {members} not inside [0, {n - 1}]")
    return members


def base(k: int, n: int) -> int:
    return _bases(n)[k]


def _successor(t: list[int], n: int) -> bool:
    """Advance a strictly descending tuple to the next one, in place.

    Equivalent to counting ``t`` upward as a base-``n`` number (most
    significant digit first) and skipping every value whose digits are not
    strictly descending.  Returns False when ``t`` was the last tuple.
    """
    k = len(t)
    # t[k-1] is the least significant digit
    for pos in range(k - 1, -1, -1):
        ceiling = n if pos == 0 else t[pos - 1]
        if t[pos] + 1 < ceiling:
            t[pos] += 1
            low = k - 1 - pos
            for j in range(pos + 1, k):
                low -= 1
                t[j] = low
            return True
    return False


def iv_rank_paper(s: VarSet | Iterable[int], n: int) -> int:
    """Rank by stepping through the successor enumeration from the lowest set."""
    target = list(_members(s, n))
    k = len(target)
    if k == 0:
        return 0
    t = list(range(k - 1, -1, -1))
    ix = 0
    while t != target:
        if not _successor(t, n):
            raise AssertionError("enumeration ran past the last subset")
        ix += 1
    return base(k, n) + ix


def iv_rank_fast(s: VarSet | Iterable[int], n: int) -> int:
    members = _members(s, n)
    k = len(members)
    # member of rank i (ascending) contributes C(member, i+1)
    return base(k, n) + sum(comb(v, k - i) for i, v in enumerate(members))


def iv_unrank(ix: int, n: int) -> VarSet:
    if not 0 <= ix < (1 << n):
        raise ValueError(f"index {ix} outside [0, 2^{n} - 1]")
    bases = _bases(n)
    k = 0
    while bases[k + 1] <= ix:
        k += 1
    rest = ix - bases[k]
    members = []
    for i in range(k, 0, -1):
        v = i - 1
        while comb(v + 1, i) <= rest:
            v += 1
        members.append(v)
        rest -= comb(v, i)
    return VarSet(tuple(members))
