"""Relations of partial assignments and the cross/natural join over them.

A :class:`SolutionRelation` is a set of rows over a :class:`VarSet`; each
row is a word laid out with the same bit convention as clause words.
Joining two relations is a cross product when their variable sets are
disjoint and a natural join on the shared variables otherwise.
"""

from __future__ import annotations

from collections import defaultdict
from dataclasses import dataclass
from typing import Iterable, Sequence

from .errors import Inapplicable, RelationTooLarge
from .model import EMPTY_VARSET, Assignment, VarSet

DEFAULT_R_MAX = 1 << 20


@dataclass(frozen=True)
class SolutionRelation:
    vars: VarSet
    rows: tuple[int, ...]

    def __post_init__(self):
        rows = tuple(self.rows)
        limit = 1 << self.vars.width
        if len(set(rows)) != len(rows):
            raise ValueError("relation rows must be distinct")
        if any(not 0 <= r < limit for r in rows):
            raise ValueError(f"row does not fit width {self.vars.width}")
        object.__setattr__(self, "rows", rows)

    def __len__(self):
        return len(self.rows)

    @property
    def empty(self) -> bool:
        return not self.rows

    def row_set(self) -> frozenset[int]:
        return frozenset(self.rows)

    def as_dicts(self) -> list[dict[int, int]]:
        w = self.vars.width
        return [
            {v: (r >> (w - 1 - i)) & 1 for i, v in enumerate(self.vars.members)}
            for r in self.rows
        ]

    def __str__(self):
        w = self.vars.width
        body = ", ".join(format(r, f"0{w}b") if w else "()" for r in self.rows)
        return f"{self.vars}: {{{body}}}"


UNIT_RELATION = SolutionRelation(EMPTY_VARSET, (0,))


def _moves(src: VarSet, dst: VarSet) -> list[tuple[int, int]]:
    """(bit in src, bit in dst) for every variable of src."""
    return [(src.bit_of(v), dst.bit_of(v)) for v in src.members]


def _remap(row: int, moves: Sequence[tuple[int, int]]) -> int:
    out = 0
    for s, d in moves:
        if (row >> s) & 1:
            out |= 1 << d
    return out


def project(rel: SolutionRelation, onto: VarSet) -> SolutionRelation:
    if not set(onto.members) <= set(rel.vars.members):
        raise ValueError(f"{onto} is not a subset of {rel.vars}")
    moves = [(rel.vars.bit_of(v), onto.bit_of(v)) for v in onto.members]
    rows = sorted({_remap(r, moves) for r in rel.rows})
    return SolutionRelation(onto, tuple(rows))


def cross_join(a: SolutionRelation, b: SolutionRelation, r_max: int | None = DEFAULT_R_MAX) -> SolutionRelation:
    """Join two relations; rows of the result are sorted."""
    union = a.vars.union(b.vars)
    shared = a.vars.intersection(b.vars)
    into_a, into_b = _moves(a.vars, union), _moves(b.vars, union)

    if shared.width == 0:
        total = len(a) * len(b)
        if r_max is not None and total > r_max:
            raise RelationTooLarge(total, r_max)
        lifted_b = [_remap(r, into_b) for r in b.rows]
        rows = sorted(ra | rb for ra in (_remap(r, into_a) for r in a.rows) for rb in lifted_b)
        return SolutionRelation(union, tuple(rows))

    key_a = [(a.vars.bit_of(v), shared.bit_of(v)) for v in shared.members]
    key_b = [(b.vars.bit_of(v), shared.bit_of(v)) for v in shared.members]
    index: dict[int, list[int]] = defaultdict(list)
    for r in b.rows:
        index[_remap(r, key_b)].append(_remap(r, into_b))
    out = set()
    for r in a.rows:
        matches = index.get(_remap(r, key_a))
        if not matches:
            continue
        lifted = _remap(r, into_a)
        for rb in matches:
            out.add(lifted | rb)
        if r_max is not None and len(out) > r_max:
            raise RelationTooLarge(len(out), r_max)
    return SolutionRelation(union, tuple(sorted(out)))


def components(relations: Sequence[SolutionRelation]) -> list[list[SolutionRelation]]:
    """Split relations into groups connected by shared variables."""
    parent = list(range(len(relations)))

    def find(i):
        while parent[i] != i:
            parent[i] = parent[parent[i]]
            i = parent[i]
        return i

    owner: dict[int, int] = {}
    for i, rel in enumerate(relations):
        for v in rel.vars:
            if v in owner:
                parent[find(i)] = find(owner[v])
            else:
                owner[v] = i
    buckets: dict[int, list[SolutionRelation]] = defaultdict(list)
    for i, rel in enumerate(relations):
        buckets[find(i)].append(rel)
    return list(buckets.values())


def _join_order(rels: list[SolutionRelation]) -> list[SolutionRelation]:
    # smallest first, then always the smallest relation touching what we have
    pending = sorted(rels, key=lambda r: (len(r), r.vars.members))
    order = [pending.pop(0)]
    seen = set(order[0].vars)
    while pending:
        pick = next((i for i, r in enumerate(pending) if seen & set(r.vars)), 0)
        rel = pending.pop(pick)
        seen |= set(rel.vars)
        order.append(rel)
    return order


def fold_component(rels: Sequence[SolutionRelation], r_max: int | None = DEFAULT_R_MAX) -> SolutionRelation:
    acc = UNIT_RELATION
    for rel in _join_order(list(rels)) if rels else []:
        acc = cross_join(acc, rel, r_max)
        if acc.empty:
            break
    return acc


def fold_components(relations: Sequence[SolutionRelation], r_max: int | None = DEFAULT_R_MAX) -> list[SolutionRelation]:
    """Fold each connected component on its own.

    Stops at the first empty component, which is then the last element of
    the returned list.
    """
    out = []
    for comp in sorted(components(relations), key=lambda c: sum(len(r) for r in c)):
        folded = fold_component(comp, r_max)
        out.append(folded)
        if folded.empty:
            break
    return out


def fold_theta(relations: Iterable[SolutionRelation], r_max: int | None = DEFAULT_R_MAX) -> SolutionRelation:
    """Join every relation into the global solution relation.

    An empty input yields the unit relation (no variables, one empty row).
    """
    relations = list(relations)
    acc = UNIT_RELATION
    for folded in fold_components(relations, r_max):
        if folded.empty:
            return SolutionRelation(_all_vars(relations), ())
        acc = cross_join(acc, folded, r_max)
    return acc


def _all_vars(relations: Iterable[SolutionRelation]) -> VarSet:
    vs: set[int] = set()
    for r in relations:
        vs.update(r.vars)
    return VarSet(tuple(vs))


def pairwise_incompatible(a: SolutionRelation, b: SolutionRelation) -> bool:
    """True iff two single-row relations disagree on a shared variable."""
    if len(a) != 1 or len(b) != 1:
        raise Inapplicable("both relations need exactly one row")
    shared = a.vars.intersection(b.vars)
    if shared.width == 0:
        raise Inapplicable("relations share no variables")
    ra, rb = a.rows[0], b.rows[0]
    return any(
        ((ra >> a.vars.bit_of(v)) & 1) != ((rb >> b.vars.bit_of(v)) & 1)
        for v in shared
    )


def assemble_witness(row: int, vars: VarSet, n: int) -> Assignment:
    """Total assignment matching ``row`` on ``vars``; other variables are 0."""
    if vars.members and vars.members[0] >= n:
        raise ValueError(f"{vars} not inside [0, {n - 1}]")
    word = 0
    for v in vars.members:
        if (row >> vars.bit_of(v)) & 1:
            word |= 1 << v
    return Assignment(n, word)
