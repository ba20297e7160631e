"""CSV tables and matplotlib figures for the reporting commands."""

from __future__ import annotations

import csv
import io
import random
from dataclasses import dataclass
from decimal import Decimal, localcontext
from fractions import Fraction
from pathlib import Path
from typing import Sequence

import matplotlib

matplotlib.use("Agg")
import matplotlib.pyplot as plt  # noqa: E402

from .grouped import solve_grouped  # noqa: E402
from .randsearch import solve_random  # noqa: E402
from .transform import ProbRow, gen_extreme_ssat  # noqa: E402

GOLDEN = (5**0.5 - 1) / 2
FIG_WIDTH = 5.0

RC = {
    "font.family": "serif",
    "font.size": 9,
    "axes.labelsize": 10,
    "legend.fontsize": 8,
    "xtick.labelsize": 8,
    "ytick.labelsize": 8,
    "lines.linewidth": 1.2,
    "lines.markersize": 3,
    "figure.figsize": (FIG_WIDTH, FIG_WIDTH * GOLDEN),
    "figure.dpi": 150,
    "savefig.bbox": "tight",
}


def fraction_to_decimal(p: Fraction, digits: int = 25) -> str:
    with localcontext() as ctx:
        ctx.prec = digits + 5
        d = Decimal(p.numerator) / Decimal(p.denominator)
        return format(d, f".{digits - 1}e")


def prob_table_csv(rows: Sequence[ProbRow]) -> str:
    buf = io.StringIO()
    w = csv.writer(buf, lineterminator="\n")
    w.writerow(["f", "p_inner", "p_outer"])
    for r in rows:
        w.writerow([r.f, fraction_to_decimal(r.p_inner), fraction_to_decimal(r.p_outer)])
    return buf.getvalue()


def plot_prob_decay(rows: Sequence[ProbRow], n: int, path: str | Path) -> Path:
    f = [r.f for r in rows]
    # scaled by 2^(2n) so both curves start at 1
    scale = Fraction(1 << (2 * n))
    inner = [float(r.p_inner * scale) for r in rows]
    outer = [float(r.p_outer * scale) for r in rows]
    with plt.rc_context(RC):
        fig, ax = plt.subplots()
        ax.plot(f, inner, label="inner (candidates from clause words)")
        ax.plot(f, outer, "--", label="outside (candidates from search space)")
        ax.set_xlabel("candidates tested $f$")
        ax.set_ylabel(r"$P_{ss}(f)\cdot 2^{2n}$")
        ax.set_title(f"n = {n}")
        ax.legend(frameon=False)
        path = Path(path)
        fig.savefig(path)
        plt.close(fig)
    return path


@dataclass(frozen=True)
class BenchRow:
    n: int
    instance: str
    seed: int
    pairs: int
    bound: int
    grouped_reads: int


def step_bench(ns: Sequence[int], seeds: Sequence[int]) -> list[BenchRow]:
    """Pair counts of the random search on extreme instances.

    ``unsat`` holds every word (no solution); ``unique`` has exactly one
    solution drawn from the seed.
    """
    rows = []
    for n in ns:
        bound = 1 << (n - 1)
        for seed in seeds:
            sol = random.Random(seed).randrange(1 << n)
            for name, sols in (("unsat", ()), ("unique", (sol,))):
                f = gen_extreme_ssat(n, sols, seed=seed)
                v = solve_random(f, seed=seed)
                g = solve_grouped(f)
                rows.append(BenchRow(n, name, seed, v.steps, bound, g.steps))
    return rows


def bench_csv(rows: Sequence[BenchRow]) -> str:
    buf = io.StringIO()
    w = csv.writer(buf, lineterminator="\n")
    w.writerow(["n", "instance", "seed", "pairs", "bound", "grouped_reads"])
    for r in rows:
        w.writerow([r.n, r.instance, r.seed, r.pairs, r.bound, r.grouped_reads])
    return buf.getvalue()


def plot_bench(rows: Sequence[BenchRow], path: str | Path) -> Path:
    ns = sorted({r.n for r in rows})
    with plt.rc_context(RC):
        fig, ax = plt.subplots()
        ax.plot(ns, [1 << (n - 1) for n in ns], "k-", label="$2^{n-1}$")
        for name, marker in (("unsat", "o"), ("unique", "x")):
            pts = [(r.n, r.pairs) for r in rows if r.instance == name]
            if pts:
                ax.plot(*zip(*pts), marker, linestyle="none", label=f"{name} instances")
        ax.set_yscale("log", base=2)
        ax.set_xlabel("variables $n$")
        ax.set_ylabel("candidate pairs tested")
        ax.legend(frameon=False)
        path = Path(path)
        fig.savefig(path)
        plt.close(fig)
    return path
