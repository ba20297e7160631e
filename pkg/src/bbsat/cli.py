"""Command line entry point: ``bbsat solve|gen|prob-table|bench|oracle``."""

from __future__ import annotations

import argparse
import logging
import os
import sys
from pathlib import Path

from . import dimacs
from .config import ENV_PREFIX, SolverConfig
from .errors import DimacsSyntaxError, EmptyClauseError, ResourceLimit
from .grouped import solve_grouped
from .model import Assignment
from .oracle import brute_force_solve, check_witness
from .race import solve_race
from .randsearch import solve_random
from .transform import gen_extreme_ssat, gen_random_sat, prob_decay_table
from .verdict import Reason, Verdict

ENGINE_CHOICES = ("race", "grouped", "random")


def _read_text(path: str) -> str:
    if path == "-":
        return sys.stdin.read()
    return Path(path).read_text()


def _range(text: str) -> tuple[int, int]:
    lo, sep, hi = text.partition("..")
    if not sep:
        return int(lo), int(lo)
    return int(lo), int(hi)


def _words(text: str, n: int) -> list[int]:
    out = []
    for tok in filter(None, (t.strip() for t in text.split(","))):
        if len(tok) == n and set(tok) <= {"0", "1"}:
            out.append(int(tok, 2))
        else:
            out.append(int(tok, 0))
    return out


def _write(text: str, out: str | None):
    if out in (None, "-"):
        sys.stdout.write(text)
    else:
        Path(out).write_text(text)


def cmd_solve(args) -> int:
    cfg = SolverConfig.from_env(
        seed=args.seed, pair_budget=args.pair_budget, w_max=args.wmax, r_max=args.rmax, n_max=args.nmax
    )
    engine = args.engine or os.environ.get(ENV_PREFIX + "ENGINE") or "race"
    if engine not in ENGINE_CHOICES:
        print(f"c unknown engine {engine!r}", file=sys.stderr)
        return 2
    try:
        f = dimacs.parse_dimacs(_read_text(args.file))
    except EmptyClauseError as exc:
        result = Verdict.unsat("parser", Reason.EMPTY_CLAUSE_AT_INGEST, detail=str(exc))
    except DimacsSyntaxError as exc:
        print(f"c syntax error: {exc}", file=sys.stderr)
        return 1
    else:
        if engine == "grouped":
            result = solve_grouped(f, w_max=cfg.w_max, r_max=cfg.r_max)
        elif engine == "random":
            try:
                result = solve_random(f, cfg.seed, cfg.pair_budget, n_max=cfg.n_max)
            except ResourceLimit as exc:
                result = Verdict.indeterminate("random", Reason.RESOURCE_CAP, detail=str(exc))
        else:
            result = solve_race(f, cfg)
    sys.stdout.write(dimacs.emit_result(result, json_lines=args.json))
    return dimacs.exit_code(result)


def cmd_gen(args) -> int:
    if args.kind == "extreme":
        sols = _words(args.solutions or "", args.n)
        f = gen_extreme_ssat(args.n, sols, seed=args.seed, duplication=args.dup)
        comment = [f"extreme instance n={args.n} solutions={sorted(sols)} duplication={args.dup}"]
    else:
        f = gen_random_sat(args.n, args.m, _range(args.widths), seed=args.seed)
        comment = [f"random instance n={args.n} m={args.m} widths={args.widths} seed={args.seed}"]
    _write(dimacs.emit_dimacs(f, comment), args.out)
    return 0


def cmd_prob_table(args) -> int:
    from .report import plot_prob_decay, prob_table_csv

    rows = prob_decay_table(args.n, args.fmax)
    _write(prob_table_csv(rows), args.out)
    if args.plot:
        plot_prob_decay(rows, args.n, args.plot)
    return 0


def cmd_bench(args) -> int:
    from .report import bench_csv, plot_bench, step_bench

    lo, hi = _range(args.n)
    rows = step_bench(range(lo, hi + 1), range(args.seeds))
    _write(bench_csv(rows), args.out)
    if args.plot:
        plot_bench(rows, args.plot)
    return 0


def cmd_oracle(args) -> int:
    try:
        f = dimacs.parse_dimacs(_read_text(args.file))
    except EmptyClauseError:
        f = None
    if args.action == "solve":
        if f is None:
            print("s UNSATISFIABLE\nc solutions 0")
            return dimacs.EXIT_UNSAT
        sols = brute_force_solve(f)
        if not sols.satisfiable:
            print("s UNSATISFIABLE\nc solutions 0")
            return dimacs.EXIT_UNSAT
        v = Verdict.sat("oracle", Assignment(f.n, sols.words[0]))
        sys.stdout.write(dimacs.emit_result(v) + f"c solutions {len(sols)}\n")
        return dimacs.EXIT_SAT
    if args.witness is None:
        print("c --witness is required for 'oracle check'", file=sys.stderr)
        return 2
    if f is None:
        print("c witness FAILS: formula contains the empty clause")
        return 1
    a = dimacs.parse_witness(_read_text(args.witness), f.n)
    ok = check_witness(f, a)
    print("c witness OK" if ok else "c witness FAILS")
    return 0 if ok else 1


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="bbsat", description=__doc__)
    p.add_argument("-v", "--verbose", action="store_true")
    sub = p.add_subparsers(dest="command", required=True)

    s = sub.add_parser("solve", help="solve a DIMACS CNF file")
    s.add_argument("file", help="CNF file, or - for stdin")
    s.add_argument("--engine", choices=ENGINE_CHOICES, default=None)
    s.add_argument("--seed", type=int)
    s.add_argument("--pair-budget", type=int)
    s.add_argument("--wmax", type=int)
    s.add_argument("--rmax", type=int)
    s.add_argument("--nmax", type=int)
    s.add_argument("--json", action="store_true", help="emit one JSON record instead of s/v lines")
    s.set_defaults(func=cmd_solve)

    g = sub.add_parser("gen", help="generate instances as DIMACS")
    g.add_argument("kind", choices=("extreme", "random"))
    g.add_argument("--n", type=int, required=True)
    g.add_argument("--m", type=int, default=0)
    g.add_argument("--widths", default="1..3", help="clause widths, e.g. 1..4")
    g.add_argument("--solutions", help="comma separated words, binary (n digits) or integers")
    g.add_argument("--dup", type=int, default=1, help="repeat every clause this many times")
    g.add_argument("--seed", type=int)
    g.add_argument("--out")
    g.set_defaults(func=cmd_gen)

    t = sub.add_parser("prob-table", help="selection probability table as CSV")
    t.add_argument("--n", type=int, required=True)
    t.add_argument("--fmax", type=int, required=True)
    t.add_argument("--out")
    t.add_argument("--plot", help="also render the curves to this image file")
    t.set_defaults(func=cmd_prob_table)

    b = sub.add_parser("bench", help="pair counts of the random search on extreme instances")
    b.add_argument("--n", default="4..10", help="range of variable counts")
    b.add_argument("--seeds", type=int, default=3)
    b.add_argument("--out")
    b.add_argument("--plot")
    b.set_defaults(func=cmd_bench)

    o = sub.add_parser("oracle", help="brute-force solving and witness checks")
    o.add_argument("action", choices=("solve", "check"))
    o.add_argument("file")
    o.add_argument("--witness", help="file with v-lines (solver output works)")
    o.set_defaults(func=cmd_oracle)
    return p


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    logging.basicConfig(level=logging.INFO if args.verbose else logging.ERROR, format="c %(levelname)s %(message)s")
    return args.func(args)


if __name__ == "__main__":
    sys.exit(main())
