"""Acceptance criteria, one test each.

Every test records a PASS/FAIL line that is printed in the pytest terminal
summary (also when the test fails).  Run on its own with
``pytest tests/test_acceptance.py``.
"""

import csv
import io
import random
import time
from fractions import Fraction
from itertools import combinations

import pytest

from bbsat.config import SolverConfig
from bbsat.grouped import solve_grouped
from bbsat.ivindex import iv_rank_fast, iv_rank_paper
from bbsat.model import Assignment, Formula, VarSet, translate
from bbsat.oracle import brute_force_solve, evaluate_circuit, evaluate_matching
from bbsat.race import solve_race
from bbsat.randsearch import solve_random
from bbsat.report import prob_table_csv
from bbsat.ssat import IngestStatus, SsatGroup
from bbsat.transform import ExpansionSpec, expand, gen_extreme_ssat, prob_decay_table, simplify
from bbsat.errors import EmptyClauseError
from bbsat.verdict import Outcome, Reason

from conftest import ACCEPTANCE_LINES, BOARD38_WORDS, PHI1, PHI2, PHI3, SAT43, SSAT37_WORDS, random_corpus, words_formula

pytestmark = pytest.mark.acceptance


class Criterion:
    """Collects failures and timing, then records the summary line."""

    def __init__(self, number, title, time_limit=None):
        self.number = number
        self.title = title
        self.time_limit = time_limit
        self.failures = []

    def check(self, ok, message):
        if not ok:
            self.failures.append(message)

    def __enter__(self):
        self.t0 = time.perf_counter()
        return self

    def __exit__(self, exc_type, exc, tb):
        elapsed = time.perf_counter() - self.t0
        if exc is not None:
            self.failures.append(f"{exc_type.__name__}: {exc}")
        if self.time_limit is not None and elapsed >= self.time_limit:
            self.failures.append(f"took {elapsed:.2f}s, limit {self.time_limit}s")
        status = "PASS" if not self.failures else "FAIL"
        line = f"{status} criterion {self.number}: {self.title} ({elapsed:.2f}s)"
        if self.failures:
            line += " -- " + "; ".join(self.failures[:3])
        ACCEPTANCE_LINES[self.number] = line
        print(line)
        if exc is None:
            assert not self.failures, line
        return False


@pytest.fixture(scope="module")
def corpus_runs():
    """Every engine plus the oracle on the 500-formula corpus.

    The race runs in test mode, so both lanes always finish and report.
    """
    t0 = time.perf_counter()
    runs = []
    for i, f in enumerate(random_corpus(500, seed=2016, n_range=(1, 10), m_max=50, widths=(1, 4))):
        runs.append(
            {
                "formula": f,
                "truth": brute_force_solve(f).satisfiable,
                "grouped": solve_grouped(f),
                "random": solve_random(f, seed=i),
                "race": solve_race(f, SolverConfig(seed=i, test_mode=True)),
            }
        )
    return runs, time.perf_counter() - t0


def test_criterion_1_worked_examples():
    with Criterion(1, "worked examples", time_limit=1.0) as c:
        sat43 = Formula.from_strings(4, SAT43)
        # listed x0..x3 as 1011, i.e. x0=1 x1=0 x2=1 x3=1
        c.check(evaluate_circuit(sat43, Assignment.from_values([1, 0, 1, 1])), "SAT(4,3) witness 1011")
        c.check(solve_grouped(sat43).is_sat and solve_random(sat43, seed=0).is_sat, "SAT(4,3) not Sat")
        expected = {
            "phi1": (PHI1, {0b1101, 0b1110}),
            "phi2": (PHI2, {0b0000, 0b0011}),
            "phi3": (PHI3, set()),
        }
        for name, (clauses, sols) in expected.items():
            f = Formula.from_strings(4, clauses)
            c.check(set(brute_force_solve(f).words) == sols, f"{name} oracle solution set")
            g = solve_grouped(f)
            c.check(g.is_sat == bool(sols), f"{name} grouped verdict")
            if g.is_sat:
                c.check(g.witness.word in sols, f"{name} grouped witness")
        c.check(solve_grouped(Formula.from_strings(4, PHI3)).outcome is Outcome.UNSAT, "phi3 not Unsat")
        ssat = words_formula(3, SSAT37_WORDS)
        v = solve_grouped(ssat)
        c.check(v.is_sat and v.witness.word == 0b011, "SSAT(3,7) unique solution 011")
        c.check(brute_force_solve(ssat).words == (0b011,), "SSAT(3,7) oracle")
        board = solve_grouped(words_formula(3, BOARD38_WORDS))
        c.check(board.outcome is Outcome.UNSAT and board.reason is Reason.BLOCKED_GROUP, "board not BlockedGroup")


def test_criterion_2_oracle_equivalence(corpus_runs):
    runs, elapsed = corpus_runs
    with Criterion(2, f"oracle equivalence on {len(runs)} formulas, corpus run {elapsed:.2f}s") as c:
        c.check(elapsed < 60, f"corpus took {elapsed:.1f}s, limit 60s")
        for i, r in enumerate(runs):
            for engine in ("grouped", "random", "race"):
                v = r[engine].verdict if engine == "race" else r[engine]
                if not v.definitive:
                    c.failures.append(f"#{i} {engine} indeterminate")
                    continue
                if v.is_sat != r["truth"]:
                    c.failures.append(f"#{i} {engine} disagrees with oracle")
                if v.is_sat and not evaluate_circuit(r["formula"], v.witness):
                    c.failures.append(f"#{i} {engine} witness fails")


def test_criterion_3_step_bound(corpus_runs):
    runs, _ = corpus_runs
    with Criterion(3, "random search step bound", time_limit=10.0) as c:
        for i, r in enumerate(runs):
            bound = 1 << max(r["formula"].n - 1, 0)
            for v in (r["random"], r["race"].lanes["random"]):
                c.check(v.steps <= bound, f"#{i} {v.steps} pairs > {bound}")
        for n in (6, 8, 10):
            f = gen_extreme_ssat(n, ())
            v = solve_random(f, seed=n)
            c.check(v.outcome is Outcome.UNSAT, f"n={n} not Unsat")
            c.check(v.steps == 1 << (n - 1), f"n={n}: {v.steps} pairs, expected {1 << (n - 1)}")


def test_criterion_4_blocked_board():
    with Criterion(4, "blocked board exits at the last distinct word", time_limit=1.0) as c:
        for w in (1, 2, 3, 4):
            rng = random.Random(w)
            stream = list(range(1 << w)) * 10
            rng.shuffle(stream)
            seen = set()
            expected = None
            for idx, word in enumerate(stream, 1):
                seen.add(word)
                if len(seen) == 1 << w:
                    expected = idx
                    break
            vars_ = VarSet(tuple(range(w)))
            g = SsatGroup(vars_)
            got = None
            for idx, word in enumerate(stream, 1):
                bc = translate(words_formula(w, [word]).clauses[0])
                if g.ingest(bc) is IngestStatus.BLOCKED:
                    got = idx
                    break
            c.check(got == expected, f"w={w}: blocked at {got}, expected {expected}")
            v = solve_grouped(words_formula(w, stream))
            c.check(v.reason is Reason.BLOCKED_GROUP and v.steps == expected, f"w={w}: solver read {v.steps}")


def test_criterion_5_circuit_matches_matching():
    with Criterion(5, "circuit and matching evaluation agree", time_limit=30.0) as c:
        for i, f in enumerate(random_corpus(100, seed=5, n_range=(1, 8), m_max=50, widths=(1, 4))):
            for word in range(1 << f.n):
                a = Assignment(f.n, word)
                if evaluate_circuit(f, a) != evaluate_matching(f, a):
                    c.failures.append(f"#{i} word {word:b}")


def test_criterion_6_transform_round_trip():
    with Criterion(6, "expand then simplify preserves solutions", time_limit=60.0) as c:
        for i, f in enumerate(random_corpus(200, seed=6, n_range=(1, 8), m_max=50, widths=(1, 4))):
            truth = brute_force_solve(f).words
            try:
                back = simplify(expand(f, ExpansionSpec.full(f.n)))
            except EmptyClauseError:
                c.check(truth == (), f"#{i} empty clause on a satisfiable formula")
                continue
            c.check(brute_force_solve(back).words == truth, f"#{i} solution set changed")


def test_criterion_7_iv_consistency():
    with Criterion(7, "IV index implementations agree", time_limit=5.0) as c:
        for n in range(0, 13):
            for k in range(n + 1):
                for s in combinations(range(n), k):
                    if iv_rank_paper(s, n) != iv_rank_fast(s, n):
                        c.failures.append(f"n={n} {s}")
            c.check(iv_rank_fast((), n) == 0, f"n={n} empty set")
            c.check(iv_rank_fast(range(n), n) == (1 << n) - 1, f"n={n} full set")
            if n >= 2:
                c.check(iv_rank_fast((0,), n) == 1 and iv_rank_fast((1,), n) == 2, f"n={n} singletons")


def test_criterion_8_probability_table():
    with Criterion(8, "probability table exact values and CSV", time_limit=1.0) as c:
        n, f_max = 10, 400
        rows = prob_decay_table(n, f_max)
        c.check(len(rows) == f_max + 1, "row count")
        space = 2**n
        for r in rows:
            inner = Fraction(1, (space - 2 * r.f) * space)
            outer = Fraction(1, (space - r.f) * space)
            c.check(abs(r.p_inner - inner) / inner < 1e-12, f"f={r.f} inner")
            c.check(abs(r.p_outer - outer) / outer < 1e-12, f"f={r.f} outer")
        parsed = list(csv.DictReader(io.StringIO(prob_table_csv(rows))))
        c.check(len(parsed) == f_max + 1, "CSV row count")
        for r, p in zip(rows, parsed):
            c.check(int(p["f"]) == r.f, "CSV f column")
            c.check(abs(float(p["p_inner"]) - float(r.p_inner)) / float(r.p_inner) < 1e-12, f"CSV f={r.f} inner")
            c.check(abs(float(p["p_outer"]) - float(r.p_outer)) / float(r.p_outer) < 1e-12, f"CSV f={r.f} outer")


def test_criterion_9_race_agreement_and_cancellation(corpus_runs):
    runs, _ = corpus_runs
    with Criterion(9, "race lanes agree and stop within one step of cancel") as c:
        c.check(all(r["race"].lanes.keys() == {"grouped", "random"} for r in runs), "a lane did not report")
        signalled = 0
        for i, r in enumerate(runs):
            race = r["race"]
            bits = {v.is_sat for v in race.lanes.values() if v.definitive}
            c.check(len(bits) <= 1, f"#{i} lanes disagree")
            for lane, lag in race.cancel_lag.items():
                signalled += 1
                c.check(0 <= lag <= 1, f"#{i} {lane} ran {lag} steps after cancel")
        c.check(signalled > 0, "no lane was ever cancelled")
