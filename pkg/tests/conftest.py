import random

import pytest

from bbsat.model import BinaryClause, Formula, VarSet, untranslate
from bbsat.transform import gen_random_sat

# SAT(4,3) example with its four clauses
SAT43 = ["x3 ~x2 x0", "x2 x1 x0", "~x2 x1 x0", "x3 ~x0"]
PHI1 = ["x3 ~x2", "x3 x2", "~x3 x2", "~x1 ~x0", "x1 x0"]
PHI2 = ["x3 ~x2", "~x3 ~x2", "~x3 x2", "x2 ~x1 x0", "x2 x1 ~x0"]
PHI3 = ["x3 ~x2", "~x3 ~x2", "~x3 x2", "x2 ~x1 ~x0", "x2 ~x1 x0", "x2 x1 ~x0", "x2 x1 x0"]
SSAT37_WORDS = [0b000, 0b001, 0b010, 0b011, 0b101, 0b110, 0b111]
BOARD38_WORDS = [0b000, 0b111, 0b001, 0b110, 0b010, 0b101, 0b011, 0b100]
SAT64 = ["~x5 ~x4 ~x3 ~x2 ~x1 ~x0", "~x5 ~x4 ~x3 ~x2 ~x1 x0", "x5 x4 x3 x2 x1 ~x0", "~x5 x4 x3 ~x2 x1 x0"]


def words_formula(n, words):
    vars_ = VarSet(tuple(range(n)))
    return Formula(n, tuple(untranslate(BinaryClause(vars_, w)) for w in words))


def random_corpus(count, seed=0, n_range=(4, 10), m_max=50, widths=(1, 4)):
    """Seeded formulas for oracle comparisons."""
    rng = random.Random(seed)
    out = []
    for _ in range(count):
        n = rng.randint(*n_range)
        m = rng.randint(0, m_max)
        lo, hi = widths
        out.append(gen_random_sat(n, m, (lo, min(hi, n)), seed=rng.getrandbits(32)))
    return out


@pytest.fixture
def sat43():
    return Formula.from_strings(4, SAT43)


@pytest.fixture
def phi1():
    return Formula.from_strings(4, PHI1)


@pytest.fixture
def phi2():
    return Formula.from_strings(4, PHI2)


@pytest.fixture
def phi3():
    return Formula.from_strings(4, PHI3)


@pytest.fixture
def ssat37():
    return words_formula(3, SSAT37_WORDS)


@pytest.fixture
def board38():
    return words_formula(3, BOARD38_WORDS)


@pytest.fixture(scope="session")
def corpus():
    return random_corpus(500, seed=2016)


# one line per acceptance criterion, printed in the terminal summary
ACCEPTANCE_LINES: dict[int, str] = {}


def pytest_terminal_summary(terminalreporter):
    if not ACCEPTANCE_LINES:
        return
    terminalreporter.section("acceptance criteria")
    for key in sorted(ACCEPTANCE_LINES):
        terminalreporter.write_line(ACCEPTANCE_LINES[key])
