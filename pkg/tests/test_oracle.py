import pytest

from bbsat.errors import OracleTooLarge
from bbsat.model import Assignment, BinaryClause, Formula, VarSet, complement, untranslate
from bbsat.oracle import brute_force_solve, evaluate_circuit, evaluate_matching

from conftest import SSAT37_WORDS, random_corpus


def test_circuit_sat43(sat43):
    assert evaluate_circuit(sat43, Assignment.from_values({0: 1, 1: 0, 2: 1, 3: 1}))


def test_circuit_contradiction():
    f = Formula.from_strings(1, ["x0", "~x0"])
    assert not any(evaluate_circuit(f, Assignment(1, w)) for w in range(2))


def test_circuit_empty_formula():
    f = Formula(3)
    assert all(evaluate_circuit(f, Assignment(3, w)) for w in range(8))


def test_matching_ssat37(ssat37):
    assert evaluate_matching(ssat37, Assignment(3, 0b011))
    assert not evaluate_matching(ssat37, Assignment(3, 0b000))
    # 0, 1, 2 are blocked by 7, 6, 5
    for y in (0, 1, 2):
        assert complement(y, 3) in SSAT37_WORDS
        assert not evaluate_matching(ssat37, Assignment(3, y))


def test_matching_equals_circuit_exhaustive():
    for f in random_corpus(60, seed=3, n_range=(1, 8), m_max=20, widths=(1, 4)):
        for w in range(1 << f.n):
            a = Assignment(f.n, w)
            assert evaluate_matching(f, a) == evaluate_circuit(f, a)


def test_brute_force_worked_examples(phi1, phi2, phi3, ssat37):
    assert brute_force_solve(phi1).words == (0b1101, 0b1110)
    assert brute_force_solve(phi2).words == (0b0000, 0b0011)
    assert brute_force_solve(phi3).words == ()
    assert brute_force_solve(ssat37).words == (0b011,)


def test_brute_force_matches_scalar_evaluation():
    for f in random_corpus(40, seed=8, n_range=(1, 9), m_max=15):
        expected = tuple(w for w in range(1 << f.n) if evaluate_circuit(f, Assignment(f.n, w)))
        assert brute_force_solve(f).words == expected


def test_brute_force_cap():
    with pytest.raises(OracleTooLarge):
        brute_force_solve(Formula(25))


@pytest.mark.parametrize("w", [1, 2, 3, 4])
def test_solution_iff_complement_absent(w):
    vars_ = VarSet(tuple(range(w)))
    clauses = [untranslate(BinaryClause(vars_, b)) for b in range(1 << w)]
    for subset in range(1 << (1 << w)):
        words = [b for b in range(1 << w) if (subset >> b) & 1]
        sols = set(brute_force_solve(Formula(w, tuple(clauses[b] for b in words))).words)
        for s in range(1 << w):
            assert (s in sols) == (complement(s, w) not in words)
