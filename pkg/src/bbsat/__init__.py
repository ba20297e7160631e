"""SAT solving by per-variable-set survivor tables, joins and complement-pair search."""

from .config import SolverConfig
from .errors import BBSatError, EmptyClauseError
from .grouped import clause_router, solve_grouped
from .ivindex import iv_rank_fast, iv_rank_paper, iv_unrank
from .join import SolutionRelation, cross_join, fold_theta
from .model import (
    TAUTOLOGY,
    Assignment,
    BinaryClause,
    Clause,
    Formula,
    Literal,
    VarSet,
    complement,
    normalize_clause,
    translate,
    untranslate,
)
from .oracle import brute_force_solve, evaluate_circuit, evaluate_matching
from .race import solve_race
from .randsearch import solve_random
from .ssat import SsatGroup
from .verdict import Outcome, Reason, Verdict

__version__ = "0.1.0"
