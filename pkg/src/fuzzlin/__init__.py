"""Fuzzy numbers, fuzzy-grade assessment and fuzzy linear programming."""

from .errors import (
    AdmissibilityError,
    DegenerateScalarError,
    DomainError,
    FuzzlinError,
    KindMismatchError,
    UnsupportedFormError,
)
from .fuzzy import (
    TFN,
    ClosedInterval,
    Point2,
    TpFN,
    TrapezoidalFuzzyNumber,
    TriangularFuzzyNumber,
    add,
    alpha_cut,
    cog_of_cogs,
    cog_tfn,
    cog_tpfn,
    dof,
    mean,
    membership,
    neg,
    rank,
    scalar_add,
    scalar_mul,
    sub,
)
from .simplex import LinearProgram, LpSolution, dual, solve
from .flp import FuzzyLinearProgram, RefuzzSpec, crispify, solve_fuzzy

__version__ = "0.1.0"
