"""Dense-tableau primal simplex for canonical-form linear programs.

Two shapes are supported, both with nonnegative variables and right-hand
sides:

* canonical max: ``maximize c.x  s.t.  A x <= b``
* canonical min: ``minimize c.x  s.t.  A x >= b``

Maximisation problems are solved directly.  Minimisation problems are solved
through their dual (a canonical max problem); the primal optimum is read off
the dual's final net-evaluation row under the slack columns.

The tableau layout is one row per constraint followed by the net-evaluation
row, with columns for the decision variables, then the slacks, then the
constants.  Entering column: most negative net-evaluation entry (lowest index
on ties).  Leaving row: minimum ratio (lowest row on ties).  After
``2 (m + n)`` pivots the solver falls back to Bland's rule.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Optional

import numpy as np

from .errors import DomainError, UnsupportedFormError

__all__ = [
    "Constraint",
    "LinearProgram",
    "Tableau",
    "LpSolution",
    "dual",
    "solve",
    "solve_canonical_max",
    "recover_primal_from_dual",
    "PIVOT_TOL",
    "FEAS_TOL",
]

PIVOT_TOL = 1e-9
FEAS_TOL = 1e-7

_SENSES = {"max": "max", "maximize": "max", "min": "min", "minimize": "min"}
_RELATIONS = {"<=": "<=", "≤": "<=", ">=": ">=", "≥": ">=", "=": "=", "==": "="}


@dataclass(frozen=True)
class Constraint:
    coeffs: tuple
    rel: str
    rhs: float

    def __post_init__(self):
        rel = _RELATIONS.get(self.rel)
        if rel is None:
            raise DomainError(f"unknown relation {self.rel!r}")
        object.__setattr__(self, "rel", rel)
        object.__setattr__(self, "coeffs", tuple(float(v) for v in self.coeffs))
        object.__setattr__(self, "rhs", float(self.rhs))


@dataclass(frozen=True)
class LinearProgram:
    """``sense`` is ``"max"`` or ``"min"``; all variables are nonnegative."""

    sense: str
    objective: tuple
    constraints: tuple
    names: Optional[tuple] = field(default=None, compare=False)

    def __post_init__(self):
        sense = _SENSES.get(str(self.sense).lower())
        if sense is None:
            raise DomainError(f"sense must be max or min, got {self.sense!r}")
        object.__setattr__(self, "sense", sense)
        objective = tuple(float(v) for v in self.objective)
        constraints = tuple(
            c if isinstance(c, Constraint) else Constraint(*c) for c in self.constraints
        )
        if not objective:
            raise DomainError("objective needs at least one variable")
        if not constraints:
            raise DomainError("at least one constraint is required")
        for i, c in enumerate(constraints, start=1):
            if len(c.coeffs) != len(objective):
                raise DomainError(
                    f"constraint {i} has {len(c.coeffs)} coefficients, expected {len(objective)}"
                )
        names = self.names
        if names is None:
            names = tuple(f"x{j}" for j in range(1, len(objective) + 1))
        elif len(names) != len(objective):
            raise DomainError("names must match the number of variables")
        object.__setattr__(self, "objective", objective)
        object.__setattr__(self, "constraints", constraints)
        object.__setattr__(self, "names", tuple(names))

    @property
    def n(self):
        return len(self.objective)

    @property
    def m(self):
        return len(self.constraints)

    def matrix(self):
        return np.array([c.coeffs for c in self.constraints], dtype=float)

    def rhs(self):
        return np.array([c.rhs for c in self.constraints], dtype=float)

    def form(self):
        """``"canonical_max"``, ``"canonical_min"`` or ``None``."""
        if any(c.rhs < 0 for c in self.constraints):
            return None
        rels = {c.rel for c in self.constraints}
        if self.sense == "max" and rels == {"<="}:
            return "canonical_max"
        if self.sense == "min" and rels == {">="}:
            return "canonical_min"
        return None

    def why_unsupported(self):
        if any(c.rhs < 0 for c in self.constraints):
            return "negative right-hand side"
        rels = {c.rel for c in self.constraints}
        if "=" in rels:
            return "equality constraints are not supported"
        want = "<=" if self.sense == "max" else ">="
        return f"a {self.sense} problem needs every relation to be {want}"

    def violations(self, x, tol=FEAS_TOL):
        """Indices (0-based) of constraints that ``x`` violates beyond ``tol``."""
        x = np.asarray(x, dtype=float)
        bad = []
        for i, c in enumerate(self.constraints):
            lhs = float(np.dot(c.coeffs, x))
            if c.rel == "<=" and lhs > c.rhs + tol:
                bad.append(i)
            elif c.rel == ">=" and lhs < c.rhs - tol:
                bad.append(i)
            elif c.rel == "=" and abs(lhs - c.rhs) > tol:
                bad.append(i)
        return bad


class Tableau:
    """Dense simplex tableau: constraint rows, then the net-evaluation row.

    ``basis[i]`` is the column index of the variable basic in row ``i``.
    """

    def __init__(self, matrix, basis, columns):
        self.matrix = np.array(matrix, dtype=float)
        self.basis = list(basis)
        self.columns = list(columns)

    @classmethod
    def initial(cls, lp: LinearProgram):
        m, n = lp.m, lp.n
        t = np.zeros((m + 1, n + m + 1))
        t[:m, :n] = lp.matrix()
        t[:m, n:n + m] = np.eye(m)
        t[:m, -1] = lp.rhs()
        t[m, :n] = -np.asarray(lp.objective)
        columns = list(lp.names) + [f"s{i}" for i in range(1, m + 1)]
        return cls(t, range(n, n + m), columns)

    @property
    def m(self):
        return self.matrix.shape[0] - 1

    @property
    def net_evaluation(self):
        return self.matrix[-1, :-1]

    @property
    def constants(self):
        return self.matrix[:-1, -1]

    @property
    def value(self):
        return float(self.matrix[-1, -1])

    def basis_labels(self):
        return [self.columns[j] for j in self.basis]

    def copy(self):
        return Tableau(self.matrix.copy(), self.basis, self.columns)

    def pivot(self, row, col):
        t = self.matrix
        t[row] /= t[row, col]
        for i in range(t.shape[0]):
            if i != row and t[i, col] != 0.0:
                t[i] -= t[i, col] * t[row]
        t[:, col] = 0.0
        t[row, col] = 1.0
        self.basis[row] = col

    def check(self, tol=PIVOT_TOL):
        """Raise if the basis columns are not an identity or a constant is negative."""
        m = self.m
        sub = self.matrix[:, self.basis]
        expected = np.vstack([np.eye(m), np.zeros((1, m))])
        if not np.allclose(sub, expected, atol=tol, rtol=0.0):
            raise RuntimeError("tableau basis columns drifted from the identity")
        if np.any(self.constants < -tol):
            raise RuntimeError("tableau lost primal feasibility")

    def to_dict(self):
        return {
            "columns": list(self.columns) + ["const"],
            "basis": self.basis_labels(),
            "rows": self.matrix[:-1].tolist(),
            "net_evaluation": self.matrix[-1].tolist(),
        }


@dataclass
class LpSolution:
    """Outcome of a solve.

    ``status`` is one of ``optimal``, ``unbounded``, ``infeasible`` or
    ``unsupported_form``.  ``x`` and ``objective`` are only meaningful when
    optimal.  For minimisation problems ``final_tableau`` and ``trace`` are
    those of the dual.
    """

    status: str
    x: tuple = ()
    objective: float = float("nan")
    unique: bool = False
    pivots: int = 0
    final_tableau: Optional[Tableau] = None
    trace: list = field(default_factory=list)
    message: str = ""
    names: tuple = ()

    @property
    def optimal(self):
        return self.status == "optimal"


def dual(lp: LinearProgram) -> LinearProgram:
    """Symmetric dual of a canonical-form problem.

    A canonical min problem maps to a canonical max problem over ``z`` and
    vice versa, so ``dual(dual(lp)) == lp``.
    """
    form = lp.form()
    if form is None:
        raise UnsupportedFormError(f"dual needs a canonical problem: {lp.why_unsupported()}")
    a = lp.matrix()
    if form == "canonical_min":
        sense, rel, prefix = "max", "<=", "z"
    else:
        sense, rel, prefix = "min", ">=", "x"
    constraints = tuple(
        Constraint(tuple(a[:, j]), rel, lp.objective[j]) for j in range(lp.n)
    )
    names = tuple(f"{prefix}{i}" for i in range(1, lp.m + 1))
    return LinearProgram(sense, tuple(lp.rhs()), constraints, names)


def _entering(t: Tableau, bland: bool):
    net = t.net_evaluation
    if bland:
        candidates = np.flatnonzero(net < -PIVOT_TOL)
        return int(candidates[0]) if candidates.size else None
    j = int(np.argmin(net))
    return j if net[j] < -PIVOT_TOL else None


def _leaving(t: Tableau, col: int, bland: bool):
    column = t.matrix[:-1, col]
    rows = np.flatnonzero(column > PIVOT_TOL)
    if rows.size == 0:
        return None
    ratios = t.constants[rows] / column[rows]
    best = ratios.min()
    tied = rows[ratios <= best + 1e-12 * max(1.0, abs(best))]
    if bland:
        return int(min(tied, key=lambda r: t.basis[r]))
    return int(tied[0])


def solve_canonical_max(lp: LinearProgram, trace=False, tol=FEAS_TOL) -> LpSolution:
    """Solve ``max c.x, A x <= b, x >= 0`` with ``b >= 0``.

    With ``trace=True`` the returned solution carries a copy of every
    tableau, starting with the initial one.
    """
    if lp.form() != "canonical_max":
        raise UnsupportedFormError(lp.why_unsupported() if lp.form() is None
                                   else "expected a maximisation problem with <= constraints")
    m, n = lp.m, lp.n
    t = Tableau.initial(lp)
    snapshots = [t.copy()] if trace else []
    bland_after = 2 * (m + n)
    # Bland's rule terminates; this only guards against numerical breakdown
    hard_limit = bland_after + 50 * (m + n) ** 2 + 100
    pivots = 0
    while True:
        bland = pivots >= bland_after
        col = _entering(t, bland)
        if col is None:
            break
        row = _leaving(t, col, bland)
        if row is None:
            return LpSolution(
                "unbounded", pivots=pivots, final_tableau=t, trace=snapshots,
                message=f"column {t.columns[col]} can increase without bound",
                names=lp.names,
            )
        t.pivot(row, col)
        pivots += 1
        t.check()
        if trace:
            snapshots.append(t.copy())
        if pivots > hard_limit:
            raise RuntimeError("simplex failed to terminate")

    x = np.zeros(n + m)
    x[t.basis] = t.constants
    x = np.where(np.abs(x) < PIVOT_TOL, 0.0, x)[:n]
    objective = t.value
    _verify(lp, x, objective, tol)
    nonbasic = [j for j in range(n + m) if j not in t.basis]
    unique = all(t.net_evaluation[j] > PIVOT_TOL for j in nonbasic)
    return LpSolution(
        "optimal", tuple(float(v) for v in x), objective, unique, pivots, t, snapshots,
        names=lp.names,
    )


def _verify(lp, x, objective, tol):
    if np.any(np.asarray(x) < -tol):
        raise RuntimeError("simplex returned a negative variable")
    bad = lp.violations(x, tol)
    if bad:
        raise RuntimeError(f"simplex solution violates constraints {[i + 1 for i in bad]}")
    if abs(float(np.dot(lp.objective, x)) - objective) > tol * max(1.0, abs(objective)):
        raise RuntimeError("objective value disagrees with c.x")


def recover_primal_from_dual(dual_solution: LpSolution, primal: LinearProgram,
                             tol=FEAS_TOL) -> LpSolution:
    """Primal optimum of a canonical min problem from its solved dual.

    Primal variable ``i`` is the dual's final net-evaluation entry under slack
    column ``i``.  The primal optimum is reported unique when the dual's
    optimal basic solution is nondegenerate.
    """
    if dual_solution.status == "unbounded":
        return LpSolution(
            "infeasible", pivots=dual_solution.pivots,
            final_tableau=dual_solution.final_tableau, trace=dual_solution.trace,
            message="dual is unbounded, so the primal has no feasible point",
            names=primal.names,
        )
    if not dual_solution.optimal:
        raise DomainError(f"cannot recover a primal from a {dual_solution.status} dual")
    t = dual_solution.final_tableau
    n_dual = t.matrix.shape[1] - 1 - primal.n
    if n_dual != primal.m:
        raise DomainError("dual tableau does not match the primal's dimensions")
    x = np.array(t.net_evaluation[n_dual:n_dual + primal.n], dtype=float)
    x = np.where(np.abs(x) < PIVOT_TOL, 0.0, x)
    objective = dual_solution.objective
    _verify(primal, x, objective, tol)
    unique = bool(np.all(t.constants > PIVOT_TOL))
    return LpSolution(
        "optimal", tuple(float(v) for v in x), objective, unique,
        dual_solution.pivots, t, dual_solution.trace, names=primal.names,
    )


def solve(lp: LinearProgram, trace=False, tol=FEAS_TOL) -> LpSolution:
    """Solve either canonical form; other shapes report ``unsupported_form``."""
    form = lp.form()
    if form == "canonical_max":
        return solve_canonical_max(lp, trace=trace, tol=tol)
    if form == "canonical_min":
        d = solve_canonical_max(dual(lp), trace=trace, tol=tol)
        return recover_primal_from_dual(d, lp, tol=tol)
    return LpSolution("unsupported_form", message=lp.why_unsupported(), names=lp.names)
