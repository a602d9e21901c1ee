"""Linear programs with fuzzy coefficients.

The solution method has three steps:

1. replace every fuzzy coefficient by its rank (:func:`crispify`),
2. solve the resulting crisp program with the simplex solver,
3. optionally rebuild each optimal value as a fuzzy number with a chosen
   degree of fuzziness and the optimal value as its rank
   (:func:`refuzzify_tfn`, :func:`refuzzify_tpfn`).

A fuzzy answer is not automatically feasible across its whole support, so
step 3 is followed by a worst-corner audit of each constraint
(:func:`audit_feasibility`).
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Mapping, Optional, Sequence, Union

from .errors import AdmissibilityError, DomainError, KindMismatchError
from .fuzzy import TFN, TpFN, FuzzyNumber, rank
from .simplex import FEAS_TOL, Constraint, LinearProgram, LpSolution, solve

__all__ = [
    "FuzzyConstraint",
    "FuzzyLinearProgram",
    "RefuzzSpec",
    "FuzzySolution",
    "ConstraintAudit",
    "FeasibilityAudit",
    "CRISP_ZERO",
    "TfnFamily",
    "crispify",
    "refuzzify_tfn",
    "refuzzify_tpfn",
    "tfn_alpha_bounds",
    "tpfn_alpha_bounds",
    "tpfn_b_bounds",
    "tfn_family",
    "audit_feasibility",
    "clamp_nonnegative",
    "solve_fuzzy",
]


class _CrispZero:
    """Marker for a decision variable fixed at exactly zero."""

    _instance = None

    def __new__(cls):
        if cls._instance is None:
            cls._instance = super().__new__(cls)
        return cls._instance

    def __repr__(self):
        return "CRISP_ZERO"

    def __reduce__(self):
        return (_CrispZero, ())


CRISP_ZERO = _CrispZero()

FuzzyVar = Union[TFN, TpFN, _CrispZero, float]


@dataclass(frozen=True)
class FuzzyConstraint:
    coeffs: tuple
    rel: str
    rhs: FuzzyNumber

    def __post_init__(self):
        object.__setattr__(self, "coeffs", tuple(self.coeffs))
        if self.rel not in ("<=", ">="):
            raise DomainError(f"fuzzy constraints take <= or >=, got {self.rel!r}")


@dataclass(frozen=True)
class FuzzyLinearProgram:
    """All coefficients must be of one kind, either all TFN or all TpFN."""

    sense: str
    objective: tuple
    constraints: tuple
    names: Optional[tuple] = None

    def __post_init__(self):
        objective = tuple(self.objective)
        constraints = tuple(
            c if isinstance(c, FuzzyConstraint) else FuzzyConstraint(*c)
            for c in self.constraints
        )
        if not objective or not constraints:
            raise DomainError("a fuzzy program needs an objective and at least one constraint")
        for i, c in enumerate(constraints, start=1):
            if len(c.coeffs) != len(objective):
                raise DomainError(
                    f"constraint {i} has {len(c.coeffs)} coefficients, expected {len(objective)}"
                )
        kinds = {type(f) for f in self._all_numbers(objective, constraints)}
        if not kinds <= {TFN, TpFN}:
            raise DomainError("every coefficient must be a TFN or a TpFN")
        if len(kinds) != 1:
            raise KindMismatchError("a fuzzy program cannot mix TFN and TpFN coefficients")
        names = self.names or tuple(f"x{j}" for j in range(1, len(objective) + 1))
        if len(names) != len(objective):
            raise DomainError("names must match the number of variables")
        object.__setattr__(self, "objective", objective)
        object.__setattr__(self, "constraints", constraints)
        object.__setattr__(self, "names", tuple(names))

    @staticmethod
    def _all_numbers(objective, constraints):
        yield from objective
        for c in constraints:
            yield from c.coeffs
            yield c.rhs

    @property
    def kind(self):
        return type(self.objective[0])

    @property
    def n(self):
        return len(self.objective)


@dataclass(frozen=True)
class RefuzzSpec:
    """How to rebuild fuzzy values around the crisp optimum.

    ``alpha`` and ``b`` map variable names to chosen free parameters; any
    variable left out gets the default (midpoint of its admissible range).
    """

    kind: str
    dof: float
    alpha: Mapping[str, float] = field(default_factory=dict)
    b: Mapping[str, float] = field(default_factory=dict)

    def __post_init__(self):
        kind = str(self.kind).lower()
        if kind not in ("tfn", "tpfn"):
            raise DomainError(f"refuzzification kind must be tfn or tpfn, got {self.kind!r}")
        if not self.dof > 0:
            raise DomainError(f"degree of fuzziness must be positive, got {self.dof!r}")
        if kind == "tfn" and self.b:
            raise DomainError("b is only a free parameter for trapezoidal refuzzification")
        object.__setattr__(self, "kind", kind)
        object.__setattr__(self, "dof", float(self.dof))


@dataclass(frozen=True)
class ConstraintAudit:
    index: int
    rel: str
    worst_lhs: float
    rhs: float
    violated: bool


@dataclass(frozen=True)
class FeasibilityAudit:
    constraints: tuple

    @property
    def violated(self):
        return [c.index for c in self.constraints if c.violated]

    @property
    def ok(self):
        return not self.violated


@dataclass
class FuzzySolution:
    """``fuzzy_vars`` and ``audit`` are ``None`` unless refuzzification ran.

    ``notes`` holds ``(code, message)`` pairs, e.g. ``("CLAMPED_VAR", ...)``.
    """

    crisp: LpSolution
    lp: LinearProgram
    fuzzy_vars: Optional[dict] = None
    audit: Optional[FeasibilityAudit] = None
    notes: list = field(default_factory=list)


def crispify(flp: FuzzyLinearProgram) -> LinearProgram:
    constraints = tuple(
        Constraint(tuple(rank(a) for a in c.coeffs), c.rel, rank(c.rhs))
        for c in flp.constraints
    )
    return LinearProgram(flp.sense, tuple(rank(a) for a in flp.objective), constraints,
                         flp.names)


# -- refuzzification --------------------------------------------------------

def _check_dof(D):
    if not D > 0:
        raise DomainError(f"degree of fuzziness must be positive, got {D!r}")


def tfn_alpha_bounds(R: float, D: float):
    """Open interval for the left endpoint of a TFN with rank R and DoF D."""
    _check_dof(D)
    return R - 2 * D / 3, R - D / 3


@dataclass(frozen=True)
class TfnFamily:
    """Every TFN with rank R and DoF D: ``(alpha, intercept - 2 alpha, alpha + D)``
    for ``lower < alpha < upper``."""

    R: float
    D: float

    @property
    def intercept(self):
        return 3 * self.R - self.D

    @property
    def bounds(self):
        return tfn_alpha_bounds(self.R, self.D)

    def at(self, alpha):
        return refuzzify_tfn(self.R, self.D, alpha)

    def __str__(self):
        lo, hi = self.bounds
        return (f"(α, {self.intercept:g} - 2α, α + {self.D:g}) "
                f"with {lo:.6g} < α < {hi:.6g}")


def tfn_family(R: float, D: float) -> TfnFamily:
    _check_dof(D)
    return TfnFamily(float(R), float(D))


def refuzzify_tfn(R: float, D: float, alpha: Optional[float] = None) -> TFN:
    """TFN with rank ``R`` and degree of fuzziness ``D``.

    ``alpha`` is the left endpoint; it must lie strictly inside
    ``(R - 2D/3, R - D/3)`` and defaults to the midpoint ``R - D/2``.
    """
    lo, hi = tfn_alpha_bounds(R, D)
    if alpha is None:
        alpha = R - D / 2
    elif not lo < alpha < hi:
        raise AdmissibilityError(
            f"alpha={alpha!r} must satisfy {lo!r} < alpha < {hi!r}", bounds=(lo, hi)
        )
    return TFN(alpha, 3 * R - 2 * alpha - D, alpha + D)


def tpfn_alpha_bounds(R: float, D: float):
    """Open interval of left endpoints for which some core ``[b, c]`` exists."""
    _check_dof(D)
    return R - 8 * D / 9, R - D / 9


def tpfn_b_bounds(R: float, D: float, alpha: float):
    """Half-open interval ``(lower, upper]`` of admissible core starts ``b``.

    With ``s = b + c = (18R - 4 alpha - 2D)/7`` the constraints
    ``alpha < b``, ``b <= c`` and ``c < alpha + D`` give
    ``max(alpha, s - alpha - D) < b <= s/2``.
    """
    _check_dof(D)
    s = (18 * R - 4 * alpha - 2 * D) / 7
    return max(alpha, s - alpha - D), s / 2


def refuzzify_tpfn(R: float, D: float, alpha: Optional[float] = None,
                   b: Optional[float] = None) -> TpFN:
    """TpFN ``(alpha, b, c, alpha + D)`` with rank ``R`` and DoF ``D``.

    ``c`` follows from the rank.  Defaults: ``alpha`` at the midpoint of its
    admissible interval (``R - D/2``), ``b`` at the midpoint of its induced
    interval.
    """
    a_lo, a_hi = tpfn_alpha_bounds(R, D)
    if alpha is None:
        alpha = R - 2 * D / 3 + D / 6
    b_lo, b_hi = tpfn_b_bounds(R, D, alpha)
    if not b_lo < b_hi:
        raise AdmissibilityError(
            f"alpha={alpha!r} leaves no admissible b; need {a_lo!r} < alpha < {a_hi!r}",
            bounds=(a_lo, a_hi),
        )
    if b is None:
        b = (b_lo + b_hi) / 2
    else:
        s = (18 * R - 4 * alpha - 2 * D) / 7
        c = s - b
        if not alpha < b:
            raise AdmissibilityError(f"alpha < b violated: b={b!r} <= alpha={alpha!r}",
                                     bounds=(b_lo, b_hi))
        if not b <= c:
            raise AdmissibilityError(f"b <= c violated: b={b!r} > c={c!r}",
                                     bounds=(b_lo, b_hi))
        if not c < alpha + D:
            raise AdmissibilityError(f"c < alpha + D violated: c={c!r} >= {alpha + D!r}",
                                     bounds=(b_lo, b_hi))
    c = (18 * R - 4 * alpha - 2 * D) / 7 - b
    return TpFN(alpha, b, c, alpha + D)


# -- feasibility ------------------------------------------------------------------

def _support_bounds(v):
    if v is CRISP_ZERO:
        return 0.0, 0.0
    if isinstance(v, (TFN, TpFN)):
        entries = v.astuple()
        return entries[0], entries[-1]
    v = float(v)
    return v, v


def audit_feasibility(crisp_lp: LinearProgram, fuzzy_vars: Sequence[FuzzyVar],
                      tol=FEAS_TOL) -> FeasibilityAudit:
    """Evaluate each crisp constraint at its most adversarial support corner.

    For a ``<=`` row each variable sits at the support end that raises the
    left-hand side; for ``>=`` at the end that lowers it.  The comparison is
    against the crisp (ranked) right-hand side.
    """
    fuzzy_vars = list(fuzzy_vars)
    if len(fuzzy_vars) != crisp_lp.n:
        raise DomainError(f"expected {crisp_lp.n} variables, got {len(fuzzy_vars)}")
    bounds = [_support_bounds(v) for v in fuzzy_vars]
    rows = []
    for i, c in enumerate(crisp_lp.constraints):
        if c.rel == "=":
            raise DomainError("cannot audit equality constraints")
        worst = 0.0
        for coef, (lo, hi) in zip(c.coeffs, bounds):
            if c.rel == "<=":
                worst += coef * (hi if coef > 0 else lo)
            else:
                worst += coef * (lo if coef > 0 else hi)
        if c.rel == "<=":
            violated = worst > c.rhs + tol
        else:
            violated = worst < c.rhs - tol
        rows.append(ConstraintAudit(i, c.rel, worst, c.rhs, violated))
    return FeasibilityAudit(tuple(rows))


def clamp_nonnegative(f: FuzzyVar, tol=1e-9) -> FuzzyVar:
    """Replace a value that cannot be a nonnegative quantity by ``CRISP_ZERO``.

    That is the case when its rank is zero or its whole core lies at or below
    zero.  A support that merely dips below zero is kept.
    """
    if f is CRISP_ZERO:
        return f
    if isinstance(f, (TFN, TpFN)):
        core_hi = f.b if isinstance(f, TFN) else f.c
        if abs(rank(f)) <= tol or core_hi <= 0:
            return CRISP_ZERO
        return f
    return CRISP_ZERO if float(f) <= tol else float(f)


def solve_fuzzy(flp: FuzzyLinearProgram, spec: Optional[RefuzzSpec] = None,
                tol=FEAS_TOL) -> FuzzySolution:
    lp = crispify(flp)
    crisp = solve(lp, tol=tol)
    result = FuzzySolution(crisp, lp)
    if spec is None or not crisp.optimal:
        return result

    unknown = (set(spec.alpha) | set(spec.b)) - set(flp.names)
    if unknown:
        raise DomainError(f"refuzzification parameters for unknown variables: {sorted(unknown)}")

    fuzzy_vars = {}
    for name, R in zip(flp.names, crisp.x):
        if spec.kind == "tfn":
            f = refuzzify_tfn(R, spec.dof, spec.alpha.get(name))
        else:
            f = refuzzify_tpfn(R, spec.dof, spec.alpha.get(name), spec.b.get(name))
        clamped = clamp_nonnegative(f)
        if clamped is CRISP_ZERO:
            result.notes.append(("CLAMPED_VAR", f"{name} is not a feasible fuzzy quantity "
                                                f"around {R:.6g}; replaced by 0"))
        elif clamped.a < 0:
            result.notes.append(("SUPPORT_CROSSES_ZERO",
                                 f"{name} support starts at {clamped.a:.6g} < 0"))
        fuzzy_vars[name] = clamped

    audit = audit_feasibility(lp, list(fuzzy_vars.values()), tol=tol)
    for row in audit.constraints:
        if row.violated:
            result.notes.append((
                "AUDIT_VIOLATION",
                f"constraint {row.index + 1}: worst case {row.worst_lhs:.6g} "
                f"{'>' if row.rel == '<=' else '<'} {row.rhs:.6g}",
            ))
    result.fuzzy_vars = fuzzy_vars
    result.audit = audit
    return result
