"""Triangular and trapezoidal fuzzy numbers.

Both kinds are immutable value objects.  Arithmetic follows the closed-form
rules for TFNs/TpFNs (entrywise sums, reversed-and-negated opposites, scalar
shift and scale), so results stay in the same family.  Products and quotients
of two fuzzy numbers are deliberately absent: they leave the family.

Defuzzification is centroid based:

* :func:`cog_tfn` -- centroid of the triangle under a TFN,
* :func:`cog_tpfn` -- centroid of the trapezoid under a TpFN,
* :func:`cog_of_cogs` -- centroid of the triangle formed by the centroids of
  the trapezoid's two side triangles and its middle rectangle.

:func:`rank` uses the first for TFNs and the last for TpFNs.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from numbers import Real
from typing import Sequence, Union

from .errors import DegenerateScalarError, DomainError, KindMismatchError

__all__ = [
    "TriangularFuzzyNumber",
    "TrapezoidalFuzzyNumber",
    "TFN",
    "TpFN",
    "FuzzyNumber",
    "Point2",
    "ClosedInterval",
    "membership",
    "tfn_membership",
    "tpfn_membership",
    "alpha_cut",
    "add",
    "sub",
    "neg",
    "scalar_add",
    "scalar_mul",
    "cog_tfn",
    "cog_tpfn",
    "cog_of_cogs",
    "rank",
    "dof",
    "mean",
    "support",
]


def _check_finite(*values):
    for v in values:
        if not math.isfinite(v):
            raise DomainError(f"fuzzy number entries must be finite, got {v!r}")


@dataclass(frozen=True)
class TriangularFuzzyNumber:
    """TFN ``(a, b, c)`` with support ``[a, c]`` and peak at ``b``.

    Requires ``a < b < c`` strictly; entries are never reordered.
    """

    a: float
    b: float
    c: float

    def __post_init__(self):
        for name in ("a", "b", "c"):
            object.__setattr__(self, name, float(getattr(self, name)))
        _check_finite(self.a, self.b, self.c)
        if not (self.a < self.b < self.c):
            raise DomainError(
                f"TFN requires a < b < c, got ({self.a!r}, {self.b!r}, {self.c!r})"
            )

    def astuple(self):
        return (self.a, self.b, self.c)

    def to_tpfn(self):
        """Embed as the degenerate trapezoid ``(a, b, b, c)``.

        Note that the embedded number ranks differently (see :func:`rank`).
        """
        return TrapezoidalFuzzyNumber(self.a, self.b, self.b, self.c)

    def __iter__(self):
        return iter(self.astuple())

    def __add__(self, other):
        if isinstance(other, Real):
            return scalar_add(other, self)
        return add(self, other)

    def __radd__(self, other):
        if isinstance(other, Real):
            return scalar_add(other, self)
        return NotImplemented

    def __sub__(self, other):
        if isinstance(other, Real):
            return scalar_add(-other, self)
        return sub(self, other)

    def __neg__(self):
        return neg(self)

    def __mul__(self, k):
        if isinstance(k, Real):
            return scalar_mul(k, self)
        return NotImplemented

    __rmul__ = __mul__


@dataclass(frozen=True)
class TrapezoidalFuzzyNumber:
    """TpFN ``(a, b, c, d)``: support ``[a, d]``, core ``[b, c]``.

    Requires ``a < b <= c < d``; ``b == c`` is the degenerate (triangular)
    trapezoid.
    """

    a: float
    b: float
    c: float
    d: float

    def __post_init__(self):
        for name in ("a", "b", "c", "d"):
            object.__setattr__(self, name, float(getattr(self, name)))
        _check_finite(self.a, self.b, self.c, self.d)
        if not (self.a < self.b <= self.c < self.d):
            raise DomainError(
                "TpFN requires a < b <= c < d, got "
                f"({self.a!r}, {self.b!r}, {self.c!r}, {self.d!r})"
            )

    def astuple(self):
        return (self.a, self.b, self.c, self.d)

    def __iter__(self):
        return iter(self.astuple())

    __add__ = TriangularFuzzyNumber.__add__
    __radd__ = TriangularFuzzyNumber.__radd__
    __sub__ = TriangularFuzzyNumber.__sub__
    __neg__ = TriangularFuzzyNumber.__neg__
    __mul__ = TriangularFuzzyNumber.__mul__
    __rmul__ = TriangularFuzzyNumber.__mul__


TFN = TriangularFuzzyNumber
TpFN = TrapezoidalFuzzyNumber
FuzzyNumber = Union[TriangularFuzzyNumber, TrapezoidalFuzzyNumber]


@dataclass(frozen=True)
class Point2:
    x: float
    y: float


@dataclass(frozen=True)
class ClosedInterval:
    lo: float
    hi: float

    def __post_init__(self):
        if self.lo > self.hi:
            raise DomainError(f"empty interval [{self.lo}, {self.hi}]")


def _kind(f):
    if isinstance(f, TriangularFuzzyNumber):
        return TriangularFuzzyNumber
    if isinstance(f, TrapezoidalFuzzyNumber):
        return TrapezoidalFuzzyNumber
    raise TypeError(f"expected a TFN or TpFN, got {type(f).__name__}")


def _same_kind(f, g):
    kf, kg = _kind(f), _kind(g)
    if kf is not kg:
        raise KindMismatchError(
            f"cannot combine {kf.__name__} with {kg.__name__}; "
            "convert explicitly with TFN.to_tpfn()"
        )
    return kf


# -- membership ---------------------------------------------------------------

def tfn_membership(f: TriangularFuzzyNumber, x: float) -> float:
    a, b, c = f.a, f.b, f.c
    if a <= x <= b:
        return (x - a) / (b - a)
    if b < x <= c:
        return (c - x) / (c - b)
    return 0.0


def tpfn_membership(f: TrapezoidalFuzzyNumber, x: float) -> float:
    a, b, c, d = f.a, f.b, f.c, f.d
    if b <= x <= c:
        return 1.0
    if a <= x < b:
        return (x - a) / (b - a)
    if c < x <= d:
        return (d - x) / (d - c)
    return 0.0


def membership(f: FuzzyNumber, x: float) -> float:
    if _kind(f) is TriangularFuzzyNumber:
        return tfn_membership(f, x)
    return tpfn_membership(f, x)


def support(f: FuzzyNumber) -> ClosedInterval:
    """Closure of the support, i.e. ``[a, c]`` or ``[a, d]``."""
    return ClosedInterval(f.a, f.astuple()[-1])


def alpha_cut(f: FuzzyNumber, alpha: float) -> ClosedInterval:
    """The closed interval of points with membership at least ``alpha``."""
    if not (0.0 < alpha <= 1.0):
        raise DomainError(f"alpha must lie in (0, 1], got {alpha!r}")
    if _kind(f) is TriangularFuzzyNumber:
        lo = f.a + alpha * (f.b - f.a)
        hi = f.c - alpha * (f.c - f.b)
    else:
        lo = f.a + alpha * (f.b - f.a)
        hi = f.d - alpha * (f.d - f.c)
    # rounding can push lo a hair past hi at alpha == 1 on a triangle
    return ClosedInterval(min(lo, hi), max(lo, hi))


# -- arithmetic -----------------------------------------------------------------

def add(f: FuzzyNumber, g: FuzzyNumber) -> FuzzyNumber:
    kind = _same_kind(f, g)
    return kind(*(x + y for x, y in zip(f.astuple(), g.astuple())))


def neg(f: FuzzyNumber) -> FuzzyNumber:
    return _kind(f)(*(-x for x in reversed(f.astuple())))


def sub(f: FuzzyNumber, g: FuzzyNumber) -> FuzzyNumber:
    kind = _same_kind(f, g)
    return kind(*(x - y for x, y in zip(f.astuple(), reversed(g.astuple()))))


def scalar_add(k: float, f: FuzzyNumber) -> FuzzyNumber:
    return _kind(f)(*(k + x for x in f.astuple()))


def scalar_mul(k: float, f: FuzzyNumber) -> FuzzyNumber:
    if k == 0:
        raise DegenerateScalarError("scalar multiple by 0 is not a fuzzy number")
    entries = f.astuple()
    if k < 0:
        entries = tuple(reversed(entries))
    return _kind(f)(*(k * x for x in entries))


def mean(fs: Sequence[FuzzyNumber]) -> FuzzyNumber:
    """Entrywise arithmetic mean of same-kind fuzzy numbers.

    Entries are summed and then divided by ``n`` (rather than multiplied by
    ``1/n``) so that integer-valued inputs give correctly rounded means.
    """
    fs = list(fs)
    if not fs:
        raise DomainError("mean of an empty list")
    kind = _kind(fs[0])
    for g in fs[1:]:
        _same_kind(fs[0], g)
    n = len(fs)
    columns = zip(*(g.astuple() for g in fs))
    return kind(*(math.fsum(col) / n for col in columns))


# -- defuzzification ------------------------------------------------------------

def cog_tfn(f: TriangularFuzzyNumber) -> Point2:
    if not isinstance(f, TriangularFuzzyNumber):
        raise KindMismatchError("cog_tfn expects a TFN")
    return Point2((f.a + f.b + f.c) / 3.0, 1.0 / 3.0)


def cog_tpfn(f: TrapezoidalFuzzyNumber) -> Point2:
    """Exact centroid of the region under a trapezoidal membership graph."""
    if not isinstance(f, TrapezoidalFuzzyNumber):
        raise KindMismatchError("cog_tpfn expects a TpFN")
    a, b, c, d = f.astuple()
    denom = 3.0 * (c + d - a - b)
    x = (c * c + d * d - a * a - b * b + d * c - b * a) / denom
    y = (2.0 * c + d - a - 2.0 * b) / denom
    return Point2(x, y)


def cog_of_cogs(f: TrapezoidalFuzzyNumber) -> Point2:
    """Centroid of the triangle whose vertices are the centroids of the two
    side triangles and of the middle rectangle.

    With ``b == c`` the rectangle has zero width but its centroid
    ``((b + c)/2, 1/2)`` is still well defined, so the formula is used as is.
    """
    if not isinstance(f, TrapezoidalFuzzyNumber):
        raise KindMismatchError("cog_of_cogs expects a TpFN")
    a, b, c, d = f.astuple()
    return Point2((2.0 * (a + d) + 7.0 * (b + c)) / 18.0, 7.0 / 18.0)


def rank(f: FuzzyNumber) -> float:
    """Ranking value: COG abscissa for a TFN, COG-of-COGs abscissa for a TpFN.

    Dispatch is on representation, so ``rank(TFN(a, b, c))`` and
    ``rank(TpFN(a, b, b, c))`` generally differ.
    """
    if _kind(f) is TriangularFuzzyNumber:
        return cog_tfn(f).x
    return cog_of_cogs(f).x


def dof(f: FuzzyNumber) -> float:
    """Degree of fuzziness: width of the support."""
    entries = f.astuple()
    return entries[-1] - entries[0]
