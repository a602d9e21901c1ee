"""Group performance assessment from linguistic grades.

Each grade A-F owns an integer score interval; its TFN is
``(lo, (lo + hi)/2, hi)``.  A group is summarised three ways:

* the GPA index (weighted grade average on 0-4),
* the mean of the members' grade TFNs, defuzzified by its centroid,
* when raw rater scores exist, the mean of one TpFN per member,
  defuzzified by the COG-of-COGs.
"""

from __future__ import annotations

import enum
import math
from dataclasses import dataclass, field
from typing import Iterable, Mapping, Sequence

from .errors import DomainError
from .fuzzy import TFN, TpFN, cog_of_cogs, mean

__all__ = [
    "Grade",
    "GradeScale",
    "GradeDistribution",
    "ScoreSheet",
    "DEFAULT_SCALE",
    "RIGOROUS_SCALE",
    "gpa",
    "grade_of_score",
    "distribution_of_sheet",
    "mean_performance_tfn",
    "member_tpfn",
    "group_mean_tpfn",
    "classify_mean",
    "mean_score",
]


class Grade(enum.IntEnum):
    """Linguistic grade; the integer value is the GPA weight."""

    F = 0
    D = 1
    C = 2
    B = 3
    A = 4

    @property
    def label(self):
        return _LABELS[self]

    @classmethod
    def parse(cls, name):
        try:
            return cls[str(name).strip().upper()]
        except KeyError:
            raise DomainError(f"unknown grade {name!r}; expected one of A, B, C, D, F")


_LABELS = {
    Grade.A: "excellent",
    Grade.B: "very good",
    Grade.C: "good",
    Grade.D: "fair",
    Grade.F: "unsatisfactory",
}

# lowest grade first
_ASCENDING = (Grade.F, Grade.D, Grade.C, Grade.B, Grade.A)


@dataclass(frozen=True)
class GradeScale:
    """Integer score interval ``[lo, hi]`` for every grade.

    The intervals must tile 0..100 in grade order with no gaps between
    consecutive integers (``lo`` of a grade is ``hi + 1`` of the one below).
    """

    intervals: Mapping[Grade, tuple]

    def __post_init__(self):
        clean = {}
        for g in _ASCENDING:
            if g not in self.intervals:
                raise DomainError(f"scale is missing grade {g.name}")
            lo, hi = self.intervals[g]
            if lo != int(lo) or hi != int(hi):
                raise DomainError(f"grade {g.name} bounds must be integers, got {lo}, {hi}")
            lo, hi = int(lo), int(hi)
            if not lo < hi:
                raise DomainError(f"grade {g.name} needs lo < hi, got [{lo}, {hi}]")
            clean[g] = (lo, hi)
        if clean[Grade.F][0] != 0 or clean[Grade.A][1] != 100:
            raise DomainError("scale must run from 0 (F) to 100 (A)")
        for below, above in zip(_ASCENDING, _ASCENDING[1:]):
            if clean[above][0] != clean[below][1] + 1:
                raise DomainError(
                    f"grades {below.name} and {above.name} must be adjacent: "
                    f"{clean[below]} then {clean[above]}"
                )
        object.__setattr__(self, "intervals", clean)

    @classmethod
    def from_mapping(cls, mapping):
        """Build from ``{"A": [85, 100], "B": [75, 84], ...}``."""
        return cls({Grade.parse(k): tuple(v) for k, v in mapping.items()})

    def interval(self, grade):
        return self.intervals[Grade(grade)]

    def tfn(self, grade):
        lo, hi = self.interval(grade)
        return TFN(lo, (lo + hi) / 2, hi)

    def to_mapping(self):
        return {g.name: list(self.intervals[g]) for g in reversed(_ASCENDING)}


DEFAULT_SCALE = GradeScale(
    {
        Grade.A: (85, 100),
        Grade.B: (75, 84),
        Grade.C: (60, 74),
        Grade.D: (50, 59),
        Grade.F: (0, 49),
    }
)

RIGOROUS_SCALE = GradeScale(
    {
        Grade.A: (90, 100),
        Grade.B: (80, 89),
        Grade.C: (70, 79),
        Grade.D: (60, 69),
        Grade.F: (0, 59),
    }
)

PRESETS = {"default": DEFAULT_SCALE, "rigorous": RIGOROUS_SCALE}


@dataclass(frozen=True)
class GradeDistribution:
    """Head-count per grade."""

    n_A: int = 0
    n_B: int = 0
    n_C: int = 0
    n_D: int = 0
    n_F: int = 0

    def __post_init__(self):
        for g in Grade:
            v = self.count(g)
            if v != int(v) or v < 0:
                raise DomainError(f"count for {g.name} must be a nonnegative integer, got {v!r}")
            object.__setattr__(self, f"n_{g.name}", int(v))

    @classmethod
    def from_mapping(cls, counts):
        kw = {}
        for k, v in counts.items():
            kw[f"n_{Grade.parse(k).name}"] = v
        return cls(**kw)

    def count(self, grade):
        return getattr(self, f"n_{Grade(grade).name}")

    @property
    def n(self):
        return self.n_A + self.n_B + self.n_C + self.n_D + self.n_F

    def items(self):
        """``(grade, count)`` pairs from A down to F."""
        return [(g, self.count(g)) for g in reversed(_ASCENDING)]

    def to_mapping(self):
        return {g.name: c for g, c in self.items()}


@dataclass(frozen=True)
class ScoreSheet:
    """Rater scores per group member, in member order."""

    members: Sequence[tuple] = field(default_factory=tuple)

    def __post_init__(self):
        clean = []
        for name, scores in self.members:
            scores = tuple(scores)
            if not scores:
                raise DomainError(f"member {name!r} has no scores")
            for s in scores:
                _check_score(s)
            clean.append((str(name), scores))
        object.__setattr__(self, "members", tuple(clean))

    @classmethod
    def from_scores(cls, score_lists: Iterable[Sequence[int]]):
        return cls(tuple((f"P{i}", s) for i, s in enumerate(score_lists, start=1)))

    def all_scores(self):
        return [s for _, scores in self.members for s in scores]


def _check_score(score):
    if isinstance(score, bool) or score != score or not 0 <= score <= 100:
        raise DomainError(f"score must lie in [0, 100], got {score!r}")


def gpa(d: GradeDistribution) -> float:
    if d.n < 1:
        raise DomainError("GPA of an empty group is undefined")
    return sum(int(g) * c for g, c in d.items()) / d.n


def grade_of_score(scale: GradeScale, score) -> Grade:
    _check_score(score)
    for g in _ASCENDING:
        lo, hi = scale.interval(g)
        if lo <= score <= hi:
            return g
    # non-integer scores can fall in the unit gap between two grades
    raise DomainError(f"score {score!r} falls between grade intervals of the scale")


def distribution_of_sheet(scale: GradeScale, sheet: ScoreSheet) -> GradeDistribution:
    if not sheet.members:
        raise DomainError("score sheet has no members")
    counts = {g: 0 for g in Grade}
    for s in sheet.all_scores():
        counts[grade_of_score(scale, s)] += 1
    return GradeDistribution(**{f"n_{g.name}": c for g, c in counts.items()})


def mean_performance_tfn(scale: GradeScale, d: GradeDistribution):
    """Mean of the members' grade TFNs and its centroid abscissa.

    Returns ``(M, x)``.  Because every grade TFN is symmetric, ``x`` equals
    ``M.b`` and the midpoint of ``M.a`` and ``M.c``.
    """
    n = d.n
    if n < 1:
        raise DomainError("mean performance of an empty group is undefined")
    entries = []
    for k in range(3):
        entries.append(math.fsum(c * scale.tfn(g).astuple()[k] for g, c in d.items()) / n)
    m = TFN(*entries)
    return m, (m.a + m.b + m.c) / 3


def member_tpfn(scale: GradeScale, scores: Sequence) -> TpFN:
    """TpFN for one member rated by several raters.

    The core is ``[min score, max score]``; the support extends down to the
    lower bound of the lowest score's grade and up to the upper bound of the
    highest score's grade.  When a core endpoint sits exactly on that bound
    the support is widened by half a point (clamped to 0..100 when that
    still leaves room), keeping ``a < b`` and ``c < d``.
    """
    scores = list(scores)
    if not scores:
        raise DomainError("member has no scores")
    for s in scores:
        _check_score(s)
    b, c = min(scores), max(scores)
    a = scale.interval(grade_of_score(scale, b))[0]
    d = scale.interval(grade_of_score(scale, c))[1]
    # a score of exactly 0 or 100 can only be widened past the scale
    if not a < b:
        a = b - 0.5
        if a < 0 < b:
            a = 0.0
    if not c < d:
        d = c + 0.5
        if c < 100 < d:
            d = 100.0
    return TpFN(a, b, c, d)


def group_mean_tpfn(members: Sequence[TpFN]):
    """Mean member TpFN and its COG-of-COGs abscissa, as ``(P, x)``."""
    members = list(members)
    if not members:
        raise DomainError("group has no members")
    p = mean(members)
    return p, cog_of_cogs(p).x


def classify_mean(scale: GradeScale, x: float) -> Grade:
    """Grade for a real-valued mean.

    Each integer interval ``[lo, hi]`` is read as the half-open real bin
    ``[lo, hi + 1)``; A is closed at 100.
    """
    if not 0 <= x <= 100:
        raise DomainError(f"mean must lie in [0, 100], got {x!r}")
    for g in _ASCENDING:
        lo, hi = scale.interval(g)
        if lo <= x < hi + 1 or (g is Grade.A and x <= hi):
            return g
    raise AssertionError("scale does not cover [0, 100]")  # unreachable for a valid scale


def mean_score(sheet: ScoreSheet) -> float:
    """Plain arithmetic mean of every raw score, for comparison."""
    scores = sheet.all_scores()
    if not scores:
        raise DomainError("score sheet has no scores")
    return math.fsum(scores) / len(scores)
