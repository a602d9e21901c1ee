from fractions import Fraction

import pytest
from hypothesis import given
from hypothesis import strategies as st

from fuzzlin.assessment import (
    DEFAULT_SCALE,
    RIGOROUS_SCALE,
    Grade,
    GradeDistribution,
    GradeScale,
    ScoreSheet,
    classify_mean,
    distribution_of_sheet,
    gpa,
    grade_of_score,
    group_mean_tpfn,
    mean_performance_tfn,
    mean_score,
    member_tpfn,
)
from fuzzlin.errors import DomainError
from fuzzlin.fuzzy import TpFN, rank

D1 = GradeDistribution(n_A=60, n_B=40, n_C=20, n_D=30, n_F=20)
D2 = GradeDistribution(n_A=60, n_B=90, n_C=45, n_D=45, n_F=15)
TEAM = GradeDistribution(n_A=14, n_B=4, n_C=1, n_D=4, n_F=7)

PLAYER_SCORES = [
    [43, 48, 49, 49, 50, 52],
    [81, 83, 85, 88, 91, 95],
    [76, 82, 89, 95, 95, 98],
    [86, 86, 87, 87, 87, 88],
    [35, 40, 44, 52, 59, 62],
]
PLAYER_TPFNS = [
    (0, 43, 52, 59),
    (75, 81, 95, 100),
    (75, 76, 98, 100),
    (85, 86, 88, 100),
    (0, 35, 62, 74),
]


def expanded_mean(scale, dist):
    """Average of the grade TFN entries over every member, in exact rationals."""
    members = []
    for g, c in dist.items():
        lo, hi = scale.interval(g)
        members += [(Fraction(lo), Fraction(lo + hi, 2), Fraction(hi))] * c
    n = len(members)
    return tuple(float(sum(m[k] for m in members) / n) for k in range(3))


distributions = st.builds(
    GradeDistribution,
    n_A=st.integers(0, 50), n_B=st.integers(0, 50), n_C=st.integers(0, 50),
    n_D=st.integers(0, 50), n_F=st.integers(0, 50),
).filter(lambda d: d.n > 0)
scales = st.sampled_from([DEFAULT_SCALE, RIGOROUS_SCALE])


# -- scale ----------------------------------------------------------------------

def test_default_scale_tfns():
    assert DEFAULT_SCALE.tfn(Grade.A).astuple() == (85, 92.5, 100)
    assert DEFAULT_SCALE.tfn(Grade.B).astuple() == (75, 79.5, 84)
    assert DEFAULT_SCALE.tfn(Grade.C).astuple() == (60, 67, 74)
    assert DEFAULT_SCALE.tfn(Grade.D).astuple() == (50, 54.5, 59)
    assert DEFAULT_SCALE.tfn(Grade.F).astuple() == (0, 24.5, 49)


def test_grade_ordering():
    assert Grade.A > Grade.B > Grade.C > Grade.D > Grade.F
    assert len(Grade) == 5


@pytest.mark.parametrize("mapping", [
    {"A": [85, 100], "B": [75, 84], "C": [60, 74], "D": [50, 59]},
    {"A": [85, 100], "B": [75, 84], "C": [60, 73], "D": [50, 59], "F": [0, 49]},
    {"A": [85, 99], "B": [75, 84], "C": [60, 74], "D": [50, 59], "F": [0, 49]},
    {"A": [85, 100], "B": [75, 84], "C": [60, 74], "D": [50, 59], "F": [1, 49]},
])
def test_bad_scales(mapping):
    with pytest.raises(DomainError):
        GradeScale.from_mapping(mapping)


def test_custom_scale_roundtrip():
    s = GradeScale.from_mapping(RIGOROUS_SCALE.to_mapping())
    assert s == RIGOROUS_SCALE


# -- gpa ------------------------------------------------------------------------

def test_gpa_examples():
    assert gpa(D1) == pytest.approx(43 / 17, abs=1e-12)
    assert gpa(D2) == pytest.approx(43 / 17, abs=1e-12)
    assert gpa(TEAM) == pytest.approx(74 / 30, abs=1e-12)
    assert gpa(GradeDistribution(n_A=7)) == 4
    assert gpa(GradeDistribution(n_F=7)) == 0


def test_gpa_empty():
    with pytest.raises(DomainError):
        gpa(GradeDistribution())


@given(distributions)
def test_gpa_bounds_and_monotone(d):
    g = gpa(d)
    assert 0 <= g <= 4
    counts = d.to_mapping()
    for low, high in [("F", "D"), ("D", "C"), ("C", "B"), ("B", "A")]:
        if counts[low] == 0:
            continue
        raised = dict(counts)
        raised[low] -= 1
        raised[high] += 1
        assert gpa(GradeDistribution.from_mapping(raised)) == pytest.approx(g + 1 / d.n)


# -- scores -------------------------------------------------------------------

@pytest.mark.parametrize("score, grade", [
    (43, Grade.F), (85, Grade.A), (62, Grade.C), (84, Grade.B), (0, Grade.F),
    (100, Grade.A), (50, Grade.D), (49, Grade.F),
])
def test_grade_of_score(score, grade):
    assert grade_of_score(DEFAULT_SCALE, score) == grade


@pytest.mark.parametrize("score", [-1, 101, 74.5])
def test_grade_of_score_domain(score):
    with pytest.raises(DomainError):
        grade_of_score(DEFAULT_SCALE, score)


def test_distribution_of_players():
    sheet = ScoreSheet.from_scores(PLAYER_SCORES)
    assert distribution_of_sheet(DEFAULT_SCALE, sheet) == TEAM
    assert mean_score(sheet) == pytest.approx(72.07, abs=0.005)


def test_distribution_edge_cases():
    sheet = ScoreSheet.from_scores([[90]])
    assert distribution_of_sheet(DEFAULT_SCALE, sheet) == GradeDistribution(n_A=1)
    with pytest.raises(DomainError):
        distribution_of_sheet(DEFAULT_SCALE, ScoreSheet(()))
    with pytest.raises(DomainError):
        ScoreSheet.from_scores([[]])
    with pytest.raises(DomainError):
        ScoreSheet.from_scores([[50, 120]])


# -- TFN mean ---------------------------------------------------------------------

def test_team_tfn_mean():
    m, x = mean_performance_tfn(DEFAULT_SCALE, TEAM)
    assert m.astuple() == pytest.approx((58.33, 68.98, 79.63), abs=0.01)
    assert x == pytest.approx(68.98, abs=0.01)


def test_department_tfn_means():
    m, x = mean_performance_tfn(DEFAULT_SCALE, D2)
    assert m.astuple() == pytest.approx((65.88, 72.71, 79.53), abs=0.01)
    assert x == pytest.approx(72.71, abs=0.01)
    # (10800, 12195, 13590) / 170
    m, x = mean_performance_tfn(DEFAULT_SCALE, D1)
    assert m.astuple() == pytest.approx(expanded_mean(DEFAULT_SCALE, D1), abs=1e-9)
    assert m.astuple() == pytest.approx((10800 / 170, 12195 / 170, 13590 / 170), abs=1e-9)
    assert m.astuple() == pytest.approx((63.53, 71.74, 79.94), abs=0.01)
    assert x == pytest.approx(71.74, abs=0.01)


@given(scales, distributions)
def test_tfn_mean_identity(scale, d):
    m, x = mean_performance_tfn(scale, d)
    assert x == pytest.approx(m.b, abs=1e-9)
    assert x == pytest.approx((m.a + m.c) / 2, abs=1e-9)
    assert m.astuple() == pytest.approx(expanded_mean(scale, d), abs=1e-9)


@given(scales, st.integers(0, 100), st.integers(1, 20))
def test_identical_scores(scale, s, k):
    sheet = ScoreSheet.from_scores([[s]] * k)
    d = distribution_of_sheet(scale, sheet)
    grade = grade_of_score(scale, s)
    assert gpa(d) == int(grade)
    _, x = mean_performance_tfn(scale, d)
    assert x == pytest.approx(scale.tfn(grade).b, abs=1e-9)


# -- TpFN per member ---------------------------------------------------------------

@pytest.mark.parametrize("scores, expected", list(zip(PLAYER_SCORES, PLAYER_TPFNS)))
def test_member_tpfns(scores, expected):
    assert member_tpfn(DEFAULT_SCALE, scores).astuple() == expected


def test_member_tpfn_boundary_widening():
    assert member_tpfn(DEFAULT_SCALE, [85, 85]).astuple() == (84.5, 85, 85, 100)
    assert member_tpfn(DEFAULT_SCALE, [84]).astuple() == (75, 84, 84, 84.5)
    assert member_tpfn(DEFAULT_SCALE, [100]).astuple() == (85, 100, 100, 100.5)
    assert member_tpfn(DEFAULT_SCALE, [0, 10]).astuple() == (-0.5, 0, 10, 49)
    with pytest.raises(DomainError):
        member_tpfn(DEFAULT_SCALE, [])


@given(scales, st.lists(st.integers(1, 99), min_size=1, max_size=8))
def test_member_tpfn_contains_scores(scale, scores):
    f = member_tpfn(scale, scores)
    assert f.b == min(scores) and f.c == max(scores)
    assert 0 <= f.a and f.d <= 100


def test_group_mean_of_players():
    members = [member_tpfn(DEFAULT_SCALE, s) for s in PLAYER_SCORES]
    p, x = group_mean_tpfn(members)
    assert p == TpFN(47, 64.2, 79, 86.6)
    assert x == pytest.approx(70.53, abs=0.01)


def test_group_mean_trivial_cases():
    f = TpFN(10, 20, 30, 40)
    assert group_mean_tpfn([f]) == (f, rank(f))
    p, x = group_mean_tpfn([f] * 5)
    assert p == f and x == pytest.approx(rank(f))
    with pytest.raises(DomainError):
        group_mean_tpfn([])


@given(st.lists(st.lists(st.integers(1, 99), min_size=1, max_size=6), min_size=2, max_size=6))
def test_group_mean_rank_between_members(score_lists):
    members = [member_tpfn(DEFAULT_SCALE, s) for s in score_lists]
    _, x = group_mean_tpfn(members)
    ranks = [rank(m) for m in members]
    if max(ranks) - min(ranks) > 1e-9:
        assert min(ranks) < x < max(ranks)
    else:
        assert x == pytest.approx(ranks[0])


# -- classification -------------------------------------------------------------

@pytest.mark.parametrize("x, grade", [
    (70.53, Grade.C), (72.71, Grade.C), (68.98, Grade.C), (100, Grade.A),
    (74.99, Grade.C), (75, Grade.B), (84.5, Grade.B), (0, Grade.F), (49.9, Grade.F),
])
def test_classify_mean(x, grade):
    assert classify_mean(DEFAULT_SCALE, x) == grade


@pytest.mark.parametrize("x", [-0.1, 100.01])
def test_classify_mean_domain(x):
    with pytest.raises(DomainError):
        classify_mean(DEFAULT_SCALE, x)
