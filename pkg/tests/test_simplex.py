import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from fuzzlin.errors import UnsupportedFormError
from fuzzlin.simplex import (
    LinearProgram,
    dual,
    recover_primal_from_dual,
    solve,
    solve_canonical_max,
)

from oracles import brute_force_max

EX3 = LinearProgram("max", (3, 4), [((2.5, 1), "<=", 20), ((3, 3), "<=", 30), ((1, 2), "<=", 16)])
EX4 = LinearProgram("min", (40, 20, 60), [((2, 4, 2), ">=", 24), ((5, 1, 1), ">=", 8)])


def test_example3_solution():
    sol = solve(EX3)
    assert sol.status == "optimal"
    assert sol.x == (4, 6)
    assert sol.objective == 36
    assert sol.unique
    assert sol.pivots == 2


def test_example3_tableaux():
    sol = solve(EX3, trace=True)
    assert len(sol.trace) == 3
    first, second, third = (t.matrix for t in sol.trace)
    np.testing.assert_allclose(first, [
        [2.5, 1, 1, 0, 0, 20],
        [3, 3, 0, 1, 0, 30],
        [1, 2, 0, 0, 1, 16],
        [-3, -4, 0, 0, 0, 0],
    ])
    # the s3 entry of the net-evaluation row is 0 + 4 * (1/2) = 2 after L4 + 4 L3'
    np.testing.assert_allclose(second, [
        [2, 0, 1, 0, -0.5, 12],
        [1.5, 0, 0, 1, -1.5, 6],
        [0.5, 1, 0, 0, 0.5, 8],
        [-1, 0, 0, 0, 2, 32],
    ])
    # row 1 s3 entry: -1/2 - 2 * (-1) = 3/2
    np.testing.assert_allclose(third, [
        [0, 0, 1, -4 / 3, 1.5, 4],
        [1, 0, 0, 2 / 3, -1, 4],
        [0, 1, 0, -1 / 3, 1, 6],
        [0, 0, 0, 2 / 3, 1, 36],
    ], atol=1e-12)
    assert [t.basis_labels() for t in sol.trace] == [
        ["s1", "s2", "s3"], ["s1", "s2", "x2"], ["s1", "x1", "x2"],
    ]


def test_single_pivot():
    sol = solve(LinearProgram("max", (1,), [((1,), "<=", 5)]), trace=True)
    assert sol.x == (5,) and sol.objective == 5 and sol.pivots == 1
    assert len(sol.trace) == 2


def test_dual_of_example4():
    d = dual(EX4)
    assert d == LinearProgram("max", (24, 8), [((2, 5), "<=", 40), ((4, 1), "<=", 20),
                                              ((2, 1), "<=", 60)])
    assert d.names == ("z1", "z2")
    assert dual(d) == EX4


def test_dual_scalar_case():
    assert dual(LinearProgram("min", (1,), [((1,), ">=", 1)])) == \
        LinearProgram("max", (1,), [((1,), "<=", 1)])


def test_dual_rejects_noncanonical():
    with pytest.raises(UnsupportedFormError):
        dual(LinearProgram("min", (1,), [((1,), "<=", 1)]))


def test_example4_dual_final_tableau():
    sol = solve_canonical_max(dual(EX4))
    assert sol.x == pytest.approx((10 / 3, 20 / 3), abs=1e-12)
    assert sol.objective == pytest.approx(400 / 3, abs=1e-12)
    np.testing.assert_allclose(sol.final_tableau.matrix, [
        [0, 1, 2 / 9, -1 / 9, 0, 20 / 3],
        [1, 0, -1 / 18, 5 / 18, 0, 10 / 3],
        [0, 0, -1 / 9, -4 / 9, 1, 140 / 3],
        [0, 0, 4 / 9, 52 / 9, 0, 400 / 3],
    ], atol=1e-12)
    assert sol.final_tableau.basis_labels() == ["z2", "z1", "s3"]


def test_example4_primal_recovery():
    d = solve_canonical_max(dual(EX4))
    sol = recover_primal_from_dual(d, EX4)
    assert sol.x == pytest.approx((4 / 9, 52 / 9, 0), abs=1e-12)
    assert sol.objective == pytest.approx(400 / 3, abs=1e-12)
    x = np.array(sol.x)
    # both constraints bind: 2(4/9) + 4(52/9) = 24, 5(4/9) + 52/9 = 8
    assert 2 * x[0] + 4 * x[1] + 2 * x[2] == pytest.approx(24)
    assert 5 * x[0] + x[1] + x[2] == pytest.approx(8)
    assert solve(EX4).x == sol.x


def test_trivial_primal_dual_pair():
    sol = solve(LinearProgram("min", (1,), [((1,), ">=", 1)]))
    assert sol.x == (1,) and sol.objective == 1


@pytest.mark.parametrize("lp", [
    LinearProgram("max", (1,), [((1,), ">=", 1)]),
    LinearProgram("min", (1,), [((1,), "<=", 1)]),
    LinearProgram("max", (1, 1), [((1, 1), "<=", 4), ((1, 0), ">=", 1)]),
    LinearProgram("max", (1,), [((1,), "=", 1)]),
    LinearProgram("max", (1,), [((1,), "<=", -1)]),
])
def test_unsupported_forms(lp):
    assert solve(lp).status == "unsupported_form"
    with pytest.raises(UnsupportedFormError):
        solve_canonical_max(lp)


def test_unbounded():
    sol = solve(LinearProgram("max", (1, 1), [((1, -1), "<=", 1)]))
    assert sol.status == "unbounded"


def test_infeasible_min_via_unbounded_dual():
    sol = solve(LinearProgram("min", (1,), [((0,), ">=", 1)]))
    assert sol.status == "infeasible"


def test_alternative_optima_not_unique():
    sol = solve(LinearProgram("max", (1, 1), [((1, 1), "<=", 4)]))
    assert sol.objective == 4
    assert not sol.unique


def test_beale_cycling_example_terminates():
    # Dantzig's rule with lowest-index ties cycles here without a fallback
    lp = LinearProgram("max", (0.75, -150, 0.02, -6), [
        ((0.25, -60, -0.04, 9), "<=", 0),
        ((0.5, -90, -0.02, 3), "<=", 0),
        ((0, 0, 1, 0), "<=", 1),
    ])
    sol = solve(lp)
    assert sol.status == "optimal"
    assert sol.objective == pytest.approx(0.05)
    assert sol.x == pytest.approx((0.04, 0, 1, 0))


def _check_trace(sol):
    for t in sol.trace:
        m = t.m
        np.testing.assert_allclose(t.matrix[:, t.basis],
                                   np.vstack([np.eye(m), np.zeros((1, m))]), atol=1e-9)
        assert np.all(t.constants >= -1e-9)


random_lps = st.integers(1, 3).flatmap(lambda n: st.integers(1, 4).flatmap(lambda m: st.tuples(
    st.lists(st.integers(0, 9), min_size=n, max_size=n),
    st.lists(st.lists(st.integers(0, 9), min_size=n, max_size=n), min_size=m, max_size=m),
    st.lists(st.integers(1, 20), min_size=m, max_size=m),
)))


@settings(max_examples=200, deadline=None)
@given(random_lps)
def test_matches_vertex_enumeration(data):
    c, A, b = data
    lp = LinearProgram("max", tuple(c), [(tuple(row), "<=", rhs) for row, rhs in zip(A, b)])
    sol = solve(lp, trace=True)
    expected = brute_force_max(c, A, b)
    if expected is None:
        assert sol.status == "unbounded"
        return
    assert sol.status == "optimal"
    assert sol.objective == pytest.approx(expected, abs=1e-6)
    assert not lp.violations(sol.x)
    assert sol.pivots <= 2 * (lp.m + lp.n)
    _check_trace(sol)


@settings(max_examples=100, deadline=None)
@given(random_lps)
def test_weak_duality_on_min_problems(data):
    c, A, b = data
    # min b.y s.t. A^T y >= c is the dual of the max problem; solve it as a primal
    At = np.array(A).T
    lp = LinearProgram("min", tuple(b), [(tuple(row), ">=", cj) for row, cj in zip(At, c)])
    sol = solve(lp)
    expected = brute_force_max(c, A, b)
    if expected is None:
        assert sol.status == "infeasible"
        return
    assert sol.status == "optimal"
    assert sol.objective == pytest.approx(float(np.dot(b, sol.x)), abs=1e-9)
    assert sol.objective == pytest.approx(expected, abs=1e-6)
