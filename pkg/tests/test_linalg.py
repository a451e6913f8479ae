"""Exact rank, affine dimension, and LP feasibility.

Frozen expectations are hand-checked (row3 = row1 + row2 and the like);
randomized systems are cross-checked against scipy's floating simplex.
"""

from fractions import Fraction
import random

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from sspkit.linalg import (
    affine_dim,
    lp_feasible,
    nonnegative_certificate,
    rank,
)


class TestRank:
    def test_identity(self):
        ident = [[1, 0, 0], [0, 1, 0], [0, 0, 1]]
        assert rank(ident) == 3

    def test_zero_matrix(self):
        assert rank([[0, 0, 0, 0], [0, 0, 0, 0]]) == 0

    def test_dependent_row(self):
        # row3 = row1 + row2
        assert rank([(1, 0, 1), (0, 1, 0), (1, 1, 1)]) == 2

    def test_empty(self):
        assert rank([]) == 0

    def test_fractions(self):
        m = [
            [Fraction(1, 2), Fraction(1, 3)],
            [Fraction(3, 2), Fraction(1, 1)],
        ]
        # second row = 3 * first row
        assert rank(m) == 1

    @given(
        st.lists(
            st.lists(st.integers(-5, 5), min_size=3, max_size=3),
            min_size=1,
            max_size=5,
        )
    )
    @settings(max_examples=60, deadline=None)
    def test_rank_equals_transpose_rank(self, rows):
        cols = [[row[j] for row in rows] for j in range(3)]
        assert rank(rows) == rank(cols)


class TestAffineDim:
    def test_empty(self):
        assert affine_dim([]) == -1

    def test_single_point(self):
        assert affine_dim([(3, 1, 4)]) == 0

    def test_triangle(self):
        assert affine_dim([(0, 0, 0), (1, 0, 0), (0, 1, 0)]) == 2

    def test_repeated_points(self):
        assert affine_dim([(1, 1), (1, 1), (1, 1)]) == 0

    def test_bell3_vertices_span_space(self):
        # the five stable sets of the 3-pair clash graph, as 0/1 vectors
        pts = [
            (0, 0, 0),
            (1, 0, 0),
            (0, 1, 0),
            (0, 0, 1),
            (1, 0, 1),
        ]
        assert affine_dim(pts) == 3


class TestLpFeasible:
    def test_one_var_positive(self):
        assert lp_feasible([[1]], [1]) is True

    def test_one_var_negative_rhs(self):
        assert lp_feasible([[1]], [-1]) is False

    def test_three_cols(self):
        lhs = [[1, 0, 1], [0, 1, 1]]
        assert lp_feasible(lhs, [2, 1]) is True

    def test_infeasible_sign_conflict(self):
        # x - x' ... actually: x1 = 1 and x1 = -1 cannot both hold
        lhs = [[1], [1]]
        assert lp_feasible(lhs, [1, -1]) is False

    def test_empty_system_zero_rhs(self):
        assert lp_feasible([[], []], [0, 0]) is True

    def test_empty_system_nonzero_rhs(self):
        assert lp_feasible([[], []], [0, 1]) is False

    def test_no_rows(self):
        assert lp_feasible([], []) is True

    def test_dimension_mismatch(self):
        with pytest.raises(ValueError):
            lp_feasible([[1, 2]], [1, 2])

    def test_certificate_substitutes(self):
        lhs = [[1, 0, 1], [0, 1, 1]]
        rhs = [2, 1]
        cert = nonnegative_certificate(lhs, rhs)
        assert cert is not None
        assert all(c >= 0 for c in cert)
        for row, want in zip(lhs, rhs):
            assert sum(c * x for c, x in zip(row, cert)) == want

    def test_certificate_none_when_infeasible(self):
        assert nonnegative_certificate([[1]], [-1]) is None

    def test_fractional_certificate(self):
        lhs = [[Fraction(1, 3)]]
        rhs = [Fraction(1, 2)]
        cert = nonnegative_certificate(lhs, rhs)
        assert cert == (Fraction(3, 2),)


def _scipy_feasible(lhs, rhs):
    from scipy.optimize import linprog

    cols = len(lhs[0]) if lhs else 0
    if cols == 0:
        return all(x == 0 for x in rhs)
    res = linprog(
        [0.0] * cols,
        A_eq=[[float(x) for x in row] for row in lhs],
        b_eq=[float(x) for x in rhs],
        bounds=[(0, None)] * cols,
        method="highs",
    )
    return res.status == 0


def test_feasibility_matches_scipy_on_random_systems():
    scipy = pytest.importorskip("scipy")  # noqa: F841
    rng = random.Random(20260816)
    agree = 0
    for _ in range(120):
        m = rng.randrange(1, 4)
        n = rng.randrange(1, 6)
        lhs = [[rng.randrange(-3, 4) for _ in range(n)] for _ in range(m)]
        rhs = [rng.randrange(-4, 5) for _ in range(m)]
        assert lp_feasible(lhs, rhs) == _scipy_feasible(lhs, rhs)
        agree += 1
    assert agree == 120
