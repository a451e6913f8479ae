"""Exact rational linear algebra: rank, affine dimension, LP feasibility.

Every geometric decision downstream (adjacency oracle, facet tests) is a
yes/no question, so this module works over fractions.Fraction throughout
and never touches floating point.
"""

from __future__ import annotations

from fractions import Fraction
from typing import Optional, Sequence, Union

Scalar = Union[int, Fraction]
Vector = Sequence[Scalar]
Matrix = Sequence[Vector]


class PivotLimitError(RuntimeError):
    """Simplex exceeded its pivot cap.

    Bland's rule cannot cycle, so reaching the cap indicates a bug, not an
    unlucky instance; callers should treat this as a hard failure.
    """


def _as_rows(matrix: Matrix) -> list[list[Fraction]]:
    rows = [[Fraction(x) for x in row] for row in matrix]
    if rows:
        width = len(rows[0])
        for row in rows:
            if len(row) != width:
                raise ValueError("ragged matrix")
    return rows


def rank(matrix: Matrix) -> int:
    """Rank over the rationals, by Gaussian elimination."""
    rows = _as_rows(matrix)
    if not rows:
        return 0
    m, n = len(rows), len(rows[0])
    r = 0
    for col in range(n):
        pivot = next((i for i in range(r, m) if rows[i][col] != 0), None)
        if pivot is None:
            continue
        rows[r], rows[pivot] = rows[pivot], rows[r]
        prow = rows[r]
        pval = prow[col]
        for i in range(r + 1, m):
            f = rows[i][col]
            if f != 0:
                f = f / pval
                ri = rows[i]
                for j in range(col, n):
                    ri[j] -= f * prow[j]
        r += 1
        if r == m:
            break
    return r


def affine_dim(points: Sequence[Vector]) -> int:
    """Dimension of the affine span of the points; -1 when there are none."""
    pts = [[Fraction(x) for x in p] for p in points]
    if not pts:
        return -1
    width = len(pts[0])
    for p in pts:
        if len(p) != width:
            raise ValueError("points of mixed dimension")
    base = pts[0]
    diffs = [[x - b for x, b in zip(p, base)] for p in pts[1:]]
    return rank(diffs)


def nonnegative_certificate(
    eq_lhs: Matrix,
    eq_rhs: Vector,
    pivot_cap: Optional[int] = None,
) -> Optional[tuple[Fraction, ...]]:
    """A vector g >= 0 with eq_lhs @ g == eq_rhs, or None if none exists.

    Phase-one simplex with Bland's smallest-index anti-cycling rule, exact
    arithmetic. A system with zero columns is feasible only for a zero
    right-hand side; a system with zero rows is trivially feasible.
    """
    rows = _as_rows(eq_lhs)
    b = [Fraction(x) for x in eq_rhs]
    if len(rows) != len(b):
        raise ValueError(
            f"lhs has {len(rows)} rows but rhs has {len(b)} entries"
        )
    m = len(rows)
    n = len(rows[0]) if rows else 0
    if n == 0:
        return () if all(x == 0 for x in b) else None
    if m == 0:
        return (Fraction(0),) * n

    # Tableau columns: n structural, m artificial, then the rhs. Rows are
    # sign-flipped so the rhs is nonnegative and the artificial basis is
    # feasible from the start.
    zero = Fraction(0)
    tab: list[list[Fraction]] = []
    for i in range(m):
        sign = -1 if b[i] < 0 else 1
        row = [sign * x for x in rows[i]]
        row.extend(Fraction(1) if k == i else zero for k in range(m))
        row.append(sign * b[i])
        tab.append(row)
    basis = [n + i for i in range(m)]

    # Phase-one objective: minimize the artificial sum. With the artificial
    # basis, the reduced-cost row is the column sum of the constraint rows;
    # pivoting keeps it current. z[-1] is the current objective value.
    width = n + m + 1
    z = [sum(tab[i][j] for i in range(m)) for j in range(width)]

    cap = pivot_cap if pivot_cap is not None else 1000 + 50 * (m + n) * (m + n)
    pivots = 0
    while True:
        enter = next((j for j in range(n) if z[j] > 0), None)
        if enter is None:
            break
        leave = None
        best_ratio = None
        best_var = None
        for i in range(m):
            a = tab[i][enter]
            if a > 0:
                ratio = tab[i][-1] / a
                if (
                    best_ratio is None
                    or ratio < best_ratio
                    or (ratio == best_ratio and basis[i] < best_var)
                ):
                    best_ratio, best_var, leave = ratio, basis[i], i
        if leave is None:
            raise AssertionError(
                "phase-one objective unbounded; input invariants violated"
            )
        prow = tab[leave]
        pval = prow[enter]
        if pval != 1:
            for j in range(width):
                prow[j] /= pval
        for row in tab:
            if row is prow:
                continue
            f = row[enter]
            if f != 0:
                for j in range(width):
                    row[j] -= f * prow[j]
        f = z[enter]
        if f != 0:
            for j in range(width):
                z[j] -= f * prow[j]
        basis[leave] = enter
        pivots += 1
        if pivots > cap:
            raise PivotLimitError(
                f"simplex exceeded {cap} pivots on a {m}x{n} system"
            )

    if z[-1] != 0:
        return None
    x = [zero] * n
    for i, bv in enumerate(basis):
        if bv < n:
            x[bv] = tab[i][-1]
    return tuple(x)


def lp_feasible(
    eq_lhs: Matrix, eq_rhs: Vector, pivot_cap: Optional[int] = None
) -> bool:
    """True iff {g >= 0 : eq_lhs @ g == eq_rhs} is nonempty."""
    return nonnegative_certificate(eq_lhs, eq_rhs, pivot_cap) is not None
