"""Geometric side of the toolkit: LP adjacency oracle and facet machinery.

Vertices u, v of a polytope P fail to be adjacent exactly when u - v is a
nonnegative combination of the directions (w - v) over the other vertices
w, so adjacency reduces to exact LP infeasibility. Facets come from the
double description method run on the homogenization's dual cone, entirely
in integer arithmetic.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import gcd
from typing import Optional, Sequence

from .bitsets import bits
from .graphs import SimpleGraph, enumerate_max_cliques
from .linalg import affine_dim, lp_feasible
from .parallel import pair_chunks, worker_count
from .skeleton import Skeleton, ZeroOnePolytope


class SizeLimitError(ValueError):
    """Facet enumeration refused: input exceeds the configured caps."""


@dataclass(frozen=True)
class Inequality:
    """c . x <= rhs. Nonnegativity of x_v is stored as -x_v <= 0."""

    coeffs: tuple[Fraction, ...]
    rhs: Fraction

    def evaluate(self, mask: int) -> Fraction:
        return sum((self.coeffs[i] for i in bits(mask)), Fraction(0))

    def holds(self, mask: int) -> bool:
        return self.evaluate(mask) <= self.rhs

    def tight(self, mask: int) -> bool:
        return self.evaluate(mask) == self.rhs


def make_inequality(coeffs: Sequence, rhs) -> Inequality:
    return Inequality(tuple(Fraction(c) for c in coeffs), Fraction(rhs))


def nonnegativity(n: int, v: int) -> Inequality:
    if not 0 <= v < n:
        raise ValueError("coordinate out of range")
    coeffs = [Fraction(0)] * n
    coeffs[v] = Fraction(-1)
    return Inequality(tuple(coeffs), Fraction(0))


def clique_inequality(n: int, clique: int) -> Inequality:
    """sum of x_v over the clique <= 1."""
    if clique <= 0 or clique >> n:
        raise ValueError("clique mask must be a nonempty subset of the ground set")
    coeffs = [Fraction(0)] * n
    for v in bits(clique):
        coeffs[v] = Fraction(1)
    return Inequality(tuple(coeffs), Fraction(1))


def always_facet_inequalities(g: SimpleGraph) -> list[Inequality]:
    """Nonnegativity plus one clique inequality per maximal clique of g."""
    n = g.n
    out = [nonnegativity(n, v) for v in range(n)]
    out.extend(clique_inequality(n, c) for c in enumerate_max_cliques(g))
    return out


def normalized_int_form(q: Inequality) -> tuple[tuple[int, ...], int]:
    """Scale by a positive rational to primitive integers (gcd 1)."""
    vals = list(q.coeffs) + [q.rhs]
    mult = 1
    for v in vals:
        mult = mult * v.denominator // gcd(mult, v.denominator)
    ints = [int(v * mult) for v in vals]
    g = 0
    for v in ints:
        g = gcd(g, v)
    if g > 1:
        ints = [v // g for v in ints]
    return tuple(ints[:-1]), ints[-1]


def oracle_is_edge(
    p: ZeroOnePolytope, a: int, b: int, prefilter: bool = True
) -> bool:
    """Geometric adjacency of vertices a and b by exact LP.

    Non-adjacency is witnessed by a nonnegative solution of
    sum_k g_k (w_k - v_b) = v_a - v_b over the other vertices w_k; any
    such solution is automatically nonzero because v_a != v_b.

    With prefilter on, candidate columns are cut to vertices sandwiched
    between the intersection and the union of a and b, which any support
    of a witness must respect; the reported adjacency is unchanged.
    """
    nv = len(p.vertices)
    if not (0 <= a < nv and 0 <= b < nv):
        raise ValueError("vertex index out of range")
    if a == b:
        raise ValueError("edge test needs two distinct vertices")
    va, vb = p.vertices[a], p.vertices[b]
    if prefilter:
        inter, union = va & vb, va | vb
        cols = [
            w
            for k, w in enumerate(p.vertices)
            if k != a and k != b and w & inter == inter and not (w & ~union)
        ]
        coords = list(bits(va ^ vb))
    else:
        cols = [w for k, w in enumerate(p.vertices) if k != a and k != b]
        coords = list(range(p.n))
    if not cols:
        return True
    lhs = [
        [((w >> c) & 1) - ((vb >> c) & 1) for w in cols]
        for c in coords
    ]
    rhs = [((va >> c) & 1) - ((vb >> c) & 1) for c in coords]
    return not lp_feasible(lhs, rhs)


def build_skeleton_oracle(
    p: ZeroOnePolytope,
    threads: Optional[int] = None,
    prefilter: bool = True,
) -> Skeleton:
    """Skeleton under the LP adjacency oracle, all vertex pairs."""
    nv = len(p.vertices)

    def run(span: range) -> list[tuple[int, int]]:
        found = []
        for a in span:
            for b in range(a + 1, nv):
                if oracle_is_edge(p, a, b, prefilter=prefilter):
                    found.append((a, b))
        return found

    edges = pair_chunks(nv, run, worker_count(threads))
    return Skeleton.make(nv, edges, "oracle")


def is_valid(p: ZeroOnePolytope, q: Inequality) -> bool:
    """True iff every vertex of p satisfies q."""
    if len(q.coeffs) != p.n:
        raise ValueError("inequality dimension does not match the polytope")
    return all(q.holds(v) for v in p.vertices)


def polytope_dim(p: ZeroOnePolytope) -> int:
    return affine_dim([_vertex_row(v, p.n) for v in p.vertices])


def is_facet(p: ZeroOnePolytope, q: Inequality) -> bool:
    """True iff the face q cuts out has dimension dim(p) - 1.

    q must be valid for p; calling with an invalid inequality is a
    contract violation.
    """
    if not is_valid(p, q):
        raise ValueError("is_facet requires a valid inequality")
    tight = [_vertex_row(v, p.n) for v in p.vertices if q.tight(v)]
    return affine_dim(tight) == polytope_dim(p) - 1


def _vertex_row(v: int, n: int) -> list[int]:
    return [(v >> k) & 1 for k in range(n)]


def enumerate_facets(
    p: ZeroOnePolytope, vertex_cap: int = 150, dim_cap: int = 16
) -> list[Inequality]:
    """The complete irredundant facet list of a full-dimensional polytope.

    Double description on the dual cone of the homogenization: rays of
    {y : y . (1, w) >= 0 for all vertices w} are exactly the facets. All
    ray arithmetic stays in primitive integer vectors. Inputs beyond the
    caps are refused rather than attempted.
    """
    n = p.n
    nv = len(p.vertices)
    if nv > vertex_cap:
        raise SizeLimitError(
            f"{nv} vertices exceeds the facet enumeration cap of {vertex_cap}"
        )
    if n > dim_cap:
        raise SizeLimitError(
            f"ambient dimension {n} exceeds the facet enumeration cap of {dim_cap}"
        )
    if polytope_dim(p) != n:
        raise ValueError(
            "facet enumeration requires a full-dimensional polytope"
        )
    if n == 0:
        return []
    rows = [tuple([1] + _vertex_row(v, n)) for v in p.vertices]
    d = n + 1

    order = _initial_basis_order(rows, d)
    rays = _initial_rays([rows[i] for i in order[:d]], d)
    full = (1 << d) - 1
    tight = [full ^ (1 << j) for j in range(d)]

    for t in range(d, nv):
        row = rows[order[t]]
        vals = [_dot(row, r) for r in rays]
        minus = [k for k, v in enumerate(vals) if v < 0]
        if not minus:
            for k, v in enumerate(vals):
                if v == 0:
                    tight[k] |= 1 << t
            continue
        plus = [k for k, v in enumerate(vals) if v > 0]
        keep = [k for k, v in enumerate(vals) if v >= 0]
        new_rays: list[tuple[int, ...]] = []
        new_tight: list[int] = []
        for kp in plus:
            tp = tight[kp]
            vp = vals[kp]
            for km in minus:
                z = tp & tight[km]
                if not _adjacent(z, tight, kp, km):
                    continue
                vm = vals[km]
                vec = tuple(
                    vp * rm - vm * rp for rp, rm in zip(rays[kp], rays[km])
                )
                new_rays.append(_primitive(vec))
                new_tight.append(z | (1 << t))
        rays = [rays[k] for k in keep] + new_rays
        tight = [
            tight[k] | (1 << t) if vals[k] == 0 else tight[k] for k in keep
        ] + new_tight

    out = []
    for ray in rays:
        coeffs = tuple(Fraction(-c) for c in ray[1:])
        out.append(Inequality(coeffs, Fraction(ray[0])))
    out.sort(key=lambda q: (q.coeffs, q.rhs))
    return out


def _dot(a: Sequence[int], b: Sequence[int]) -> int:
    return sum(x * y for x, y in zip(a, b))


def _adjacent(z: int, tight: list[int], kp: int, km: int) -> bool:
    for k, ts in enumerate(tight):
        if k != kp and k != km and z & ts == z:
            return False
    return True


def _primitive(vec: Sequence[int]) -> tuple[int, ...]:
    g = 0
    for v in vec:
        g = gcd(g, v)
    if g > 1:
        return tuple(v // g for v in vec)
    return tuple(vec)


def _initial_basis_order(rows: list[tuple[int, ...]], d: int) -> list[int]:
    """Indices reordered so the first d rows are linearly independent."""
    elim: list[tuple[int, list[Fraction]]] = []
    chosen: list[int] = []
    for idx, row in enumerate(rows):
        vec = [Fraction(x) for x in row]
        for pc, er in elim:
            f = vec[pc]
            if f != 0:
                for j in range(pc, d):
                    vec[j] -= f * er[j]
        pivot = next((j for j in range(d) if vec[j] != 0), None)
        if pivot is None:
            continue
        pv = vec[pivot]
        elim.append((pivot, [x / pv for x in vec]))
        chosen.append(idx)
        if len(chosen) == d:
            break
    if len(chosen) < d:
        raise ValueError("vertex rows do not span; polytope not full-dimensional")
    rest = [i for i in range(len(rows)) if i not in set(chosen)]
    return chosen + rest


def _initial_rays(basis_rows: list[tuple[int, ...]], d: int) -> list[tuple[int, ...]]:
    """Primitive integer columns of the inverse of the basis-row matrix."""
    aug = [
        [Fraction(x) for x in row] + [Fraction(int(i == j)) for j in range(d)]
        for i, row in enumerate(basis_rows)
    ]
    for col in range(d):
        piv = next(i for i in range(col, d) if aug[i][col] != 0)
        aug[col], aug[piv] = aug[piv], aug[col]
        pv = aug[col][col]
        aug[col] = [x / pv for x in aug[col]]
        for i in range(d):
            if i != col and aug[i][col] != 0:
                f = aug[i][col]
                aug[i] = [x - f * y for x, y in zip(aug[i], aug[col])]
    rays = []
    for j in range(d):
        column = [aug[i][d + j] for i in range(d)]
        mult = 1
        for v in column:
            mult = mult * v.denominator // gcd(mult, v.denominator)
        rays.append(_primitive([int(v * mult) for v in column]))
    return rays


def classify_inequality(
    q: Inequality, graph: Optional[SimpleGraph] = None
) -> str:
    """One of "nonnegativity", "clique", "other" (normalized form decides)."""
    coeffs, rhs = normalized_int_form(q)
    if rhs == 0 and sum(c != 0 for c in coeffs) == 1 and min(coeffs) == -1:
        return "nonnegativity"
    if rhs == 1 and all(c in (0, 1) for c in coeffs) and any(coeffs):
        support = [i for i, c in enumerate(coeffs) if c == 1]
        if graph is None:
            return "clique"
        if all(
            graph.has_edge(u, v)
            for x, u in enumerate(support)
            for v in support[x + 1 :]
        ):
            return "clique"
    return "other"
