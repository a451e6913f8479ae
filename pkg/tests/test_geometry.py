"""LP adjacency oracle, validity/facet checks, facet enumeration.

The double-description output is certified three independent ways: each
output passes is_valid + is_facet, the inequalities cut the 0/1 cube down
to exactly the vertex set, and small cases match Qhull's floating hull.
"""

import random
from fractions import Fraction

import pytest

from sspkit.families import (
    build_bell_graph,
    build_complete_graph,
    build_empty_graph,
    build_noncrossing_graph,
    build_nonnesting_graph,
)
from sspkit.geometry import (
    SizeLimitError,
    always_facet_inequalities,
    build_skeleton_oracle,
    classify_inequality,
    clique_inequality,
    enumerate_facets,
    is_facet,
    is_valid,
    make_inequality,
    nonnegativity,
    normalized_int_form,
    oracle_is_edge,
    polytope_dim,
)
from sspkit.graphs import SimpleGraph, enumerate_max_cliques
from sspkit.skeleton import ZeroOnePolytope, build_skeleton_E
from sspkit.verify import random_graph


def path3_polytope():
    g = SimpleGraph.from_edges([1, 2, 3], [(1, 2), (2, 3)])
    return g, ZeroOnePolytope.from_graph(g)


class TestOracle:
    def test_prefilter_matches_full_lp(self):
        rng = random.Random(11)
        for _ in range(12):
            g = random_graph(rng, 5)
            p = ZeroOnePolytope.from_graph(g)
            k = len(p.vertices)
            for i in range(k):
                for j in range(i + 1, k):
                    assert oracle_is_edge(p, i, j, prefilter=True) == \
                        oracle_is_edge(p, i, j, prefilter=False)

    def test_oracle_skeleton_provenance(self):
        _, p = path3_polytope()
        s = build_skeleton_oracle(p)
        assert s.provenance == "oracle"

    def test_rejects_same_vertex(self):
        _, p = path3_polytope()
        with pytest.raises(ValueError):
            oracle_is_edge(p, 2, 2)


class TestInequality:
    def test_evaluate_and_tight(self):
        q = make_inequality([1, 2, 0], 3)
        assert q.evaluate(0b011) == 3
        assert q.tight(0b011)
        assert q.holds(0b001)
        assert not q.holds(0b010) or q.evaluate(0b010) <= 3

    def test_nonnegativity_form(self):
        q = nonnegativity(3, 1)
        assert q.coeffs == (Fraction(0), Fraction(-1), Fraction(0))
        assert q.rhs == 0

    def test_clique_inequality_form(self):
        q = clique_inequality(3, 0b101)
        assert q.coeffs == (Fraction(1), Fraction(0), Fraction(1))
        assert q.rhs == 1

    def test_normalized_int_form_clears_denominators(self):
        q = make_inequality([Fraction(1, 2), Fraction(1, 3)], Fraction(5, 6))
        assert normalized_int_form(q) == ((3, 2), 5)

    def test_normalized_int_form_zero_row_total(self):
        assert normalized_int_form(make_inequality([0, 0], 1)) == ((0, 0), 1)
        assert normalized_int_form(make_inequality([0, 0], 0)) == ((0, 0), 0)


class TestValidityAndFacets:
    def test_nonnegativity_is_facet_on_path3(self):
        g, p = path3_polytope()
        assert is_facet(p, nonnegativity(3, 1))

    def test_valid_but_not_facet(self):
        g, p = path3_polytope()
        q = make_inequality([1, 1, 1], 2)
        assert is_valid(p, q)
        # only {1,3} is tight: affine dimension 0, needs 2
        assert not is_facet(p, q)

    def test_invalid_inequality_rejected_by_is_facet(self):
        g, p = path3_polytope()
        with pytest.raises(ValueError):
            is_facet(p, make_inequality([1, 1, 1], 1))

    def test_always_facets_all_pass(self):
        rng = random.Random(23)
        for _ in range(10):
            g = random_graph(rng, 5)
            p = ZeroOnePolytope.from_graph(g)
            qs = always_facet_inequalities(g)
            assert len(qs) == g.n + len(enumerate_max_cliques(g))
            for q in qs:
                assert is_valid(p, q)
                assert is_facet(p, q)

    def test_polytope_dim_full_for_stable_set(self):
        g, p = path3_polytope()
        assert polytope_dim(p) == 3


class TestEnumerateFacets:
    def test_simplex(self):
        p = ZeroOnePolytope.from_graph(build_complete_graph(3))
        facets = enumerate_facets(p)
        assert len(facets) == 4
        forms = {normalized_int_form(q) for q in facets}
        assert ((1, 1, 1), 1) in forms
        assert ((0, -1, 0), 0) in forms

    def test_cube(self):
        p = ZeroOnePolytope.from_graph(build_empty_graph(3))
        facets = enumerate_facets(p)
        assert len(facets) == 6

    def test_bell3_euler(self):
        p = ZeroOnePolytope.from_graph(build_bell_graph(3))
        facets = enumerate_facets(p)
        edges = build_skeleton_E(p).edges
        assert len(p.vertices) - len(edges) + len(facets) == 2
        assert len(facets) == 5
        forms = {normalized_int_form(q) for q in facets}
        assert ((1, 1, 0), 1) in forms  # shared-row pair
        assert ((0, 1, 1), 1) in forms  # shared-column pair

    def test_output_is_sorted_and_deterministic(self):
        p = ZeroOnePolytope.from_graph(build_bell_graph(3))
        a = enumerate_facets(p)
        b = enumerate_facets(p)
        assert a == b
        assert a == sorted(a, key=lambda q: (q.coeffs, q.rhs))

    def test_feedback_invariant_small(self):
        rng = random.Random(7)
        for _ in range(8):
            g = random_graph(rng, 5)
            p = ZeroOnePolytope.from_graph(g)
            facets = enumerate_facets(p)
            sat = [
                m
                for m in range(1 << g.n)
                if all(q.holds(m) for q in facets)
            ]
            assert sorted(sat) == sorted(p.vertices)

    def test_vertex_cap(self):
        p = ZeroOnePolytope.from_graph(build_empty_graph(3))
        with pytest.raises(SizeLimitError):
            enumerate_facets(p, vertex_cap=4)

    def test_dim_cap(self):
        p = ZeroOnePolytope.from_graph(build_empty_graph(3))
        with pytest.raises(SizeLimitError):
            enumerate_facets(p, dim_cap=2)

    def test_low_dimensional_input_refused(self):
        g = build_empty_graph(2)
        p = ZeroOnePolytope.raw(g.ground, [0b00, 0b11])
        with pytest.raises(ValueError):
            enumerate_facets(p)

    def test_matches_qhull_on_small_cases(self):
        pytest.importorskip("scipy")
        import numpy as np
        from scipy.spatial import ConvexHull

        for build, n in ((build_bell_graph, 3), (build_nonnesting_graph, 4)):
            p = ZeroOnePolytope.from_graph(build(n))
            d = len(p.ground)
            pts = np.array(
                [[float(v >> i & 1) for i in range(d)] for v in p.vertices]
            )
            hull = ConvexHull(pts)
            seen = set()
            for row in hull.equations:
                a, b = row[:-1], -row[-1]
                scale = max(abs(x) for x in a)
                seen.add(
                    tuple(round(x / scale, 6) for x in a)
                    + (round(b / scale, 6),)
                )
            assert len(enumerate_facets(p)) == len(seen)


class TestNoncrossing6Facet:
    """The one facet of the 132-vertex noncrossing polytope beyond the
    nonnegativity and clique families: at most two arcs spanning distance
    two or more."""

    def setup_method(self):
        self.g = build_noncrossing_graph(6)
        self.p = ZeroOnePolytope.from_graph(self.g)

    def extra_inequality(self):
        gs = self.p.ground
        coeffs = [1 if j - i >= 2 else 0 for (i, j) in gs.labels]
        return make_inequality(coeffs, 2)

    def test_valid_facet(self):
        q = self.extra_inequality()
        assert is_valid(self.p, q)
        assert is_facet(self.p, q)
        assert classify_inequality(q, self.g) == "other"

    def test_three_long_arcs_impossible(self):
        # the inequality says: no noncrossing partition of 6 carries three
        # arcs of span >= 2; check against the whole vertex set
        q = self.extra_inequality()
        assert max(q.evaluate(v) for v in self.p.vertices) == 2

    def test_consecutive_arc_variant_is_not_valid(self):
        # swapping in consecutive arcs (2,3),(4,5),(5,6) for (1,4),(3,5),(3,6)
        # produces a ten-term inequality that an actual vertex violates
        gs = self.p.ground
        terms = [
            (1, 3), (1, 5), (1, 6), (2, 3), (2, 4),
            (2, 5), (2, 6), (4, 5), (4, 6), (5, 6),
        ]
        coeffs = [0] * 15
        for t in terms:
            coeffs[gs.index(t)] = 1
        q = make_inequality(coeffs, 2)
        witness = gs.mask_of([(1, 3), (4, 5), (5, 6)])
        assert witness in self.p.index
        assert q.evaluate(witness) == 3
        assert not is_valid(self.p, q)


class TestClassify:
    def test_nonnegativity(self):
        g, p = path3_polytope()
        assert classify_inequality(nonnegativity(3, 0), g) == "nonnegativity"

    def test_clique(self):
        g, p = path3_polytope()
        assert classify_inequality(clique_inequality(3, 0b011), g) == "clique"

    def test_other(self):
        g, p = path3_polytope()
        q = make_inequality([1, 1, 1], 2)
        assert classify_inequality(q, g) == "other"
