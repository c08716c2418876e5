from fractions import Fraction

import pytest

from thompsonf import diagram as dg
from thompsonf.census import (
    ConvexityWitness,
    bfs_ball,
    convexity_witness,
    dead_end_census,
    folner_set,
    growth_reference_series,
    in_folner_set,
    iso_report,
    iso_ratio,
    iter_spheres,
    pocket_census,
    positive_growth_series,
    recurrence_start,
    trees_of_height,
    verify_convexity_witness,
    verify_length_formula,
)
from thompsonf.errors import BudgetExceeded, PreconditionError
from thompsonf.metric import WEIGHTS, word_length
from thompsonf.words import GENERATORS, X0, evaluate

# Sphere sizes of the Cayley graph, from the BFS below (frozen).
SPHERES = [1, 4, 12, 36, 108, 314, 906, 2576, 7280]


class TestBall:
    def test_tiny(self):
        assert len(bfs_ball(0)) == 1
        ball = bfs_ball(1)
        assert len(ball) == 5
        assert ball.distances[dg.identity()] == 0

    def test_sphere_sizes(self, ball8):
        assert ball8.sphere_sizes() == SPHERES
        assert len(ball8) == sum(SPHERES)

    def test_streaming_matches(self, ball8):
        assert [len(s) for _, s, _ in iter_spheres(8)] == SPHERES

    def test_every_element_has_a_parent(self, ball8):
        for f, d in ball8.distances.items():
            if d:
                assert any(ball8.distances.get(dg.apply_generator(s, f)) == d - 1 for s in GENERATORS)
            for s in GENERATORS:
                g = ball8.distances.get(dg.apply_generator(s, f))
                assert g is None or abs(g - d) == 1

    def test_serialization_keys(self):
        ball = bfs_ball(2)
        by_text = ball.by_serialization()
        assert by_text["*.\n*."] == 0
        assert by_text[". *.\n*. ."] == 1
        assert ball.sphere(1) == sorted(ball.sphere(1), key=dg.serialize)

    def test_budget(self):
        with pytest.raises(BudgetExceeded):
            bfs_ball(6, budget=100)

    def test_negative_radius(self):
        with pytest.raises(PreconditionError):
            bfs_ball(-1)


class TestLengthOracle:
    def test_radius5(self):
        assert verify_length_formula(5) == []

    def test_corrupted_table_is_caught(self, ball8):
        corrupted = dict(WEIGHTS)
        corrupted["R", "I"] = 1
        mismatches = verify_length_formula(ball8, corrupted)
        assert mismatches
        assert all(m.formula > m.distance for m in mismatches)


class TestGrowth:
    def test_reference_expansion(self):
        assert growth_reference_series(12) == [1, 2, 4, 9, 20, 45, 101, 227, 510, 1146, 2575, 5786, 13001]

    def test_enumeration_small(self):
        assert positive_growth_series(8) == growth_reference_series(8)

    def test_recurrence_start(self):
        assert recurrence_start(growth_reference_series(12)) == 3
        assert recurrence_start([1, 2, 4, 9, 0]) is None


class TestDeadEndCensus:
    def test_radius4(self):
        report = dead_end_census(4)
        assert report.ok
        assert report.dead_ends == []
        assert report.table().splitlines()[0] == "length count"

    def test_ball_and_radius_agree(self, ball8):
        a = dead_end_census(ball8)
        b = dead_end_census(8)
        assert a.counts == b.counts and a.ok and b.ok

    def test_no_three_pockets(self, ball8):
        assert pocket_census(ball8, 3) == []


class TestIsoperimetry:
    # |S| and boundary edge counts for n = 0..8 with height bound 2 (frozen).
    SIZES = [1, 3, 9, 24, 60, 147, 351, 821, 1896]
    BOUNDARIES = [4, 8, 20, 48, 108, 244, 552, 1234, 2740]

    def test_trees_of_height(self):
        assert len(trees_of_height(0)) == 1
        assert len(trees_of_height(1)) == 2
        assert len(trees_of_height(2)) == 5

    def test_identity_only(self):
        for k in range(3):
            assert iso_ratio(0, k) == 4

    def test_frozen_counts(self):
        for n in range(9):
            r = iso_report(n, 2)
            assert (r.size, r.boundary) == (self.SIZES[n], self.BOUNDARIES[n])
            assert 0 < r.ratio <= 4

    def test_membership_agrees_with_ball(self, ball8):
        # S(2, 2) has lengths at most 8, so the ball contains it.
        for n in range(3):
            assert folner_set(n, 2) == {f for f in ball8.distances if in_folner_set(f, n, 2)}

    def test_boundary_counts_undirected_edges(self):
        s = folner_set(4, 2)
        edges = set()
        for f in s:
            for g in GENERATORS:
                h = dg.apply_generator(g, f)
                if h not in s:
                    edges.add(frozenset((f, h)))
        assert len(edges) == iso_report(4, 2).boundary

    def test_trend(self):
        ratios = [iso_ratio(n, 2) for n in range(2, 9)]
        assert ratios[-1] < ratios[0]
        assert ratios == sorted(ratios, reverse=True)
        assert iso_ratio(8, 2) == Fraction(685, 474)

    def test_bad_bounds(self):
        with pytest.raises(PreconditionError):
            iso_ratio(-1, 2)


class TestConvexity:
    @pytest.mark.parametrize("n", [1, 2])
    def test_witness(self, n):
        w = convexity_witness(n)
        assert word_length(w.start) == word_length(w.end) == 2 * n + 2
        assert w.distance == 4 * n + 4
        assert word_length(dg.apply_generator(X0, w.start)) == 2 * n + 3
        assert verify_convexity_witness(w) == []

    def test_tampered_witness_is_rejected(self):
        w = convexity_witness(1)
        bad = ConvexityWitness(w.n, w.start, w.end, w.path[:-1], w.distance)
        assert verify_convexity_witness(bad)
        shifted = ConvexityWitness(w.n, evaluate("x1"), w.end, w.path, w.distance)
        assert verify_convexity_witness(shifted)

    def test_n_must_be_positive(self):
        with pytest.raises(PreconditionError):
            convexity_witness(0)
