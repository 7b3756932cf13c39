import pytest

from polyminor.binomials import MonomialOrder, generators
from polyminor.geometry import Cell, CellCollection, Interval, Point, Polyomino, complement
from polyminor.localization import (
    CornerTriple,
    construct_p_prime,
    corner_set,
    nonzerodivisor_check,
    localization_hypotheses,
    verify_localization,
)

FRAME_BOUNDING = Interval(Point(0, 0), Point(3, 3))
FRAME_HOLE = CellCollection([(1, 1)])

BIG_BOUNDING = Interval(Point(0, 0), Point(4, 4))
BIG_HOLE = CellCollection([(1, 1), (1, 2), (2, 1), (2, 2)])


class TestHypotheses:
    def test_frame_instance_clean(self):
        assert localization_hypotheses(FRAME_BOUNDING, FRAME_HOLE) == ()

    def test_not_contained(self):
        assert localization_hypotheses(
            Interval(Point(0, 0), Point(2, 2)), CellCollection([(5, 5)])
        ) == ("not_contained",)

    def test_inner_not_polyomino(self):
        inner = CellCollection([(1, 1), (3, 1)])
        assert localization_hypotheses(Interval(Point(0, 0), Point(5, 3)), inner) == (
            "inner_not_polyomino",
        )

    def test_inner_not_convex(self, u_pentomino):
        inner = u_pentomino.translate(1, 1)
        assert localization_hypotheses(Interval(Point(0, 0), Point(4, 5)), inner) == (
            "inner_not_convex",
        )

    def test_touches_boundary(self):
        inner = CellCollection([(0, 0)])
        assert localization_hypotheses(Interval(Point(0, 0), Point(2, 2)), inner) == (
            "touches_boundary",
        )

    def test_spanning_strip_touches_boundary(self):
        # the complement check is only reached once the border is clear
        inner = CellCollection([(1, 0), (1, 1)])
        got = localization_hypotheses(Interval(Point(0, 0), Point(3, 2)), inner)
        assert got == ("touches_boundary",)


class TestCornerSet:
    def test_frame_corners(self):
        triples = corner_set(FRAME_BOUNDING, FRAME_HOLE)
        assert triples == (
            CornerTriple(Point(1, 0), Point(0, 0), Point(1, 3)),
            CornerTriple(Point(1, 1), Point(0, 1), Point(1, 3)),
            CornerTriple(Point(1, 2), Point(0, 2), Point(1, 3)),
            CornerTriple(Point(2, 2), Point(0, 2), Point(2, 3)),
            CornerTriple(Point(3, 2), Point(0, 2), Point(3, 3)),
        )

    def test_big_frame_corner_count(self):
        triples = corner_set(BIG_BOUNDING, BIG_HOLE)
        assert [t.p for t in triples] == [
            Point(1, 0), Point(1, 1), Point(1, 2), Point(1, 3),
            Point(2, 3), Point(3, 3), Point(4, 3),
        ]

    def test_each_corner_rectangle_avoids_inner(self):
        ambient = complement(FRAME_BOUNDING, FRAME_HOLE)
        for t in corner_set(FRAME_BOUNDING, FRAME_HOLE):
            rect = Interval(t.r, t.q)
            assert all(c in ambient.cells for c in rect.cells())


class TestNonzerodivisor:
    def test_frame_corner_clears_initial_terms(self, frame):
        assert nonzerodivisor_check(frame)

    def test_fails_under_reversed_order(self, frame):
        # flipping the row comparison moves the corner into initial terms
        reversed_rows = MonomialOrder(
            "lex-rev", var_key=lambda v: (v.rank, (-v.key[0], v.key[1]))
        )
        assert not nonzerodivisor_check(frame, order=reversed_rows)

    def test_explicit_corner(self, frame):
        assert nonzerodivisor_check(frame, corner=Point(0, 3))


class TestConstructPPrime:
    def test_frame_shrinks_to_l_tromino(self):
        p_prime, ident = construct_p_prime(FRAME_BOUNDING, FRAME_HOLE)
        assert {(c.i, c.j) for c in p_prime} == {(1, 0), (2, 0), (2, 1)}
        assert ident.vertical == (
            (Point(0, 0), Point(1, 0)),
            (Point(0, 1), Point(1, 1)),
        )
        assert ident.horizontal == (
            (Point(2, 3), Point(2, 2)),
            (Point(3, 3), Point(3, 2)),
        )

    def test_identification_fixes_unlisted_points(self):
        _, ident = construct_p_prime(FRAME_BOUNDING, FRAME_HOLE)
        assert ident.apply(Point(2, 0)) == Point(2, 0)
        assert ident.apply(Point(0, 0)) == Point(1, 0)


class TestVerifyLocalization:
    def test_frame_report(self):
        report = verify_localization(FRAME_BOUNDING, FRAME_HOLE)
        assert report.hypothesis_violations == ()
        assert len(report.corner_triples) == 5
        assert {(c.i, c.j) for c in report.removed_cells} == {
            (0, 0), (0, 1), (0, 2), (1, 2), (2, 2),
        }
        assert {(c.i, c.j) for c in report.p_prime} == {(1, 0), (2, 0), (2, 1)}
        assert report.checks == {
            "nonzerodivisor": True,
            "p_prime_polyomino": True,
            "p_prime_simple": True,
            "ideal_correspondence": True,
        }
        assert report.all_checks_pass

    def test_surviving_generator_is_p_prime_generator(self, frame):
        # the minor over cell (2,0) is untouched by substitution and renaming
        report = verify_localization(FRAME_BOUNDING, FRAME_HOLE)
        p_prime_gens = set(generators(report.p_prime))
        untouched = [
            g for g in generators(frame)
            if g.vars() <= {v for h in p_prime_gens for v in h.vars()}
        ]
        assert untouched
        for g in untouched:
            assert g in p_prime_gens

    def test_big_frame_report(self):
        report = verify_localization(BIG_BOUNDING, BIG_HOLE)
        assert report.all_checks_pass
        assert len(report.corner_triples) == 7

    def test_violating_instance_skips_checks(self, u_pentomino):
        inner = u_pentomino.translate(1, 1)
        report = verify_localization(Interval(Point(0, 0), Point(4, 5)), inner)
        assert report.hypothesis_violations == ("inner_not_convex",)
        assert report.checks == {}
        assert not report.all_checks_pass

    def test_tall_hole_instance(self):
        bounding = Interval(Point(0, 0), Point(3, 4))
        inner = CellCollection([(1, 1), (1, 2)])
        report = verify_localization(bounding, inner)
        assert report.all_checks_pass
