import pytest

from polyminor.enumeration import MAX_ENUMERATION_CELLS, enumerate_polyominoes
from polyminor.geometry import Polyomino, is_simple

from oracles import naive_fixed_polyominoes

KNOWN_COUNTS = {1: 1, 2: 2, 3: 6, 4: 19, 5: 63, 6: 216}


class TestCounts:
    @pytest.mark.parametrize("n,count", sorted(KNOWN_COUNTS.items()))
    def test_fixed_counts(self, n, count):
        assert len(enumerate_polyominoes(n)) == count

    @pytest.mark.parametrize("n", [1, 2, 3, 4, 5])
    def test_matches_brute_force_oracle(self, n):
        got = {frozenset((c.i, c.j) for c in p) for p in enumerate_polyominoes(n)}
        assert got == naive_fixed_polyominoes(n)


class TestShape:
    def test_all_normalized(self):
        for p in enumerate_polyominoes(4):
            assert min(c.i for c in p) == 0
            assert min(c.j for c in p) == 0

    def test_all_valid_polyominoes(self):
        for p in enumerate_polyominoes(5):
            assert isinstance(p, Polyomino)
            assert len(p) == 5

    def test_no_duplicates(self):
        shapes = enumerate_polyominoes(5)
        assert len({p.canonical_key() for p in shapes}) == len(shapes)

    def test_canonical_order_stable(self):
        assert enumerate_polyominoes(4) == enumerate_polyominoes(4)

    def test_no_holes_below_eight_cells(self):
        # enclosing a cell takes at least eight neighbors
        for n in range(1, 7):
            assert all(is_simple(p) for p in enumerate_polyominoes(n))


class TestBounds:
    def test_rejects_zero(self):
        with pytest.raises(ValueError):
            enumerate_polyominoes(0)

    def test_rejects_above_cap(self):
        with pytest.raises(ValueError):
            enumerate_polyominoes(MAX_ENUMERATION_CELLS + 1)
