"""Tests for exact sparse linear algebra."""

from cyclotomic import CycNum, root_of_unity
from linalg import Echelon, nullspace, rank


def row(**entries):
    return {key: CycNum.coerce(value) for key, value in entries.items()}


class TestEchelon:
    """Tests for the incremental reduced echelon basis."""

    def test_rank_grows_only_on_new_directions(self):
        echelon = Echelon()
        assert echelon.add(row(a=1, b=2))
        assert echelon.add(row(b=1))
        assert not echelon.add(row(a=3, b=-1))
        assert echelon.rank == 2

    def test_basis_is_reduced(self):
        echelon = Echelon().extend([row(a=2, b=4, c=2), row(b=1, c=1)])
        assert echelon.rows() == [row(a=1, c=-1), row(b=1, c=1)]

    def test_basis_depends_only_on_span(self):
        first = Echelon().extend([row(a=1, b=1), row(a=1, b=-1)])
        second = Echelon().extend([row(b=3), row(a=-2)])
        assert first.rows() == second.rows()

    def test_contains(self):
        zeta = root_of_unity(1, 3)
        echelon = Echelon().extend([{"a": zeta, "b": CycNum.rational(1)}])
        assert echelon.contains({"a": CycNum.rational(1), "b": zeta.inv()})
        assert not echelon.contains(row(a=1))

    def test_custom_order_picks_pivot(self):
        echelon = Echelon(order=lambda key: -ord(key))
        echelon.add(row(a=1, b=1))
        assert echelon.pivots() == ["b"]


class TestNullspace:
    """Tests for nullspace and rank."""

    def test_one_vector_per_free_column(self):
        vectors = nullspace([row_of(1, 1, 0), row_of(0, 0, 1)], 3)
        assert len(vectors) == 1
        assert vectors[0] == {1: CycNum.rational(1), 0: CycNum.rational(-1)}

    def test_no_constraints(self):
        assert len(nullspace([], 2)) == 2

    def test_rank(self):
        one, zero = CycNum.rational(1), CycNum.rational(0)
        assert rank([[one, one], [one, one]]) == 1
        assert rank([[one, zero], [zero, root_of_unity(1, 4)]]) == 2


def row_of(*values):
    return {j: CycNum.rational(v) for j, v in enumerate(values) if v}
