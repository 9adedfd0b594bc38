"""Exact sparse linear algebra over cyclotomic numbers."""

from typing import Callable, Dict, Hashable, Iterable, List, Optional, Sequence

from cyclotomic import CycNum, ONE


SparseRow = Dict[Hashable, CycNum]


def _axpy(target: SparseRow, scale: CycNum, row: SparseRow) -> None:
    """target -= scale * row, in place, dropping zeros."""
    for key, value in row.items():
        updated = target.get(key, None)
        updated = -(scale * value) if updated is None else updated - scale * value
        if updated.is_zero():
            target.pop(key, None)
        else:
            target[key] = updated


class Echelon:
    """
    Incrementally maintained reduced row echelon basis of a span.

    Rows are sparse dicts. The pivot of a row is its first key under
    `order` (smallest sort key). Every stored row has pivot coefficient 1 and
    no other stored row mentions that pivot, so the stored basis depends only
    on the span and on `order`.
    """

    def __init__(self, order: Optional[Callable[[Hashable], object]] = None):
        self._order = order if order is not None else (lambda key: key)
        self._rows: Dict[Hashable, SparseRow] = {}

    @property
    def rank(self) -> int:
        return len(self._rows)

    def pivot(self, row: SparseRow) -> Hashable:
        return min(row, key=self._order)

    def reduce(self, row: SparseRow) -> SparseRow:
        """Return row minus its projection onto the stored pivots."""
        result = {k: v for k, v in row.items() if not v.is_zero()}
        for key in [k for k in result if k in self._rows]:
            coefficient = result.get(key)
            if coefficient is not None:
                _axpy(result, coefficient, self._rows[key])
        return result

    def contains(self, row: SparseRow) -> bool:
        return not self.reduce(row)

    def add(self, row: SparseRow) -> bool:
        """
        Add a row to the span.

        Returns:
            True if the rank went up
        """
        reduced = self.reduce(row)
        if not reduced:
            return False
        pivot = self.pivot(reduced)
        lead = reduced[pivot]
        if lead != ONE:
            scale = lead.inv()
            reduced = {k: v * scale for k, v in reduced.items()}
        for other in self._rows.values():
            coefficient = other.get(pivot)
            if coefficient is not None:
                _axpy(other, coefficient, reduced)
        self._rows[pivot] = reduced
        return True

    def extend(self, rows: Iterable[SparseRow]) -> "Echelon":
        for row in rows:
            self.add(row)
        return self

    def pivots(self) -> List[Hashable]:
        return sorted(self._rows, key=self._order)

    def rows(self) -> List[SparseRow]:
        """Stored rows sorted by pivot."""
        return [dict(self._rows[p]) for p in self.pivots()]


def nullspace(rows: Iterable[SparseRow], ncols: int) -> List[Dict[int, CycNum]]:
    """
    Basis of {x : row . x = 0 for every row}, columns indexed 0..ncols-1.

    One basis vector per free column, in increasing column order.
    """
    echelon = Echelon()
    echelon.extend(rows)
    pivot_rows = {p: echelon._rows[p] for p in echelon.pivots()}
    basis = []
    for free in range(ncols):
        if free in pivot_rows:
            continue
        vector = {free: ONE}
        for pivot, row in pivot_rows.items():
            entry = row.get(free)
            if entry is not None:
                vector[pivot] = -entry
        basis.append(vector)
    return basis


def rank(matrix: Sequence[Sequence[CycNum]]) -> int:
    """Rank of a dense matrix."""
    echelon = Echelon()
    for row in matrix:
        echelon.add({j: v for j, v in enumerate(row) if not v.is_zero()})
    return echelon.rank
