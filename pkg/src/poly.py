"""
Sparse multivariate polynomials over cyclotomic numbers.

Conjugate coordinates (z and zb) are independent variables tied together by
a pairing in the VarTable. Group elements act on polynomials by
substitution, (g.u)(x) = u(g x): this is a right action, so
(p o L1) o L2 == p o (L2 @ L1).
"""

from dataclasses import dataclass
from fractions import Fraction
from typing import Dict, Iterable, List, Optional, Sequence, Tuple, Union

from sympy.polys.orderings import grlex

from cyclotomic import CycNum, ONE, Rational
from linalg import rank


Monomial = Tuple[int, ...]
Scalar = Union[CycNum, Rational]


def monomial_rank(monomial: Monomial):
    """Sort key putting graded-lex larger monomials first."""
    degree, exponents = grlex(monomial)
    return (-degree, tuple(-e for e in exponents))


@dataclass(frozen=True)
class VarTable:
    """
    Ordered variable names plus the conjugate pairing.

    partner[i] == i marks a real variable; otherwise partner is an
    involution with partner[partner[i]] == i.
    """
    names: Tuple[str, ...]
    partner: Tuple[int, ...]

    def __post_init__(self):
        if len(set(self.names)) != len(self.names):
            raise ValueError(f"duplicate variable names in {self.names}")
        if len(self.partner) != len(self.names):
            raise ValueError("conjugate pairing must cover every variable")
        for i, j in enumerate(self.partner):
            if not 0 <= j < len(self.names) or self.partner[j] != i:
                raise ValueError(f"conjugate pairing is not an involution at {self.names[i]}")

    @classmethod
    def build(cls, variables: Sequence[Tuple[str, Optional[str]]]) -> "VarTable":
        """
        Build from (name, conjugate_name) entries; each paired entry declares
        both names, the conjugate placed right after its partner.
        """
        names: List[str] = []
        partner: List[int] = []
        for name, conjugate in variables:
            i = len(names)
            names.append(name)
            if conjugate is None:
                partner.append(i)
            else:
                names.append(conjugate)
                partner.extend([i + 1, i])
        return cls(tuple(names), tuple(partner))

    @classmethod
    def real(cls, *names: str) -> "VarTable":
        return cls(tuple(names), tuple(range(len(names))))

    def __len__(self) -> int:
        return len(self.names)

    def index(self, name: str) -> int:
        try:
            return self.names.index(name)
        except ValueError:
            raise KeyError(name) from None

    def is_paired(self, i: int) -> bool:
        return self.partner[i] != i


class Poly:
    """
    Immutable sparse polynomial: a map from exponent vectors to nonzero
    CycNum coefficients over a fixed VarTable.
    """

    __slots__ = ("table", "_terms")

    def __init__(self, table: VarTable, terms: Optional[Dict[Monomial, CycNum]] = None):
        self.table = table
        cleaned = {}
        for monomial, coefficient in (terms or {}).items():
            if len(monomial) != len(table):
                raise ValueError(f"exponent vector {monomial} does not match {len(table)} variables")
            coefficient = CycNum.coerce(coefficient)
            if not coefficient.is_zero():
                cleaned[tuple(monomial)] = coefficient
        self._terms = cleaned

    # -- construction -------------------------------------------------------

    @classmethod
    def zero(cls, table: VarTable) -> "Poly":
        return cls(table)

    @classmethod
    def constant(cls, table: VarTable, value: Scalar) -> "Poly":
        return cls(table, {(0,) * len(table): CycNum.coerce(value)})

    @classmethod
    def monomial(cls, table: VarTable, exponents: Monomial, coefficient: Scalar = 1) -> "Poly":
        return cls(table, {tuple(exponents): CycNum.coerce(coefficient)})

    @classmethod
    def variable(cls, table: VarTable, name_or_index: Union[str, int]) -> "Poly":
        i = name_or_index if isinstance(name_or_index, int) else table.index(name_or_index)
        exponents = [0] * len(table)
        exponents[i] = 1
        return cls.monomial(table, tuple(exponents))

    def _lift(self, other) -> "Poly":
        if isinstance(other, Poly):
            if other.table != self.table:
                raise ValueError("polynomials live over different variable tables")
            return other
        return Poly.constant(self.table, CycNum.coerce(other))

    # -- inspection ---------------------------------------------------------

    def items(self) -> List[Tuple[Monomial, CycNum]]:
        """Terms in descending graded-lex order."""
        return sorted(self._terms.items(), key=lambda item: monomial_rank(item[0]))

    def monomials(self) -> List[Monomial]:
        return [m for m, _ in self.items()]

    def coefficient(self, monomial: Monomial) -> CycNum:
        return self._terms.get(tuple(monomial), CycNum.rational(0))

    def as_dict(self) -> Dict[Monomial, CycNum]:
        return dict(self._terms)

    def __len__(self) -> int:
        return len(self._terms)

    def is_zero(self) -> bool:
        return not self._terms

    def is_constant(self) -> bool:
        return all(not any(m) for m in self._terms)

    def degree(self) -> int:
        """Total degree; -1 for the zero polynomial."""
        return max((sum(m) for m in self._terms), default=-1)

    def is_homogeneous(self) -> bool:
        return len({sum(m) for m in self._terms}) <= 1

    def leading_monomial(self) -> Monomial:
        if not self._terms:
            raise ValueError("the zero polynomial has no leading monomial")
        return min(self._terms, key=monomial_rank)

    def leading_coefficient(self) -> CycNum:
        return self._terms[self.leading_monomial()]

    # -- grading ------------------------------------------------------------

    def grade_truncate(self, d: int) -> "Poly":
        return Poly(self.table, {m: c for m, c in self._terms.items() if sum(m) <= d})

    def homogeneous_component(self, d: int) -> "Poly":
        return Poly(self.table, {m: c for m, c in self._terms.items() if sum(m) == d})

    def homogeneous_components(self) -> Dict[int, "Poly"]:
        return {d: self.homogeneous_component(d) for d in sorted({sum(m) for m in self._terms})}

    # -- ring operations ----------------------------------------------------

    def __add__(self, other) -> "Poly":
        try:
            other = self._lift(other)
        except TypeError:
            return NotImplemented
        terms = dict(self._terms)
        for monomial, coefficient in other._terms.items():
            if monomial in terms:
                terms[monomial] = terms[monomial] + coefficient
            else:
                terms[monomial] = coefficient
        return Poly(self.table, terms)

    __radd__ = __add__

    def __neg__(self) -> "Poly":
        return Poly(self.table, {m: -c for m, c in self._terms.items()})

    def __sub__(self, other) -> "Poly":
        try:
            other = self._lift(other)
        except TypeError:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other) -> "Poly":
        return (-self) + other

    def scale(self, factor: Scalar) -> "Poly":
        factor = CycNum.coerce(factor)
        return Poly(self.table, {m: c * factor for m, c in self._terms.items()})

    def __mul__(self, other) -> "Poly":
        if isinstance(other, (CycNum, int, Fraction)):
            return self.scale(other)
        try:
            other = self._lift(other)
        except TypeError:
            return NotImplemented
        terms: Dict[Monomial, CycNum] = {}
        for m1, c1 in self._terms.items():
            for m2, c2 in other._terms.items():
                monomial = tuple(a + b for a, b in zip(m1, m2))
                product = c1 * c2
                if monomial in terms:
                    terms[monomial] = terms[monomial] + product
                else:
                    terms[monomial] = product
        return Poly(self.table, terms)

    __rmul__ = __mul__

    def __pow__(self, exponent: int) -> "Poly":
        if exponent < 0:
            raise ValueError("polynomial powers need a natural exponent")
        result = Poly.constant(self.table, ONE)
        base = self
        while exponent:
            if exponent & 1:
                result = result * base
            base = base * base
            exponent >>= 1
        return result

    # -- structure maps -----------------------------------------------------

    def conjugate(self) -> "Poly":
        """Conjugate coefficients and swap the exponents of paired variables."""
        partner = self.table.partner
        terms = {}
        for monomial, coefficient in self._terms.items():
            swapped = [0] * len(monomial)
            for i, e in enumerate(monomial):
                swapped[partner[i]] = e
            terms[tuple(swapped)] = coefficient.conj()
        return Poly(self.table, terms)

    def compose(self, images: Sequence["Poly"], table: Optional[VarTable] = None) -> "Poly":
        """
        Substitute images[i] for variable i.

        Args:
            images: One polynomial per variable, all over the same table
            table: Target table; required when there are no variables
        """
        if len(images) != len(self.table):
            raise ValueError(f"expected {len(self.table)} images, got {len(images)}")
        target = table if table is not None else images[0].table
        powers: List[List[Poly]] = [[Poly.constant(target, ONE)] for _ in images]
        result = Poly.zero(target)
        for monomial, coefficient in self._terms.items():
            term = Poly.constant(target, coefficient)
            for i, e in enumerate(monomial):
                if e:
                    cache = powers[i]
                    while len(cache) <= e:
                        cache.append(cache[-1] * images[i])
                    term = term * cache[e]
            result = result + term
        return result

    # -- comparison ---------------------------------------------------------

    def __eq__(self, other) -> bool:
        if isinstance(other, Poly):
            return self.table == other.table and self._terms == other._terms
        try:
            return self == self._lift(other)
        except TypeError:
            return NotImplemented

    def __hash__(self) -> int:
        return hash(frozenset(self._terms.items()))

    def __str__(self) -> str:
        from expr_parser import print_poly
        return print_poly(self)

    def __repr__(self) -> str:
        return f"Poly({self})"


@dataclass(frozen=True)
class LinearMap:
    """
    A linear change of coordinates. Column j of `matrix` is the image of
    variable j as a combination of the variables: x_j -> sum_i matrix[i][j] x_i.
    """
    table: VarTable
    matrix: Tuple[Tuple[CycNum, ...], ...]

    def __post_init__(self):
        n = len(self.table)
        if len(self.matrix) != n or any(len(row) != n for row in self.matrix):
            raise ValueError(f"linear map must be a {n}x{n} matrix")

    @classmethod
    def from_rows(cls, table: VarTable, rows: Sequence[Sequence[Scalar]]) -> "LinearMap":
        return cls(table, tuple(tuple(CycNum.coerce(v) for v in row) for row in rows))

    @classmethod
    def identity(cls, table: VarTable) -> "LinearMap":
        n = len(table)
        return cls.from_rows(table, [[1 if i == j else 0 for j in range(n)] for i in range(n)])

    @classmethod
    def diagonal(cls, table: VarTable, entries: Sequence[Scalar]) -> "LinearMap":
        n = len(table)
        return cls.from_rows(table, [[entries[i] if i == j else 0 for j in range(n)] for i in range(n)])

    def image(self, j: int) -> Poly:
        n = len(self.table)
        terms = {}
        for i in range(n):
            entry = self.matrix[i][j]
            if not entry.is_zero():
                exponents = [0] * n
                exponents[i] = 1
                terms[tuple(exponents)] = entry
        return Poly(self.table, terms)

    def images(self) -> List[Poly]:
        return [self.image(j) for j in range(len(self.table))]

    def __matmul__(self, other: "LinearMap") -> "LinearMap":
        if other.table != self.table:
            raise ValueError("linear maps live over different variable tables")
        n = len(self.table)
        rows = []
        for i in range(n):
            row = []
            for j in range(n):
                total = CycNum.rational(0)
                for k in range(n):
                    a, b = self.matrix[i][k], other.matrix[k][j]
                    if not a.is_zero() and not b.is_zero():
                        total = total + a * b
                row.append(total)
            rows.append(row)
        return LinearMap.from_rows(self.table, rows)

    def power(self, k: int) -> "LinearMap":
        if k < 0:
            raise ValueError("only natural powers of a linear map are supported")
        result = LinearMap.identity(self.table)
        for _ in range(k):
            result = self @ result
        return result

    def conjugate_entries(self) -> "LinearMap":
        return LinearMap(self.table, tuple(tuple(v.conj() for v in row) for row in self.matrix))

    def is_invertible(self) -> bool:
        return rank(self.matrix) == len(self.table)

    def is_identity(self) -> bool:
        return self == LinearMap.identity(self.table)

    def respects_conjugation(self) -> bool:
        """
        True when conjugating then applying the entry-wise conjugated map
        agrees with L, i.e. conj(L)[i][j] == L[partner i][partner j].
        """
        conjugated = self.conjugate_entries().matrix
        partner = self.table.partner
        n = len(self.table)
        return all(conjugated[i][j] == self.matrix[partner[i]][partner[j]]
                   for i in range(n) for j in range(n))


def poly_add(p: Poly, q: Poly) -> Poly:
    return p + q


def poly_sub(p: Poly, q: Poly) -> Poly:
    return p - q


def poly_mul(p: Poly, q: Poly) -> Poly:
    return p * q


def substitute_linear(p: Poly, linear_map: LinearMap) -> Poly:
    """
    Return p o L: every variable replaced by its image column, expanded.

    Raises:
        ValueError: If p and L use different variable tables
    """
    if p.table != linear_map.table:
        raise ValueError("polynomial and linear map live over different variable tables")
    if p.is_zero():
        return p
    return p.compose(linear_map.images(), table=p.table)


def grade_truncate(p: Poly, d: int) -> Poly:
    return p.grade_truncate(d)


def homogeneous_component(p: Poly, d: int) -> Poly:
    return p.homogeneous_component(d)


def monomials_of_degree(nvars: int, d: int) -> Iterable[Monomial]:
    """All exponent vectors of total degree d, graded-lex largest first."""
    def build(position: int, remaining: int):
        if position == nvars - 1:
            yield (remaining,)
            return
        for e in range(remaining, -1, -1):
            for rest in build(position + 1, remaining - e):
                yield (e,) + rest
    if nvars == 0:
        if d == 0:
            yield ()
        return
    yield from build(0, d)
