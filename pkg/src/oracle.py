"""
Brute-force verification of generator sets.

Invariants are computed degree by degree as the null space of
f o gamma - f = 0 over the monomial coefficients, after discarding the
monomials that the torus part of H does not fix. The result is compared
with the span of all bounded products of the proposed generators.
"""

from dataclasses import dataclass, field
from typing import Dict, List, Optional

from config import DEFAULT_DEGREE_BOUND
from cyclotomic import ONE
from group import GroupSpec, TorusWeights
from hilbert import GeneratorSet
from linalg import Echelon, nullspace
from poly import LinearMap, Poly, VarTable, monomial_rank, monomials_of_degree, substitute_linear


class OracleInapplicable(RuntimeError):
    pass


@dataclass
class GradedSpace:
    """Reduced echelon bases, degree by degree, of a graded subspace."""
    degree_bound: int
    bases: Dict[int, List[Poly]] = field(default_factory=dict)

    def dimension(self, d: int) -> int:
        return len(self.bases.get(d, []))

    def dimensions(self) -> Dict[int, int]:
        return {d: self.dimension(d) for d in range(self.degree_bound + 1)}


def _echelon_of(polys) -> Echelon:
    echelon = Echelon(monomial_rank)
    for p in polys:
        echelon.add(p.as_dict())
    return echelon


def _basis(table: VarTable, echelon: Echelon) -> List[Poly]:
    return [Poly(table, row) for row in echelon.rows()]


def _check_applicable(g: GroupSpec) -> None:
    for i, generator in enumerate(g.h_generators):
        if not isinstance(generator, (LinearMap, TorusWeights)):
            raise OracleInapplicable(f"h_generators[{i}] is neither a linear map nor torus weights")
    if not isinstance(g.delta, LinearMap):
        raise OracleInapplicable("delta must be a linear map")


def invariant_basis_in_degree(g: GroupSpec, d: int) -> List[Poly]:
    """Reduced echelon basis of the degree-d Gamma-invariants."""
    table = g.table
    tori = g.torus_generators()
    monomials = [m for m in monomials_of_degree(len(table), d)
                 if all(t.fixes_monomial(m) for t in tori)]
    if not monomials:
        return []

    constraints: Dict[tuple, dict] = {}
    for index, linear_map in enumerate(g.linear_generators() + [g.delta]):
        for column, monomial in enumerate(monomials):
            source = Poly.monomial(table, monomial)
            moved = substitute_linear(source, linear_map) - source
            for image_monomial, coefficient in moved.as_dict().items():
                constraints.setdefault((index, image_monomial), {})[column] = coefficient

    solutions = nullspace(constraints.values(), len(monomials))
    echelon = Echelon(monomial_rank)
    for vector in solutions:
        echelon.add({monomials[c]: v for c, v in vector.items()})
    return _basis(table, echelon)


def invariants_up_to_degree(g: GroupSpec, d: int) -> GradedSpace:
    """
    Every Gamma-invariant of degree <= d, as per-degree echelon bases.

    Raises:
        OracleInapplicable: If a generator is neither linear nor a torus
    """
    _check_applicable(g)
    space = GradedSpace(d)
    for degree in range(d + 1):
        space.bases[degree] = invariant_basis_in_degree(g, degree)
    return space


def subalgebra_span(gens: GeneratorSet, d: int) -> GradedSpace:
    """
    Per-degree span of all products of generators up to total degree d.

    Non-homogeneous generators contribute their homogeneous components.
    """
    table = gens.table
    pieces = []
    for p in gens.polys():
        for degree, component in p.homogeneous_components().items():
            if 0 < degree <= d:
                pieces.append(component)
    pieces.sort(key=lambda p: p.degree())

    echelons = {degree: Echelon(monomial_rank) for degree in range(d + 1)}
    echelons[0].add({(0,) * len(table): ONE})

    def extend(start: int, value: Poly, degree: int) -> None:
        for index in range(start, len(pieces)):
            piece = pieces[index]
            new_degree = degree + piece.degree()
            if new_degree > d:
                break
            product = value * piece
            echelons[new_degree].add(product.as_dict())
            extend(index, product, new_degree)

    extend(0, Poly.constant(table, ONE), 0)
    space = GradedSpace(d)
    for degree, echelon in echelons.items():
        space.bases[degree] = _basis(table, echelon)
    return space


@dataclass(frozen=True)
class DegreeCheck:
    degree: int
    dim_oracle: int
    dim_span: int
    ok: bool

    @property
    def status(self) -> str:
        return "ok" if self.ok else "FAIL"


@dataclass
class CertReport:
    degree_bound: int
    rows: List[DegreeCheck] = field(default_factory=list)
    failed_degree: Optional[int] = None
    witness: Optional[Poly] = None
    witness_kind: str = ""

    @property
    def passed(self) -> bool:
        return self.failed_degree is None

    def table_lines(self) -> List[str]:
        lines = [f"{'degree':<8}{'dim_oracle':<12}{'dim_span':<10}status"]
        for row in self.rows:
            lines.append(f"{row.degree:<8}{row.dim_oracle:<12}{row.dim_span:<10}{row.status}")
        if self.passed:
            lines.append(f"PASS through degree {self.degree_bound}")
        else:
            lines.append(f"FAIL at degree {self.failed_degree}")
            lines.append(f"witness ({self.witness_kind}): {self.witness}")
        return lines


def certify(g: GroupSpec, gens: GeneratorSet, d: int = DEFAULT_DEGREE_BOUND) -> CertReport:
    """
    Compare the brute-force invariants with the span of the generators in
    every degree up to d. Equal echelon bases mean equal spaces.
    """
    oracle = invariants_up_to_degree(g, d)
    span = subalgebra_span(gens, d)
    report = CertReport(d)
    for degree in range(d + 1):
        expected, got = oracle.bases[degree], span.bases[degree]
        ok = expected == got
        report.rows.append(DegreeCheck(degree, len(expected), len(got), ok))
        if ok or report.failed_degree is not None:
            continue
        report.failed_degree = degree
        span_echelon = _echelon_of(got)
        missing = [p for p in expected if not span_echelon.contains(p.as_dict())]
        if missing:
            report.witness, report.witness_kind = missing[0], "invariant outside the span"
        else:
            oracle_echelon = _echelon_of(expected)
            extra = [p for p in got if not oracle_echelon.contains(p.as_dict())]
            report.witness, report.witness_kind = extra[0], "span element that is not invariant"
    return report
