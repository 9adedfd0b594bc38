"""Group data: generators of H, the coset representative delta and sigma(delta)."""

from dataclasses import dataclass, field
from math import gcd
from typing import List, Sequence, Tuple, Union

from cyclotomic import CycNum, root_of_unity
from poly import LinearMap, Monomial, Poly, VarTable, substitute_linear


@dataclass(frozen=True)
class TorusWeights:
    """
    Integer weights of a torus action: weights[k][i] is the weight of
    variable i under the k-th circle parameter. A monomial is fixed by the
    torus iff its weight sum vanishes for every parameter.
    """
    table: VarTable
    weights: Tuple[Tuple[int, ...], ...]

    def __post_init__(self):
        n = len(self.table)
        if any(len(row) != n for row in self.weights):
            raise ValueError(f"every torus weight vector needs {n} entries")

    def monomial_weight(self, monomial: Monomial) -> Tuple[int, ...]:
        return tuple(sum(w * e for w, e in zip(row, monomial)) for row in self.weights)

    def fixes_monomial(self, monomial: Monomial) -> bool:
        return not any(self.monomial_weight(monomial))

    def fixes(self, p: Poly) -> bool:
        return all(self.fixes_monomial(m) for m in p.monomials())

    def unbalanced_pairs(self) -> List[Tuple[str, str]]:
        """Conjugate pairs whose weights are not opposite."""
        names, partner = self.table.names, self.table.partner
        bad = []
        for i, j in enumerate(partner):
            if i < j and any(row[i] != -row[j] for row in self.weights):
                bad.append((names[i], names[j]))
            elif i == j and any(row[i] for row in self.weights):
                bad.append((names[i], names[i]))
        return bad


HGenerator = Union[LinearMap, TorusWeights]


def generator_fixes(generator: HGenerator, p: Poly) -> bool:
    if isinstance(generator, TorusWeights):
        return generator.fixes(p)
    return substitute_linear(p, generator) == p


@dataclass(frozen=True)
class GroupSpec:
    """Gamma presented through H's generators, delta, m and sigma(delta) = zeta_m^k."""
    table: VarTable
    h_generators: Tuple[HGenerator, ...]
    delta: LinearMap
    m: int
    sigma_power: int = 1

    @property
    def sigma_delta(self) -> CycNum:
        return root_of_unity(self.sigma_power, self.m)

    def sigma_power_of(self, j: int) -> CycNum:
        """sigma^j(delta)."""
        return root_of_unity(self.sigma_power * j, self.m)

    def linear_generators(self) -> List[LinearMap]:
        return [g for g in self.h_generators if isinstance(g, LinearMap)]

    def torus_generators(self) -> List[TorusWeights]:
        return [g for g in self.h_generators if isinstance(g, TorusWeights)]

    def fixed_by_h(self, p: Poly) -> bool:
        return all(generator_fixes(g, p) for g in self.h_generators)


@dataclass
class ValidationReport:
    """Outcome of validate_spec: failures make it fail, warnings do not."""
    passed_checks: List[str] = field(default_factory=list)
    failures: List[str] = field(default_factory=list)
    warnings: List[str] = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return not self.failures

    def lines(self) -> List[str]:
        out = [f"✅ {line}" for line in self.passed_checks]
        out += [f"⚠️  {line}" for line in self.warnings]
        out += [f"❌ {line}" for line in self.failures]
        return out


def _describe_generator(index: int, generator: HGenerator) -> str:
    kind = "torus" if isinstance(generator, TorusWeights) else "linear"
    return f"h_generators[{index}] ({kind})"


def coset_substitute(g: GroupSpec, k: int, p: Poly) -> Poly:
    """
    Return p o delta^k by repeated substitution.

    Args:
        g: The group data
        k: Natural exponent (0 gives p back)
        p: Polynomial over g.table
    """
    if k < 0:
        raise ValueError(f"coset index must be natural, got {k}")
    result = p
    for _ in range(k):
        result = substitute_linear(result, g.delta)
    return result


def validate_spec(g: GroupSpec, h_basis: Sequence[Poly], labels: Sequence[str] = ()) -> ValidationReport:
    """
    Check the algebraic setup without raising.

    Covers H-invariance of every basis element, triviality of delta^m on the
    basis, primitivity of sigma(delta), invertibility and conjugation
    compatibility of every linear map, and balanced torus weights.
    """
    report = ValidationReport()
    labels = list(labels) or [f"u{i + 1}" for i in range(len(h_basis))]

    if not h_basis:
        report.failures.append("h_basis is empty")
    if g.m < 2:
        report.failures.append(f"index m must be at least 2, got {g.m}")
    elif gcd(g.sigma_power, g.m) != 1:
        report.failures.append(
            f"σ(δ) not primitive: zeta_{g.m}^{g.sigma_power} has order {g.m // gcd(g.sigma_power, g.m)}")
    else:
        report.passed_checks.append(f"σ(δ) = zeta_{g.m}^{g.sigma_power} is a primitive {g.m}-th root of unity")

    maps = [(_describe_generator(i, h), h) for i, h in enumerate(g.h_generators)
            if isinstance(h, LinearMap)]
    maps.append(("delta", g.delta))
    for name, linear_map in maps:
        if not linear_map.is_invertible():
            report.failures.append(f"{name} is not invertible")
        if not linear_map.respects_conjugation():
            report.failures.append(f"{name} does not commute with conjugation")

    for i, h in enumerate(g.h_generators):
        if isinstance(h, TorusWeights):
            for a, b in h.unbalanced_pairs():
                report.failures.append(
                    f"{_describe_generator(i, h)} weights of {a}/{b} are not opposite")

    h_fixed = True
    for label, u in zip(labels, h_basis):
        for i, h in enumerate(g.h_generators):
            if not generator_fixes(h, u):
                h_fixed = False
                report.failures.append(f"{label} = {u} is not fixed by {_describe_generator(i, h)}")
    if h_basis and h_fixed:
        report.passed_checks.append(f"all {len(h_basis)} basis elements are H-invariant")

    if g.m >= 2:
        delta_m_fixes = True
        for label, u in zip(labels, h_basis):
            if coset_substitute(g, g.m, u) != u:
                delta_m_fixes = False
                report.failures.append(f"{label} = {u} is not fixed by δ^{g.m}")
        if h_basis and delta_m_fixes:
            report.passed_checks.append(f"δ^{g.m} fixes every basis element")

        if h_basis and all(substitute_linear(u, g.delta) == u for u in h_basis):
            report.warnings.append("δ acts trivially on h_basis: every R_j with j ≥ 1 vanishes on it")

    return report
