"""Relative Reynolds operators and the decomposition of H-invariants."""

from dataclasses import dataclass
from fractions import Fraction
from typing import List, Sequence, Tuple

from group import GroupSpec, coset_substitute
from poly import Poly, substitute_linear


def _check_index(g: GroupSpec, j: int) -> None:
    if not 0 <= j < g.m:
        raise ValueError(f"relative index j must satisfy 0 <= j < {g.m}, got {j}")


def coset_images(g: GroupSpec, f: Poly) -> List[Poly]:
    """[f, f o delta, ..., f o delta^(m-1)]."""
    images = [f]
    for _ in range(g.m - 1):
        images.append(substitute_linear(images[-1], g.delta))
    return images


def _project(g: GroupSpec, j: int, images: Sequence[Poly]) -> Poly:
    total = Poly.zero(images[0].table)
    for k, image in enumerate(images):
        # conj(sigma^(jk)(delta)) = zeta_m^(-s j k)
        total = total + image.scale(g.sigma_power_of(-j * k))
    return total.scale(Fraction(1, g.m))


def reynolds(g: GroupSpec, j: int, f: Poly) -> Poly:
    """
    The sigma^j-relative Reynolds operator:
    R_j(f) = 1/m * sum_k conj(sigma^(jk)(delta)) * f(delta^k x).

    The formula is applied to any input; the projection properties hold
    for H-invariant f.

    Raises:
        ValueError: If j is outside 0..m-1
    """
    _check_index(g, j)
    return _project(g, j, coset_images(g, f))


def is_relative_invariant(g: GroupSpec, j: int, f: Poly) -> bool:
    """
    f is fixed by every generator of H and f o delta == sigma^j(delta) * f.
    """
    _check_index(g, j)
    if not g.fixed_by_h(f):
        return False
    return coset_substitute(g, 1, f) == f.scale(g.sigma_power_of(j))


@dataclass(frozen=True)
class Decomposition:
    """f = f_0 + ... + f_(m-1) with f_j sigma^j-relative invariant."""
    source: Poly
    components: Tuple[Poly, ...]

    def total(self) -> Poly:
        result = Poly.zero(self.source.table)
        for component in self.components:
            result = result + component
        return result

    def check(self, g: GroupSpec) -> List[str]:
        """Violated postconditions, empty when the decomposition is sound."""
        problems = []
        if self.total() != self.source:
            problems.append("components do not sum back to the source")
        for j, component in enumerate(self.components):
            if not is_relative_invariant(g, j, component):
                problems.append(f"component {j} is not sigma^{j}-relative invariant")
        return problems


class DecompositionError(AssertionError):
    pass


def decompose(g: GroupSpec, f: Poly, verify: bool = False) -> Decomposition:
    """
    Split an H-invariant polynomial into its m relative-invariant parts.

    Args:
        g: The group data
        f: H-invariant polynomial
        verify: Re-check the sum and relative invariance of each component

    Raises:
        DecompositionError: In verify mode, if a postcondition fails
    """
    images = coset_images(g, f)
    components = tuple(_project(g, j, images) for j in range(g.m))
    decomposition = Decomposition(source=f, components=components)
    if verify:
        problems = decomposition.check(g)
        if problems:
            raise DecompositionError("; ".join(problems))
    return decomposition
