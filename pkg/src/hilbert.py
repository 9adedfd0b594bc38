"""
Generators of the Gamma-invariant ring from a Hilbert basis of the
H-invariant ring.

For m = 2 the generators are R_0(u_i) and the pairwise products
R_1(u_i) R_1(u_j). For general m they are R_0(u_i) together with the
products of R_j(u_i) whose exponent patterns satisfy
sum_j j * alpha(j) = 0 (mod m); only minimal patterns are needed.
"""

from dataclasses import dataclass, field
from itertools import combinations_with_replacement, product
from typing import Iterator, List, Sequence, Tuple

from config import METHODS
from cyclotomic import ONE
from group import GroupSpec
from poly import Poly, VarTable, monomial_rank
from reynolds import decompose


LEMMA_TABLE = VarTable.real("a", "b")


# ---------------------------------------------------------------------------
# Recurrences for the index-two case
# ---------------------------------------------------------------------------

def lemma31_polys(t: int) -> Tuple[Poly, Poly, Poly]:
    """
    Bivariate polynomials F_t, G_t, H_t in (a, b) with, for u and its image
    du = u o delta, a = R_0(u) and b = R_1(u)^2:

        u^t + du^t              = F_t(a, b)
        sum_k u^k du^(t-k)      = G_t(a, b)
        u^t - du^t              = R_1(u) * H_t(a, b)

    They follow from u + du = 2a and u * du = a^2 - b.
    """
    if t < 0:
        raise ValueError(f"t must be natural, got {t}")
    a = Poly.variable(LEMMA_TABLE, "a")
    b = Poly.variable(LEMMA_TABLE, "b")
    two = Poly.constant(LEMMA_TABLE, 2)
    one = Poly.constant(LEMMA_TABLE, ONE)
    uv = a * a - b

    F = [two, two * a]
    G = [one, two * a]
    for i in range(2, t + 1):
        F.append(two * a * F[i - 1] - uv * F[i - 2])
        G.append(F[i] + uv * G[i - 2])
    H = Poly.zero(LEMMA_TABLE) if t == 0 else two * G[t - 1]
    return F[t], G[t], H


def verify_lemma31(t: int) -> Tuple[bool, bool, bool]:
    """
    Check the three identities of lemma31_polys symbolically, with
    u = a + b and du = a - b (so a plays R_0(u) and b plays R_1(u)).
    """
    a = Poly.variable(LEMMA_TABLE, "a")
    b = Poly.variable(LEMMA_TABLE, "b")
    u, du = a + b, a - b
    F, G, H = lemma31_polys(t)
    images = [a, b * b]

    sum_identity = u ** t + du ** t == F.compose(images)
    mixed = Poly.zero(LEMMA_TABLE)
    for k in range(t + 1):
        mixed = mixed + u ** k * du ** (t - k)
    mixed_identity = mixed == G.compose(images)
    difference_identity = u ** t - du ** t == b * H.compose(images)
    return sum_identity, mixed_identity, difference_identity


# ---------------------------------------------------------------------------
# Exponent patterns
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class ExponentPattern:
    """
    alpha[j - 1][i] is the exponent of R_j(u_(i+1)), for 1 <= j <= m-1.
    """
    alpha: Tuple[Tuple[int, ...], ...]

    @property
    def m(self) -> int:
        return len(self.alpha) + 1

    @property
    def s(self) -> int:
        return len(self.alpha[0]) if self.alpha else 0

    def alpha_of(self, j: int) -> int:
        return sum(self.alpha[j - 1])

    def total(self) -> int:
        return sum(sum(row) for row in self.alpha)

    def charge(self) -> int:
        return sum(j * self.alpha_of(j) for j in range(1, self.m)) % self.m

    def is_valid(self) -> bool:
        return self.charge() == 0

    def is_zero(self) -> bool:
        return self.total() == 0

    def __add__(self, other: "ExponentPattern") -> "ExponentPattern":
        return ExponentPattern(tuple(tuple(x + y for x, y in zip(r1, r2))
                                     for r1, r2 in zip(self.alpha, other.alpha)))

    def __sub__(self, other: "ExponentPattern") -> "ExponentPattern":
        return ExponentPattern(tuple(tuple(x - y for x, y in zip(r1, r2))
                                     for r1, r2 in zip(self.alpha, other.alpha)))

    def __le__(self, other: "ExponentPattern") -> bool:
        return all(x <= y for r1, r2 in zip(self.alpha, other.alpha) for x, y in zip(r1, r2))

    def factors(self) -> List[Tuple[int, int, int]]:
        """Nonzero (j, i, exponent) triples, i counted from 0."""
        return [(j, i, e) for j, row in enumerate(self.alpha, start=1)
                for i, e in enumerate(row) if e]

    def label(self) -> str:
        parts = []
        for j, i, e in self.factors():
            parts.append(f"R{j}(u{i + 1})" + (f"^{e}" if e > 1 else ""))
        return "*".join(parts) or "1"


def _count_vectors(length: int, budget: int) -> Iterator[Tuple[int, ...]]:
    if length == 0:
        yield ()
        return
    for c in range(budget + 1):
        for rest in _count_vectors(length - 1, budget - c):
            yield (c,) + rest


def _charge(counts: Sequence[int], m: int) -> int:
    return sum(j * c for j, c in enumerate(counts, start=1)) % m


def _has_zero_sum_part(counts: Tuple[int, ...], m: int) -> bool:
    """Some nonzero proper sub-multiset also has charge 0."""
    for sub in product(*(range(c + 1) for c in counts)):
        if any(sub) and sub != counts and _charge(sub, m) == 0:
            return True
    return False


def minimal_charge_counts(m: int) -> List[Tuple[int, ...]]:
    """
    Minimal zero-sum multisets over 1..m-1, as count vectors (c_1..c_(m-1)).

    Sizes never exceed m: among m+1 letters two prefix sums agree mod m,
    which cuts out a proper zero-sum part.
    """
    found = []
    for counts in _count_vectors(m - 1, m):
        if any(counts) and _charge(counts, m) == 0 and not _has_zero_sum_part(counts, m):
            found.append(counts)
    return found


def _expand(counts: Tuple[int, ...], supports: Sequence[Sequence[int]], s: int) -> Iterator[ExponentPattern]:
    per_j = []
    for c, support in zip(counts, supports):
        rows = []
        for chosen in combinations_with_replacement(support, c):
            row = [0] * s
            for i in chosen:
                row[i] += 1
            rows.append(tuple(row))
        per_j.append(rows)
    for rows in product(*per_j):
        yield ExponentPattern(tuple(rows))


def minimal_patterns(m: int, s: int) -> List[ExponentPattern]:
    """
    Every minimal nonzero pattern alpha with sum_j j * alpha(j) = 0 mod m.
    """
    if m < 2 or s < 1:
        raise ValueError(f"need m >= 2 and s >= 1, got m={m}, s={s}")
    supports = [range(s)] * (m - 1)
    patterns = []
    for counts in minimal_charge_counts(m):
        patterns.extend(_expand(counts, supports, s))
    return patterns


# ---------------------------------------------------------------------------
# Generator sets
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class Generator:
    poly: Poly
    provenance: str


@dataclass
class GeneratorSet:
    table: VarTable
    elements: List[Generator] = field(default_factory=list)
    pruned: bool = False

    def polys(self) -> List[Poly]:
        return [g.poly for g in self.elements]

    def __len__(self) -> int:
        return len(self.elements)

    def __iter__(self):
        return iter(self.elements)

    def without(self, unwanted: Poly) -> "GeneratorSet":
        """Copy without the elements that are scalar multiples of `unwanted`."""
        kept = [g for g in self.elements if not is_scalar_multiple(g.poly, unwanted)]
        return GeneratorSet(self.table, kept, self.pruned)


def is_scalar_multiple(p: Poly, q: Poly) -> bool:
    """p == c * q for some nonzero constant c (both nonzero)."""
    if p.is_zero() or q.is_zero() or len(p) != len(q):
        return False
    if set(p.monomials()) != set(q.monomials()):
        return False
    ratio = p.leading_coefficient() / q.leading_coefficient()
    return p == q.scale(ratio)


def _sort_key(generator: Generator):
    p = generator.poly
    return (p.degree(), monomial_rank(p.leading_monomial()), str(p))


def prune_generators(table: VarTable, candidates: Sequence[Generator]) -> GeneratorSet:
    """Drop zeros, duplicates and scalar multiples; order by degree then graded-lex."""
    kept: List[Generator] = []
    for candidate in candidates:
        if candidate.poly.is_zero():
            continue
        if any(is_scalar_multiple(candidate.poly, k.poly) for k in kept):
            continue
        kept.append(candidate)
    kept.sort(key=_sort_key)
    return GeneratorSet(table, kept, pruned=True)


def relative_profile(g: GroupSpec, h_basis: Sequence[Poly]) -> List[Tuple[Poly, ...]]:
    """profile[i][j] = R_j(u_(i+1))."""
    return [decompose(g, u).components for u in h_basis]


def _invariant_parts(profile) -> List[Generator]:
    return [Generator(components[0], f"R0(u{i + 1})") for i, components in enumerate(profile)]


def main1_generators(g: GroupSpec, h_basis: Sequence[Poly]) -> GeneratorSet:
    """
    Index-two transfer: {R_0(u_i)} and {R_1(u_i) R_1(u_j) : i <= j}.

    Raises:
        ValueError: If m != 2
    """
    if g.m != 2:
        raise ValueError(f"main1_generators needs m = 2 (got m = {g.m}); use main2_generators")
    profile = relative_profile(g, h_basis)
    candidates = _invariant_parts(profile)
    odd = [(i, components[1]) for i, components in enumerate(profile)
           if not components[1].is_zero()]
    for (i, ri), (j, rj) in combinations_with_replacement(odd, 2):
        label = f"R1(u{i + 1})^2" if i == j else f"R1(u{i + 1})*R1(u{j + 1})"
        candidates.append(Generator(ri * rj, label))
    return prune_generators(g.table, candidates)


def main2_generators(g: GroupSpec, h_basis: Sequence[Poly]) -> GeneratorSet:
    """
    General transfer: {R_0(u_i)} and the products
    prod R_j(u_i)^alpha[j][i] over minimal valid exponent patterns.

    Patterns touching a vanishing R_j(u_i) are skipped.
    """
    profile = relative_profile(g, h_basis)
    s = len(h_basis)
    candidates = _invariant_parts(profile)
    supports = [[i for i in range(s) if not profile[i][j].is_zero()] for j in range(1, g.m)]
    one = Poly.constant(g.table, ONE)
    for counts in minimal_charge_counts(g.m):
        if any(c and not support for c, support in zip(counts, supports)):
            continue
        for pattern in _expand(counts, supports, s):
            value = one
            for j, i, e in pattern.factors():
                value = value * profile[i][j] ** e
            candidates.append(Generator(value, pattern.label()))
    return prune_generators(g.table, candidates)


def gamma_basis(g: GroupSpec, h_basis: Sequence[Poly], method: str = "auto") -> GeneratorSet:
    """Pick the transfer theorem: 'auto' uses main1 exactly when m == 2."""
    if method not in METHODS:
        raise ValueError(f"unknown method {method!r}; choose one of {', '.join(METHODS)}")
    if method == "main1" or (method == "auto" and g.m == 2):
        return main1_generators(g, h_basis)
    return main2_generators(g, h_basis)
