"""Exact arithmetic in cyclotomic fields Q(zeta_N)."""

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from math import gcd
from typing import Tuple, Union

from sympy import Matrix, cyclotomic_poly, mobius, totient


Rational = Union[int, Fraction]


@lru_cache(maxsize=None)
def cyclotomic_modulus(order: int) -> Tuple[int, ...]:
    """
    Coefficients of the N-th cyclotomic polynomial, constant term first,
    with the leading 1 dropped.

    Args:
        order: N >= 1

    Returns:
        Tuple of length phi(N)
    """
    high_first = cyclotomic_poly(order, polys=True).all_coeffs()
    low_first = [int(c) for c in reversed(high_first)]
    return tuple(low_first[:-1])


@lru_cache(maxsize=None)
def _power_trace(order: int, power: int) -> int:
    # Ramanujan sum c_N(k): the trace of zeta_N^k down to Q.
    g = gcd(order, power)
    reduced = order // g
    return int(mobius(reduced)) * int(totient(order)) // int(totient(reduced))


def _reduce(order: int, vec) -> Tuple[Fraction, ...]:
    """Reduce a power-basis coefficient vector modulo Phi_N."""
    modulus = cyclotomic_modulus(order)
    d = len(modulus)
    v = [Fraction(c) for c in vec]
    if len(v) < d:
        v.extend([Fraction(0)] * (d - len(v)))
    for i in range(len(v) - 1, d - 1, -1):
        c = v[i]
        if c:
            base = i - d
            for t, p in enumerate(modulus):
                if p:
                    v[base + t] -= c * p
    return tuple(v[:d])


@lru_cache(maxsize=None)
def _descent(order: int, sub: int):
    """
    Data for reading Q(zeta_sub) coordinates off Q(zeta_order) ones.

    Returns (rows, inverse, images): `images[i]` is zeta_sub^i written in
    Q(zeta_order), `rows` picks phi(sub) coordinates on which those images
    are independent and `inverse` undoes them there.
    """
    step = order // sub
    dim = int(totient(sub))
    images = []
    for i in range(dim):
        vec = [0] * (i * step + 1)
        vec[i * step] = 1
        images.append(_reduce(order, vec))
    lifted = Matrix([[int(images[i][r]) for i in range(dim)] for r in range(len(images[0]))])
    _, rows = lifted.T.rref()
    inverse = lifted.extract(list(rows), list(range(dim))).inv()
    inverse = tuple(
        tuple(Fraction(int(inverse[i, k].p), int(inverse[i, k].q)) for k in range(dim))
        for i in range(dim)
    )
    return tuple(rows), inverse, tuple(images)


def _descend(order: int, sub: int, coeffs: Tuple[Fraction, ...]):
    """Coordinates in Q(zeta_sub) if the value lies there, else None."""
    rows, inverse, images = _descent(order, sub)
    picked = [coeffs[r] for r in rows]
    candidate = tuple(sum((a * b for a, b in zip(line, picked)), Fraction(0)) for line in inverse)
    for r, c in enumerate(coeffs):
        if sum((x * image[r] for x, image in zip(candidate, images)), Fraction(0)) != c:
            return None
    return candidate


@dataclass(frozen=True, eq=False)
class CycNum:
    """
    An element of Q(zeta_N), stored by its coordinates in the basis
    1, zeta, ..., zeta^(phi(N)-1) after reduction modulo Phi_N.

    Use the constructors (`rational`, `root_of_unity`, `from_powers`) rather
    than the raw initializer; they canonicalize.
    """
    order: int
    coeffs: Tuple[Fraction, ...]

    # -- construction -------------------------------------------------------

    @classmethod
    def rational(cls, value: Rational) -> "CycNum":
        return cls(1, (Fraction(value),))

    @classmethod
    def from_powers(cls, order: int, vec) -> "CycNum":
        """
        Build from coefficients of 1, zeta_N, zeta_N^2, ... of any length.

        Powers are first folded modulo zeta_N^N = 1, then reduced by Phi_N.
        """
        if order < 1:
            raise ValueError(f"cyclotomic order must be positive, got {order}")
        folded = [Fraction(0)] * order
        for k, c in enumerate(vec):
            if c:
                folded[k % order] += Fraction(c)
        return cls._canonical(order, _reduce(order, folded))

    @classmethod
    def _canonical(cls, order: int, coeffs: Tuple[Fraction, ...]) -> "CycNum":
        # Stored at the smallest order whose field holds the value, so
        # Q(zeta_2n) values with n odd come out at order n.
        if order > 1 and not any(coeffs[1:]):
            return cls(1, (coeffs[0],))
        for sub in range(3, order):
            if order % sub == 0 and sub % 4 != 2:
                smaller = _descend(order, sub, coeffs)
                if smaller is not None:
                    return cls(sub, smaller)
        return cls(order, coeffs)

    @classmethod
    def coerce(cls, value: Union["CycNum", Rational]) -> "CycNum":
        if isinstance(value, CycNum):
            return value
        if isinstance(value, (int, Fraction)):
            return cls.rational(value)
        raise TypeError(f"cannot interpret {value!r} as a cyclotomic number")

    # -- structure ----------------------------------------------------------

    def lift(self, order: int) -> Tuple[Fraction, ...]:
        """Coordinates of self inside Q(zeta_M) for a multiple M of self.order."""
        if order == self.order:
            return self.coeffs
        if order % self.order:
            raise ValueError(f"Q(zeta_{self.order}) is not a subfield of Q(zeta_{order})")
        step = order // self.order
        vec = [Fraction(0)] * ((len(self.coeffs) - 1) * step + 1)
        for i, c in enumerate(self.coeffs):
            vec[i * step] = c
        return _reduce(order, vec)

    def _common(self, other: "CycNum"):
        order = self.order * other.order // gcd(self.order, other.order)
        return order, self.lift(order), other.lift(order)

    def is_zero(self) -> bool:
        return not any(self.coeffs)

    def is_rational(self) -> bool:
        return self.order == 1

    def as_fraction(self) -> Fraction:
        if not self.is_rational():
            raise ValueError(f"{self} is not rational")
        return self.coeffs[0]

    # -- field operations ---------------------------------------------------

    def __add__(self, other):
        try:
            other = CycNum.coerce(other)
        except TypeError:
            return NotImplemented
        order, a, b = self._common(other)
        return CycNum._canonical(order, tuple(x + y for x, y in zip(a, b)))

    __radd__ = __add__

    def __neg__(self) -> "CycNum":
        return CycNum(self.order, tuple(-c for c in self.coeffs))

    def __sub__(self, other):
        try:
            other = CycNum.coerce(other)
        except TypeError:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other):
        try:
            return CycNum.coerce(other) - self
        except TypeError:
            return NotImplemented

    def __mul__(self, other):
        try:
            other = CycNum.coerce(other)
        except TypeError:
            return NotImplemented
        if self.is_rational() and other.is_rational():
            return CycNum.rational(self.coeffs[0] * other.coeffs[0])
        if self.is_rational() or other.is_rational():
            scalar, full = (self, other) if self.is_rational() else (other, self)
            k = scalar.coeffs[0]
            return CycNum._canonical(full.order, tuple(k * c for c in full.coeffs))
        order, a, b = self._common(other)
        product = [Fraction(0)] * (len(a) + len(b) - 1)
        for i, x in enumerate(a):
            if x:
                for j, y in enumerate(b):
                    if y:
                        product[i + j] += x * y
        return CycNum._canonical(order, _reduce(order, product))

    __rmul__ = __mul__

    def galois(self, k: int) -> "CycNum":
        """Apply the automorphism zeta_N -> zeta_N^k (k coprime to N)."""
        n = self.order
        if gcd(k, n) != 1:
            raise ValueError(f"{k} is not a unit modulo {n}")
        vec = [Fraction(0)] * n
        for i, c in enumerate(self.coeffs):
            if c:
                vec[(i * k) % n] += c
        return CycNum._canonical(n, _reduce(n, vec))

    def conj(self) -> "CycNum":
        """Complex conjugation."""
        if self.order <= 2:
            return self
        return self.galois(-1)

    def _conjugate_product(self) -> "CycNum":
        n = self.order
        product = ONE
        for k in range(2, n):
            if gcd(k, n) == 1:
                product = product * self.galois(k)
        return product

    def norm(self) -> Fraction:
        """Field norm down to Q."""
        return (self * self._conjugate_product()).as_fraction()

    def trace(self) -> Fraction:
        """Field trace down to Q."""
        return sum((c * _power_trace(self.order, i) for i, c in enumerate(self.coeffs)),
                   Fraction(0))

    def inv(self) -> "CycNum":
        if self.is_zero():
            raise ZeroDivisionError("division by zero in cyclotomic field")
        if self.is_rational():
            return CycNum.rational(1 / self.coeffs[0])
        others = self._conjugate_product()
        return others * (1 / (self * others).as_fraction())

    def __truediv__(self, other):
        try:
            other = CycNum.coerce(other)
        except TypeError:
            return NotImplemented
        return self * other.inv()

    def __rtruediv__(self, other):
        try:
            other = CycNum.coerce(other)
        except TypeError:
            return NotImplemented
        return other * self.inv()

    def __pow__(self, exponent: int) -> "CycNum":
        if exponent < 0:
            return self.inv() ** (-exponent)
        result, base = ONE, self
        while exponent:
            if exponent & 1:
                result = result * base
            base = base * base
            exponent >>= 1
        return result

    # -- comparison ---------------------------------------------------------

    def __eq__(self, other) -> bool:
        try:
            other = CycNum.coerce(other)
        except TypeError:
            return NotImplemented
        # Canonical forms make equality structural.
        return self.order == other.order and self.coeffs == other.coeffs

    def __hash__(self) -> int:
        # trace / phi(N) does not depend on which Q(zeta_N) holds the value
        return hash(self.trace() / len(self.coeffs))

    def __bool__(self) -> bool:
        return not self.is_zero()

    # -- printing -----------------------------------------------------------

    def __str__(self) -> str:
        parts = []
        for power, c in enumerate(self.coeffs):
            if not c:
                continue
            if power == 0:
                body, magnitude = str(abs(c)), None
            else:
                atom = f"zeta({self.order})" if power == 1 else f"zeta({self.order})^{power}"
                magnitude = abs(c)
                body = atom if magnitude == 1 else f"{magnitude}*{atom}"
            sign = "-" if c < 0 else "+"
            parts.append((sign, body))
        if not parts:
            return "0"
        first_sign, first_body = parts[0]
        text = ("-" if first_sign == "-" else "") + first_body
        for sign, body in parts[1:]:
            text += f" {sign} {body}"
        return text

    def __repr__(self) -> str:
        return f"CycNum({self})"


ZERO = CycNum.rational(0)
ONE = CycNum.rational(1)


def root_of_unity(k: int, order: int) -> CycNum:
    """
    Return zeta_N^(k mod N).

    Args:
        k: Exponent, any integer
        order: N >= 1

    Raises:
        ValueError: If N < 1
    """
    if order < 1:
        raise ValueError(f"root of unity needs a positive order, got {order}")
    vec = [0] * order
    vec[k % order] = 1
    return CycNum.from_powers(order, vec)


def cyc_add(a: CycNum, b: CycNum) -> CycNum:
    return a + b


def cyc_sub(a: CycNum, b: CycNum) -> CycNum:
    return a - b


def cyc_mul(a: CycNum, b: CycNum) -> CycNum:
    return a * b


def cyc_neg(a: CycNum) -> CycNum:
    return -a


def cyc_inv(a: CycNum) -> CycNum:
    return a.inv()


def cyc_conj(a: CycNum) -> CycNum:
    return a.conj()


def cyc_is_zero(a: CycNum) -> bool:
    return a.is_zero()
