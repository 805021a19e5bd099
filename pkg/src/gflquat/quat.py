"""Generalized quaternion algebras H(alpha, beta) over the rationals.

Basis 1, i, j, k with i^2 = alpha, j^2 = beta, k = ij = -ji.  The remaining
products follow by associativity::

    ik = alpha j    ki = -alpha j
    jk = -beta i    kj = beta i
    k^2 = -alpha beta

Coordinates are ``fractions.Fraction`` throughout; nothing here ever
touches a float.
"""
from __future__ import annotations

import enum
import itertools
from dataclasses import dataclass
from fractions import Fraction
from math import isqrt, lcm
from typing import Iterator, Optional, Union

Scalar = Union[int, Fraction]


class NotInvertible(ZeroDivisionError):
    """Raised when inverting an element of norm zero (a zero divisor)."""


class ParamsMismatch(ValueError):
    pass


@dataclass(frozen=True)
class AlgebraParams:
    alpha: Fraction
    beta: Fraction

    def __init__(self, alpha: Scalar | str, beta: Scalar | str) -> None:
        a, b = Fraction(alpha), Fraction(beta)
        if a == 0 or b == 0:
            raise ValueError(f"degenerate algebra H({a}, {b}): alpha and beta must be nonzero")
        object.__setattr__(self, "alpha", a)
        object.__setattr__(self, "beta", b)

    def __str__(self) -> str:
        return f"H({self.alpha}, {self.beta})"

    def quaternion(self, c0: Scalar = 0, c1: Scalar = 0, c2: Scalar = 0, c3: Scalar = 0) -> Quaternion:
        return Quaternion(self, c0, c1, c2, c3)

    def one(self) -> Quaternion:
        return Quaternion(self, 1)

    def zero(self) -> Quaternion:
        return Quaternion(self)

    def basis(self) -> tuple[Quaternion, Quaternion, Quaternion, Quaternion]:
        return (
            Quaternion(self, 1, 0, 0, 0),
            Quaternion(self, 0, 1, 0, 0),
            Quaternion(self, 0, 0, 1, 0),
            Quaternion(self, 0, 0, 0, 1),
        )


@dataclass(frozen=True)
class Quaternion:
    params: AlgebraParams
    c0: Fraction
    c1: Fraction
    c2: Fraction
    c3: Fraction

    def __init__(self, params: AlgebraParams, c0: Scalar = 0, c1: Scalar = 0,
                 c2: Scalar = 0, c3: Scalar = 0) -> None:
        object.__setattr__(self, "params", params)
        object.__setattr__(self, "c0", Fraction(c0))
        object.__setattr__(self, "c1", Fraction(c1))
        object.__setattr__(self, "c2", Fraction(c2))
        object.__setattr__(self, "c3", Fraction(c3))

    @property
    def coords(self) -> tuple[Fraction, Fraction, Fraction, Fraction]:
        return (self.c0, self.c1, self.c2, self.c3)

    def __iter__(self) -> Iterator[Fraction]:
        return iter(self.coords)

    def __repr__(self) -> str:
        return f"Quaternion({self.params}, {', '.join(str(c) for c in self.coords)})"

    def __str__(self) -> str:
        return " ".join(str(c) for c in self.coords)

    def _check(self, other: Quaternion) -> None:
        if self.params != other.params:
            raise ParamsMismatch(f"cannot combine elements of {self.params} and {other.params}")

    def _lift(self, other) -> Optional[Quaternion]:
        if isinstance(other, Quaternion):
            self._check(other)
            return other
        if isinstance(other, (int, Fraction)):
            return Quaternion(self.params, other)
        return None

    def __add__(self, other):
        other = self._lift(other)
        if other is None:
            return NotImplemented
        return Quaternion(self.params, *(x + y for x, y in zip(self, other)))

    __radd__ = __add__

    def __neg__(self) -> Quaternion:
        return Quaternion(self.params, *(-x for x in self))

    def __sub__(self, other):
        other = self._lift(other)
        if other is None:
            return NotImplemented
        return Quaternion(self.params, *(x - y for x, y in zip(self, other)))

    def __rsub__(self, other):
        other = self._lift(other)
        if other is None:
            return NotImplemented
        return other - self

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)):
            return Quaternion(self.params, *(x * other for x in self))
        if not isinstance(other, Quaternion):
            return NotImplemented
        self._check(other)
        al, be = self.params.alpha, self.params.beta
        a0, a1, a2, a3 = self.coords
        b0, b1, b2, b3 = other.coords
        return Quaternion(
            self.params,
            a0 * b0 + al * a1 * b1 + be * a2 * b2 - al * be * a3 * b3,
            a0 * b1 + a1 * b0 - be * a2 * b3 + be * a3 * b2,
            a0 * b2 + a2 * b0 + al * a1 * b3 - al * a3 * b1,
            a0 * b3 + a3 * b0 + a1 * b2 - a2 * b1,
        )

    def __rmul__(self, other):
        if isinstance(other, (int, Fraction)):
            return Quaternion(self.params, *(other * x for x in self))
        return NotImplemented

    def __truediv__(self, other):
        if isinstance(other, (int, Fraction)):
            return Quaternion(self.params, *(x / other for x in self))
        return NotImplemented

    def __bool__(self) -> bool:
        return any(self.coords)

    def is_scalar(self) -> bool:
        return self.c1 == self.c2 == self.c3 == 0

    def conj(self) -> Quaternion:
        return Quaternion(self.params, self.c0, -self.c1, -self.c2, -self.c3)

    def trace(self) -> Fraction:
        return 2 * self.c0

    def norm(self) -> Fraction:
        al, be = self.params.alpha, self.params.beta
        return self.c0 ** 2 - al * self.c1 ** 2 - be * self.c2 ** 2 + al * be * self.c3 ** 2

    def scalar_part(self) -> Fraction:
        return self.c0

    def pure_part(self) -> Quaternion:
        return Quaternion(self.params, 0, self.c1, self.c2, self.c3)

    def inverse(self) -> Quaternion:
        n = self.norm()
        if n == 0:
            raise NotInvertible(f"{self!r} has norm 0 and is a zero divisor")
        return self.conj() / n


def add(a: Quaternion, b: Quaternion) -> Quaternion:
    return a + b


def sub(a: Quaternion, b: Quaternion) -> Quaternion:
    return a - b


def neg(a: Quaternion) -> Quaternion:
    return -a


def scalar_mul(s: Scalar, a: Quaternion) -> Quaternion:
    return Fraction(s) * a


def mul(a: Quaternion, b: Quaternion) -> Quaternion:
    if not isinstance(b, Quaternion):
        raise TypeError("mul expects two quaternions; use scalar_mul for scalars")
    return a * b


def conj(a: Quaternion) -> Quaternion:
    return a.conj()


def trace(a: Quaternion) -> Fraction:
    return a.trace()


def norm(a: Quaternion) -> Fraction:
    return a.norm()


def inverse(a: Quaternion) -> Quaternion:
    return a.inverse()


def quadratic_residual(a: Quaternion) -> Quaternion:
    """a^2 - t(a) a + n(a); zero for every element of the algebra."""
    return a * a - a.trace() * a + a.norm()


class AlgebraClass(enum.Enum):
    DIVISION = "Division"
    SPLIT = "Split"

    def __str__(self) -> str:
        return self.value


_PRIME_LIMIT = 2 ** 63


def is_prime(n: int) -> bool:
    if n < 2:
        return False
    if n % 2 == 0:
        return n == 2
    for d in range(3, isqrt(n) + 1, 2):
        if n % d == 0:
            return False
    return True


def classify_h_minus1_p(p: int) -> AlgebraClass:
    """Split iff p = 1 mod 4, for an odd prime p (the classical criterion)."""
    if not isinstance(p, int) or p <= 2 or p >= _PRIME_LIMIT:
        raise ValueError(f"p must be an odd prime below 2**63, got {p}")
    if not is_prime(p):
        raise ValueError(f"p must be an odd prime, {p} is composite")
    return AlgebraClass.SPLIT if p % 4 == 1 else AlgebraClass.DIVISION


def norm_zero_witness(params: AlgebraParams, height: int) -> Optional[Quaternion]:
    """First nonzero integer vector in [-height, height]^4 (lexicographic) of norm 0."""
    if height < 1:
        raise ValueError(f"height must be >= 1, got {height}")
    al, be = params.alpha, params.beta
    # integral rescaling of the norm form: D * n(x) with D = den(alpha) den(beta)
    d = lcm(al.denominator, be.denominator)
    w0 = d * d
    w1 = -al * d * d
    w2 = -be * d * d
    w3 = al * be * d * d
    w0, w1, w2, w3 = (int(w) for w in (w0, w1, w2, w3))
    rng = range(-height, height + 1)
    sq = {x: x * x for x in rng}
    for x0, x1, x2, x3 in itertools.product(rng, repeat=4):
        if w0 * sq[x0] + w1 * sq[x1] + w2 * sq[x2] + w3 * sq[x3] == 0 and (x0 or x1 or x2 or x3):
            return Quaternion(params, x0, x1, x2, x3)
    return None
