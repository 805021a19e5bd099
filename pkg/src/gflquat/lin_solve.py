"""Linear equations in H(alpha, beta): commutants, ax = xb, GFL centralizers.

In the solution formulas, ``a - t(a)`` denotes ``a`` with its scalar part
removed.  That is the reading under which the two-parameter family actually
solves ``ax = xb``; subtracting the full trace ``2 a_0`` does not (see
``literal_trace_family``).
"""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Optional, Sequence

from .gfl_quat import gfl_quaternion, h_minus1, norm_coefficients
from .quat import AlgebraParams, Quaternion, is_prime
from .sequences import GFLParams, gfl, lucas


def rref(rows: Sequence[Sequence]) -> tuple[list[list[Fraction]], list[int]]:
    m = [[Fraction(x) for x in r] for r in rows]
    pivots = []
    top = 0
    ncols = len(m[0]) if m else 0
    for col in range(ncols):
        hit = next((r for r in range(top, len(m)) if m[r][col] != 0), None)
        if hit is None:
            continue
        m[top], m[hit] = m[hit], m[top]
        piv = m[top][col]
        m[top] = [x / piv for x in m[top]]
        for r in range(len(m)):
            if r != top and m[r][col] != 0:
                k = m[r][col]
                m[r] = [x - k * y for x, y in zip(m[r], m[top])]
        pivots.append(col)
        top += 1
        if top == len(m):
            break
    return m, pivots


def rank(vectors: Sequence[Sequence]) -> int:
    if not vectors:
        return 0
    return len(rref(vectors)[1])


def nullspace(matrix: Sequence[Sequence]) -> list[list[Fraction]]:
    m, pivots = rref(matrix)
    ncols = len(matrix[0])
    free = [c for c in range(ncols) if c not in pivots]
    basis = []
    for f in free:
        v = [Fraction(0)] * ncols
        v[f] = Fraction(1)
        for row, pc in zip(m, pivots):
            v[pc] = -row[f]
        basis.append(v)
    return basis


@dataclass(frozen=True)
class CommutantBasis:
    element: Quaternion
    elements: tuple[Quaternion, ...]

    @property
    def dimension(self) -> int:
        return len(self.elements)


def commutant(a: Quaternion) -> CommutantBasis:
    """Basis of {x : ax = xa}, the kernel of x -> ax - xa."""
    images = [a * e - e * a for e in a.params.basis()]
    matrix = [[img.coords[r] for img in images] for r in range(4)]
    elements = tuple(Quaternion(a.params, *v) for v in nullspace(matrix))
    return CommutantBasis(a, elements)


@dataclass(frozen=True)
class CentralizerMeta:
    """Bookkeeping for the centralizer written as G_n^{gamma,delta} + Lambda.

    gamma and delta are linear in lambda_1 (gamma = gamma_per_lambda1 * l1).
    Lambda is linear in (lambda_1, lambda_2) with the stored coefficients.
    ``stated_offset`` is None unless the algebra is H(-1, p) with the same p as
    the GFL coefficients, which the grouped expression assumes.
    """

    spec: GFLParams
    p_param: int
    gamma_per_lambda1: int
    delta_per_lambda1: int
    offset_per_lambda1: Fraction
    offset_per_lambda2: Fraction
    A: Fraction
    stated_offset: Optional[tuple[Fraction, Fraction]]
    hypotheses: dict

    def offset(self, l1, l2) -> Fraction:
        return self.offset_per_lambda1 * l1 + self.offset_per_lambda2 * l2

    def stated_element(self, l1, l2) -> Optional[Quaternion]:
        """G_n^{gamma,delta} + Lambda using the grouped offset, when available."""
        if self.stated_offset is None:
            return None
        l1, l2 = Fraction(l1), Fraction(l2)
        g = gfl_quaternion(self.spec.n, self.gamma_per_lambda1 * l1,
                           self.delta_per_lambda1 * l1, h_minus1(self.p_param))
        return g + (self.stated_offset[0] * l1 + self.stated_offset[1] * l2)


@dataclass(frozen=True)
class SolutionFamily:
    """{l1 * basis_a + l2 * basis_b : l1, l2 rational}."""

    basis_a: Quaternion
    basis_b: Quaternion
    meta: Optional[CentralizerMeta] = None

    def instance(self, l1, l2) -> Quaternion:
        return Fraction(l1) * self.basis_a + Fraction(l2) * self.basis_b

    @property
    def params(self) -> AlgebraParams:
        return self.basis_a.params


class PreconditionError(ValueError):
    pass


def _family(a: Quaternion, b: Quaternion) -> tuple[Quaternion, Quaternion]:
    u, v = a.pure_part(), b.pure_part()
    return u + v, u.norm() - u * v


def solve_ax_xb(a: Quaternion, b: Quaternion) -> SolutionFamily:
    """Two-parameter solution family of ax = xb.

    Requires a, b non-scalar with a != conj(b), nonzero norms, and a, b
    similar (equal scalar parts and equal norms).  Without similarity the
    only solution with invertible x is x = 0 and the formula does not apply.
    """
    if a.params != b.params:
        raise PreconditionError("a and b live in different algebras")
    if a.is_scalar() or b.is_scalar():
        raise PreconditionError("a and b must not be scalars")
    if a == b.conj():
        raise PreconditionError("a must differ from conj(b)")
    if a.norm() == 0 or b.norm() == 0:
        raise PreconditionError("n(a) and n(b) must be nonzero")
    if a.scalar_part() != b.scalar_part() or a.norm() != b.norm():
        raise PreconditionError("a and b must be similar: equal scalar parts and equal norms")
    return SolutionFamily(*_family(a, b))


def literal_trace_family(a: Quaternion, b: Quaternion) -> tuple[Quaternion, Quaternion]:
    """The same formula with a - t(a) read as a - 2 a_0 (full trace)."""
    ua, ub = a - a.trace(), b - b.trace()
    return ua + ub, ua.norm() - ua * ub


def centralizer_family(spec: GFLParams, p_param: int) -> SolutionFamily:
    """Centralizer of G_n^{p,q} in H(-1, p_param) from the a = b family.

    The stated hypotheses (p prime = 1 mod 4, p > 5, n = 0 mod 3) are only
    recorded in ``meta.hypotheses``; the formula is evaluated regardless.
    """
    n, p, q = spec.n, spec.p, spec.q
    if (p, q) == (0, 0):
        raise PreconditionError("G_n^{0,0} = 0 is scalar; its centralizer is everything")
    G = gfl_quaternion(n, p, q, h_minus1(p_param))
    u = G.pure_part()
    basis_a = 2 * u
    basis_b = G.params.one() * (2 * u.norm())

    sign = -1 if n % 2 else 1
    A = Fraction(2 * p * p, 5) * sign + 2 * q * q * sign + 2 * p * q * sign
    stated_offset = None
    if p_param == p:
        a, b = norm_coefficients(p, q)
        per_l2 = (gfl(2 * n, 2 * a - 4 * p * q, 2 * b - 2 * q * q)
                  - 2 * Fraction(p * p, 5) * lucas(2 * n - 2) - 2 * A)
        stated_offset = (Fraction(gfl(n, -2 * p, -2 * q)), per_l2)
    meta = CentralizerMeta(
        spec=spec,
        p_param=p_param,
        gamma_per_lambda1=2 * p,
        delta_per_lambda1=2 * q,
        offset_per_lambda1=Fraction(-2 * G.c0),
        offset_per_lambda2=2 * u.norm(),
        A=A,
        stated_offset=stated_offset,
        hypotheses={
            "p_is_prime_1_mod_4": p == p_param and p > 2 and p % 4 == 1 and is_prime(p),
            "p_gt_5": p > 5,
            "n_0_mod_3": n % 3 == 0,
        },
    )
    return SolutionFamily(basis_a, basis_b, meta)


def same_span(xs: Sequence[Quaternion], ys: Sequence[Quaternion]) -> bool:
    rx = rank([x.coords for x in xs])
    ry = rank([y.coords for y in ys])
    return rx == ry == rank([v.coords for v in [*xs, *ys]])
