"""Integer lattices in Z^4 and the module spanned by GFL quaternions.

Vectors are coordinate 4-tuples on the basis 1, i, j, k.  The canonical form
is the row-style Hermite normal form: positive pivots, each strictly right of
the one above, entries above a pivot reduced into ``[0, pivot)``, zero rows
dropped.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from typing import Iterable, NamedTuple, Optional, Sequence

from .quat import AlgebraParams, Quaternion
from .sequences import gfl

Vector = tuple[int, int, int, int]

DIM = 4


@dataclass(frozen=True)
class HNFBasis:
    rows: tuple[Vector, ...]

    @property
    def rank(self) -> int:
        return len(self.rows)

    @property
    def pivots(self) -> tuple[int, ...]:
        return tuple(next(c for c, x in enumerate(r) if x) for r in self.rows)

    def __contains__(self, x) -> bool:
        return lattice_member(x, self) is not None


def _as_int_vector(v: Iterable) -> list[int]:
    out = []
    for x in v:
        if isinstance(x, Fraction):
            if x.denominator != 1:
                raise ValueError(f"non-integral entry {x}")
            x = x.numerator
        out.append(int(x))
    if len(out) != DIM:
        raise ValueError(f"expected a {DIM}-vector, got length {len(out)}")
    return out


def hnf(rows: Iterable[Sequence[int]]) -> HNFBasis:
    a = [_as_int_vector(r) for r in rows]
    a = [r for r in a if any(r)]
    top = 0
    for col in range(DIM):
        if top == len(a):
            break
        while True:
            live = [r for r in range(top, len(a)) if a[r][col]]
            if not live:
                break
            best = min(live, key=lambda r: abs(a[r][col]))
            a[top], a[best] = a[best], a[top]
            piv = a[top]
            done = True
            for r in range(top + 1, len(a)):
                if a[r][col]:
                    k = a[r][col] // piv[col]
                    a[r] = [x - k * y for x, y in zip(a[r], piv)]
                    if a[r][col]:
                        done = False
            if done:
                break
        if top < len(a) and a[top][col]:
            if a[top][col] < 0:
                a[top] = [-x for x in a[top]]
            piv = a[top]
            for r in range(top):
                k = a[r][col] // piv[col]
                if k:
                    a[r] = [x - k * y for x, y in zip(a[r], piv)]
            top += 1
    return HNFBasis(tuple(tuple(r) for r in a[:top]))


def lattice_member(x: Sequence, basis: HNFBasis) -> Optional[tuple[int, ...]]:
    """Integer coefficients expressing x over the basis rows, or None."""
    try:
        res = _as_int_vector(x)
    except ValueError:
        return None
    coeffs = []
    for row, col in zip(basis.rows, basis.pivots):
        k, rem = divmod(res[col], row[col])
        if rem:
            return None
        coeffs.append(k)
        if k:
            res = [a - k * b for a, b in zip(res, row)]
    if any(res):
        return None
    return tuple(coeffs)


def combine(coeffs: Sequence[int], basis: HNFBasis) -> Vector:
    out = [0] * DIM
    for k, row in zip(coeffs, basis.rows):
        for c in range(DIM):
            out[c] += k * row[c]
    return tuple(out)


ONE: Vector = (1, 0, 0, 0)


def gfl_generators(n_max: int) -> list[tuple[str, Vector]]:
    """The labelled vectors 5 G_n^{1,0}, 5 G_n^{0,1} for 1 <= n <= n_max.

    By bilinearity in (p, q) these generate every 5 G_n^{p,q}.
    """
    out = []
    for n in range(1, n_max + 1):
        for p, q in ((1, 0), (0, 1)):
            out.append((f"5G_{n}^{{{p},{q}}}", tuple(5 * gfl(n + k, p, q) for k in range(DIM))))
    return out


def gfl_module_basis(n_max: int, include_one: bool = False) -> HNFBasis:
    if n_max < 2:
        raise ValueError(f"n_max must be >= 2, got {n_max}")
    rows = [v for _, v in gfl_generators(n_max)]
    if include_one:
        rows.append(ONE)
    return hnf(rows)


def is_stabilized(n_max: int, include_one: bool = False) -> bool:
    """Whether adding the n_max generators left the basis for n_max - 1 unchanged."""
    if n_max < 3:
        raise ValueError(f"n_max must be >= 3 to compare with n_max - 1, got {n_max}")
    return gfl_module_basis(n_max, include_one) == gfl_module_basis(n_max - 1, include_one)


def span_rank(vectors: Iterable[Sequence[int]]) -> int:
    return hnf(vectors).rank


def qspan_dimension(n_max: int, include_one: bool = False) -> int:
    """Dimension over Q of the span of the GFL generators (equal to the Z-rank)."""
    return gfl_module_basis(n_max, include_one).rank


def hurwitz_containment(basis: HNFBasis) -> bool:
    """Every row is an integer quaternion or lies in the all-half-odd coset."""
    for row in basis.rows:
        fr = [Fraction(x) for x in row]
        if all(x.denominator == 1 for x in fr):
            continue
        if all(x.denominator == 2 for x in fr):
            continue
        return False
    return True


class ClosureProduct(NamedTuple):
    left: str
    right: str
    product: tuple[Fraction, ...]
    member: bool
    reason: str


@dataclass
class ClosureReport:
    params: AlgebraParams
    basis: HNFBasis
    products: list[ClosureProduct] = field(default_factory=list)
    unital: bool = False

    @property
    def checked_pairs(self) -> int:
        return len(self.products)

    @property
    def rank(self) -> int:
        return self.basis.rank

    @property
    def failures(self) -> list[ClosureProduct]:
        return [p for p in self.products if not p.member]

    @property
    def closed(self) -> bool:
        return not self.failures


def closure_check(params: AlgebraParams, n_max: int, gen_limit: int) -> ClosureReport:
    """Multiply generator pairs in H(params) and test each product for membership.

    The module is the Z-span of the GFL generators up to ``n_max`` with 1
    adjoined.  Products are taken over 1, the window basis rows (the
    ``include_one=False`` HNF) and the generators up to ``gen_limit``, in
    that order, all ordered pairs.
    """
    basis = gfl_module_basis(n_max, include_one=True)
    gens: list[tuple[str, Vector]] = [("1", ONE)]
    gens += [(f"w{r}", row) for r, row in enumerate(gfl_module_basis(n_max).rows)]
    gens += gfl_generators(gen_limit)
    report = ClosureReport(params, basis, unital=lattice_member(ONE, basis) is not None)
    elements = [(label, Quaternion(params, *v)) for label, v in gens]
    for left, x in elements:
        for right, y in elements:
            prod = (x * y).coords
            if any(c.denominator != 1 for c in prod):
                member, reason = False, "non-integral coordinates"
            elif lattice_member(prod, basis) is None:
                member, reason = False, "not in the Z-span"
            else:
                member, reason = True, ""
            report.products.append(ClosureProduct(left, right, prod, member, reason))
    return report
