"""Generalized Fibonacci-Lucas quaternions and their norm formulas.

``G_n^{p,q}`` has coordinates ``(g_n, g_{n+1}, g_{n+2}, g_{n+3})``.  The norm
computed straight from the quadratic form is the ground truth; the closed
forms and the invertibility statements are treated as claims and compared
against it.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from typing import Iterable, NamedTuple

from .quat import AlgebraParams, Quaternion, is_prime
from .sequences import GFLParams, fib, gfl, lucas


@dataclass(frozen=True)
class GFLQuaternion:
    spec: GFLParams
    params: AlgebraParams
    value: Quaternion


def window(n: int, p, q) -> tuple:
    return tuple(gfl(n + k, p, q) for k in range(4))


def build(spec: GFLParams, params: AlgebraParams) -> GFLQuaternion:
    return GFLQuaternion(spec, params, Quaternion(params, *window(spec.n, spec.p, spec.q)))


def gfl_quaternion(n: int, p, q, params: AlgebraParams) -> Quaternion:
    """Shortcut for ``build(...).value``; p and q may be rationals."""
    return Quaternion(params, *window(n, p, q))


def h_minus1(p_param: int) -> AlgebraParams:
    return AlgebraParams(-1, p_param)


def norm_direct(spec: GFLParams, p_param: int) -> int:
    """n(G_n^{p,q}) in H(-1, p_param), evaluated from the quadratic form."""
    value = build(spec, h_minus1(p_param)).value.norm()
    assert value.denominator == 1
    return int(value)


def _coef_f_2n_minus_1(p: int, q: int) -> int:
    return p ** 3 + p ** 2 + 8 * p ** 2 * q + 15 * p * q ** 2 + 2 * p * q


def _coef_b(p: int, q: int) -> int:
    return -3 * p ** 3 + 5 * q ** 2 - 22 * p ** 2 * q - 40 * p * q ** 2 + 2 * p * q


def norm_closed_form_i(n: int, p: int, q: int) -> int:
    if n < 1:
        raise ValueError(f"n must be >= 1, got {n}")
    return _coef_f_2n_minus_1(p, q) * fib(2 * n - 1) + _coef_b(p, q) * fib(2 * n + 1)


class NormCoefficients(NamedTuple):
    a: int
    b: int


def norm_coefficients(p: int, q: int) -> NormCoefficients:
    a = 4 * p ** 3 + p ** 2 + 30 * p ** 2 * q + 55 * p * q ** 2 - 5 * q ** 2
    return NormCoefficients(a, _coef_b(p, q))


def norm_closed_form_ii(n: int, p: int, q: int) -> tuple[NormCoefficients, int]:
    """The norm as g_{2n}^{a,b} = a f_{2n-1} + b l_{2n}."""
    if n < 1:
        raise ValueError(f"n must be >= 1, got {n}")
    coeffs = norm_coefficients(p, q)
    return coeffs, gfl(2 * n, coeffs.a, coeffs.b)


class DecompositionTerm(NamedTuple):
    """The summand 5 * g_index^{pcoef, qcoef}."""

    index: int
    pcoef: int
    qcoef: int

    def value(self) -> int:
        return 5 * gfl(self.index, self.pcoef, self.qcoef)


def thm31_scalar_decomposition(n: int, m: int, p: int, q: int, p2: int, q2: int) -> list[DecompositionTerm]:
    """Six-term expansion of 5 g_n^{p,q} * 5 g_m^{p2,q2}, valid for 1 <= m < n."""
    if not 1 <= m < n:
        raise ValueError(f"decomposition needs 1 <= m < n, got m={m}, n={n}")
    s = -1 if m % 2 else 1
    return [
        DecompositionTerm(m + n - 2, 5 * p2 * q, p * p2),
        DecompositionTerm(m + n - 1, 5 * p2 * q, 0),
        DecompositionTerm(n - m, 5 * p2 * q * s, p * p2 * s),
        DecompositionTerm(n - m + 1, 5 * p2 * q * s, 0),
        DecompositionTerm(m + n, 5 * p * q2, 5 * q * q2),
        DecompositionTerm(n - m, 5 * p * q2 * s, 5 * q * q2 * s),
    ]


def decomposition_sum(terms: Iterable[DecompositionTerm]) -> int:
    return sum(t.value() for t in terms)


def remark31_residual(n: int, p: int, q: int) -> int:
    if n < 1:
        raise ValueError(f"n must be >= 1, got {n}")
    return p * fib(n + 1) + q * lucas(n) - gfl(n, p, q) - gfl(n + 1, p, 0)


@dataclass(frozen=True)
class Finding:
    """A place where the computation disagrees with a stated claim."""

    claim: str
    inputs: dict
    observed: object
    expected: object
    note: str = ""


class NormEntry(NamedTuple):
    n: int
    q: int
    norm: int
    is_zero: bool


@dataclass
class InvertibilityReport:
    p: int
    entries: list[NormEntry] = field(default_factory=list)
    findings: list[Finding] = field(default_factory=list)

    @property
    def zeros(self) -> list[NormEntry]:
        return [e for e in self.entries if e.is_zero]


def _claimed_nonzero(p: int, n: int, q: int) -> tuple[str, bool] | None:
    """Which invertibility statement covers (p, n, q), and the norm it predicts.

    Returns (claim id, predicted nonzero) or None when no statement applies.
    """
    if q >= 0:
        return "P32_i", True
    if p == 5:
        # (ii) excludes (1, -2), asserting the norm vanishes there
        return "P32_ii", (n, q) != (1, -2)
    if p > 5 and n % 3 == 0:
        return "P32_iii", True
    return None


def invertibility_report(p: int, n_range: Iterable[int], q_range: Iterable[int]) -> InvertibilityReport:
    """Tabulate n(G_n^{p,q}) in H(-1, p) and compare zero/nonzero status with the claims."""
    if not (isinstance(p, int) and p > 2 and p % 4 == 1 and is_prime(p)):
        raise ValueError(f"p must be an odd prime = 1 mod 4, got {p}")
    report = InvertibilityReport(p)
    q_values = list(q_range)
    for n in n_range:
        for q in q_values:
            value = norm_direct(GFLParams(n, p, q), p)
            report.entries.append(NormEntry(n, q, value, value == 0))
            claim = _claimed_nonzero(p, n, q)
            if claim is not None:
                cid, nonzero = claim
                if nonzero != (value != 0):
                    report.findings.append(Finding(
                        cid, {"p": p, "n": n, "q": q}, value,
                        "nonzero" if nonzero else 0,
                        "direct norm contradicts the stated zero/nonzero status",
                    ))
            # n(G) = p * X + 5 q^2 f_{2n+1}: the split behind "p | 5 q^2 f_{2n+1}"
            inner = ((p * p + p + 8 * p * q + 15 * q * q + 2 * q) * fib(2 * n - 1)
                     + (-3 * p * p - 22 * p * q - 40 * q * q + 2 * q) * fib(2 * n + 1))
            if p * inner + 5 * q * q * fib(2 * n + 1) != value:
                report.findings.append(Finding(
                    "P32_eq34", {"p": p, "n": n, "q": q},
                    value, p * inner + 5 * q * q * fib(2 * n + 1),
                    "rearranged norm does not match the direct norm",
                ))
    return report


# The p = 5 specialisation as stated: zero test on
#   (5q^2 + 10q + 30) f_{2n-1} - (39q^2 + 108q + 75) f_{2n+1}
def p5_relation_stated(n: int, q: int) -> int:
    return (5 * q * q + 10 * q + 30) * fib(2 * n - 1) - (39 * q * q + 108 * q + 75) * fib(2 * n + 1)


def p5_relation_findings(n_range: Iterable[int], q_range: Iterable[int]) -> list[Finding]:
    """Compare the stated p = 5 relation with closed form (i) at p = 5.

    Two kinds of finding: coefficient mismatches (closed form (i) at p = 5,
    divided by 5, versus the stated polynomials) and points where the stated
    relation's zero set disagrees with the direct norm.
    """
    findings = []
    q_values = list(q_range)
    for q in q_values:
        c1, c2 = _coef_f_2n_minus_1(5, q), _coef_b(5, q)
        assert c1 % 5 == 0 and c2 % 5 == 0
        derived = (c1 // 5, -(c2 // 5))
        stated = (5 * q * q + 10 * q + 30, 39 * q * q + 108 * q + 75)
        if derived != stated:
            findings.append(Finding(
                "P32_eq35_coefficients", {"p": 5, "q": q}, list(derived), list(stated),
                "coefficients of (f_{2n-1}, -f_{2n+1}) obtained by setting p = 5 in closed form (i)",
            ))
    for n in n_range:
        for q in q_values:
            direct = norm_direct(GFLParams(n, 5, q), 5)
            if (p5_relation_stated(n, q) == 0) != (direct == 0):
                findings.append(Finding(
                    "P32_eq35_zero_set", {"p": 5, "n": n, "q": q},
                    direct, "0" if p5_relation_stated(n, q) == 0 else "nonzero",
                    "stated relation and direct norm disagree on vanishing",
                ))
    return findings
