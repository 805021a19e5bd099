"""Fibonacci, Lucas, Horadam and generalized Fibonacci-Lucas numbers.

Everything here is exact integer arithmetic.  The identity catalog maps a
short tag to a residual function ``lhs - rhs``; a residual of zero means the
identity holds at that point.
"""
from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from typing import Callable


def _check_index(n: int, minimum: int = 0, name: str = "n") -> None:
    if not isinstance(n, int) or isinstance(n, bool):
        raise TypeError(f"{name} must be an int, got {type(n).__name__}")
    if n < minimum:
        raise ValueError(f"{name} must be >= {minimum}, got {n}")


@lru_cache(maxsize=8192)
def _fib_pair(n: int) -> tuple[int, int]:
    """Return (f_n, f_{n+1}) by fast doubling."""
    if n == 0:
        return 0, 1
    a, b = _fib_pair(n >> 1)
    c = a * (2 * b - a)
    d = a * a + b * b
    if n & 1:
        return d, c + d
    return c, d


def fib(n: int) -> int:
    _check_index(n)
    return _fib_pair(n)[0]


def lucas(n: int) -> int:
    # l_n = 2 f_{n+1} - f_n
    _check_index(n)
    f_n, f_n1 = _fib_pair(n)
    return 2 * f_n1 - f_n


def horadam(n: int, p: int, q: int) -> int:
    """h_0 = p, h_1 = q, h_n = h_{n-1} + h_{n-2}."""
    _check_index(n)
    if n == 0:
        return p
    # h_n = p f_{n-1} + q f_n for n >= 1
    f_prev, f_n = _fib_pair(n - 1)
    return p * f_prev + q * f_n


@dataclass(frozen=True)
class GFLParams:
    """Index and coefficients of a generalized Fibonacci-Lucas number g_n^{p,q}."""

    n: int
    p: int
    q: int

    def __post_init__(self) -> None:
        _check_index(self.n, 1)


def gfl(n: int, p, q):
    """g_n^{p,q} = p f_{n-1} + q l_n, for n >= 1.

    ``p`` and ``q`` may be any exact numbers (ints or Fractions); the map is
    bilinear in them.
    """
    _check_index(n, 1)
    return p * fib(n - 1) + q * lucas(n)


def gfl_number(params: GFLParams) -> int:
    return gfl(params.n, params.p, params.q)


def fib_parity_check(n: int) -> bool:
    """Whether "f_n is even iff n = 0 mod 3" holds at n."""
    _check_index(n)
    return (fib(n) % 2 == 0) == (n % 3 == 0)


def _sgn(e: int) -> int:
    return -1 if e % 2 else 1


@dataclass(frozen=True)
class Identity:
    tag: str
    args: tuple[str, ...]
    minimum: int  # smallest admissible value of every argument
    statement: str
    residual: Callable[..., int]


def _one(tag, minimum, statement, fn):
    return Identity(tag, ("n",), minimum, statement, fn)


def _two(tag, statement, fn):
    return Identity(tag, ("m", "p"), 0, statement, fn)


_f, _l = fib, lucas

IDENTITIES: dict[str, Identity] = {
    ident.tag: ident
    for ident in [
        _one("P21_i", 0, "f_n^2 + f_{n+1}^2 = f_{2n+1}",
             lambda n: _f(n) ** 2 + _f(n + 1) ** 2 - _f(2 * n + 1)),
        _one("P21_ii", 1, "f_{n+1}^2 - f_{n-1}^2 = f_{2n}",
             lambda n: _f(n + 1) ** 2 - _f(n - 1) ** 2 - _f(2 * n)),
        _one("P21_iii", 1, "l_n^2 - f_n^2 = 4 f_{n-1} f_{n+1}",
             lambda n: _l(n) ** 2 - _f(n) ** 2 - 4 * _f(n - 1) * _f(n + 1)),
        _one("P21_iv", 0, "l_n^2 + l_{n+1}^2 = 5 f_{2n+1}",
             lambda n: _l(n) ** 2 + _l(n + 1) ** 2 - 5 * _f(2 * n + 1)),
        _one("P21_v", 1, "l_n^2 = l_{2n} + 2(-1)^n",
             lambda n: _l(n) ** 2 - _l(2 * n) - 2 * _sgn(n)),
        _one("P21_vi", 1, "f_{n+1} + f_{n-1} = l_n",
             lambda n: _f(n + 1) + _f(n - 1) - _l(n)),
        _one("P21_vii", 0, "l_n + l_{n+2} = 5 f_{n+1}",
             lambda n: _l(n) + _l(n + 2) - 5 * _f(n + 1)),
        _one("P21_viii", 0, "f_n + f_{n+4} = 3 f_{n+2}",
             lambda n: _f(n) + _f(n + 4) - 3 * _f(n + 2)),
        _two("P21_ix", "f_m l_{m+p} = f_{2m+p} + (-1)^{m+1} f_p",
             lambda m, p: _f(m) * _l(m + p) - _f(2 * m + p) - _sgn(m + 1) * _f(p)),
        _two("P21_x", "f_{m+p} l_m = f_{2m+p} + (-1)^m f_p",
             lambda m, p: _f(m + p) * _l(m) - _f(2 * m + p) - _sgn(m) * _f(p)),
        # scaled by 5 to stay integral
        _two("P21_xi", "5 f_m f_{m+p} = l_{2m+p} + (-1)^{m+1} l_p",
             lambda m, p: 5 * _f(m) * _f(m + p) - _l(2 * m + p) - _sgn(m + 1) * _l(p)),
        _two("P21_xii", "l_m l_p + 5 f_m f_p = 2 l_{m+p}",
             lambda m, p: _l(m) * _l(p) + 5 * _f(m) * _f(p) - 2 * _l(m + p)),
        _two("P22", "l_m l_{m+p} = l_{2m+p} + (-1)^m l_p",
             lambda m, p: _l(m) * _l(m + p) - _l(2 * m + p) - _sgn(m) * _l(p)),
        Identity("R31", ("n", "p", "q"), 1, "p f_{n+1} + q l_n = g_n^{p,q} + g_{n+1}^{p,0}",
                 lambda n, p, q: p * _f(n + 1) + q * _l(n) - gfl(n, p, q) - gfl(n + 1, p, 0)),
    ]
}


def identity_residual(tag: str, *args: int) -> int:
    """Evaluate ``lhs - rhs`` of the identity ``tag`` at ``args``.

    >>> identity_residual("P21_v", 3)
    0
    """
    try:
        ident = IDENTITIES[tag]
    except KeyError:
        raise ValueError(f"unknown identity {tag!r}") from None
    if len(args) != len(ident.args):
        raise ValueError(f"{tag} takes {len(ident.args)} arguments {ident.args}, got {len(args)}")
    # R31's p, q are free integers; only the index is constrained
    constrained = ident.args[:1] if tag == "R31" else ident.args
    for name, value in zip(constrained, args):
        _check_index(value, ident.minimum, name)
    return ident.residual(*args)
