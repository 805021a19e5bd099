"""Exact generalized quaternion algebras and generalized Fibonacci-Lucas quaternions."""
from .quat import AlgebraClass, AlgebraParams, NotInvertible, Quaternion
from .sequences import GFLParams, fib, gfl, gfl_number, horadam, lucas

__all__ = [
    "AlgebraClass",
    "AlgebraParams",
    "GFLParams",
    "NotInvertible",
    "Quaternion",
    "fib",
    "gfl",
    "gfl_number",
    "horadam",
    "lucas",
]

__version__ = "0.1.0"
