"""
Solving ax = xb and centralizers of GFL quaternions
===================================================

"""

from fractions import Fraction

from gflquat import AlgebraParams
from gflquat.gfl_quat import gfl_quaternion
from gflquat.lin_solve import PreconditionError, centralizer_family, commutant, solve_ax_xb
from gflquat.sequences import GFLParams

H = AlgebraParams(-1, -1)
one, i, j, k = H.basis()

# i and j are similar, so ix = xj has a two-parameter family of solutions
fam = solve_ax_xb(i, j)
print(fam.basis_a, "|", fam.basis_b)
x = fam.instance(2, Fraction(-1, 3))
print(x, i * x == x * j)

# b = conj(a) is excluded
try:
    solve_ax_xb(i, -i)
except PreconditionError as exc:
    print("rejected:", exc)

# the commutant, computed independently as a nullspace
print(commutant(H.quaternion(1, 2, 0, 3)).elements)

# centralizer of G_3^{13,2} in H(-1, 13)
spec = GFLParams(3, 13, 2)
G = gfl_quaternion(3, 13, 2, AlgebraParams(-1, 13))
cent = centralizer_family(spec, 13)
print("G =", G)
print(cent.basis_a, "|", cent.basis_b)
y = cent.instance(Fraction(1, 2), 5)
print(y, y * G == G * y)
print(cent.meta.hypotheses)
