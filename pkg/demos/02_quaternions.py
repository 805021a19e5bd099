"""
Arithmetic in H(alpha, beta)
============================

"""

from fractions import Fraction

from gflquat import AlgebraParams, NotInvertible

H = AlgebraParams(-1, -1)
one, i, j, k = H.basis()

# the multiplication table
for x, xn in zip(H.basis(), "1ijk"):
    print(xn, " ".join(f"{str(x * y):>12}" for y in H.basis()))

a = H.quaternion(1, 0, 1, 1)
b = H.quaternion(0, 1, 1, 2)
print("a*b =", a * b, "  b*a =", b * a)

# a satisfies x^2 - t(a) x + n(a) = 0
print(a * a - a.trace() * a + a.norm())

# coordinates are Fractions, so inverses are exact
c = H.quaternion(Fraction(1, 2), 3, -1, Fraction(2, 7))
print(c.inverse(), c * c.inverse() == one)

# in H(-1, 5) some nonzero elements have norm 0
S = AlgebraParams(-1, 5)
z = S.quaternion(1, 2, 1, 0)
print("n(z) =", z.norm())
try:
    z.inverse()
except NotInvertible as exc:
    print(exc)
