"""
Fibonacci, Lucas and GFL numbers
================================

"""

from gflquat import fib, lucas, gfl, horadam
from gflquat.sequences import IDENTITIES, identity_residual

# the first few terms
print([fib(n) for n in range(12)])
print([lucas(n) for n in range(12)])

# fast doubling keeps big indices cheap; everything stays an exact int
print(len(str(fib(10_000))), "digits in f_10000")

# g_n^{p,q} = p f_{n-1} + q l_n obeys the same recurrence
row = [gfl(n, 3, -2) for n in range(1, 10)]
print(row)
print(all(row[k + 2] == row[k + 1] + row[k] for k in range(len(row) - 2)))

# a Horadam sequence is the recurrence with arbitrary seeds
print([horadam(n, 7, -3) for n in range(8)])

# every catalogued identity has residual 0
for tag, ident in IDENTITIES.items():
    args = (5,) * len(ident.args)
    print(f"{tag:8} {ident.statement:45} residual at {args}: {identity_residual(tag, *args)}")
