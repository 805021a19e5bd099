"""
The Z-module spanned by GFL quaternions
=======================================

"""

from gflquat import AlgebraParams
from gflquat.order_lattice import closure_check, gfl_generators, gfl_module_basis, hnf, lattice_member

# 5 G_n^{1,0} and 5 G_n^{0,1} have integer coordinates
for label, v in gfl_generators(3):
    print(f"{label:14} {v}")

# the span is only rank 2: every window lies in {(a, b, a+b, a+2b)}
print(gfl_module_basis(20).rows)
print(gfl_module_basis(20, include_one=True).rows)

# HNF is canonical: a different generating set of the same lattice reduces identically
print(hnf([(1, 0, 0, 0), (0, 5, 5, 10), (0, 0, 5, 5)]) == gfl_module_basis(20, include_one=True))

basis = gfl_module_basis(6, include_one=True)
print(lattice_member((3, 10, 5, 15), basis), lattice_member((0, 1, 0, 0), basis))

# products of generators leave the span, so it is not closed under multiplication
rep = closure_check(AlgebraParams(-1, -1), 6, 2)
print("rank", rep.rank, "pairs", rep.checked_pairs, "failures", len(rep.failures))
for fail in rep.failures[:5]:
    print(f"  {fail.left} * {fail.right} =", *fail.product, f" ({fail.reason})")
