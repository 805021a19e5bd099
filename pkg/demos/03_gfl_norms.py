"""
Norms of GFL quaternions and the recorded findings
==================================================

"""

from gflquat import AlgebraParams
from gflquat.gfl_quat import (
    p5_relation_findings,
    gfl_quaternion,
    invertibility_report,
    norm_closed_form_i,
    norm_closed_form_ii,
)
from gflquat.quat import classify_h_minus1_p, norm_zero_witness

G = gfl_quaternion(1, 1, 0, AlgebraParams(-1, 5))
print("G_1^{1,0} =", G, " norm", G.norm())

# three routes to the same integer
for n, p, q in [(1, 5, 1), (2, 13, 0), (7, 17, -4)]:
    direct = gfl_quaternion(n, p, q, AlgebraParams(-1, p)).norm()
    coeffs, value = norm_closed_form_ii(n, p, q)
    print(n, p, q, direct, norm_closed_form_i(n, p, q), value, coeffs)

# H(-1, p) splits exactly when p = 1 mod 4
for p in (3, 5, 7, 13):
    print(p, classify_h_minus1_p(p).value, norm_zero_witness(AlgebraParams(-1, p), 5))

# sweep p = 5, q < 0: any disagreement with the stated zero set is a finding
rep = invertibility_report(5, range(1, 11), range(-10, 0))
print("zeros found:", [(e.n, e.q) for e in rep.zeros])
for f in rep.findings:
    print(f.claim, f.inputs, "observed", f.observed, "expected", f.expected)

for f in p5_relation_findings([1], [-2]):
    print(f.claim, f.inputs, f.observed, f.expected)
