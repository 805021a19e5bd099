"""Claim ledger: every checked statement with its outcome and a witness.

Statuses:
  holds    the computation agrees with the statement on the whole grid
  finding  the computation contradicts a statement from the source text
  fails    an invariant this package itself guarantees was violated (a bug)
"""
from __future__ import annotations

import itertools
import random
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Callable, Optional

from . import gfl_quat, lin_solve, order_lattice, quat, sequences
from .quat import AlgebraParams, Quaternion
from .sequences import GFLParams

SCHEMA_VERSION = "1"

HOLDS, FAILS, FINDING = "holds", "fails", "finding"


@dataclass
class Claim:
    id: str
    status: str
    ref: str
    inputs: dict = field(default_factory=dict)
    observed: object = None
    expected: object = None
    note: str = ""


@dataclass
class Report:
    claims: list[Claim] = field(default_factory=list)

    def add(self, claim: Claim) -> Claim:
        self.claims.append(claim)
        return claim

    def count(self, status: str) -> int:
        return sum(c.status == status for c in self.claims)

    @property
    def summary(self) -> dict:
        return {"holds": self.count(HOLDS), "fails": self.count(FAILS), "findings": self.count(FINDING)}

    @property
    def ok(self) -> bool:
        return self.count(FAILS) == 0

    def to_json(self) -> dict:
        return {
            "schemaVersion": SCHEMA_VERSION,
            "claims": [
                {
                    "id": c.id,
                    "status": c.status,
                    "inputs": _decimal(c.inputs),
                    "observed": _decimal(c.observed),
                    "expected": _decimal(c.expected),
                    "paperRef": c.ref,
                }
                for c in self.claims
            ],
            "summary": {k: str(v) for k, v in self.summary.items()},
        }

    def to_text(self) -> str:
        lines = []
        for c in self.claims:
            line = f"{c.status:<8} {c.id}"
            if c.status != HOLDS:
                line += f"  inputs={_fmt(c.inputs)} observed={_fmt(c.observed)} expected={_fmt(c.expected)}"
            if c.note:
                line += f"  ({c.note})"
            lines.append(line)
        s = self.summary
        lines.append(f"summary: holds={s['holds']} fails={s['fails']} findings={s['findings']}")
        return "\n".join(lines) + "\n"


def _decimal(x):
    """Render every number as a decimal string, recursively."""
    if x is None:
        return None
    if isinstance(x, bool):
        return x
    if isinstance(x, (int, Fraction)):
        return str(x)
    if isinstance(x, Quaternion):
        return [str(c) for c in x.coords]
    if isinstance(x, dict):
        return {str(k): _decimal(v) for k, v in x.items()}
    if isinstance(x, (list, tuple)):
        return [_decimal(v) for v in x]
    return str(x)


def _fmt(x) -> str:
    d = _decimal(x)
    if isinstance(d, dict):
        return "{" + ",".join(f"{k}:{_fmt_flat(v)}" for k, v in d.items()) + "}"
    return _fmt_flat(d)


def _fmt_flat(d) -> str:
    if isinstance(d, list):
        return "(" + ",".join(_fmt_flat(v) for v in d) + ")"
    if isinstance(d, dict):
        return _fmt(d)
    return str(d)


def _first_nonzero(points, fn: Callable) -> Optional[tuple]:
    for args in points:
        r = fn(*args)
        if r:
            return args, r
    return None


def _sweep(report: Report, cid: str, ref: str, points, fn, expected=0, grid: str = "") -> None:
    hit = _first_nonzero(points, fn)
    if hit is None:
        report.add(Claim(cid, HOLDS, ref, {"grid": grid}))
    else:
        args, r = hit
        report.add(Claim(cid, FINDING, ref, {"args": list(args)}, r, expected, "nonzero residual"))


def check_identities(report: Report, top: int = 200) -> None:
    for tag, ident in sequences.IDENTITIES.items():
        if tag == "R31":
            pts = [(n, p, q) for n in range(1, top + 1) for p in (-7, -1, 0, 2, 5) for q in (-4, 0, 1, 3)]
            grid = f"n in [1,{top}], p in (-7,-1,0,2,5), q in (-4,0,1,3)"
        elif len(ident.args) == 1:
            pts = [(n,) for n in range(ident.minimum, top + 1)]
            grid = f"n in [{ident.minimum},{top}]"
        else:
            pts = list(itertools.product(range(top + 1), repeat=2))
            grid = f"m,p in [0,{top}]^2"
        ref = ident.statement
        _sweep(report, tag, ref, pts, lambda *a, t=tag: sequences.identity_residual(t, *a), grid=grid)
    bad = [n for n in range(0, 301) if not sequences.fib_parity_check(n)]
    report.add(Claim("P21_xiii", FINDING if bad else HOLDS, "f_n even iff 3 | n",
                     {"grid": "n in [0,300]"}, bad[:1] or None))


def check_remark32(report: Report) -> None:
    H = AlgebraParams(-1, -1)
    bad = [(n, p, q) for n in range(1, 41) for p in range(-3, 4) for q in range(-3, 4)
           if bool(gfl_quat.build(GFLParams(n, p, q), H).value) != ((p, q) != (0, 0))]
    report.add(Claim("R32", FINDING if bad else HOLDS, "G_n^{p,q} = 0 iff p = q = 0",
                     {"grid": "n in [1,40], p,q in [-3,3]"}, bad[:1] or None))
    # asserted value g_1^{p,q} = 2q; the definition p f_0 + q l_1 gives q
    g1 = sequences.gfl(1, 0, 1)
    report.add(Claim("R32_g1", FINDING if g1 != 2 else HOLDS, "g_1^{p,q} = 2q",
                     {"n": 1, "p": 0, "q": 1}, g1, 2, "asserted: g_1^{p,q} = 2q"))


def check_quaternion_laws(report: Report, rng: random.Random, cases: int = 200) -> None:
    def rnd():
        return Fraction(rng.randint(-9, 9), rng.randint(1, 5))

    for ab in [(-1, -1), (-1, 5), (2, 3)]:
        H = AlgebraParams(*ab)
        bad = None
        for _ in range(cases):
            a, b, c = (Quaternion(H, *(rnd() for _ in range(4))) for _ in range(3))
            if (a * b) * c != a * (b * c):
                bad = ("associativity", a, b, c)
            elif (a * b).norm() != a.norm() * b.norm():
                bad = ("norm multiplicativity", a, b)
            elif (a * b).conj() != b.conj() * a.conj():
                bad = ("conjugation", a, b)
            elif quat.quadratic_residual(a):
                bad = ("quadratic", a)
            if bad:
                break
        report.add(Claim(f"QUAT_laws_H({ab[0]},{ab[1]})", FAILS if bad else HOLDS, "associative algebra, multiplicative norm",
                         {"cases": cases}, list(bad) if bad else None))


def check_norm_forms(report: Report, n_top: int = 60) -> None:
    bad_i = bad_ii = None
    for n in range(1, n_top + 1):
        for p in range(1, 20):
            for q in range(-15, 16):
                d = gfl_quat.norm_direct(GFLParams(n, p, q), p)
                if bad_i is None and gfl_quat.norm_closed_form_i(n, p, q) != d:
                    bad_i = ({"n": n, "p": p, "q": q}, gfl_quat.norm_closed_form_i(n, p, q), d)
                if bad_ii is None and gfl_quat.norm_closed_form_ii(n, p, q)[1] != d:
                    bad_ii = ({"n": n, "p": p, "q": q}, gfl_quat.norm_closed_form_ii(n, p, q)[1], d)
    grid = {"grid": f"n in [1,{n_top}], p in [1,19], q in [-15,15]"}
    for cid, bad in (("P31_i", bad_i), ("P31_ii", bad_ii)):
        if bad is None:
            report.add(Claim(cid, HOLDS, "norm closed form " + cid[4:], grid))
        else:
            report.add(Claim(cid, FINDING, "norm closed form " + cid[4:], bad[0], bad[1], bad[2]))


def check_invertibility(report: Report) -> None:
    findings = []
    for p in (5, 13, 17):
        findings += gfl_quat.invertibility_report(p, range(1, 41), range(-30, 31)).findings
    by_claim: dict[str, list] = {}
    for f in findings:
        by_claim.setdefault(f.claim, []).append(f)
    for cid, ref in (("P32_i", "q >= 0: no zero norms"), ("P32_ii", "p = 5, q < 0: zero norm only at (n, q) = (1, -2)"),
                     ("P32_iii", "p > 5, 3 | n: no zero norms"), ("P32_eq34", "norm = p * inner + 5 q^2 f_{2n+1}")):
        hits = by_claim.get(cid, [])
        if not hits:
            report.add(Claim(cid, HOLDS, ref, {"grid": "p in (5,13,17), n in [1,40], q in [-30,30]"}))
        for f in hits:
            report.add(Claim(cid, FINDING, ref, f.inputs, f.observed, f.expected, f.note))
    p5 = gfl_quat.p5_relation_findings(range(1, 11), range(-10, 11))
    coeff = [f for f in p5 if f.claim == "P32_eq35_coefficients"]
    zero_set = [f for f in p5 if f.claim == "P32_eq35_zero_set"]
    if coeff:
        f = next((f for f in coeff if f.inputs["q"] == -2), coeff[0])
        report.add(Claim("P32_eq35_coefficients", FINDING, "stated p = 5 norm relation", f.inputs,
                         f.observed, f.expected,
                         f"{len(coeff)} of 21 q values in [-10,10] disagree; {f.note}"))
    else:
        report.add(Claim("P32_eq35_coefficients", HOLDS, "stated p = 5 norm relation"))
    for f in zero_set:
        report.add(Claim("P32_eq35_zero_set", FINDING, "stated p = 5 norm relation",
                         f.inputs, f.observed, f.expected, f.note))
    if not zero_set:
        report.add(Claim("P32_eq35_zero_set", HOLDS, "stated p = 5 norm relation"))


def check_split_criterion(report: Report) -> None:
    bad = []
    for p in (3, 5, 7, 11, 13, 17):
        kind = quat.classify_h_minus1_p(p)
        height = 5 if kind is quat.AlgebraClass.SPLIT else 10
        w = quat.norm_zero_witness(AlgebraParams(-1, p), height)
        if (w is not None) != (kind is quat.AlgebraClass.SPLIT) or (w is not None and w.norm() != 0):
            bad.append({"p": p, "class": str(kind), "witness": w})
    report.add(Claim("SPLIT_criterion", FAILS if bad else HOLDS, "H(-1,p) splits iff p = 1 mod 4",
                     {"primes": [3, 5, 7, 11, 13, 17]}, bad or None))


def check_order_claims(report: Report, n_max: int = 6, gen_limit: int = 6) -> None:
    ref = "GFL span is an order, free of rank 4"
    coeffs = (-2, -1, 0, 1, 2, 5)
    bad = None
    for n in range(2, 21):
        for m in range(1, n):
            for p, q, p2, q2 in itertools.product(coeffs, repeat=4):
                terms = gfl_quat.thm31_scalar_decomposition(n, m, p, q, p2, q2)
                lhs = 25 * sequences.gfl(n, p, q) * sequences.gfl(m, p2, q2)
                if gfl_quat.decomposition_sum(terms) != lhs:
                    bad = ({"n": n, "m": m, "p": p, "q": q, "p2": p2, "q2": q2},
                           gfl_quat.decomposition_sum(terms), lhs)
                    break
            if bad:
                break
        if bad:
            break
    if bad:
        report.add(Claim("T31_decomposition", FINDING, ref, *bad))
    else:
        report.add(Claim("T31_decomposition", HOLDS, ref, {"grid": "1 <= m < n <= 20, coefficients (-2,-1,0,1,2,5)"}))

    # bilinearity behind the Z-module claim
    bad = [(n, a, b) for n in range(1, 30) for a, b in ((2, -3), (5, 7))
           if sequences.gfl(n, a * 1 + b * 3, a * -2 + b * 4)
           != a * sequences.gfl(n, 1, -2) + b * sequences.gfl(n, 3, 4)]
    report.add(Claim("T31_bilinear", FINDING if bad else HOLDS, ref, {"grid": "n in [1,29]"}, bad or None))

    stabilized = all(order_lattice.is_stabilized(k, inc) for k in range(3, 21) for inc in (False, True))
    report.add(Claim("T31_stabilization", HOLDS if stabilized else FAILS,
                     "generator truncation", {"n_max": "3..20"}))

    basis = order_lattice.gfl_module_basis(n_max, include_one=True)
    report.add(Claim("T31_rank", FINDING if basis.rank != 4 else HOLDS, ref,
                     {"n_max": n_max, "basis": [list(r) for r in basis.rows]}, basis.rank, 4,
                     "claimed: free Z-module of rank 4"))

    for ab in [(-1, -1), (-1, 5), (1, 1), (2, 3)]:
        rep = order_lattice.closure_check(AlgebraParams(*ab), n_max, gen_limit)
        recheck = all((order_lattice.lattice_member(pr.product, rep.basis) is not None) == pr.member
                      for pr in rep.products)
        cid = f"T31_closure_H({ab[0]},{ab[1]})"
        if not recheck:
            report.add(Claim(cid, FAILS, ref, {"alpha": ab[0], "beta": ab[1]}, None, None,
                             "membership re-check disagrees"))
        elif rep.failures:
            w = next((f for f in rep.failures if (f.left, f.right) == ("w0", "w1")), rep.failures[0])
            report.add(Claim(cid, FINDING, ref,
                             {"alpha": ab[0], "beta": ab[1], "left": w.left, "right": w.right},
                             list(w.product), "member of M",
                             f"{len(rep.failures)} of {rep.checked_pairs} products leave the module"))
        else:
            report.add(Claim(cid, HOLDS, ref, {"alpha": ab[0], "beta": ab[1]}))

    # Q-algebra variant: same generators, Q-span
    H = AlgebraParams(-1, -1)
    w = [Quaternion(H, *r) for r in order_lattice.gfl_module_basis(n_max).rows]
    span = [(1, 0, 0, 0), *(r for r in order_lattice.gfl_module_basis(n_max).rows)]
    prod = w[0] * w[1]
    r0 = lin_solve.rank(span)
    r1 = lin_solve.rank([*span, prod.coords])
    report.add(Claim("T31_Q_algebra", FINDING if r1 > r0 else HOLDS, "Q-span closed under multiplication",
                     {"alpha": -1, "beta": -1, "left": "w0", "right": "w1"}, list(prod.coords),
                     "element of the Q-span", f"Q-span dimension {r0} grows to {r1}"))

    report.add(Claim("R33_hurwitz", HOLDS if order_lattice.hurwitz_containment(basis) else FINDING,
                     "inside the Hurwitz order", {"n_max": n_max}))


def check_linear_equations(report: Report, rng: random.Random) -> None:
    H = AlgebraParams(-1, -1)
    i, j = H.basis()[1], H.basis()[2]
    # literal ax = bx: the family does not solve it
    x = lin_solve.solve_ax_xb(i, j).basis_a
    report.add(Claim("EQ36_literal", FINDING if i * x != j * x else HOLDS, "solution family read as a x = b x",
                     {"a": i, "b": j, "x": x}, [i * x, j * x], "a x = b x",
                     "family solves a x = x b, not a x = b x"))

    a, b = H.quaternion(1, 1, 0, 0), H.quaternion(1, 0, 1, 0)
    la, lb = lin_solve.literal_trace_family(a, b)
    report.add(Claim("EQ37_trace_reading", FINDING if (a * la != la * b or a * lb != lb * b) else HOLDS,
                     "solution family with t(a) = 2 a_1", {"a": a, "b": b}, [a * la - la * b, a * lb - lb * b], 0,
                     "with t(a) = 2 a_1 subtracted, the family fails; scalar-part reading used instead"))

    bad = None
    count = 0
    for p_param in (3, 5, 13):
        Hp = AlgebraParams(-1, p_param)
        done = 0
        while done < 20:
            a = Quaternion(Hp, *(rng.randint(-5, 5) for _ in range(4)))
            # a conjugate of a by a random invertible element is similar to a
            y = Quaternion(Hp, *(rng.randint(-5, 5) for _ in range(4)))
            if a.is_scalar() or a.norm() == 0 or y.norm() == 0:
                continue
            b = y.inverse() * a * y
            if a == b.conj():
                continue
            fam = lin_solve.solve_ax_xb(a, b)
            for _ in range(5):
                l1, l2 = Fraction(rng.randint(-9, 9), rng.randint(1, 9)), Fraction(rng.randint(-9, 9), rng.randint(1, 9))
                xx = fam.instance(l1, l2)
                if a * xx != xx * b:
                    bad = {"a": a, "b": b, "l1": l1, "l2": l2}
            done += 1
        count += done
    report.add(Claim("EQ37", FAILS if bad else HOLDS, "solution family of a x = x b", {"pairs": count}, bad))

    G = gfl_quat.gfl_quaternion(3, 13, 2, AlgebraParams(-1, 13))
    report.add(Claim("P33_trace", FINDING if G.trace() != sequences.gfl(3, 13, 2) else HOLDS,
                     "t(G_n^{p,q}) = g_n^{p,q}", {"n": 3, "p": 13, "q": 2}, G.trace(), sequences.gfl(3, 13, 2),
                     "asserted: t(G_n^{p,q}) = g_n^{p,q}; t(a) = 2 a_1 gives 2 g_n"))

    bad_span = bad_comm = bad_group = None
    outside = 0
    for n in range(1, 10):
        for p, q in ((5, 0), (5, -2), (13, 2), (17, -3), (29, 1)):
            spec = GFLParams(n, p, q)
            fam = lin_solve.centralizer_family(spec, p)
            G = gfl_quat.gfl_quaternion(n, p, q, AlgebraParams(-1, p))
            if not lin_solve.same_span([fam.basis_a, fam.basis_b], lin_solve.commutant(G).elements):
                bad_span = bad_span or {"n": n, "p": p, "q": q}
            for l1, l2 in ((1, 0), (0, 1), (Fraction(1, 2), Fraction(-3, 7))):
                x = fam.instance(l1, l2)
                if G * x != x * G:
                    bad_comm = bad_comm or {"n": n, "p": p, "q": q}
                if fam.meta.stated_element(l1, l2) != x:
                    bad_group = bad_group or {"n": n, "p": p, "q": q, "l1": l1, "l2": l2}
            hyp = fam.meta.hypotheses
            if not (hyp["p_gt_5"] and hyp["n_0_mod_3"]):
                outside += 1
    report.add(Claim("EQ38", FAILS if (bad_span or bad_comm) else HOLDS, "centralizer family of G_n^{p,q}",
                     {"specs": 45}, bad_span or bad_comm, None,
                     "family span equals the commutant"))
    report.add(Claim("P33", FINDING if bad_group else HOLDS, "grouped centralizer formula", {"specs": 45}, bad_group, None,
                     f"grouped form also holds at {outside} specs outside p > 5, n = 0 mod 3"
                     if not bad_group else ""))


def verify_all(seed: int = 0) -> Report:
    rng = random.Random(seed)
    report = Report()
    check_identities(report)
    check_remark32(report)
    check_quaternion_laws(report, rng)
    check_norm_forms(report)
    check_invertibility(report)
    check_split_criterion(report)
    check_order_claims(report)
    check_linear_equations(report, rng)
    return report
