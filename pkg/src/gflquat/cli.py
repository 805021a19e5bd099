"""Command-line front end.

    gflquat seq fib N | lucas N | horadam N P Q | gfl N P Q
    gflquat quat mul|norm|inverse --alpha A --beta B C0 C1 C2 C3 [D0 D1 D2 D3]
    gflquat gfl norm N P Q --pp P_PARAM [--closed-form i|ii]
    gflquat order check --alpha A --beta B --nmax K --genlimit L [--json]
    gflquat solve centralizer N P Q --pp P_PARAM
    gflquat verify all [--json]

Exit status: 0 success, 1 an asserted invariant failed, 2 usage error.
"""
from __future__ import annotations

import argparse
import json
import re
import sys
from fractions import Fraction
from typing import Optional, Sequence, TextIO

from . import gfl_quat, lin_solve, order_lattice, sequences, verify
from .quat import AlgebraParams, NotInvertible, Quaternion
from .sequences import GFLParams

# negative integers and rationals such as -1/2 are values, not flags
_NEGATIVE = re.compile(r"^-\d+(/\d+)?$")


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def __init__(self, *args, **kwargs) -> None:
        super().__init__(*args, **kwargs)
        self._negative_number_matcher = _NEGATIVE

    def error(self, message: str):
        raise UsageError(f"{self.prog}: {message}")


def _rational(text: str) -> Fraction:
    try:
        return Fraction(text)
    except (ValueError, ZeroDivisionError):
        raise argparse.ArgumentTypeError(f"not a rational number: {text!r}") from None


def _integer(text: str) -> int:
    try:
        return int(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"not an integer: {text!r}") from None


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="gflquat", description="Exact GFL quaternion arithmetic and claim checks.")
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)

    seq = sub.add_parser("seq", help="sequence values")
    seq.add_argument("kind", choices=["fib", "lucas", "horadam", "gfl"])
    seq.add_argument("args", nargs="+", type=_integer)

    q = sub.add_parser("quat", help="quaternion arithmetic in H(alpha, beta)")
    q.add_argument("op", choices=["mul", "norm", "inverse"])
    q.add_argument("--alpha", type=_rational, required=True)
    q.add_argument("--beta", type=_rational, required=True)
    q.add_argument("coords", nargs="+", type=_rational)

    g = sub.add_parser("gfl", help="norms of GFL quaternions in H(-1, P_PARAM)")
    g.add_argument("op", choices=["norm"])
    g.add_argument("n", type=_integer)
    g.add_argument("p", type=_integer)
    g.add_argument("q", type=_integer)
    g.add_argument("--pp", type=_integer, required=True)
    g.add_argument("--closed-form", choices=["i", "ii"])

    o = sub.add_parser("order", help="module and closure checks")
    o.add_argument("op", choices=["check"])
    o.add_argument("--alpha", type=_rational, required=True)
    o.add_argument("--beta", type=_rational, required=True)
    o.add_argument("--nmax", type=_integer, required=True)
    o.add_argument("--genlimit", type=_integer, required=True)
    o.add_argument("--json", action="store_true")

    s = sub.add_parser("solve", help="centralizer families")
    s.add_argument("op", choices=["centralizer"])
    s.add_argument("n", type=_integer)
    s.add_argument("p", type=_integer)
    s.add_argument("q", type=_integer)
    s.add_argument("--pp", type=_integer, required=True)

    v = sub.add_parser("verify", help="run the full claim ledger")
    v.add_argument("scope", choices=["all"])
    v.add_argument("--json", action="store_true")
    return parser


def _quat_line(x: Quaternion) -> str:
    return " ".join(str(c) for c in x.coords)


def _cmd_seq(args, out: TextIO) -> int:
    arity = {"fib": 1, "lucas": 1, "horadam": 3, "gfl": 3}[args.kind]
    if len(args.args) != arity:
        raise UsageError(f"seq {args.kind} takes {arity} argument(s), got {len(args.args)}")
    fn = {"fib": sequences.fib, "lucas": sequences.lucas,
          "horadam": sequences.horadam, "gfl": sequences.gfl}[args.kind]
    print(fn(*args.args), file=out)
    return 0


def _cmd_quat(args, out: TextIO) -> int:
    H = AlgebraParams(args.alpha, args.beta)
    want = 8 if args.op == "mul" else 4
    if len(args.coords) != want:
        raise UsageError(f"quat {args.op} takes {want} coordinates, got {len(args.coords)}")
    a = Quaternion(H, *args.coords[:4])
    if args.op == "mul":
        print(_quat_line(a * Quaternion(H, *args.coords[4:])), file=out)
    elif args.op == "norm":
        print(a.norm(), file=out)
    else:
        print(_quat_line(a.inverse()), file=out)
    return 0


def _cmd_gfl(args, out: TextIO) -> int:
    spec = GFLParams(args.n, args.p, args.q)
    if args.closed_form is None:
        print(gfl_quat.norm_direct(spec, args.pp), file=out)
        return 0
    if args.pp != args.p:
        raise UsageError("closed forms assume the algebra H(-1, p); --pp must equal P")
    if args.closed_form == "i":
        print(gfl_quat.norm_closed_form_i(args.n, args.p, args.q), file=out)
    else:
        (a, b), value = gfl_quat.norm_closed_form_ii(args.n, args.p, args.q)
        print(value, file=out)
        print(f"a={a} b={b}", file=out)
    return 0


CLAIMED_RANK = 4


def _cmd_order(args, out: TextIO) -> int:
    H = AlgebraParams(args.alpha, args.beta)
    rep = order_lattice.closure_check(H, args.nmax, args.genlimit)
    recheck = all((order_lattice.lattice_member(p.product, rep.basis) is not None) == p.member
                  for p in rep.products)
    if args.json:
        doc = {
            "schemaVersion": verify.SCHEMA_VERSION,
            "algebra": {"alpha": str(H.alpha), "beta": str(H.beta)},
            "nmax": str(args.nmax),
            "genlimit": str(args.genlimit),
            "basis": [[str(x) for x in r] for r in rep.basis.rows],
            "rank": str(rep.rank),
            "claimedRank": str(CLAIMED_RANK),
            "rankFinding": rep.rank != CLAIMED_RANK,
            "unital": rep.unital,
            "checkedPairs": str(rep.checked_pairs),
            "failures": [
                {"left": f.left, "right": f.right, "product": [str(c) for c in f.product], "reason": f.reason}
                for f in rep.failures
            ],
        }
        print(json.dumps(doc, indent=2), file=out)
    else:
        print(f"algebra: {H}", file=out)
        print(f"module basis (rank {rep.rank}):", file=out)
        for r in rep.basis.rows:
            print("  " + " ".join(str(x) for x in r), file=out)
        print(f"unital: {'yes' if rep.unital else 'no'}", file=out)
        print(f"claimed rank: {CLAIMED_RANK}", file=out)
        if rep.rank != CLAIMED_RANK:
            print(f"finding: computed rank {rep.rank} differs from claimed rank {CLAIMED_RANK}", file=out)
        print(f"checked pairs: {rep.checked_pairs}", file=out)
        print(f"closure failures: {len(rep.failures)}", file=out)
        for f in rep.failures:
            print(f"  {f.left} * {f.right} = {' '.join(str(c) for c in f.product)}  ({f.reason})", file=out)
    return 0 if recheck else 1


def _cmd_solve(args, out: TextIO) -> int:
    fam = lin_solve.centralizer_family(GFLParams(args.n, args.p, args.q), args.pp)
    m = fam.meta
    print(f"basisA: {_quat_line(fam.basis_a)}", file=out)
    print(f"basisB: {_quat_line(fam.basis_b)}", file=out)
    print(f"gamma: {m.gamma_per_lambda1}*l1", file=out)
    print(f"delta: {m.delta_per_lambda1}*l1", file=out)
    c2 = m.offset_per_lambda2
    print(f"offset: {m.offset_per_lambda1}*l1 {'-' if c2 < 0 else '+'} {abs(c2)}*l2", file=out)
    print(f"A: {m.A}", file=out)
    for k, v in m.hypotheses.items():
        print(f"hypothesis {k}: {'yes' if v else 'no'}", file=out)
    return 0


def main(argv: Optional[Sequence[str]] = None, out: TextIO = None, err: TextIO = None) -> int:
    out = out or sys.stdout
    err = err or sys.stderr
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
        if args.command == "verify":
            report = verify.verify_all()
            if args.json:
                print(json.dumps(report.to_json(), indent=2), file=out)
            else:
                out.write(report.to_text())
            return 0 if report.ok else 1
        handler = {"seq": _cmd_seq, "quat": _cmd_quat, "gfl": _cmd_gfl,
                   "order": _cmd_order, "solve": _cmd_solve}[args.command]
        return handler(args, out)
    except UsageError as e:
        print(str(e), file=err)
        return 2
    except NotInvertible as e:
        print(f"NotInvertible: {e}", file=err)
        return 2
    except (ValueError, TypeError) as e:
        print(f"error: {e}", file=err)
        return 2


def run(argv: Sequence[str]) -> int:
    return main(argv)


if __name__ == "__main__":
    sys.exit(main())
