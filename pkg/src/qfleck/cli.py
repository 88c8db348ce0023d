"""Command-line front end.

Exit codes: 0 on success or a passing check, 1 on a failed check or a
theorem-falsifying arithmetic error, 2 on usage errors.
"""
from __future__ import annotations

import argparse
import json
import os
import sys

from .bigpoly import parse_poly
from .cycring import ctx_new, parse_cpoly
from .errors import NotDivisible, PolyParseError
from .flecksums import (
    SumSpec,
    factor_report,
    fleck_sum,
    format_factor_report,
    predicted_exponents,
    q_sum,
)
from .qbinomial import qbinom_deriv
from . import verify as V

CHECKS = (
    "main", "fleck", "restated", "gaussian", "euler", "altpoly", "qbinom",
    "qlucas", "recursions", "residuals", "integer", "table1", "sharpness", "all",
)

# default case cap for the theorem sweeps unless --exhaustive is given
DEFAULT_CAP = 5000


def parse_range(text: str) -> list[int]:
    """``1..3,5`` -> [1, 2, 3, 5]."""
    out = []
    for part in text.split(","):
        part = part.strip()
        if not part:
            continue
        if ".." in part:
            lo, hi = part.split("..", 1)
            lo, hi = int(lo), int(hi)
            if hi < lo:
                raise ValueError(f"empty range {part!r}")
            out.extend(range(lo, hi + 1))
        else:
            out.append(int(part))
    if not out:
        raise ValueError(f"empty range {text!r}")
    return out


def _range_arg(text: str) -> list[int]:
    try:
        return parse_range(text)
    except ValueError as exc:
        raise argparse.ArgumentTypeError(str(exc)) from exc


def _nonneg(text: str) -> int:
    try:
        v = int(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"not an integer: {text!r}") from None
    if v < 0:
        raise argparse.ArgumentTypeError(f"must be nonnegative: {text!r}")
    return v


def _positive(text: str) -> int:
    v = _nonneg(text)
    if v == 0:
        raise argparse.ArgumentTypeError("must be positive")
    return v


def _global_flags(suppress: bool) -> argparse.ArgumentParser:
    # the same flags are accepted before and after the subcommand
    default = argparse.SUPPRESS if suppress else None
    p = argparse.ArgumentParser(add_help=False)
    p.add_argument("--json", action="store_true", default=default if suppress else False,
                   help="machine-readable output")
    p.add_argument("--exhaustive", action="store_true", default=default if suppress else False,
                   help="lift case caps and extend scans to the full published ranges")
    p.add_argument("--threads", type=_positive, default=default, help="worker processes for sweeps")
    return p


def build_parser() -> argparse.ArgumentParser:
    sub_common = _global_flags(suppress=True)
    parser = argparse.ArgumentParser(
        prog="qfleck",
        description="Alternating q-binomial sums, their cyclotomic factors, and checks of the congruences they satisfy.",
        parents=[_global_flags(suppress=False)],
    )
    cmds = parser.add_subparsers(dest="command", required=True)

    p = cmds.add_parser("qbinom", parents=[sub_common], help="print a Gaussian binomial or its q-derivative")
    p.add_argument("n", type=_nonneg)
    p.add_argument("m", type=int)
    p.add_argument("--deriv", type=_nonneg, default=0, metavar="L")

    p = cmds.add_parser("sum", parents=[sub_common], help="compute a full sum, or a class sum with --j")
    p.add_argument("--c", type=_positive, required=True)
    p.add_argument("--j", type=_nonneg)
    p.add_argument("--l", type=_nonneg, default=0)
    p.add_argument("--z", type=_nonneg, default=0)
    p.add_argument("--n", type=_nonneg, required=True)
    p.add_argument("--P", default="1", help="weight polynomial in x, e.g. 'x^2+3*x+1' or '(1+z)*x'")
    p.add_argument("--factored", action="store_true", help="print the factor report instead")

    p = cmds.add_parser("factor", parents=[sub_common], help="strip unit, q-power and cyclotomic factors")
    p.add_argument("poly")
    p.add_argument("--c", type=_positive, default=1, help="ring Z[zeta_2c] for coefficients using z")

    p = cmds.add_parser("verify", parents=[sub_common], help="run a named check")
    p.add_argument("check", help="one of: " + ", ".join(CHECKS))
    p.add_argument("--c", type=_range_arg)
    p.add_argument("--k", type=_range_arg)
    p.add_argument("--l", type=_range_arg)
    p.add_argument("--d", type=_range_arg)
    p.add_argument("--z", type=_range_arg)
    p.add_argument("--degP", type=_range_arg)
    p.add_argument("--j", type=_range_arg)
    p.add_argument("--n", type=_range_arg, help="explicit n values (default: threshold..threshold+4)")
    p.add_argument("--n-max", type=_nonneg)
    p.add_argument("--p-max", type=_positive)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--cap", type=_positive)

    cmds.add_parser("table1", parents=[sub_common], help="recompute the three published residuals")

    p = cmds.add_parser("sharpness", parents=[sub_common], help="look for classes j whose Phi_{p^t} multiplicities are exactly the predicted ones")
    p.add_argument("--p-max", type=_positive, default=7)
    p.add_argument("--n-max", type=_positive)
    return parser


def _threads(args) -> int:
    if getattr(args, "threads", None):
        return args.threads
    env = os.environ.get("QFLECK_THREADS")
    if env:
        try:
            return max(1, int(env))
        except ValueError:
            pass
    return os.cpu_count() or 1


def _emit(args, payload: dict, text: str) -> None:
    if args.json:
        print(json.dumps(payload, indent=2))
    else:
        print(text)


def cmd_qbinom(args) -> int:
    p = qbinom_deriv(args.n, args.m, args.deriv)
    _emit(args, {"n": args.n, "m": args.m, "l": args.deriv, "poly": str(p)}, str(p))
    return 0


def cmd_sum(args, parser) -> int:
    if args.j is not None and args.j >= args.c:
        parser.error(f"--j must lie in [0, {args.c})")
    try:
        spec = SumSpec(args.c, args.n, args.P, args.l, args.z, args.j)
    except (PolyParseError, ValueError) as exc:
        parser.error(str(exc))
    s = fleck_sum(spec) if spec.j is not None else q_sum(spec)
    payload = {"spec": spec.to_dict(), "sum": str(s)}
    text = str(s)
    if args.factored:
        if not s:
            text = "0 (zero sum has no factorization)"
            payload["factors"] = None
        else:
            rep = factor_report(s, predicted_exponents(spec.c, spec.l, spec.degP, spec.n))
            payload["factors"] = rep.to_dict()
            text = format_factor_report(rep)
    _emit(args, payload, text)
    return 0


def cmd_factor(args, parser) -> int:
    try:
        if "z" in args.poly:
            p = parse_cpoly(ctx_new(args.c), args.poly)
        else:
            p = parse_poly(args.poly)
    except PolyParseError as exc:
        parser.error(str(exc))
    if not p:
        parser.error("cannot factor the zero polynomial")
    rep = factor_report(p)
    _emit(args, rep.to_dict(), format_factor_report(rep))
    return 0


def _grid(args) -> V.SweepGrid:
    kw = {}
    for name in ("c", "k", "l", "d", "z", "degP", "j", "n"):
        v = getattr(args, name)
        if v is not None:
            kw[name] = v
    if args.n_max is not None:
        kw["n_max"] = args.n_max
    kw["seed"] = args.seed
    kw["cap"] = None if args.exhaustive else (args.cap or DEFAULT_CAP)
    return V.SweepGrid(**kw)


def _run_check(name: str, args, workers: int) -> V.VerifyReport:
    if name == "main":
        return V.check_theorem_main(_grid(args), workers)
    if name == "fleck":
        return V.check_theorem_fleck(_grid(args), workers)
    if name == "restated":
        return V.check_prop_restated(_grid(args), workers, n_max=args.n_max or 40)
    if name == "gaussian":
        return V.check_gaussian(args.n_max or 40)
    if name == "euler":
        return V.check_euler(args.n_max or 15)
    if name == "altpoly":
        return V.check_alt_poly(args.n_max or 15, seed=args.seed)
    if name == "qbinom":
        return V.check_qbinom_identities()
    if name == "qlucas":
        return V.check_q_lucas(args.p_max or 7, args.n_max or 40)
    if name == "recursions":
        return V.check_recursions(seed=args.seed)
    if name == "residuals":
        return V.check_residuals()
    if name == "integer":
        return V.check_integer_congruences()
    if name == "table1":
        return V.table1_report()[0]
    if name == "sharpness":
        n_max = args.n_max or (100 if args.exhaustive else 50)
        return V.sharpness_scan(args.p_max or 7, n_max, workers)
    raise KeyError(name)


def cmd_verify(args, parser) -> int:
    if args.check not in CHECKS:
        parser.error(f"unknown check {args.check!r}; choose from {', '.join(CHECKS)}")
    try:
        grid_ok = _grid(args)
    except ValueError as exc:
        parser.error(str(exc))
    del grid_ok
    workers = _threads(args)
    names = [c for c in CHECKS if c != "all"] if args.check == "all" else [args.check]
    reports = [_run_check(name, args, workers) for name in names]
    if args.json:
        payload = reports[0].to_dict() if len(reports) == 1 else [r.to_dict() for r in reports]
        print(json.dumps(payload, indent=2))
    else:
        for r in reports:
            print(r.summary())
            for f in r.failures[:10]:
                print(f"  {json.dumps(f)}")
            if len(r.failures) > 10:
                print(f"  ... {len(r.failures) - 10} more")
    return 0 if all(r.passed for r in reports) else 1


def cmd_table1(args) -> int:
    rep, rows = V.table1_report()
    if args.json:
        print(json.dumps({"report": rep.to_dict(), "rows": rep.info["rows"]}, indent=2))
    else:
        for r in rows:
            fr = r["report"]
            cyc = " ".join(f"Phi_{m}^{e}" for m, e in sorted(fr.cyclo_exponents.items()))
            print(f"row {r['row']}: sum over m = {r['j']} (mod {r['p']}) of (-1)^((m-{r['j']})/{r['p']}) [{r['n']}, m]_q")
            print(f"  unit {fr.unit:+d}, q^{fr.qpower}, cyclotomic part {cyc}")
            print(f"  residual  {fr.residual}")
            print(f"  verdict   {'MATCH' if r['match'] else 'MISMATCH'}")
            if not r["match"]:
                print(f"  golden    {r['golden']}")
        print(rep.summary())
    return 0 if rep.passed else 1


def cmd_sharpness(args) -> int:
    n_max = args.n_max or (100 if args.exhaustive else 50)
    rep = V.sharpness_scan(args.p_max, n_max, _threads(args))
    if args.json:
        print(rep.to_json(indent=2))
    else:
        for key, js in rep.info["witnesses"].items():
            p, n = key.split(",")
            print(f"p={p:>2} n={n:>3} sharp j: {js if js else 'NONE'}")
        print(rep.summary())
    return 0 if rep.passed else 1


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        if args.command == "qbinom":
            return cmd_qbinom(args)
        if args.command == "sum":
            return cmd_sum(args, parser)
        if args.command == "factor":
            return cmd_factor(args, parser)
        if args.command == "verify":
            return cmd_verify(args, parser)
        if args.command == "table1":
            return cmd_table1(args)
        if args.command == "sharpness":
            return cmd_sharpness(args)
    except NotDivisible as exc:
        print(f"error: exact division failed: {exc}", file=sys.stderr)
        return 1
    parser.error(f"unknown command {args.command!r}")


if __name__ == "__main__":
    sys.exit(main())
