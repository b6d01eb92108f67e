"""Command-line front end: ``qgen genocchi | gamma | zeta | verify``.

Rational flags take ``p/r`` strings, real flags take decimal strings. Exit codes:
0 success, 1 a verification check failed, 2 usage or configuration error,
3 invalid q or a domain error (pole, divergent tail, ...).
"""
from __future__ import annotations

import argparse
import csv
import io
import json
import sys
import warnings
from fractions import Fraction

import mpmath

from . import qgamma, qzeta
from .errors import DivergentTail, DomainError, InvalidQ, PoleAt, QGenError
from .genocchi import genocchi_table
from .qcore import QContext, format_rational, parse_rational
from .qpoly import poly_eval
from .verify import SUITES, VerifyConfig, run_verify

EXIT_FAIL = 1
EXIT_USAGE = 2
EXIT_DOMAIN = 3


def _rational(text: str) -> Fraction:
    try:
        return parse_rational(text)
    except ValueError as exc:
        raise argparse.ArgumentTypeError(str(exc))


def _real(text: str) -> str:
    try:
        float(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"not a decimal number: {text!r}")
    return text


def _int_list(text: str) -> list[int]:
    try:
        return [int(t) for t in text.split(",") if t.strip()]
    except ValueError:
        raise argparse.ArgumentTypeError(f"not a comma-separated integer list: {text!r}")


def _rational_list(text: str) -> list[Fraction]:
    return [_rational(t) for t in text.split(",") if t.strip()]


def _emit(text: str, out: str | None) -> None:
    if out:
        with open(out, "w", encoding="utf-8", newline="") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)


def _dump(obj) -> str:
    return json.dumps(obj, indent=2) + "\n"


def _domain_error(exc: Exception, extra: dict | None = None) -> int:
    payload = {"error": type(exc).__name__, "message": str(exc)}
    payload.update(extra or {})
    sys.stdout.write(_dump(payload))
    return EXIT_DOMAIN


def cmd_genocchi(args, parser) -> int:
    if args.alpha < 1:
        parser.error("--alpha must be >= 1")
    if args.order < args.alpha:
        parser.error(f"--order ({args.order}) must be >= --alpha ({args.alpha})")
    try:
        ctx = QContext(args.q)
    except InvalidQ as exc:
        return _domain_error(exc)
    table = genocchi_table(ctx, args.alpha, args.order)
    if args.format == "json":
        data = table.to_json()
        if args.x is not None:
            data["x"] = format_rational(args.x)
            data["values"] = [format_rational(poly_eval(p, args.x)) for p in table.polys]
        _emit(_dump(data), args.out)
        return 0
    width = max(p.degree for p in table.polys) + 1
    buf = io.StringIO()
    writer = csv.writer(buf, lineterminator="\n")
    header = ["n"] + [f"x^{k}" for k in range(max(width, 1))]
    if args.x is not None:
        header.append(f"value_at_{format_rational(args.x)}")
    writer.writerow(header)
    for n, p in enumerate(table.polys):
        row = [str(n)] + [format_rational(p[k]) for k in range(max(width, 1))]
        if args.x is not None:
            row.append(format_rational(poly_eval(p, args.x)))
        writer.writerow(row)
    _emit(buf.getvalue(), args.out)
    return 0


def _float_ctx(q: str, prec: int, tol: str) -> qgamma.FloatContext:
    with mpmath.workprec(prec):
        return qgamma.FloatContext(mpmath.mpf(q), prec, mpmath.mpf(tol))


def cmd_gamma(args, parser) -> int:
    try:
        fctx = _float_ctx(args.q, args.prec, args.tol)
    except (DomainError, InvalidQ) as exc:
        return _domain_error(exc)
    except ValueError as exc:
        parser.error(str(exc))
    meta: dict = {}
    try:
        with fctx.prec(), warnings.catch_warnings():
            warnings.simplefilter("ignore")
            x = mpmath.mpf(args.x)
            if args.method == "product":
                value = qgamma.qgamma_product(fctx, x)
            elif args.method == "integral":
                res = qgamma.qgamma_integral(fctx, x, form=args.form)
                value = res.value
                meta = res.metadata()
                meta["form"] = args.form
            else:
                parts = qgamma.qgamma_meromorphic_parts(fctx, x)
                value = parts.value
                meta = {
                    "entire_part": mpmath.nstr(parts.entire_part, 30),
                    "pole_part": mpmath.nstr(parts.pole_part, 30),
                    "lattice_points_above_one": parts.lattice_points_above_one,
                    "lattice_condition": fctx.lattice_exponent() is not None,
                }
            digits = max(15, int(args.prec * 0.30103) - 2)
            out = {
                "method": args.method,
                "q": args.q,
                "x": args.x,
                "precision": args.prec,
                "tol": args.tol,
                "value": mpmath.nstr(value, digits),
                "metadata": meta,
            }
    except (PoleAt, DomainError, DivergentTail) as exc:
        return _domain_error(exc, {"method": args.method, "x": args.x})
    _emit(_dump(out), args.out)
    return 0


def cmd_zeta(args, parser) -> int:
    if (args.neg_n is None) == (args.z is None):
        parser.error("give exactly one of --neg-n (exact) or --z (numeric)")
    if args.alpha < 1:
        parser.error("--alpha must be >= 1")
    if args.neg_n is not None:
        if args.neg_n < 0:
            parser.error("--neg-n must be >= 0")
        try:
            q = _rational(args.q)
            x = _rational(args.x)
        except argparse.ArgumentTypeError as exc:
            parser.error(str(exc))
        try:
            ctx = QContext(q)
        except InvalidQ as exc:
            return _domain_error(exc)
        report = qzeta.interpolation_check(ctx, args.neg_n, x, args.alpha)
        _emit(_dump(report.to_json()), args.out)
        return 0
    try:
        _real(args.q)
        _real(args.x)
        fctx = _float_ctx(args.q, args.prec, args.tol)
        with fctx.prec():
            value = qzeta.qzeta_numeric(fctx, mpmath.mpf(args.z), mpmath.mpf(args.x), args.alpha)
            digits = max(15, int(args.prec * 0.30103) - 2)
            out = {"q": args.q, "z": args.z, "x": args.x, "alpha": args.alpha, "value": mpmath.nstr(value, digits)}
    except argparse.ArgumentTypeError as exc:
        parser.error(str(exc))
    except (DomainError, InvalidQ) as exc:
        return _domain_error(exc)
    _emit(_dump(out), args.out)
    return 0


def cmd_verify(args, parser) -> int:
    suites = tuple(s.strip() for s in args.suites.split(",") if s.strip())
    try:
        cfg = VerifyConfig(
            suites=suites,
            q_list=tuple(_rational_list(args.q)),
            max_n=args.max_n,
            alpha_list=tuple(_int_list(args.alpha)),
            output_path=args.out,
            precision=args.prec,
        )
    except (ValueError, argparse.ArgumentTypeError) as exc:
        parser.error(str(exc))
    report = run_verify(cfg)
    _emit(_dump(report.to_json()), args.out)
    summ = report.summary
    print(
        f"verify: {summ['pass']} pass, {summ['fail']} fail, {summ['reported']} reported",
        file=sys.stderr,
    )
    for rec in report.failures():
        print(f"FAIL {rec.suite}/{rec.check} {rec.params}", file=sys.stderr)
    return 0 if report.ok else EXIT_FAIL


def build_parser() -> argparse.ArgumentParser:
    prec_default = qgamma.default_precision()
    p = argparse.ArgumentParser(prog="qgen", description="Higher-order q-Genocchi toolkit")
    sub = p.add_subparsers(dest="command", required=True)

    g = sub.add_parser("genocchi", help="table of q-Genocchi polynomials")
    g.add_argument("--alpha", type=int, required=True)
    g.add_argument("--order", type=int, required=True)
    g.add_argument("--q", type=_rational, required=True, help="rational p/r")
    g.add_argument("--format", choices=("json", "csv"), default="json")
    g.add_argument("--x", type=_rational, default=None, help="rational point for a value column")
    g.add_argument("--out", default=None)
    g.set_defaults(func=cmd_genocchi)

    gm = sub.add_parser("gamma", help="numeric q-Gamma")
    gm.add_argument("--q", type=_real, required=True, help="decimal in (0, 1)")
    gm.add_argument("--x", type=_real, required=True)
    gm.add_argument("--method", choices=("product", "integral", "meromorphic"), default="product")
    gm.add_argument("--form", choices=("finite", "improper"), default="finite",
                    help="integral method only")
    gm.add_argument("--prec", type=int, default=prec_default)
    gm.add_argument("--tol", type=_real, default="1e-20")
    gm.add_argument("--out", default=None)
    gm.set_defaults(func=cmd_gamma)

    z = sub.add_parser("zeta", help="q-Hurwitz-zeta type function")
    z.add_argument("--q", required=True, help="p/r with --neg-n, decimal with --z")
    z.add_argument("--alpha", type=int, default=1)
    z.add_argument("--x", required=True)
    z.add_argument("--neg-n", type=int, default=None)
    z.add_argument("--z", type=_real, default=None)
    z.add_argument("--prec", type=int, default=prec_default)
    z.add_argument("--tol", type=_real, default="1e-20")
    z.add_argument("--out", default=None)
    z.set_defaults(func=cmd_zeta)

    v = sub.add_parser("verify", help="run the identity checks")
    v.add_argument("--suites", default=",".join(SUITES), help=f"comma list from {','.join(SUITES)}")
    v.add_argument("--q", default="1/2,2/3,1", help="comma list of p/r")
    v.add_argument("--max-n", type=int, default=10)
    v.add_argument("--alpha", default="1,2", help="comma list of orders")
    v.add_argument("--prec", type=int, default=prec_default)
    v.add_argument("--out", default=None)
    v.set_defaults(func=cmd_verify)
    return p


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    sub = parser._subparsers._group_actions[0].choices[args.command]
    try:
        return args.func(args, sub)
    except QGenError as exc:
        return _domain_error(exc)


if __name__ == "__main__":
    sys.exit(main())
