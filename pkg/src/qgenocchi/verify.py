"""Verification runner: turns every identity into pass / fail / reported records."""
from __future__ import annotations

import itertools
from dataclasses import asdict, dataclass, field
from fractions import Fraction
from typing import Any, Iterable

import mpmath
from mpmath import mpf

from . import classical, genocchi, qgamma, qzeta
from .qcore import QContext, format_rational, q_factorial, q_int
from .qpoly import QPolynomial, jackson_derivative, rubin_derivative

SUITES = ("expansion", "qderiv", "qadd", "convolution", "rubin", "gamma", "zeta", "limits")
NEAR_ONE = Fraction(999, 1000)
LIMIT_RTOL = 1e-2
# no tolerance is stated for the polynomials themselves; the first-order drift at
# q = 1 - 1e-3 reaches about 1.4% by n = 8
POLY_LIMIT_RTOL = 2e-2
GAMMA_TOL = mpf("1e-8")
ADD_SHIFTS = (Fraction(0), Fraction(1), Fraction(1, 2))
ZETA_XS = (Fraction(0), Fraction(1, 2), Fraction(1))


@dataclass(frozen=True)
class VerifyConfig:
    suites: tuple[str, ...] = SUITES
    q_list: tuple[Fraction, ...] = (Fraction(1, 2), Fraction(2, 3), Fraction(1))
    max_n: int = 10
    alpha_list: tuple[int, ...] = (1, 2)
    output_path: str | None = None
    precision: int = qgamma.DEFAULT_PRECISION

    def __post_init__(self):
        if not self.suites:
            raise ValueError("at least one suite is required")
        unknown = set(self.suites) - set(SUITES)
        if unknown:
            raise ValueError(f"unknown suites: {sorted(unknown)}")
        if not self.q_list:
            raise ValueError("q_list must not be empty")
        if self.max_n < 1:
            raise ValueError("max_n must be >= 1")
        if not self.alpha_list or min(self.alpha_list) < 1:
            raise ValueError("alpha_list must hold positive integers")
        for q in self.q_list:
            QContext(q)


@dataclass
class CheckRecord:
    suite: str
    check: str
    params: dict
    status: str  # "pass" | "fail" | "reported"
    lhs: Any = None
    rhs: Any = None
    notes: str = ""

    def sort_key(self):
        return (self.suite, self.check, sorted((k, str(v)) for k, v in self.params.items()))


@dataclass
class VerifyReport:
    records: list[CheckRecord] = field(default_factory=list)

    @property
    def summary(self) -> dict:
        counts = {"pass": 0, "fail": 0, "reported": 0}
        for r in self.records:
            counts[r.status] += 1
        counts["total"] = len(self.records)
        return counts

    @property
    def ok(self) -> bool:
        return self.summary["fail"] == 0

    def failures(self) -> list[CheckRecord]:
        return [r for r in self.records if r.status == "fail"]

    def to_json(self) -> dict:
        return {"summary": self.summary, "records": [asdict(r) for r in self.records]}


def _status(ok: bool) -> str:
    return "pass" if ok else "fail"


def _poly(p: QPolynomial) -> list[str]:
    return p.to_strings()


def _fmt(v) -> str:
    if isinstance(v, Fraction):
        return format_rational(v)
    return mpmath.nstr(v, 17)


def _q(q: Fraction) -> str:
    return format_rational(q)


def poly_close(p: QPolynomial, ref: QPolynomial, rtol) -> bool:
    """Coefficientwise relative comparison.

    A coefficient whose reference is zero is measured against the largest
    reference coefficient instead.
    """
    rtol = Fraction(rtol)
    n = max(len(p.coeffs), len(ref.coeffs))
    biggest = max((abs(c) for c in ref.coeffs), default=Fraction(1))
    for k in range(n):
        scale = abs(ref[k]) if ref[k] != 0 else biggest
        if abs(p[k] - ref[k]) > rtol * scale:
            return False
    return True


def _table(q: Fraction, alpha: int, max_n: int):
    return genocchi.genocchi_table(QContext(q), alpha, max(max_n, alpha))


def suite_expansion(cfg: VerifyConfig) -> Iterable[CheckRecord]:
    for q, a in itertools.product(cfg.q_list, cfg.alpha_list):
        t = _table(q, a, cfg.max_n)
        for j in range(cfg.max_n + 1):
            lhs = genocchi.expand_polynomial(t.ctx, t, j)
            yield CheckRecord("expansion", "expand_polynomial", {"q": _q(q), "alpha": a, "n": j},
                              _status(lhs == t.polys[j]), _poly(lhs), _poly(t.polys[j]))


def suite_qderiv(cfg: VerifyConfig) -> Iterable[CheckRecord]:
    for q, a in itertools.product(cfg.q_list, cfg.alpha_list):
        t = _table(q, a, cfg.max_n)
        for n in range(1, cfg.max_n + 1):
            lhs = jackson_derivative(t.ctx, t.polys[n])
            rhs = t.polys[n - 1] * q_int(t.ctx, n)
            yield CheckRecord("qderiv", "D_q G_n = [n] G_(n-1)", {"q": _q(q), "alpha": a, "n": n},
                              _status(lhs == rhs), _poly(lhs), _poly(rhs))


def suite_qadd(cfg: VerifyConfig) -> Iterable[CheckRecord]:
    for q, a in itertools.product(cfg.q_list, cfg.alpha_list):
        t = _table(q, a, cfg.max_n)
        for n, y in itertools.product(range(cfg.max_n + 1), ADD_SHIFTS):
            lhs = genocchi.q_add_shift(t.ctx, t, n, y)
            rhs = genocchi.q_add_shift_series(t.ctx, t, n, y)
            ok = lhs == rhs
            notes = "Cauchy-product form"
            if q == 1:
                ok = ok and lhs == t.polys[n].shift(y)
                notes += "; also equals G_n(x + y) at q = 1"
            yield CheckRecord("qadd", "q_add_shift", {"q": _q(q), "alpha": a, "n": n, "y": _q(y)},
                              _status(ok), _poly(lhs), _poly(rhs), notes)


def suite_convolution(cfg: VerifyConfig) -> Iterable[CheckRecord]:
    pairs = sorted({(min(a, b), max(a, b)) for a in cfg.alpha_list for b in cfg.alpha_list})
    for q, (a, b) in itertools.product(cfg.q_list, pairs):
        for row in genocchi.order_convolution(QContext(q), a, b, cfg.max_n):
            yield CheckRecord("convolution", "order_convolution",
                              {"q": _q(q), "alpha": a, "beta": b, "n": row.l},
                              _status(row.equal), _poly(row.lhs), _poly(row.rhs))


def suite_rubin(cfg: VerifyConfig) -> Iterable[CheckRecord]:
    for q, a in itertools.product(cfg.q_list, cfg.alpha_list):
        t = _table(q, a, cfg.max_n)
        for n in range(cfg.max_n + 1):
            params = {"q": _q(q), "alpha": a, "n": n}
            if q == 1:
                lhs = rubin_derivative(t.ctx, t.polys[n])
                rhs = t.polys[n - 1] * n if n else QPolynomial()
                yield CheckRecord("rubin", "classical", params, _status(lhs == rhs), _poly(lhs), _poly(rhs),
                                  "q = 1: operator is d/dx, expect n G_(n-1)(x)")
                continue
            chk = genocchi.rubin_on_genocchi(t.ctx, t, n)
            yield CheckRecord("rubin", "corrected", params, _status(chk.consistent),
                              _poly(chk.operator), _poly(chk.corrected_sum),
                              f"even/odd split {'agrees' if chk.corrected_split == chk.operator else 'DIFFERS'}")
            yield CheckRecord("rubin", "printed_T", params, "reported",
                              _poly(chk.operator * QPolynomial.x()), _poly(chk.printed_sum_times_x),
                              ("matches" if chk.printed_sum_matches else "differs")
                              + " (both sides multiplied by x; printed l = 0 term gives the constant)")
            yield CheckRecord("rubin", "printed_split", params, "reported",
                              _poly(chk.operator), _poly(chk.printed_split),
                              "matches" if chk.printed_split_matches else "differs")


def _fctx(q: Fraction, cfg: VerifyConfig, tol=GAMMA_TOL) -> qgamma.FloatContext:
    with mpmath.workprec(cfg.precision):
        return qgamma.FloatContext(mpf(q.numerator) / q.denominator, cfg.precision, tol)


def _gamma_limit_records(cfg: VerifyConfig, suite: str) -> Iterable[CheckRecord]:
    fctx = _fctx(NEAR_ONE, cfg)
    for n in range(0, 6):
        with fctx.prec():
            val = qgamma.qgamma_product(fctx, n + 1)
            ref = mpmath.factorial(n)
            ok = abs(val - ref) <= LIMIT_RTOL * ref
        yield CheckRecord(suite, "gamma_limit", {"q": _q(NEAR_ONE), "n": n}, _status(ok), _fmt(val), _fmt(ref),
                          "Gamma_q(n+1) -> n!")


def suite_gamma(cfg: VerifyConfig) -> Iterable[CheckRecord]:
    for q in cfg.q_list:
        if q == 1:
            yield from _gamma_limit_records(cfg, "gamma")
            continue
        fctx = _fctx(q, cfg)
        ctx = QContext(q)
        tol = fctx.tol
        with fctx.prec():
            for n in range(0, min(cfg.max_n, 10) + 1):
                val = qgamma.qgamma_product(fctx, n + 1)
                ref = q_factorial(ctx, n)
                refm = mpf(ref.numerator) / ref.denominator
                yield CheckRecord("gamma", "factorial", {"q": _q(q), "n": n},
                                  _status(abs(val - refm) <= mpf("1e-10") * refm), _fmt(val), _fmt(ref))
            for k in range(1, 11):
                x = mpf(k) / 2
                lhs = qgamma.qgamma_product(fctx, x + 1)
                rhs = fctx.q_number(x) * qgamma.qgamma_product(fctx, x)
                yield CheckRecord("gamma", "functional_equation", {"q": _q(q), "x": str(x)},
                                  _status(abs(lhs - rhs) <= tol * abs(rhs)), _fmt(lhs), _fmt(rhs))
                vals = {
                    "product": qgamma.qgamma_product(fctx, x),
                    "integral": qgamma.qgamma_integral(fctx, x).value,
                    "meromorphic": qgamma.qgamma_meromorphic(fctx, x),
                }
                for m1, m2 in itertools.combinations(vals, 2):
                    v1, v2 = vals[m1], vals[m2]
                    yield CheckRecord("gamma", f"agreement_{m1}_{m2}", {"q": _q(q), "x": str(x)},
                                      _status(abs(v1 - v2) <= 10 * tol * abs(v2)), _fmt(v1), _fmt(v2))
            for j in range(0, 7):
                exact = qgamma.qgamma_residue(ctx, j)
                num = qgamma.residue_numeric_limit(fctx, j, "1e-6")
                ref = mpf(exact.numerator) / exact.denominator
                yield CheckRecord("gamma", "residue", {"q": _q(q), "j": j},
                                  _status(abs(num - ref) <= mpf("1e-4") * abs(ref)), _fmt(num), _fmt(exact),
                                  f"classical-convention residue {_fmt(qgamma.classical_residue(fctx, exact))}")


def suite_zeta(cfg: VerifyConfig) -> Iterable[CheckRecord]:
    for q, a in itertools.product(cfg.q_list, cfg.alpha_list):
        ctx = QContext(q)
        for n, x in itertools.product(range(cfg.max_n + 1), ZETA_XS):
            rep = qzeta.interpolation_check(ctx, n, x, a)
            status = _status(rep.equal) if q == 1 else "reported"
            ratio = "undefined" if rep.ratio is None else format_rational(rep.ratio)
            yield CheckRecord("zeta", "interpolation", {"q": _q(q), "alpha": a, "n": n, "x": _q(x)},
                              status, format_rational(rep.lhs), format_rational(rep.rhs), f"ratio {ratio}")
        for n, x in itertools.product(range(min(cfg.max_n, 4) + 1), ZETA_XS):
            lhs = qzeta.qzeta_neg_int(ctx, n, x, a)
            rhs = qzeta.qzeta_neg_int_bruteforce(ctx, n, x, a)
            yield CheckRecord("zeta", "collapse", {"q": _q(q), "alpha": a, "n": n, "x": _q(x)},
                              _status(lhs == rhs), format_rational(lhs), format_rational(rhs))


def suite_limits(cfg: VerifyConfig) -> Iterable[CheckRecord]:
    N = min(cfg.max_n, 8)
    classical_g = classical.genocchi_classical(N)
    exact = genocchi.genocchi_numbers(QContext(1), 1, max(N, 1))
    for n in range(1, N + 1):
        yield CheckRecord("limits", "classical_numbers", {"q": "1", "alpha": 1, "n": n},
                          _status(exact[n] == classical_g[n]), _fmt(exact[n]), _fmt(classical_g[n]))
    near = QContext(NEAR_ONE)
    refs = classical.genocchi_classical_polys(1, N)
    t = genocchi.genocchi_table(near, 1, N)
    for n in range(N + 1):
        ok = poly_close(t.polys[n], refs[n], POLY_LIMIT_RTOL)
        yield CheckRecord("limits", "polynomial_near_one", {"q": _q(NEAR_ONE), "alpha": 1, "n": n},
                          _status(ok), _poly(t.polys[n]), _poly(refs[n]), f"rtol {POLY_LIMIT_RTOL}")
        lhs = rubin_derivative(near, t.polys[n])
        rhs = refs[n - 1] * n if n else QPolynomial()
        yield CheckRecord("limits", "rubin_near_one", {"q": _q(NEAR_ONE), "alpha": 1, "n": n},
                          _status(poly_close(lhs, rhs, LIMIT_RTOL)), _poly(lhs), _poly(rhs),
                          f"Rubin derivative tends to n G_(n-1)(x); rtol {LIMIT_RTOL}")
    yield from _gamma_limit_records(cfg, "limits")
    q4 = Fraction(9999, 10000)
    f4 = _fctx(q4, cfg)
    for j in range(7):
        res = qgamma.qgamma_residue(QContext(q4), j)
        with f4.prec():
            ref = mpf((-1) ** j) / mpmath.factorial(j)
            val = mpf(res.numerator) / res.denominator
            ok = abs(val - ref) <= LIMIT_RTOL * abs(ref)
        yield CheckRecord("limits", "residue_limit", {"q": _q(q4), "j": j}, _status(ok), _fmt(val), _fmt(ref),
                          "Res(Gamma_q, -j) -> (-1)^j / j!")


_RUNNERS = {
    "expansion": suite_expansion,
    "qderiv": suite_qderiv,
    "qadd": suite_qadd,
    "convolution": suite_convolution,
    "rubin": suite_rubin,
    "gamma": suite_gamma,
    "zeta": suite_zeta,
    "limits": suite_limits,
}


def run_verify(cfg: VerifyConfig) -> VerifyReport:
    records: list[CheckRecord] = []
    for suite in cfg.suites:
        records.extend(_RUNNERS[suite](cfg))
    records.sort(key=CheckRecord.sort_key)
    return VerifyReport(records)
