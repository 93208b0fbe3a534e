"""Command-line front end.

Exit codes: 0 success, 1 usage, 2 domain error, 3 numeric failure
(pole, divergence, truncation budget), 4 audit failure.
"""

from __future__ import annotations

import argparse
import csv
import io
import sys
from fractions import Fraction

from .closed import ClosedVariant, ExactParams, s_poly_closed, s_poly_exact
from .identities import IDENTITY_GROUPS, LIMIT_TOL, run_audit, verify_q1_limit
from .qcore import (
    BudgetExceeded,
    DegenerateRecurrence,
    DomainError,
    EvalPoint,
    ExactScalar,
    ModelParams,
    NotConvergent,
    PoleAtDenominator,
    QGenocchiError,
)
from .report import audit_record, canonical_json, envelope, format_float
from .series import SeriesConfig, s_poly_series
from .zeta import zeta_eval

EXIT_OK, EXIT_USAGE, EXIT_DOMAIN, EXIT_NUMERIC, EXIT_AUDIT = 0, 1, 2, 3, 4


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        raise UsageError(message)


def _exit_code(exc: Exception) -> int:
    if isinstance(exc, (NotConvergent, PoleAtDenominator, DegenerateRecurrence, BudgetExceeded)):
        return EXIT_NUMERIC
    if isinstance(exc, (DomainError, ValueError, ZeroDivisionError)):
        return EXIT_DOMAIN
    return EXIT_NUMERIC


def _error_record(exc: Exception) -> dict:
    rec = {"type": type(exc).__name__, "message": str(exc)}
    if isinstance(exc, PoleAtDenominator):
        rec["l"] = exc.l
    return rec


# ---------------------------------------------------------------------------
# number parsing: "p/q" and integers are rational literals, "re,im" is complex


def is_rational_literal(text: str) -> bool:
    parts = text.split(",")
    try:
        return all("." not in t and "e" not in t.lower() and Fraction(t) is not None for t in parts)
    except (ValueError, ZeroDivisionError):
        return False


def parse_real(text: str) -> float:
    try:
        return float(Fraction(text)) if "/" in text else float(text)
    except (ValueError, ZeroDivisionError) as exc:
        raise DomainError(f"not a real number: {text!r}") from exc


def parse_complex(text: str) -> complex | float:
    parts = text.split(",")
    if len(parts) == 1:
        return parse_real(parts[0])
    if len(parts) == 2:
        return complex(parse_real(parts[0]), parse_real(parts[1]))
    raise DomainError(f"expected 're[,im]', got {text!r}")


def parse_exact(text: str) -> ExactScalar:
    parts = text.split(",")
    try:
        if len(parts) == 1:
            return ExactScalar(Fraction(parts[0]))
        if len(parts) == 2:
            return ExactScalar(Fraction(parts[0]), Fraction(parts[1]))
    except (ValueError, ZeroDivisionError) as exc:
        raise DomainError(f"not a rational number: {text!r}") from exc
    raise DomainError(f"expected 're[,im]', got {text!r}")


def parse_int(text: str) -> int:
    try:
        value = Fraction(text)
    except (ValueError, ZeroDivisionError) as exc:
        raise DomainError(f"not an integer: {text!r}") from exc
    if value.denominator != 1:
        raise DomainError(f"not an integer: {text!r}")
    return int(value)


def parse_range(text: str) -> list[Fraction]:
    """start:stop:step, inclusive of stop, computed in exact decimal arithmetic."""
    parts = text.split(":")
    if len(parts) != 3:
        raise UsageError(f"expected start:stop:step, got {text!r}")
    try:
        start, stop, step = (Fraction(p) for p in parts)
    except (ValueError, ZeroDivisionError) as exc:
        raise UsageError(f"bad range {text!r}") from exc
    if step <= 0 or stop < start:
        raise UsageError(f"bad range {text!r}")
    count = int((stop - start) / step) + 1
    return [start + i * step for i in range(count)]


def _model_flags(p: argparse.ArgumentParser, required: bool = True) -> None:
    g = p.add_argument_group("model parameters")
    g.add_argument("--q", required=required, help="deformation parameter in (0,1)")
    g.add_argument("--beta", required=required, help="beta as 're[,im]' or 'p/q'")
    g.add_argument("--a", required=required)
    g.add_argument("--b", required=required, help="nonzero integer")
    g.add_argument("--k", required=required, help="positive integer")


def _model_params(args) -> ModelParams:
    return ModelParams(
        q=parse_real(args.q),
        beta=parse_complex(args.beta),
        a=parse_real(args.a),
        b=parse_int(args.b),
        k=parse_int(args.k),
    )


def _exact_params(args) -> ExactParams:
    return ExactParams(
        q=parse_exact(args.q).re,
        beta=parse_exact(args.beta),
        a=parse_exact(args.a).re,
        b=parse_int(args.b),
        k=parse_int(args.k),
    )


def _echo(args, names) -> dict:
    return {n: getattr(args, n) for n in names if getattr(args, n, None) is not None}


MODEL = ("q", "beta", "a", "b", "k")


# ---------------------------------------------------------------------------
# evaluation


def _resolve_method(args, xs) -> str:
    if args.method != "auto":
        return args.method
    literal = all(is_rational_literal(getattr(args, n)) for n in MODEL)
    xs_int = all(Fraction(x).denominator == 1 for x in xs)
    return "exact" if literal and xs_int else "closed"


def _evaluate(args, method: str, n: int, x: Fraction) -> dict:
    variant = ClosedVariant(args.variant)
    if method == "exact":
        if x.denominator != 1 or x < 0:
            raise DomainError(f"exact mode needs an integer x >= 0, got {x}")
        val = s_poly_exact(_exact_params(args), n, int(x), variant)
        c = complex(val)
        return {
            "value": c,
            "exact": val,
            "abs_error_bound": 0.0,
            "method": "exact",
            "variant": variant.value,
            "terms_used": max(0, n - parse_int(args.k) + 1),
            "converged": True,
        }
    p = _model_params(args)
    pt = EvalPoint(n, float(x))
    if method == "series":
        res = s_poly_series(p, pt, SeriesConfig(tol=args.tol))
        out = res.value
        converged = res.converged
    else:
        out = s_poly_closed(p, pt, variant)
        converged = True
    rec = {
        "value": complex(out.value),
        "abs_error_bound": out.abs_error_bound,
        "method": out.method.value,
        "terms_used": out.terms_used,
        "converged": converged,
    }
    if method == "closed":
        rec["variant"] = variant.value
    return rec


def cmd_eval(args) -> tuple[dict, int]:
    params = _echo(args, MODEL + ("n", "x", "method", "variant", "tol"))
    try:
        n = parse_int(args.n)
        x = Fraction(args.x)
        method = _resolve_method(args, [x])
        rec = _evaluate(args, method, n, x)
    except (QGenocchiError, ValueError, ZeroDivisionError) as exc:
        return envelope("eval", params, None, [_error_record(exc)]), _exit_code(exc)
    if not rec["converged"]:
        exc = BudgetExceeded(f"max_terms reached with error bound {rec['abs_error_bound']:.3e} > tol")
        return envelope("eval", params, rec, [_error_record(exc)]), EXIT_NUMERIC
    return envelope("eval", params, rec), EXIT_OK


TABLE_HEADER = ("n", "x", "value_re", "value_im", "err_bound", "method")


def cmd_table(args) -> tuple[dict, int, list]:
    params = _echo(args, MODEL + ("n_max", "x_grid", "method", "variant", "tol", "format"))
    try:
        n_max = parse_int(args.n_max)
        if n_max < 0:
            raise DomainError("n-max must be >= 0")
        xs = parse_range(args.x_grid)
        method = _resolve_method(args, xs)
        # validate the model once so domain errors abort before the sweep
        if method == "exact":
            _exact_params(args)
        else:
            _model_params(args)
    except (QGenocchiError, ValueError) as exc:
        return envelope("table", params, None, [_error_record(exc)]), _exit_code(exc), []
    rows, errors = [], []
    code = EXIT_OK
    for n in range(n_max + 1):
        for x in xs:
            try:
                rec = _evaluate(args, method, n, x)
                rows.append({"n": n, "x": float(x), **rec})
            except QGenocchiError as exc:
                err = _error_record(exc)
                err.update(n=n, x=float(x))
                errors.append(err)
                rows.append({"n": n, "x": float(x), "value": None, "abs_error_bound": None, "method": method})
                code = max(code, _exit_code(exc))
    return envelope("table", params, {"rows": rows}, errors), code, rows


def table_csv(rows) -> str:
    buf = io.StringIO()
    w = csv.writer(buf, lineterminator="\n")
    w.writerow(TABLE_HEADER)
    for r in rows:
        v = r["value"]
        if v is None:
            w.writerow([r["n"], format_float(r["x"]), "", "", "", r["method"]])
        else:
            w.writerow(
                [r["n"], format_float(r["x"]), format_float(v.real), format_float(v.imag),
                 format_float(r["abs_error_bound"]), r["method"]]
            )
    return buf.getvalue()


# ---------------------------------------------------------------------------
# audits, zeta, limits


def cmd_verify(args) -> tuple[dict, int]:
    params = _echo(args, ("identity", "grid", "report", "summary_only"))
    ids = [i.value for i in IDENTITY_GROUPS[args.identity]]
    report = run_audit(args.grid, ids)
    code = EXIT_OK if report.all_identities_pass() else EXIT_AUDIT
    return envelope("verify", params, audit_record(report, not args.summary_only)), code


def _s_values(args) -> list[complex]:
    if args.s is not None:
        return [complex(parse_complex(args.s))]
    re_part, _, im_part = args.s_grid.partition(",")
    res = parse_range(re_part)
    ims = parse_range(im_part) if im_part else [Fraction(0)]
    return [complex(float(r), float(i)) for r in res for i in ims]


def cmd_zeta(args) -> tuple[dict, int]:
    params = _echo(args, MODEL + ("s", "s_grid", "x", "tol"))
    try:
        p = _model_params(args)
        x = parse_real(args.x)
        cfg = SeriesConfig(tol=args.tol)
        points = []
        for s in _s_values(args):
            z = zeta_eval(p, s, x, cfg)
            points.append(
                {"s": z.s, "value": z.value, "abs_error_bound": z.abs_error_bound, "terms_used": z.terms_used}
            )
    except (QGenocchiError, ValueError) as exc:
        return envelope("zeta", params, None, [_error_record(exc)]), _exit_code(exc)
    return envelope("zeta", params, {"points": points}), EXIT_OK


def cmd_limit(args) -> tuple[dict, int]:
    params = _echo(args, MODEL + ("target", "n", "x"))
    try:
        n = parse_int(args.n)
        x = parse_int(args.x)
        if args.target == "ozden":
            missing = [m for m in ("beta", "a", "b", "k") if getattr(args, m) is None]
            if missing:
                raise UsageError(f"--target ozden needs {', '.join('--' + m for m in missing)}")
            beta = parse_exact(args.beta)
            v = verify_q1_limit("ozden", n, x, beta, parse_exact(args.a).re, parse_int(args.b), parse_int(args.k))
        else:
            v = verify_q1_limit(args.target, n, x)
    except (QGenocchiError, ValueError) as exc:
        return envelope("limit", params, None, [_error_record(exc)]), _exit_code(exc)
    res = {
        "extrapolant": v.lhs,
        "reference": v.rhs,
        "difference": v.abs_diff,
        "tolerance": LIMIT_TOL,
        "passed": v.passed,
        "specialization": v.params,
    }
    return envelope("limit", params, res), EXIT_OK if v.passed else EXIT_AUDIT


# ---------------------------------------------------------------------------


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="qgenocchi", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)

    p = sub.add_parser("eval", help="evaluate one value S_{n,beta,q}(x|k,a,b)")
    _model_flags(p)
    p.add_argument("--n", required=True)
    p.add_argument("--x", required=True)
    p.add_argument("--method", choices=("auto", "series", "closed", "exact"), default="auto")
    p.add_argument("--variant", choices=[v.value for v in ClosedVariant], default="corrected")
    p.add_argument("--tol", type=float, default=1e-12)

    p = sub.add_parser("table", help="tabulate over n = 0..n-max and an x grid")
    _model_flags(p)
    p.add_argument("--n-max", required=True)
    p.add_argument("--x-grid", required=True, help="start:stop:step")
    p.add_argument("--method", choices=("auto", "series", "closed", "exact"), default="auto")
    p.add_argument("--variant", choices=[v.value for v in ClosedVariant], default="corrected")
    p.add_argument("--tol", type=float, default=1e-12)
    p.add_argument("--format", choices=("csv", "json"), default="csv")

    p = sub.add_parser("verify", help="run identity audits over a committed grid")
    p.add_argument("--identity", choices=sorted(IDENTITY_GROUPS), default="all")
    p.add_argument("--grid", choices=("smoke", "full"), default="smoke")
    p.add_argument("--report", choices=("json",), default="json")
    p.add_argument("--summary-only", action="store_true", help="omit the per-point verdict list")

    p = sub.add_parser("zeta", help="evaluate the Hurwitz-type interpolation function")
    _model_flags(p)
    sg = p.add_mutually_exclusive_group(required=True)
    sg.add_argument("--s", help="'re[,im]'")
    sg.add_argument("--s-grid", help="'re0:re1:step[,im0:im1:step]'")
    p.add_argument("--x", required=True)
    p.add_argument("--tol", type=float, default=1e-12)

    p = sub.add_parser("limit", help="q -> 1 extrapolation against the classical recurrences")
    _model_flags(p, required=False)
    p.add_argument("--target", choices=("ozden", "euler", "genocchi"), required=True)
    p.add_argument("--n", required=True)
    p.add_argument("--x", default="0")
    return parser


def main(argv=None, stdout=None, stderr=None) -> int:
    stdout = stdout or sys.stdout
    stderr = stderr or sys.stderr
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
        if args.command == "table":
            env, code, rows = cmd_table(args)
            text = table_csv(rows) if args.format == "csv" and env["results"] is not None else canonical_json(env) + "\n"
        else:
            handler = {"eval": cmd_eval, "verify": cmd_verify, "zeta": cmd_zeta, "limit": cmd_limit}[args.command]
            env, code = handler(args)
            text = canonical_json(env) + "\n"
    except UsageError as exc:
        print(f"error: {exc}", file=stderr)
        return EXIT_USAGE
    stdout.write(text)
    for err in env["errors"]:
        print(f"{err['type']}: {err['message']}", file=stderr)
    return code


if __name__ == "__main__":
    sys.exit(main())
