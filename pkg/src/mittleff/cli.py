"""Command-line front end: point evaluation, CSV grids, decay tables, rational fits.

Exit codes: 0 success, 2 bad usage or invalid parameters, 3 numerical
failure (non-convergence, poles, singular systems, NaN results).
"""

from __future__ import annotations

import argparse
import math
import sys
from typing import Callable, Sequence

from .asymptotic import asymptotic_sigma_tau, ml_asymptotic
from .contours import build_hyperbolic_rule, build_parabolic_rule
from .dispatch import DEFAULT_TOL, TOL_MAX, TOL_MIN, ml_auto, quadrature_n_for_tol
from .exceptions import DomainError, MittleffError
from .pade import (
    build_pade,
    coefficients_csv,
    pade_eval,
    partial_fractions,
    partial_fractions_csv,
)
from .quadrature import EvalResult, Method, ml_quad
from .series import ml_series

EXIT_OK = 0
EXIT_USAGE = 2
EXIT_NUMERICAL = 3

_METHODS = ("auto", "series", "asymp", "quad-par", "quad-hyp")


def _merge_negative_values(argv: Sequence[str]) -> list[str]:
    # argparse treats "-15" after "--z" as an option; fold it into "--z=-15"
    out: list[str] = []
    i = 0
    while i < len(argv):
        tok = argv[i]
        nxt = argv[i + 1] if i + 1 < len(argv) else None
        if (
            tok.startswith("--")
            and "=" not in tok
            and nxt is not None
            and len(nxt) >= 2
            and nxt[0] == "-"
            and (nxt[1].isdigit() or nxt[1] == ".")
        ):
            out.append(tok + "=" + nxt)
            i += 2
        else:
            out.append(tok)
            i += 1
    return out


def _parse_complex(text: str) -> complex:
    parts = text.split(",")
    if len(parts) > 2:
        raise argparse.ArgumentTypeError(f"bad complex value {text!r}, expected RE[,IM]")
    try:
        re = float(parts[0])
        im = float(parts[1]) if len(parts) == 2 else 0.0
    except ValueError as exc:
        raise argparse.ArgumentTypeError(f"bad complex value {text!r}: {exc}") from exc
    return complex(re, im)


def _parse_method_pair(text: str) -> tuple[str, str]:
    parts = text.split(",")
    if len(parts) != 2 or not all(p in _METHODS for p in parts):
        raise argparse.ArgumentTypeError(
            f"bad method pair {text!r}, expected M1,M2 from {'|'.join(_METHODS)}"
        )
    return parts[0], parts[1]


def _parse_float_list(text: str) -> tuple[float, ...]:
    try:
        values = tuple(float(p) for p in text.split(",") if p != "")
    except ValueError as exc:
        raise argparse.ArgumentTypeError(f"bad number list {text!r}: {exc}") from exc
    if not values:
        raise argparse.ArgumentTypeError("empty number list")
    return values


def _check_common(alpha: float, tol: float) -> None:
    if alpha <= 0.0:
        raise DomainError(f"alpha={alpha!r} must be positive")
    if not TOL_MIN <= tol <= TOL_MAX:
        raise DomainError(f"tol={tol!r} outside [{TOL_MIN}, {TOL_MAX}]")


def _eval_one(
    method: str, z: complex, alpha: float, beta: float, tol: float, n_nodes: int | None
) -> tuple[EvalResult, bool]:
    """Evaluate by a named method; returns (result, converged flag).

    Forced methods repeat exactly the calls the automatic route makes,
    so auto and its reported method agree bit for bit.
    """
    if method == "auto":
        return ml_auto(z, alpha, beta, tol), True
    if method == "series":
        res = ml_series(z, alpha, beta, tol)
        return EvalResult(res.value, Method.SERIES, res.terms_used, res.err_estimate), res.converged
    if method == "asymp":
        res = ml_asymptotic(z, alpha, beta, tol)
        return EvalResult(res.value, Method.ASYMPTOTIC, res.m, res.err_estimate), res.converged
    n = n_nodes if n_nodes is not None else quadrature_n_for_tol(tol)
    rule = build_parabolic_rule(n) if method == "quad-par" else build_hyperbolic_rule(n)
    return ml_quad(z, alpha, beta, rule), True


def cmd_eval(args: argparse.Namespace) -> int:
    _check_common(args.alpha, args.tol)
    res, converged = _eval_one(args.method, args.z, args.alpha, args.beta, args.tol, args.N)
    v = res.value
    print(f"{v.real:.16e} {v.imag:.16e}")
    print(f"method: {res.method.value}")
    label = "nodes" if res.method in (Method.QUAD_PARABOLIC, Method.QUAD_HYPERBOLIC) else "terms"
    print(f"{label}: {res.nodes_or_terms}")
    print(f"err_estimate: {res.err_estimate!r}")
    if not converged:
        print("warning: not converged", file=sys.stderr)
        return EXIT_NUMERICAL
    if v != v:  # NaN
        print("warning: result is NaN", file=sys.stderr)
        return EXIT_NUMERICAL
    return EXIT_OK


def _write_text(path: str, text: str) -> None:
    if path == "-":
        sys.stdout.write(text)
        return
    with open(path, "w", encoding="utf-8", newline="") as fh:
        fh.write(text)


def _linspace(lo: float, hi: float, steps: int) -> list[float]:
    if steps == 1:
        return [lo]
    return [lo + (hi - lo) * i / (steps - 1) for i in range(steps)]


def cmd_grid(args: argparse.Namespace) -> int:
    _check_common(args.alpha, args.tol)
    if args.steps < 1:
        raise DomainError(f"steps={args.steps!r} must be >= 1")
    methods = args.compare_method if args.compare_method is not None else ("auto", None)
    lines = ["re,im,value_re,value_im" + (",log10_abs_err" if methods[1] else "")]
    for re in _linspace(args.re_min, args.re_max, args.steps):
        for im in _linspace(args.im_min, args.im_max, args.steps):
            z = complex(re, im)
            v1 = _eval_one(methods[0], z, args.alpha, args.beta, args.tol, args.N)[0].value
            row = f"{re!r},{im!r},{v1.real!r},{v1.imag!r}"
            if methods[1]:
                v2 = _eval_one(methods[1], z, args.alpha, args.beta, args.tol, args.N)[0].value
                diff = abs(v1 - v2)
                row += f",{math.log10(diff) if diff > 0.0 else float('-inf')!r}"
            lines.append(row)
    _write_text(args.out, "\n".join(lines) + "\n")
    return EXIT_OK


def cmd_pade(args: argparse.Namespace) -> int:
    approx = build_pade(args.alpha, args.beta, args.m, args.n, args.solver)
    if args.emit == "coeffs":
        text = coefficients_csv(approx)
    elif args.emit == "pf":
        text = partial_fractions_csv(partial_fractions(approx))
    else:
        lines = ["x,pade,reference,abs_err"]
        for i in range(100):
            x = 10.0 ** (-3.0 + 6.0 * i / 99.0)
            got = pade_eval(approx, x)
            ref = ml_auto(complex(-x), args.alpha, args.beta).value.real
            lines.append(f"{x!r},{got!r},{ref!r},{abs(got - ref)!r}")
        text = "\n".join(lines) + "\n"
    _write_text(args.out, text)
    return EXIT_OK


def cmd_table_asymp(args: argparse.Namespace) -> int:
    _check_common(args.alpha, args.tol)
    rule = build_hyperbolic_rule(14)
    header = f"{'x':>8} {'terms':>6} {'exp_scale':>14} {'err_vs_quad':>13} {'tail_prev':>13} {'tail_last':>13}"
    rows = [header]
    for x in args.x:
        if x <= 0.0:
            raise DomainError(f"x={x!r} must be positive")
        z = complex(-x)
        res = ml_asymptotic(z, args.alpha, args.beta, args.tol)
        ref = ml_quad(z, args.alpha, args.beta, rule).value
        scale = x ** (1.0 / args.alpha) / args.alpha
        tails = []
        for k in (res.m - 1, res.m):
            log_tau = asymptotic_sigma_tau(k, args.alpha, args.beta)[1]
            tails.append(math.exp(log_tau - k * math.log(x)))
        rows.append(
            f"{x:>8g} {res.m:>6d} {scale:>14.6e} {abs(res.value - ref):>13.3e}"
            f" {tails[0]:>13.3e} {tails[1]:>13.3e}"
        )
    print("\n".join(rows))
    return EXIT_OK


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="mittleff", description=__doc__)
    sub = parser.add_subparsers(dest="command", required=True)

    p_eval = sub.add_parser("eval", help="evaluate at one point")
    p_eval.add_argument("--alpha", type=float, required=True)
    p_eval.add_argument("--beta", type=float, required=True)
    p_eval.add_argument("--z", type=_parse_complex, required=True, metavar="RE[,IM]")
    p_eval.add_argument("--method", choices=_METHODS, default="auto")
    p_eval.add_argument("--N", type=int, default=None, help="contour node parameter")
    p_eval.add_argument("--tol", type=float, default=DEFAULT_TOL)
    p_eval.set_defaults(func=cmd_eval)

    p_grid = sub.add_parser("grid", help="CSV over a rectangle of the plane")
    p_grid.add_argument("--alpha", type=float, required=True)
    p_grid.add_argument("--beta", type=float, required=True)
    p_grid.add_argument("--re-min", type=float, required=True)
    p_grid.add_argument("--re-max", type=float, required=True)
    p_grid.add_argument("--im-min", type=float, required=True)
    p_grid.add_argument("--im-max", type=float, required=True)
    p_grid.add_argument("--steps", type=int, required=True, help="points per axis")
    p_grid.add_argument("--out", required=True, help="output file, - for stdout")
    p_grid.add_argument("--compare-method", type=_parse_method_pair, default=None, metavar="M1,M2")
    p_grid.add_argument("--method", choices=_METHODS, default="auto", help=argparse.SUPPRESS)
    p_grid.add_argument("--N", type=int, default=None)
    p_grid.add_argument("--tol", type=float, default=DEFAULT_TOL)
    p_grid.set_defaults(func=cmd_grid)

    p_pade = sub.add_parser("pade", help="two-point rational approximation CSV")
    p_pade.add_argument("--alpha", type=float, required=True)
    p_pade.add_argument("--beta", type=float, required=True)
    p_pade.add_argument("--m", type=int, required=True)
    p_pade.add_argument("--n", type=int, required=True)
    p_pade.add_argument("--solver", choices=("fixed", "svd", "lu"), default="fixed")
    p_pade.add_argument("--emit", choices=("coeffs", "pf", "errgrid"), default="coeffs")
    p_pade.add_argument("--out", default="-", help="output file, - for stdout")
    p_pade.set_defaults(func=cmd_pade)

    p_tab = sub.add_parser("table-asymp", help="expansion failure/decay table")
    p_tab.add_argument("--alpha", type=float, default=0.7)
    p_tab.add_argument("--beta", type=float, default=1.0)
    p_tab.add_argument("--tol", type=float, default=1e-12)
    p_tab.add_argument("--x", type=_parse_float_list, default=(5.0, 15.0, 25.0, 35.0, 45.0, 55.0))
    p_tab.set_defaults(func=cmd_table_asymp)

    return parser


def main(argv: Sequence[str] | None = None) -> int:
    argv = sys.argv[1:] if argv is None else list(argv)
    parser = _build_parser()
    try:
        args = parser.parse_args(_merge_negative_values(argv))
    except SystemExit as exc:
        return int(exc.code or 0)
    func: Callable[[argparse.Namespace], int] = args.func
    try:
        return func(args)
    except DomainError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except MittleffError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_NUMERICAL
    except OSError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1


if __name__ == "__main__":
    sys.exit(main())
