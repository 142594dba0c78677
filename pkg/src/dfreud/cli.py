"""Command-line front end: parameter sweeps, verification suites, data emission.

Subcommands
-----------
moments      mu_0..mu_max by closed form or quadrature
beta         beta_n by route: hankel | dpi | smalls | largen | double
hankel-det   Hankel pivots h_j and log D_n
poly-ode     ladder / compatibility / ODE residuals on a z-grid
logdet       exact d/ds log D_n, or the large-n displays (ratio_10, D0, D1)
sensitivity  perturbed dP_I trajectories (plot-ready long format)
verify       run a named verification suite, emit a JSON report
sweep        beta_n over an s-grid (plot-ready)

Shared flags: --s --alpha --N --digits --format csv|json --out PATH.
Values are emitted as full-precision decimal strings carrying
min(digits, 50) significant digits; CSV always starts with a header row.
Exit codes: 0 success / all checks passed, 1 check failure, 2 usage or I/O
error.  The environment variable DFREUD_MAX_DIGITS caps precision escalation
(default 2000).
"""
from __future__ import annotations

import argparse
import json
import os
import sys
from typing import Optional, Sequence

from mpmath import mp, mpf, mpmathify, nstr

from .numerics import NumericContext, DomainError
from .moments import WeightParams, moment_table
from . import hankel, recurrence, asymptotics, polynomials, detasympt
from .verification import run_suite, SUITES


def _max_digits() -> int:
    try:
        return int(os.environ.get("DFREUD_MAX_DIGITS", "2000"))
    except ValueError:
        return 2000


def _decimal(x, digits: int) -> str:
    with mp.workdps(max(digits, 15)):
        return nstr(mpmathify(x), min(digits, 50))


def _emit(headers: Sequence[str], rows: Sequence[Sequence[str]], fmt: str,
          out: Optional[str], meta: Optional[dict] = None) -> None:
    if fmt == "csv":
        lines = [",".join(headers)]
        lines += [",".join(str(c) for c in row) for row in rows]
        text = "\n".join(lines) + "\n"
    else:
        doc = {"columns": list(headers),
               "rows": [list(row) for row in rows]}
        if meta:
            doc["meta"] = meta
        text = json.dumps(doc, indent=2) + "\n"
    if out:
        with open(out, "w", encoding="utf-8") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)


def _params(args) -> WeightParams:
    return WeightParams(args.s, args.alpha, args.N)


def _add_shared(parser: argparse.ArgumentParser, digits_default: int = 60) -> None:
    parser.add_argument("--s", default="0.5", help="deformation parameter in [0,1]")
    parser.add_argument("--alpha", default="0", help="singularity exponent, > -1")
    parser.add_argument("--N", default="1", help="scale parameter, > 0")
    parser.add_argument("--digits", type=int, default=digits_default,
                        help="decimal working precision")
    parser.add_argument("--format", choices=("csv", "json"), default="csv")
    parser.add_argument("--out", default=None, help="output path (default stdout)")


# ---------------------------------------------------------------------------
# subcommands
# ---------------------------------------------------------------------------

def cmd_moments(args) -> int:
    params = _params(args)
    ctx = NumericContext(digits=args.digits)
    source = "quadrature" if args.source == "quad" else "closed_form"
    table = moment_table(params, args.max_order, ctx, source=source)
    rows = [(j, _decimal(table.values[j], args.digits)) for j in range(args.max_order + 1)]
    _emit(("j", "mu_j"), rows, args.format, args.out,
          meta={"source": table.source, "digits": table.digits_used})
    return 0


def cmd_beta(args) -> int:
    params = _params(args)
    ctx = NumericContext(digits=args.digits)
    method = args.method
    if params.is_gaussian and method not in ("hankel", "smalls"):
        raise DomainError(f"s = 0 supports only hankel or smalls, not {method}")
    n_max = args.n_max
    values: list = [mp.zero] * (n_max + 1)
    if method == "hankel":
        if params.is_gaussian:
            with mp.workdps(args.digits):
                values = [recurrence.beta_at_s0(n, params.alpha, params.big_n)
                          for n in range(n_max + 1)]
                values = [mpf(v.numerator) / v.denominator for v in values]
        else:
            seq = hankel.beta_from_moments(params, n_max, ctx,
                                           max_digits=_max_digits())
            values = list(seq.betas)
    elif method == "dpi":
        b1 = recurrence.beta1_initial(params, ctx)
        seq = recurrence.dpi_forward(params, b1, n_max, ctx)
        values = list(seq.betas) + [mp.nan] * (n_max + 1 - len(seq.betas))
    elif method == "smalls":
        values = [asymptotics.beta_small_s(n, params, ctx) for n in range(n_max + 1)]
    elif method == "largen":
        values = [mp.zero] + [asymptotics.beta_large_n(n, params, ctx)
                              for n in range(1, n_max + 1)]
    elif method == "double":
        values = [mp.zero] + [asymptotics.beta_double_scaling(
            n, params.big_n, params.s, params.alpha, ctx)
            for n in range(1, n_max + 1)]
    rows = [(n, _decimal(values[n], args.digits)) for n in range(n_max + 1)]
    _emit(("n", "beta_n"), rows, args.format, args.out, meta={"method": method})
    return 0


def cmd_hankel_det(args) -> int:
    params = _params(args)
    ctx = NumericContext(digits=args.digits)
    data = hankel.h_sequence(params, args.n, ctx, max_digits=_max_digits())
    from mpmath import log, fsum
    rows = []
    with mp.workdps(data.digits_used):
        running = mp.zero
        for j, h in enumerate(data.h):
            running += log(h)
            rows.append((j, _decimal(h, args.digits), _decimal(running, args.digits)))
    _emit(("j", "h_j", "log_D_{j+1}"), rows, args.format, args.out,
          meta={"digits_used": data.digits_used})
    return 0


def cmd_poly_ode(args) -> int:
    params = _params(args)
    ctx = NumericContext(digits=args.digits)
    zgrid = [z.strip() for z in args.z_grid.split(",") if z.strip()]
    betas = hankel.beta_from_moments(params, args.n_max + 2, ctx,
                                     max_digits=_max_digits())
    polys_list = polynomials.build_polynomials(betas, args.n_max + 1)
    rows = []
    with mp.workdps(betas.digits_used):
        for n in range(1, args.n_max + 1):
            for zs in zgrid:
                z = mpmathify(zs)
                low = polynomials.lowering_residual(n, z, params, betas, polys_list)
                r1, r2, r2p = polynomials.compatibility_residuals(n, z, params, betas)
                ode = polynomials.pn_ode_residual(n, z, params, betas, polys_list, ctx)
                rows.append((n, zs, _decimal(abs(low), 20), _decimal(abs(r1), 20),
                             _decimal(abs(r2), 20), _decimal(abs(r2p), 20),
                             _decimal(ode, 20)))
    _emit(("n", "z", "lowering", "S1", "S2", "S2prime", "ode_rel"),
          rows, args.format, args.out)
    return 0


def cmd_logdet(args) -> int:
    params = _params(args)
    ctx = NumericContext(digits=args.digits)
    rows: list = []
    if args.quantity == "dlogds":
        for n in range(1, args.n_max + 1):
            value = detasympt.logdet_derivative_exact(n, params, ctx)
            rows.append((n, _decimal(value, args.digits)))
        _emit(("n", "dlogD_ds"), rows, args.format, args.out)
    else:
        for n in range(1, args.n_max + 1):
            exp_data = detasympt.logdet_expansion(args.quantity, n, args.r,
                                                  args.alpha, ctx=ctx)
            rows.append((n, exp_data.parity, _decimal(exp_data.value, args.digits),
                         _decimal(exp_data.n2, args.digits),
                         _decimal(exp_data.n1, args.digits),
                         _decimal(exp_data.logn, args.digits),
                         _decimal(exp_data.const, args.digits),
                         _decimal(exp_data.invn, args.digits)))
        _emit(("n", "parity", "value", "c_n2", "c_n", "c_logn", "c_1", "c_invn"),
              rows, args.format, args.out)
    return 0


def cmd_sensitivity(args) -> int:
    params = _params(args)
    if params.is_gaussian:
        raise DomainError("sensitivity runs need s > 0")
    ctx = NumericContext(digits=args.digits)
    epsilons = [e.strip() for e in args.epsilons.split(",") if e.strip()]
    rows = []
    for eps in epsilons:
        run = recurrence.sensitivity_run(params, eps, args.n_max, ctx)
        fail = "" if run.first_failure_index is None else run.first_failure_index
        for n, beta in enumerate(run.trajectory):
            rows.append((eps, n, _decimal(beta, args.digits), fail))
    _emit(("epsilon", "n", "beta_n", "first_failure_index"),
          rows, args.format, args.out)
    return 0


def cmd_verify(args) -> int:
    report = run_suite(args.suite, digits=args.digits)
    text = report.to_json()
    if args.out:
        with open(args.out, "w", encoding="utf-8") as fh:
            fh.write(text + "\n")
    else:
        sys.stdout.write(text + "\n")
    return 0 if report.all_passed else 1


def cmd_sweep(args) -> int:
    ctx = NumericContext(digits=args.digits)
    n_list = [int(x) for x in args.n_list.split(",") if x.strip()]
    if not n_list:
        raise DomainError("empty n list")
    steps = args.steps
    if steps < 1:
        raise DomainError("need at least one grid point")
    with mp.workdps(args.digits):
        s_from, s_to = mpmathify(args.s_from), mpmathify(args.s_to)
        rows = []
        for i in range(steps):
            sv = s_from + (s_to - s_from) * i / max(steps - 1, 1)
            params = WeightParams(sv, args.alpha, args.N)
            if params.is_gaussian:
                values = {n: recurrence.beta_at_s0(n, params.alpha, params.big_n)
                          for n in n_list}
                values = {n: mpf(v.numerator) / v.denominator for n, v in values.items()}
            elif args.method == "hankel":
                seq = hankel.beta_from_moments(params, max(n_list), ctx,
                                               max_digits=_max_digits())
                values = {n: seq[n] for n in n_list}
            else:
                values = {n: asymptotics.beta_large_n(n, params, ctx) for n in n_list}
            for n in n_list:
                rows.append((_decimal(sv, args.digits), n, _decimal(values[n], args.digits)))
    _emit(("s", "n", "beta_n"), rows, args.format, args.out)
    return 0


# ---------------------------------------------------------------------------
# parser
# ---------------------------------------------------------------------------

def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="dfreud",
        description="High-precision computations for the deformed Freud weight")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("moments", help="moment table mu_0..mu_max")
    _add_shared(p)
    p.add_argument("--max-order", type=int, default=10)
    p.add_argument("--source", choices=("closed", "quad"), default="closed")
    p.set_defaults(func=cmd_moments)

    p = sub.add_parser("beta", help="recurrence coefficients by a chosen route")
    _add_shared(p)
    p.add_argument("--method", choices=("hankel", "dpi", "smalls", "largen", "double"),
                   default="hankel")
    p.add_argument("--n-max", type=int, default=20)
    p.set_defaults(func=cmd_beta)

    p = sub.add_parser("hankel-det", help="Hankel pivots and log determinant")
    _add_shared(p)
    p.add_argument("--n", type=int, default=10)
    p.set_defaults(func=cmd_hankel_det)

    p = sub.add_parser("poly-ode", help="ladder and ODE residuals on a z-grid")
    _add_shared(p, digits_default=80)
    p.add_argument("--n-max", type=int, default=10)
    p.add_argument("--z-grid", default="-0.3,0.3,-1.1,1.1,2.7")
    p.set_defaults(func=cmd_poly_ode)

    p = sub.add_parser("logdet", help="exact d/ds log D_n or large-n displays")
    _add_shared(p)
    p.add_argument("--quantity", choices=("dlogds", "ratio_10", "D0", "D1"),
                   default="dlogds")
    p.add_argument("--n-max", type=int, default=10)
    p.add_argument("--r", default="1", help="r = n/N for the displays")
    p.set_defaults(func=cmd_logdet)

    p = sub.add_parser("sensitivity", help="perturbed dP_I trajectories")
    _add_shared(p, digits_default=500)
    p.add_argument("--epsilons", default="0,1e-1,1e-3,1e-5")
    p.add_argument("--n-max", type=int, default=100)
    p.set_defaults(func=cmd_sensitivity)

    p = sub.add_parser("verify", help="run a verification suite")
    p.add_argument("--suite", choices=tuple(sorted(SUITES)), default="all")
    p.add_argument("--digits", type=int, default=None,
                   help="override per-check default precision")
    p.add_argument("--out", default=None)
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("sweep", help="beta_n over an s-grid (plot-ready)")
    _add_shared(p)
    p.add_argument("--s-from", default="0.05")
    p.add_argument("--s-to", default="1")
    p.add_argument("--steps", type=int, default=10)
    p.add_argument("--n-list", default="1,2,5,10")
    p.add_argument("--method", choices=("hankel", "largen"), default="hankel")
    p.set_defaults(func=cmd_sweep)

    return parser


def main(argv: Optional[Sequence[str]] = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except (DomainError, KeyError, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except ArithmeticError as exc:
        # computational failure (precision cap, non-convergence): check failure
        print(f"computation failed: {exc}", file=sys.stderr)
        return 1
    except OSError as exc:
        print(f"i/o error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
