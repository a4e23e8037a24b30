"""Command-line front end.

Subcommands:
    eval    evaluate one named quantity at a point
    figure  write one of the nine standard CSV datasets
    verify  run a named invariant suite (text or JSON report)
    sample  Monte Carlo check of the photon distribution

Exit codes: 0 success, 1 verification failure, 2 usage error, 3 numerical
non-convergence, 4 I/O error.
"""

from __future__ import annotations

import argparse
import math
import sys

from .errors import (
    DegenerateDivisionError,
    DomainCapError,
    NonConvergenceError,
    TruncationInsufficientError,
)
from .moments import weight, weight_tilde
from .observables import (
    deformed_snr,
    deformed_squeezing_ratio,
    deformed_variance,
    mandel_q,
    metric_factor,
    quadrature_variances,
    rho_characteristic,
    snr,
    squeezing_ratio,
)
from .figures import emit_figure
from .qspecial import Deformation, SeriesControl, jackson_e_tail_bound
from .sampling import sample_mandel
from .states import StateLabel, mean_photon_number, normalization, photon_probability
from .verify import format_lines, run_suite, to_json

EXIT_OK = 0
EXIT_VERIFY_FAILED = 1
EXIT_USAGE = 2
EXIT_NONCONVERGENCE = 3
EXIT_IO = 4

QUANTITIES = (
    "norm",
    "wtilde",
    "w",
    "metric",
    "mandel",
    "varx",
    "varp",
    "rq",
    "snr",
    "rho",
    "varxb",
    "rbq",
    "snrb",
    "meann",
    "pn",
)


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="qcoherent",
        description="q-deformed coherent states: evaluate, tabulate, verify, sample",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--q", type=float, default=0.7, help="deformation parameter in (0, 1]")
    common.add_argument(
        "--tol",
        type=float,
        default=None,
        help="series relative tolerance (eval/figure/sample) or check bound (verify moments)",
    )
    common.add_argument("--max-terms", type=int, default=10_000, help="series term cap")

    p_eval = sub.add_parser("eval", parents=[common], help="evaluate one quantity at a point")
    p_eval.add_argument("quantity", choices=QUANTITIES)
    p_eval.add_argument("--x", type=float, default=None, help="|z|^2 (defaults to z real = sqrt(x))")
    p_eval.add_argument("--z-re", type=float, default=None, help="Re z (varx/varp)")
    p_eval.add_argument("--z-im", type=float, default=0.0, help="Im z (varx/varp)")
    p_eval.add_argument("--n", type=int, default=None, help="photon index (pn, rho)")

    p_fig = sub.add_parser("figure", parents=[common], help="write a figure dataset as CSV")
    p_fig.add_argument("figure_id", type=int, choices=range(1, 10), metavar="figure_id")
    p_fig.add_argument("--out", default=None, help="output path (default figureN.csv)")
    p_fig.add_argument("--q-list", default=None, help="comma-separated q values override")
    p_fig.add_argument("--points", type=int, default=None, help="number of grid points")
    p_fig.add_argument("--x-max", type=float, default=None, help="upper end of the x grid")

    p_ver = sub.add_parser("verify", parents=[common], help="run an invariant suite")
    p_ver.add_argument(
        "suite", choices=("moments", "limits", "observables", "fock", "carleman", "all")
    )
    p_ver.add_argument("--q-list", default=None, help="comma-separated q values (moments suite)")
    p_ver.add_argument("--format", choices=("text", "json"), default="text")

    p_samp = sub.add_parser("sample", parents=[common], help="Monte Carlo photon statistics")
    p_samp.add_argument("--x", type=float, required=True, help="|z|^2 > 0")
    p_samp.add_argument("--draws", type=int, default=1_000_000)
    p_samp.add_argument("--seed", type=int, default=20020521)

    return parser


def _eval_quantity(args, d: Deformation, ctrl: SeriesControl) -> tuple[float, float]:
    """Returns (value, achieved tolerance estimate)."""
    x = args.x
    if x is None and args.z_re is not None:
        x = args.z_re**2 + args.z_im**2
    if x is None and args.quantity not in ("rho",):
        raise ValueError("--x (or --z-re/--z-im) is required for this quantity")
    tol = ctrl.rel_tol

    if args.quantity in ("varx", "varp"):
        if args.z_re is not None:
            label = StateLabel(complex(args.z_re, args.z_im))
        else:
            label = StateLabel(complex(math.sqrt(x)))
        var_x, var_p = quadrature_variances(label, d, ctrl)
        return (var_x if args.quantity == "varx" else var_p), tol

    if args.quantity == "rho":
        if args.n is None:
            raise ValueError("--n is required for rho")
        return rho_characteristic(args.n, d).value, 0.0
    if args.quantity == "pn":
        if args.n is None:
            raise ValueError("--n is required for pn")
        return photon_probability(args.n, x, d, ctrl), tol

    if args.quantity == "norm":
        value = normalization(x, d, ctrl)
        if not d.classical:
            tol = max(tol, jackson_e_tail_bound((1 - d.q) * d.q * x, d, ctrl))
        return value, tol
    if args.quantity == "wtilde":
        return float(weight_tilde(x, d, ctrl)), tol
    if args.quantity == "w":
        return float(weight(x, d, ctrl)), tol
    if args.quantity == "metric":
        return metric_factor(x, d, ctrl), tol
    if args.quantity == "mandel":
        return mandel_q(x, d, ctrl), tol
    if args.quantity == "rq":
        return squeezing_ratio(x, d, ctrl), tol
    if args.quantity == "snr":
        return snr(x, d, ctrl)[0], tol
    if args.quantity == "varxb":
        return deformed_variance(x, d, ctrl), tol
    if args.quantity == "rbq":
        return deformed_squeezing_ratio(x, d, ctrl), tol
    if args.quantity == "snrb":
        return deformed_snr(x, d, ctrl), tol
    if args.quantity == "meann":
        return mean_photon_number(x, d, ctrl), tol
    raise ValueError(f"unknown quantity {args.quantity!r}")


def _parse_q_list(text: str | None) -> tuple[float, ...] | None:
    if text is None:
        return None
    return tuple(float(part) for part in text.split(",") if part.strip())


def main(argv: list[str] | None = None) -> int:
    parser = _build_parser()
    args = parser.parse_args(argv)

    try:
        d = Deformation(args.q)
        rel_tol = args.tol if args.tol is not None else 1e-14
        ctrl = SeriesControl(rel_tol=rel_tol, max_terms=args.max_terms)
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE

    try:
        if args.command == "eval":
            value, tol = _eval_quantity(args, d, ctrl)
            print(f"{value:.16e}  tol<={tol:.3e}")
            return EXIT_OK

        if args.command == "figure":
            out = args.out or f"figure{args.figure_id}.csv"
            try:
                spec = emit_figure(
                    args.figure_id,
                    out,
                    q_list=_parse_q_list(args.q_list),
                    points=args.points,
                    x_max=args.x_max,
                    ctrl=ctrl,
                )
            except OSError as exc:
                print(f"error: cannot write {out!r}: {exc}", file=sys.stderr)
                return EXIT_IO
            print(f"wrote {out}: figure {spec.figure_id}, {spec.x_range[2]} points, "
                  f"q={','.join(f'{q:g}' for q in spec.q_list)}")
            return EXIT_OK

        if args.command == "verify":
            results = run_suite(args.suite, q_list=_parse_q_list(args.q_list), tol=args.tol)
            if args.format == "json":
                print(to_json(results))
            else:
                for line in format_lines(results):
                    print(line)
            return EXIT_OK if all(r.passed for r in results) else EXIT_VERIFY_FAILED

        if args.command == "sample":
            if args.draws < 1000:
                print("error: --draws must be >= 1000", file=sys.stderr)
                return EXIT_USAGE
            if args.x <= 0:
                print("error: --x must be positive", file=sys.stderr)
                return EXIT_USAGE
            report = sample_mandel(args.q, args.x, args.draws, args.seed, ctrl)
            verdict = "PASS" if report.passed else "FAIL"
            print(f"q={report.q:g} x={report.x:g} draws={report.draws} seed={report.seed} "
                  f"rng={report.rng_name}")
            print(f"empirical mean   {report.empirical_mean:.6f}")
            print(f"empirical mandel {report.empirical_mandel:.6e}")
            print(f"analytic  mandel {report.analytic_mandel:.6e}")
            print(f"gap {report.gap:.3e} vs 3*SE {report.three_sigma:.3e}  [{verdict}]")
            return EXIT_OK if report.passed else EXIT_VERIFY_FAILED

    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except (NonConvergenceError, DomainCapError, TruncationInsufficientError,
            DegenerateDivisionError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_NONCONVERGENCE

    raise AssertionError("unreachable")


if __name__ == "__main__":
    sys.exit(main())
