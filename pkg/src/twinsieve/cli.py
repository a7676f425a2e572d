"""Command-line surface: wheels, counts, estimates, table and figure exports."""

from __future__ import annotations

import argparse
import os
import sys

from . import estimates, report, wheel
from .primes import sieve_primes
from .wheel import WheelCapExceeded


def _default_out_dir() -> str:
    return os.environ.get("TWINSIEVE_OUT_DIR", "reports")


def _cmd_wheel(args) -> int:
    w = wheel.build_wheel(args.max_level, level_cap=args.wheel_cap)
    print(f"level {w.level}  period {w.period}  residues {len(w.residues)}  "
          f"density {w.density()}")
    for rec in w.history:
        print(f"  step {rec.level}: deleted {len(rec.multiples)} multiples "
              f"and {len(rec.twins)} twins per period")
    if args.print_table:
        print(wheel.render_table(w, fmt=args.format), end="")
    return 0


def _cmd_count(args) -> int:
    table = sieve_primes(args.p * args.p + 2)
    n = report.count_actual_twins(args.p, table, mode=args.mode)
    label = "members" if args.mode == "individual" else "pairs"
    print(f"twin prime {label} on [{args.p}, {args.p}^2]: {n}")
    return 0


def _cmd_estimate(args) -> int:
    p = args.p
    x = p * p
    if args.method == "eq16":
        value = estimates.asymptotic_eq16(float(x), p)
        print(f"inputs: x = {x}, product bound = {p}, "
              f"truncated product = {estimates.twin_product(p):.10f}")
    else:
        table = sieve_primes(x)
        pi_x = table.count_primes_up_to(x)
        pi_odd = pi_x - 1
        if args.method == "eq7":
            value = estimates.estimate_eq7(p, pi_odd)
        else:
            value = estimates.estimate_eq15(p, pi_odd)
            r = estimates.correction_r(p, pi_odd)
            print(f"correction r = {r!r} ({report.format_r(r)} at 5 decimals)")
        print(f"inputs: pi({x}) = {pi_x}, odd-prime count = {pi_odd}")
    rounded = report.display_int(value, args.rounding)
    print(f"{args.method} estimate for twin members on [{p}, {x}]: "
          f"{rounded} (unrounded {value!r}, {args.rounding})")
    return 0


def _print_table(rep: report.TableReport, rounding: str) -> None:
    print(f"{'p':>6} {'actual':>8} {'eq7':>8} {'(unrounded)':>14} "
          f"{'r':>9} {'eq15':>8} {'(unrounded)':>14}")
    for row in rep.rows:
        print(f"{row.p:>6} {row.actual:>8} {report.display_int(row.eq7, rounding):>8} "
              f"{row.eq7:>14.4f} {report.format_r(row.r):>9} "
              f"{report.display_int(row.eq15, rounding):>8} {row.eq15:>14.4f}")


def _cmd_table(args) -> int:
    primes_list = tuple(args.primes) if args.primes else report.TABLE4_PRIMES
    top = max(primes_list)
    table = sieve_primes(top * top + 2)
    rep = report.build_table4(primes_list, table, rounding=args.rounding)
    _print_table(rep, args.rounding)
    series = report.figure1_series(rep)
    paths = report.export_report(rep, series, args.out_dir)
    for path in paths:
        print(f"wrote {path}")
    return 0


def _cmd_figure(args) -> int:
    primes_list = tuple(args.primes) if args.primes else report.TABLE4_PRIMES
    top = max(primes_list)
    table = sieve_primes(top * top + 2)
    rep = report.build_table4(primes_list, table, rounding=args.rounding)
    series = report.figure1_series(rep)
    paths = report.export_report(rep, series, args.out_dir)
    if not args.dat_only:
        from .plotting import render_figure
        paths.append(render_figure(series, os.path.join(args.out_dir, "figure1.png")))
    for path in paths:
        print(f"wrote {path}")
    return 0


def _cmd_ledger(args) -> int:
    p = args.p
    table = sieve_primes(p * p)
    ledger = wheel.exact_deletion_ledger(p, table)
    pi_x = table.count_primes_up_to(p * p)
    pi_odd = pi_x - 1
    print(f"primes in [5, {p}^2): {pi_x - 2}")
    print(f"{'step':>6} {'exact':>10} {'predicted':>14} {'diff%':>8}")
    for p_k, exact in ledger.steps:
        est = estimates.deleted_estimate_eq5(p, p_k, pi_odd)
        diff = 100.0 * (est - exact) / exact if exact else float("nan")
        print(f"{p_k:>6} {exact:>10} {est:>14.2f} {diff:>8.2f}")
    est7 = estimates.estimate_eq7(p, pi_odd)
    print(f"survivors: exact {ledger.survivors}, predicted {est7:.2f}")
    ok = ledger.total_deleted + ledger.survivors == pi_x - 2
    print(f"partition: {ledger.total_deleted} deleted + {ledger.survivors} survivors "
          f"== {pi_x - 2}: {'ok' if ok else 'MISMATCH'}")
    return 0 if ok else 1


def _prime_arg(text: str) -> int:
    value = int(text)
    from .primes import is_prime
    if value < 5 or not is_prime(value):
        raise argparse.ArgumentTypeError(f"{value} is not a prime >= 5")
    return value


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="twinsieve",
        description="Twin-prime double sieve: wheels, counts, estimates, reports.")
    sub = parser.add_subparsers(dest="command", required=True)

    p_wheel = sub.add_parser("wheel", help="build a residue wheel, optionally print it")
    p_wheel.add_argument("--max-level", type=_prime_arg, required=True,
                         metavar="P", help="prime level to advance the wheel to")
    p_wheel.add_argument("--print-table", action="store_true",
                         help="print the full period with deletion annotations")
    p_wheel.add_argument("--format", choices=("text", "csv"), default="text")
    p_wheel.add_argument("--wheel-cap", type=int, default=wheel.DEFAULT_LEVEL_CAP,
                         help="largest level the wheel may materialize")
    p_wheel.set_defaults(func=_cmd_wheel)

    p_count = sub.add_parser("count", help="exact twin-prime count on [p, p^2]")
    p_count.add_argument("--p", type=_prime_arg, required=True)
    p_count.add_argument("--mode", choices=("individual", "pairs"), default="individual")
    p_count.set_defaults(func=_cmd_count)

    p_est = sub.add_parser("estimate", help="one estimate with its inputs echoed")
    p_est.add_argument("--p", type=_prime_arg, required=True)
    p_est.add_argument("--method", choices=("eq7", "eq15", "eq16"), required=True)
    p_est.add_argument("--rounding", choices=("half-away", "truncate"), default="half-away")
    p_est.set_defaults(func=_cmd_estimate)

    p_table = sub.add_parser("table", help="reproduce the reference table and export CSV")
    p_table.add_argument("--primes", type=_prime_arg, nargs="+", metavar="P")
    p_table.add_argument("--out-dir", default=_default_out_dir())
    p_table.add_argument("--rounding", choices=("half-away", "truncate"), default="half-away")
    p_table.set_defaults(func=_cmd_table)

    p_fig = sub.add_parser("figure", help="write the percent-difference series and plot")
    p_fig.add_argument("--primes", type=_prime_arg, nargs="+", metavar="P")
    p_fig.add_argument("--out-dir", default=_default_out_dir())
    p_fig.add_argument("--rounding", choices=("half-away", "truncate"), default="half-away")
    p_fig.add_argument("--dat-only", action="store_true",
                       help="skip the rendered image, write only the .dat series")
    p_fig.set_defaults(func=_cmd_figure)

    p_led = sub.add_parser("ledger", help="exact vs predicted deletions per sieving step")
    p_led.add_argument("--p", type=_prime_arg, required=True)
    p_led.set_defaults(func=_cmd_ledger)
    return parser


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except (ValueError, WheelCapExceeded, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1


if __name__ == "__main__":
    sys.exit(main())
