"""Command-line driver.

Subcommands:
  sweep  run identity/congruence checks over ranges and report
  dixon  floating-point convergence check of the infinite cubed sum
  gamma  print Gamma_p(a/b) mod p^m
  euler  print E_{p-3} mod p

Exit codes: 0 all executed checks passed, 1 some check failed,
2 usage/config error.
"""

from __future__ import annotations

import argparse
import sys
from fractions import Fraction

from .dixon import dixon_float_check
from .modring import Modulus
from .gamma import DEFAULT_GUARD_DIGITS, GammaRequest, euler_mod_p, gamma_p
from .sweep import ALL_TAGS, SweepConfig, run_sweep


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="catalan-lab",
        description="Exact verification of Catalan-number identities and congruences",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    sweep = sub.add_parser("sweep", help="run checks over prime / index ranges")
    sweep.add_argument(
        "--checks",
        default="ALL",
        help=f"comma-separated tags or ALL (known: {', '.join(ALL_TAGS)})",
    )
    sweep.add_argument("--p-min", type=int, default=3)
    sweep.add_argument("--p-max", type=int, default=100)
    sweep.add_argument("--n-max", type=int, default=50)
    sweep.add_argument("--modulus-override", type=int, default=None)
    sweep.add_argument("--jobs", type=int, default=1)
    sweep.add_argument("--format", choices=("json", "csv", "human"), default="human")
    sweep.add_argument("--output", default=None)
    sweep.add_argument("--guard-digits", type=int, default=DEFAULT_GUARD_DIGITS)

    dixon = sub.add_parser("dixon", help="floating-point check of the infinite sum")
    dixon.add_argument("--terms", type=int, default=100_000)
    dixon.add_argument("--tolerance", type=float, default=1e-10)
    dixon.add_argument("--digits", type=int, default=30)

    gamma = sub.add_parser("gamma", help="print Gamma_p(a/b) mod p^m")
    gamma.add_argument("p", type=int)
    gamma.add_argument("argument", help="rational argument, e.g. 1/4")
    gamma.add_argument("-m", "--precision", type=int, default=1)
    gamma.add_argument("--guard-digits", type=int, default=DEFAULT_GUARD_DIGITS)

    euler = sub.add_parser("euler", help="print E_{p-3} mod p")
    euler.add_argument("p", type=int)
    return parser


def _cmd_sweep(args) -> int:
    checks = tuple(t.strip() for t in args.checks.split(",") if t.strip())
    try:
        config = SweepConfig(
            checks=checks,
            p_min=args.p_min,
            p_max=args.p_max,
            n_max=args.n_max,
            modulus_override=args.modulus_override,
            jobs=args.jobs,
            format=args.format,
            output_path=args.output,
            guard_digits=args.guard_digits,
        )
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    report = run_sweep(config)
    text = report.render()
    if args.output:
        with open(args.output, "w") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)
    return report.exit_code


def _cmd_dixon(args) -> int:
    try:
        result = dixon_float_check(args.terms, args.tolerance, args.digits)
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    print(f"partial sum ({result.terms} terms): {result.partial_sum}")
    print(f"closed form 8 - 384*pi/Gamma(1/4)^4: {result.closed_form}")
    print(f"difference: {result.difference}  tail bound: {result.tail_bound}")
    print("PASS" if result.passed else "FAIL")
    return 0 if result.passed else 1


def _cmd_gamma(args) -> int:
    try:
        argument = Fraction(args.argument)
        mod = Modulus(args.p, args.precision)
        value = gamma_p(GammaRequest(argument, mod, guard_digits=args.guard_digits))
    except (ValueError, ArithmeticError, ZeroDivisionError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    print(f"Gamma_{args.p}({argument}) = {value}")
    return 0


def _cmd_euler(args) -> int:
    try:
        value = euler_mod_p(args.p)
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    print(f"E_{args.p - 3} = {value}")
    return 0


def main(argv=None) -> int:
    parser = _build_parser()
    args = parser.parse_args(argv)
    handler = {
        "sweep": _cmd_sweep,
        "dixon": _cmd_dixon,
        "gamma": _cmd_gamma,
        "euler": _cmd_euler,
    }[args.command]
    return handler(args)


if __name__ == "__main__":
    sys.exit(main())
