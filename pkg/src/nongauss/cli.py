"""Command-line front end with machine-readable JSON output.

Every numeric field in a result payload is tagged in the payload's
``provenance`` map as one of closed-form / numeric / exact.  Exit codes:
0 ok, 1 usage error, 2 domain error, 3 numerical failure.
"""

from __future__ import annotations

import argparse
import json
import re
import sys
import warnings
from fractions import Fraction

from .discriminant import (
    discriminant_cubic_explicit,
    discriminant_general,
    discriminant_quartic_explicit,
    discriminant_quintic_explicit,
)
from .errors import (
    DegenerateLeadingCoefficient,
    DomainError,
    NoConvergence,
    NonGaussError,
    StencilCrossesSingularity,
)
from .polynomial import CubicCoeffs, Polynomial, is_exact_number, parse_number
from .quadrature import QuadratureConfig, integral_numeric, integral_numeric_general
from .renorm import (
    closed_form_integral,
    expectations,
    expectations_fd_check,
    gaussian_analogue,
    pde_identity_residuals,
)
from .special import identity_suite

_CHECK_AGREEMENT_BOUND = 1e-6

_GRAMMAR = """\
usage: nongauss <command> [options]

commands:
  disc <coeffs...> [--degree n]          exact discriminant (any degree >= 2)
  integral <a b c d> [--numeric] [--check] [--rel-tol t] [--max-levels m]
  integral --degree n <coeffs...>        numeric integral for degree n >= 3
  gauss <a b c>                          closed form of 1/(a x^2 + b x + c)
  expect <a b c d> [--fd-check] [--step h]
  verify <a b c d> [--step h]            coefficient-identity residuals
  beta-check                             Gamma/Beta identity residuals

coefficients accept decimals or exact "p/q" rationals; rational input keeps
exact arithmetic end to end.  Add --plain for a human-readable table.
"""


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise UsageError(message)


def _build_parser() -> _Parser:
    parser = _Parser(prog="nongauss", add_help=True)
    sub = parser.add_subparsers(dest="command", required=True)

    disc = sub.add_parser("disc", add_help=True)
    disc.add_argument("coeffs", nargs="+")
    disc.add_argument("--degree", type=int, default=None)
    disc.add_argument("--plain", action="store_true")

    integral = sub.add_parser("integral", add_help=True)
    integral.add_argument("coeffs", nargs="+")
    integral.add_argument("--numeric", action="store_true")
    integral.add_argument("--check", action="store_true")
    integral.add_argument("--degree", type=int, default=None)
    integral.add_argument("--rel-tol", type=float, default=None)
    integral.add_argument("--max-levels", type=int, default=None)
    integral.add_argument("--plain", action="store_true")

    gauss = sub.add_parser("gauss", add_help=True)
    gauss.add_argument("coeffs", nargs=3)
    gauss.add_argument("--plain", action="store_true")

    expect = sub.add_parser("expect", add_help=True)
    expect.add_argument("coeffs", nargs=4)
    expect.add_argument("--fd-check", action="store_true")
    expect.add_argument("--step", type=float, default=None)
    expect.add_argument("--plain", action="store_true")

    verify = sub.add_parser("verify", add_help=True)
    verify.add_argument("coeffs", nargs=4)
    verify.add_argument("--step", type=float, default=None)
    verify.add_argument("--plain", action="store_true")

    beta_check = sub.add_parser("beta-check", add_help=True)
    beta_check.add_argument("--plain", action="store_true")

    return parser


def _quad_config(args) -> QuadratureConfig:
    kwargs = {}
    if getattr(args, "rel_tol", None) is not None:
        kwargs["rel_tol"] = args.rel_tol
    if getattr(args, "max_levels", None) is not None:
        kwargs["max_levels"] = args.max_levels
    return QuadratureConfig(**kwargs)


def _parse_coeffs(tokens):
    return [parse_number(t) for t in tokens]


def _exact_str(value) -> str:
    return str(Fraction(value))


def _cubic_from(tokens) -> CubicCoeffs:
    values = _parse_coeffs(tokens)
    if len(values) != 4:
        raise UsageError(f"expected 4 cubic coefficients, got {len(values)}")
    return CubicCoeffs(*values)


def _moment_payload(value):
    return _exact_str(value) if is_exact_number(value) else float(value)


def _run_disc(args) -> dict:
    values = _parse_coeffs(args.coeffs)
    degree = len(values) - 1 if args.degree is None else args.degree
    if degree != len(values) - 1:
        raise UsageError(
            f"--degree {args.degree} needs {args.degree + 1} coefficients, got {len(values)}"
        )
    if degree == 3:
        result = discriminant_cubic_explicit(CubicCoeffs(*values))
        value, sign = result.value, result.sign.value
    elif degree == 4:
        value = discriminant_quartic_explicit(values)
        sign = "Positive" if value > 0 else ("Negative" if value < 0 else "Zero")
    elif degree == 5:
        value = discriminant_quintic_explicit(values)
        sign = "Positive" if value > 0 else ("Negative" if value < 0 else "Zero")
    else:
        if Fraction(values[0]) == 0:
            # the sign rule (-1)**(n(n-1)/2) depends on the true degree
            raise DegenerateLeadingCoefficient(
                "leading coefficient must be nonzero for the determinant route"
            )
        result = discriminant_general(Polynomial(values))
        value, sign = result.value, result.sign.value
    return {"D": _exact_str(value), "sign": sign, "provenance": {"D": "exact"}}


def _run_integral(args) -> dict:
    values = _parse_coeffs(args.coeffs)
    cfg = _quad_config(args)
    if args.degree is not None:
        if len(values) != args.degree + 1:
            raise UsageError(
                f"--degree {args.degree} needs {args.degree + 1} coefficients, got {len(values)}"
            )
        result = integral_numeric_general(Polynomial(values), cfg)
        return {
            "value": result.value,
            "method": result.method.value,
            "error_estimate": result.error_estimate,
            "D": _exact_str(result.discriminant.value),
            "sign": result.discriminant.sign.value,
            "provenance": {"value": "numeric", "D": "exact"},
        }
    cubic = _cubic_from(args.coeffs)
    if args.check:
        closed = closed_form_integral(cubic)
        numeric = integral_numeric(cubic, cfg)
        rel_diff = abs(numeric.value - closed.value) / abs(closed.value)
        payload = {
            "closed": closed.value,
            "numeric": numeric.value,
            "rel_diff": rel_diff,
            "error_estimate": numeric.error_estimate,
            "D": _exact_str(closed.discriminant.value),
            "sign": closed.discriminant.sign.value,
            "provenance": {"closed": "closed-form", "numeric": "numeric", "D": "exact"},
        }
        payload["agrees"] = rel_diff <= _CHECK_AGREEMENT_BOUND
        return payload
    result = integral_numeric(cubic, cfg) if args.numeric else closed_form_integral(cubic)
    return {
        "value": result.value,
        "method": result.method.value,
        "error_estimate": result.error_estimate,
        "D": _exact_str(result.discriminant.value),
        "sign": result.discriminant.sign.value,
        "provenance": {"value": result.method.value, "D": "exact"},
    }


def _run_gauss(args) -> dict:
    a, b, c = _parse_coeffs(args.coeffs)
    return {
        "value": gaussian_analogue(a, b, c),
        "provenance": {"value": "closed-form"},
    }


def _run_expect(args) -> dict:
    cubic = _cubic_from(args.coeffs)
    moments = expectations(cubic)
    tag = "exact" if cubic.is_exact() else "closed-form"
    payload = {
        "x3": _moment_payload(moments.x3),
        "x2y": _moment_payload(moments.x2y),
        "xy2": _moment_payload(moments.xy2),
        "y3": _moment_payload(moments.y3),
        "provenance": {k: tag for k in ("x3", "x2y", "xy2", "y3")},
    }
    if args.fd_check:
        residuals = expectations_fd_check(cubic, step=args.step)
        payload["fd_residuals"] = dict(zip(("x3", "x2y", "xy2", "y3"), residuals))
        payload["provenance"]["fd_residuals"] = "numeric"
    return payload


def _run_verify(args) -> dict:
    cubic = _cubic_from(args.coeffs)
    r1, r2, r3 = pde_identity_residuals(cubic, step=args.step)
    return {
        "residuals": {"ad-bc": r1, "bb-ac": r2, "cc-bd": r3},
        "provenance": {"residuals": "numeric"},
    }


def _run_beta_check(args) -> dict:
    residuals = identity_suite()
    rows = [
        {"identity": r.identity, "argument": r.argument, "residual": r.residual}
        for r in residuals
    ]
    return {
        "identities": rows,
        "max_residual": max(r.residual for r in residuals),
        "provenance": {"identities": "numeric"},
    }


_HANDLERS = {
    "disc": _run_disc,
    "integral": _run_integral,
    "gauss": _run_gauss,
    "expect": _run_expect,
    "verify": _run_verify,
    "beta-check": _run_beta_check,
}


def _emit(record: dict, plain: bool) -> None:
    if not plain:
        print(json.dumps(record, indent=2))
        return
    for key, value in record.items():
        if isinstance(value, dict):
            print(f"{key}:")
            for k, v in value.items():
                print(f"  {k}: {v}")
        else:
            print(f"{key}: {value}")


# argparse's negative-number detection misses "-1/3" and "-1e-3"; a leading
# space keeps such tokens positional, and parse_number strips it again.
_NEGATIVE_NUMBER = re.compile(r"^-(?:\d+/\d+|(?:\d+\.?\d*|\.\d+)(?:[eE][-+]?\d+)?)$")


def run(argv) -> int:
    parser = _build_parser()
    argv = [" " + a if _NEGATIVE_NUMBER.match(a) else a for a in argv]
    try:
        args = parser.parse_args(argv)
    except UsageError as exc:
        print(f"error: {exc}", file=sys.stderr)
        print(_GRAMMAR, file=sys.stderr)
        return 1
    except SystemExit as exc:  # --help
        return int(exc.code or 0)

    record = {
        "command": args.command,
        "inputs": {"coefficients": [t.strip() for t in getattr(args, "coeffs", [])]},
        "result": None,
        "warnings": [],
        "status": "ok",
        "error_kind": None,
    }
    exit_code = 0
    with warnings.catch_warnings(record=True) as caught:
        warnings.simplefilter("always")
        try:
            record["result"] = _HANDLERS[args.command](args)
        except UsageError as exc:
            print(f"error: {exc}", file=sys.stderr)
            print(_GRAMMAR, file=sys.stderr)
            return 1
        except NoConvergence as exc:
            record["status"] = "error"
            record["error_kind"] = type(exc).__name__
            record["result"] = {"message": str(exc)}
            exit_code = 3
        except (DomainError, StencilCrossesSingularity, NonGaussError) as exc:
            record["status"] = "error"
            record["error_kind"] = type(exc).__name__
            record["result"] = {"message": str(exc)}
            exit_code = 2
    record["warnings"] = [str(w.message) for w in caught]

    if exit_code == 0 and args.command == "integral" and getattr(args, "check", False):
        if not record["result"].get("agrees", True):
            record["status"] = "error"
            record["error_kind"] = "CheckMismatch"
            exit_code = 3

    _emit(record, getattr(args, "plain", False))
    return exit_code


def main() -> None:
    sys.exit(run(sys.argv[1:]))


if __name__ == "__main__":
    main()
