"""Command-line front door: one subcommand per experiment, JSON reports.

Every subcommand emits a report that validates against ``REPORT_SCHEMA``
(machine mode via ``--json``) or a human-readable table rendering of the
same data.  Identical invocations produce byte-identical JSON except for
the ``timestamp`` field.

Exit codes are a stable contract: 0 success, 1 usage or parse error,
2 precision or convergence failure.
"""
from __future__ import annotations

import argparse
import json
import os
import re
import sys
from concurrent.futures import ThreadPoolExecutor
from datetime import datetime, timezone
from fractions import Fraction
from pathlib import Path

from .bigreal import BigReal
from .errors import (
    DomainError,
    ExperimentError,
    InputFormatError,
    InsufficientTerms,
    NotFound,
    PrecisionExhausted,
)
from .experiments import cs_run, theorem1_run, zeta3_run
from .families import FamilySpec, cubic_poly, quadratic_poly, run_family
from .guess import guess_recurrence, terms_needed
from .identify import AlgebraicCandidate, LinearMatch, identify_algebraic
from .limits import convergence_report, delta_estimate, integerize
from .rationals import rational
from .recurrences import PolyInt, PRecurrence, RationalSequence, iterate

EXIT_OK = 0
EXIT_USAGE = 1
EXIT_PRECISION = 2


class UsageError(Exception):
    """Bad flags or argument values; maps to exit code 1."""


class _Parser(argparse.ArgumentParser):
    def error(self, message):  # argparse would exit(2); the contract wants 1
        raise UsageError(message)


# -- report schema ----------------------------------------------------------

_RECURRENCE_SCHEMA = {
    "type": "object",
    "required": ["order", "coeffs"],
    "properties": {
        "order": {"type": "integer", "minimum": 1},
        "coeffs": {
            "type": "array",
            "items": {"type": "array", "items": {"type": "string"}},
        },
    },
    "additionalProperties": False,
}

REPORT_SCHEMA = {
    "$schema": "https://json-schema.org/draft/2020-12/schema",
    "type": "object",
    "required": [
        "experiment",
        "parameters",
        "recurrence",
        "limit_digits",
        "alpha",
        "delta",
        "mu",
        "identified",
        "empirical",
        "achieved_digits",
        "timestamp",
    ],
    "properties": {
        "experiment": {"type": "string"},
        "parameters": {"type": "object"},
        "recurrence": {"oneOf": [{"type": "null"}, _RECURRENCE_SCHEMA]},
        "limit_digits": {"type": ["string", "null"]},
        "alpha": {"type": ["number", "null"]},
        "delta": {"type": ["number", "null"]},
        "mu": {"type": ["number", "null"]},
        "identified": {
            "oneOf": [
                {"type": "null"},
                {
                    "type": "object",
                    "required": ["kind", "coefficients", "residual"],
                    "properties": {
                        "kind": {"const": "algebraic"},
                        "coefficients": {
                            "type": "array",
                            "items": {"type": "string"},
                        },
                        "residual": {"type": "string"},
                    },
                    "additionalProperties": False,
                },
                {
                    "type": "object",
                    "required": ["kind", "basis", "coefficient", "offset", "residual"],
                    "properties": {
                        "kind": {"const": "linear"},
                        "basis": {"type": "string"},
                        "coefficient": {"type": "string"},
                        "offset": {"type": "string"},
                        "residual": {"type": "string"},
                    },
                    "additionalProperties": False,
                },
            ]
        },
        "empirical": {"type": "boolean"},
        "achieved_digits": {"type": "integer"},
        "timestamp": {"type": "string"},
        "extras": {"type": "object"},
    },
    "additionalProperties": False,
}


# -- file formats ------------------------------------------------------------

_START_RE = re.compile(r"^#\s*start\s*=\s*(-?\d+)\s*$")


def parse_rational_token(token: str, where: str):
    """One exact rational from ``p/q``, integer, or decimal notation."""
    try:
        f = Fraction(token)
    except (ValueError, ZeroDivisionError) as exc:
        raise InputFormatError(f"{where}: invalid rational {token!r}") from exc
    return rational(f.numerator, f.denominator)


def read_sequence_file(path: str) -> RationalSequence:
    """One rational per line; optional ``# start=<index>`` header."""
    try:
        lines = Path(path).read_text().splitlines()
    except OSError as exc:
        raise InputFormatError(f"{path}: {exc.strerror or exc}") from exc
    start = 0
    terms = []
    for lineno, raw in enumerate(lines, start=1):
        line = raw.strip()
        if not line:
            continue
        if line.startswith("#"):
            match = _START_RE.match(line)
            if match:
                if terms:
                    raise InputFormatError(
                        f"{path}: line {lineno}: start header must precede terms"
                    )
                start = int(match.group(1))
            continue
        terms.append(parse_rational_token(line, f"{path}: line {lineno}"))
    if not terms:
        raise InputFormatError(f"{path}: no sequence terms found")
    return RationalSequence(terms, start)


def parse_init_list(text: str, where: str) -> tuple:
    """Comma-separated exact rationals, e.g. ``0,6`` or ``1,5,73/2``."""
    tokens = [t.strip() for t in text.split(",")]
    if not tokens or any(not t for t in tokens):
        raise InputFormatError(f"{where}: expected comma-separated rationals")
    return tuple(parse_rational_token(t, where) for t in tokens)


def recurrence_payload(rec: PRecurrence) -> dict:
    """File-format object: coefficients ascending in n, decimal strings."""
    return {
        "order": rec.order,
        "coeffs": [[str(c) for c in poly.coeffs] for poly in rec.coeffs],
    }


def read_recurrence_file(path: str) -> PRecurrence:
    """Parse the bit-exact recurrence format {"order": L, "coeffs": [[..]]}."""
    try:
        text = Path(path).read_text()
    except OSError as exc:
        raise InputFormatError(f"{path}: {exc.strerror or exc}") from exc
    try:
        payload = json.loads(text)
    except json.JSONDecodeError as exc:
        raise InputFormatError(
            f"{path}: line {exc.lineno}, column {exc.colno}: {exc.msg}"
        ) from exc
    if not isinstance(payload, dict):
        raise InputFormatError(f"{path}: top level must be a JSON object")
    order = payload.get("order")
    coeffs = payload.get("coeffs")
    if not isinstance(order, int) or order < 1:
        raise InputFormatError(f"{path}: \"order\" must be a positive integer")
    if not isinstance(coeffs, list) or len(coeffs) != order + 1:
        raise InputFormatError(
            f"{path}: \"coeffs\" must list exactly order+1 = {order + 1} arrays"
        )
    polys = []
    for i, row in enumerate(coeffs):
        if not isinstance(row, list) or not row:
            raise InputFormatError(
                f"{path}: coeffs[{i}] must be a non-empty array"
            )
        values = []
        for j, entry in enumerate(row):
            if isinstance(entry, bool) or not isinstance(entry, (int, str)):
                raise InputFormatError(
                    f"{path}: coeffs[{i}][{j}] must be an integer or decimal string"
                )
            try:
                values.append(int(entry))
            except ValueError as exc:
                raise InputFormatError(
                    f"{path}: coeffs[{i}][{j}]: invalid integer {entry!r}"
                ) from exc
        polys.append(PolyInt(values))
    if polys[-1].is_zero():
        raise InputFormatError(f"{path}: leading coefficient polynomial is zero")
    return PRecurrence(polys)


def parse_decimal_value(text: str) -> BigReal:
    """A decimal literal (optionally signed, with exponent) as a BigReal."""
    token = text.strip()
    match = re.fullmatch(r"([+-]?)(\d+)(?:\.(\d+))?(?:[eE]([+-]?\d+))?", token)
    if match is None:
        raise InputFormatError(f"invalid decimal literal {token!r}")
    sign, intpart, fracpart, exp = match.groups()
    fracpart = fracpart or ""
    mantissa = int(intpart + fracpart)
    if sign == "-":
        mantissa = -mantissa
    exponent = (int(exp) if exp else 0) - len(fracpart)
    digits = max(1, len(str(abs(mantissa))))
    return BigReal(mantissa, exponent, digits=digits)


def read_value_file(path: str) -> BigReal:
    try:
        text = Path(path).read_text()
    except OSError as exc:
        raise InputFormatError(f"{path}: {exc.strerror or exc}") from exc
    tokens = [t for t in text.split() if not t.startswith("#")]
    if len(tokens) != 1:
        raise InputFormatError(f"{path}: expected exactly one decimal value")
    return parse_decimal_value(tokens[0])


# -- report assembly ---------------------------------------------------------


def _timestamp() -> str:
    return datetime.now(timezone.utc).isoformat(timespec="seconds")


def _num(x) -> float | None:
    return None if x is None else float(x)


def identified_payload(found) -> dict | None:
    if found is None:
        return None
    if isinstance(found, AlgebraicCandidate):
        return {
            "kind": "algebraic",
            "coefficients": [str(c) for c in found.polynomial.coeffs],
            "residual": found.residual.to_decimal(),
        }
    if isinstance(found, LinearMatch):
        return {
            "kind": "linear",
            "basis": found.basis_name,
            "coefficient": str(found.coefficient),
            "offset": str(found.offset),
            "residual": found.residual.to_decimal(),
        }
    raise TypeError(f"unknown identification result {found!r}")


def build_report(
    experiment: str,
    parameters: dict,
    *,
    recurrence: PRecurrence | None = None,
    limit_digits: str | None = None,
    alpha=None,
    delta=None,
    mu=None,
    identified=None,
    empirical: bool = True,
    achieved_digits: int = 0,
    extras: dict | None = None,
) -> dict:
    return {
        "experiment": experiment,
        "parameters": parameters,
        "recurrence": None if recurrence is None else recurrence_payload(recurrence),
        "limit_digits": limit_digits,
        "alpha": _num(alpha),
        "delta": _num(delta),
        "mu": _num(mu),
        "identified": identified,
        "empirical": empirical,
        "achieved_digits": achieved_digits,
        "timestamp": _timestamp(),
        "extras": extras or {},
    }


def _convergence_fields(report) -> dict:
    return {
        "limit_digits": report.limit.to_decimal(),
        "alpha": report.alpha_estimate,
        "delta": report.delta_estimate,
        "mu": report.mu_estimate,
        "achieved_digits": report.achieved_digits,
    }


def _poly_text(coeff_strings) -> str:
    text = ""
    for power, c in enumerate(coeff_strings):
        if c == "0":
            continue
        sign = "-" if c.startswith("-") else "+"
        mag = c.lstrip("+-")
        if power == 0:
            term = mag
        elif power == 1:
            term = f"{mag}*n"
        else:
            term = f"{mag}*n^{power}"
        if not text:
            text = term if sign == "+" else f"-{term}"
        else:
            text += f" {sign} {term}"
    return text or "0"


def print_table(report: dict, stream=None) -> None:
    """Human rendering of a report dict (same data as the JSON)."""
    stream = stream or sys.stdout
    w = stream.write
    w(f"experiment : {report['experiment']}\n")
    for key in sorted(report["parameters"]):
        w(f"  {key:<16}: {report['parameters'][key]}\n")
    if report["recurrence"] is not None:
        rec = report["recurrence"]
        w(f"recurrence : order {rec['order']}\n")
        for i, row in enumerate(rec["coeffs"]):
            w(f"  c_{i}(n) = {_poly_text(row)}\n")
    if report["limit_digits"] is not None:
        w(f"limit      : {report['limit_digits']}\n")
    for key in ("alpha", "delta", "mu"):
        if report[key] is not None:
            w(f"{key:<11}: {report[key]}\n")
    ident = report["identified"]
    if ident is not None:
        if ident["kind"] == "algebraic":
            w(f"identified : polynomial {ident['coefficients']} (ascending)\n")
        else:
            w(
                f"identified : {ident['coefficient']} * {ident['basis']}"
                f" + {ident['offset']}\n"
            )
        w(f"  residual : {ident['residual']}\n")
    w(f"achieved   : {report['achieved_digits']} digits\n")
    w(f"empirical  : {report['empirical']}\n")
    for key in sorted(report["extras"]):
        w(f"  {key:<16}: {report['extras'][key]}\n")
    w(f"timestamp  : {report['timestamp']}\n")


def _emit(report: dict, args) -> None:
    if args.json:
        print(json.dumps(report, sort_keys=True, indent=2))
    else:
        print_table(report)


def _default_digits(args, fallback: int) -> int:
    if getattr(args, "digits", None) is not None:
        return args.digits
    raw = os.environ.get("APERY_DIGITS_DEFAULT")
    if raw is None:
        return fallback
    try:
        value = int(raw)
    except ValueError:
        raise UsageError(
            f"APERY_DIGITS_DEFAULT must be an integer, got {raw!r}"
        ) from None
    if value < 4:
        raise UsageError("APERY_DIGITS_DEFAULT must be at least 4")
    return value


# -- subcommands -------------------------------------------------------------


def cmd_zeta3(args) -> int:
    digits = _default_digits(args, 50)
    if args.terms < 10:
        raise UsageError("--terms must be at least 10")
    if digits < 10:
        raise UsageError("--digits must be at least 10")
    run = zeta3_run(terms=args.terms, digits=digits)
    conv = run.convergence
    if not conv.converged:
        print(
            f"warning: achieved only {conv.achieved_digits} of {digits} digits;"
            " increase --terms",
            file=sys.stderr,
        )
    report = build_report(
        "zeta3",
        {
            "terms": args.terms,
            "digits": digits,
            "delta_window_end": run.delta_window_end,
        },
        recurrence=run.recurrence,
        identified=None,
        empirical=True,
        extras={
            "converged": conv.converged,
            "matches_reference": run.matches_reference,
            "stabilized_at": conv.stabilized_at,
            "max_error_ratio": _num(conv.max_error_ratio),
        },
        **_convergence_fields(conv),
    )
    _emit(report, args)
    return EXIT_OK if conv.converged else EXIT_PRECISION


def cmd_cs(args) -> int:
    digits = _default_digits(args, 60)
    if not 3 <= args.d <= 9:
        raise UsageError("--d must be between 3 and 9")
    run = cs_run(args.d, digits=digits, min_depth=args.terms or 0)
    conv = run.convergence
    report = build_report(
        "cs",
        {"d": args.d, "digits": digits, "terms": args.terms or 0},
        recurrence=run.recurrence,
        identified=identified_payload(run.identified),
        empirical=True,
        extras={
            "initial_b": [str(v) for v in run.initial_b],
            "matches_conjecture": run.matches_conjecture,
            "geometric_decay": run.geometric_decay,
            "max_error_ratio": _num(conv.max_error_ratio),
            "guess_terms": run.guess_terms,
            "converged": conv.converged,
        },
        **_convergence_fields(conv),
    )
    _emit(report, args)
    return EXIT_OK if conv.converged else EXIT_PRECISION


def cmd_theorem1(args) -> int:
    if args.d < 1:
        raise UsageError("--d must be at least 1")
    if args.terms < 8:
        raise UsageError("--terms must be at least 8")
    run = theorem1_run(args.d, terms=args.terms)
    mag = run.final_error_magnitude
    achieved = 0 if mag is None else max(0, -mag - 1)
    report = build_report(
        "theorem1",
        {"d": args.d, "terms": args.terms},
        recurrence=None,
        limit_digits=BigReal.from_rational(run.final_ratio, digits=30).to_decimal(),
        identified=None,
        empirical=False,
        achieved_digits=achieved,
        extras={
            "final_error_magnitude": mag,
            "below_1e8": run.below_1e8,
            "geometric": run.geometric,
            "max_error_ratio": _num(run.max_error_ratio),
            "first_value": str(run.first_value),
        },
    )
    _emit(report, args)
    return EXIT_OK


def _family_report_dict(run, digits: int) -> dict:
    conv = run.convergence
    spec = run.spec
    expected = cubic_poly(spec.c) if spec.kind == "cubic" else quadratic_poly(spec.c)
    extras = {
        "initial_a": [str(v) for v in run.initial_a],
        "initial_b": [str(v) for v in run.initial_b],
        "closed_form_digits": run.closed_form.to_decimal(),
        "matches_closed_form": run.matches_closed_form,
        "conjectured_polynomial": [str(c) for c in expected.coeffs],
        "polynomial_matches": run.polynomial_expected,
        "converged": conv.converged,
    }
    if run.kappa_value is not None:
        extras["kappa"] = _num(run.kappa_value)
        extras["kappa_effective"] = run.kappa_effective
    return build_report(
        "family",
        {"kind": spec.kind, "c": spec.c, "digits": digits},
        recurrence=run.recurrence,
        identified=identified_payload(run.identified),
        empirical=True,
        extras=extras,
        **_convergence_fields(conv),
    )


def cmd_family(args) -> int:
    digits = _default_digits(args, 30)
    if args.c is None and args.c_range is None:
        raise UsageError("one of --c or --c-range is required")
    if args.c is not None and args.c_range is not None:
        raise UsageError("--c and --c-range are mutually exclusive")

    if args.c is not None:
        if args.c < 1:
            raise UsageError("--c must be at least 1")
        run = run_family(
            FamilySpec(args.kind, args.c), N=args.terms, digits=digits
        )
        _emit(_family_report_dict(run, digits), args)
        return EXIT_OK if run.convergence.converged else EXIT_PRECISION

    match = re.fullmatch(r"(\d+)\.\.(\d+)", args.c_range)
    if match is None:
        raise UsageError("--c-range must have the form lo..hi, e.g. 2..12")
    lo, hi = int(match.group(1)), int(match.group(2))
    if lo < 1 or hi < lo:
        raise UsageError("--c-range needs 1 <= lo <= hi")

    def one(c: int):
        return run_family(FamilySpec(args.kind, c), N=args.terms, digits=digits)

    cs = list(range(lo, hi + 1))
    runs: dict[int, object] = {}
    failures: dict[int, str] = {}
    with ThreadPoolExecutor(max_workers=min(8, len(cs))) as pool:
        for c, outcome in zip(cs, pool.map(lambda c: _guarded(one, c), cs)):
            if isinstance(outcome, Exception):
                failures[c] = f"{type(outcome).__name__}: {outcome}"
            else:
                runs[c] = outcome

    sweep = {
        "experiment": "family_sweep",
        "parameters": {
            "kind": args.kind,
            "c_range": [lo, hi],
            "digits": digits,
        },
        "timestamp": _timestamp(),
        "runs": [_family_report_dict(runs[c], digits) for c in sorted(runs)],
        "failures": {str(c): failures[c] for c in sorted(failures)},
        "mu_table": [
            [c, _num(runs[c].convergence.mu_estimate)] for c in sorted(runs)
        ],
    }
    if args.json:
        print(json.dumps(sweep, sort_keys=True, indent=2))
    else:
        print(f"family sweep: kind={args.kind} c={lo}..{hi} digits={digits}")
        print(f"{'c':>4}  {'order':>5}  {'mu':>10}  {'delta':>10}  poly  closed-form")
        for c in sorted(runs):
            run = runs[c]
            conv = run.convergence
            mu = _num(conv.mu_estimate)
            delta = _num(conv.delta_estimate)
            print(
                f"{c:>4}  {run.recurrence.order:>5}"
                f"  {mu if mu is not None else float('nan'):>10.5f}"
                f"  {delta if delta is not None else float('nan'):>10.5f}"
                f"  {'ok' if run.polynomial_expected else 'NO':>4}"
                f"  {'ok' if run.matches_closed_form else 'NO'}"
            )
        for c in sorted(failures):
            print(f"{c:>4}  failed: {failures[c]}")
    if not runs:
        return EXIT_PRECISION
    return EXIT_OK


def _guarded(fn, *args):
    try:
        return fn(*args)
    except Exception as exc:  # per-c isolation: a failure must not kill the sweep
        return exc


def cmd_guess(args) -> int:
    seq = read_sequence_file(args.input)
    needed = terms_needed(args.max_order, args.max_degree)
    if len(seq) < needed:
        raise UsageError(
            f"need at least {needed} terms for --max-order {args.max_order}"
            f" --max-degree {args.max_degree}; file has {len(seq)}"
        )
    rec = guess_recurrence(seq, args.max_order, args.max_degree)
    report = build_report(
        "guess",
        {
            "input": os.path.basename(args.input),
            "max_order": args.max_order,
            "max_degree": args.max_degree,
            "terms": len(seq),
            "start": seq.start,
        },
        recurrence=rec,
        empirical=True,
        achieved_digits=0,
        extras={"found": rec is not None},
    )
    _emit(report, args)
    return EXIT_OK


def cmd_limit(args) -> int:
    digits = _default_digits(args, 30)
    if args.terms < 8:
        raise UsageError("--terms must be at least 8")
    rec = read_recurrence_file(args.recurrence)
    # --initA names the numerator solution (the classical a(n) with
    # a(0)=0, a(1)=6 for zeta(3)); --initB the denominator solution b(n).
    numerator_init = parse_init_list(args.init_a, "--initA")
    denominator_init = parse_init_list(args.init_b, "--initB")
    for name, init in (("--initA", numerator_init), ("--initB", denominator_init)):
        if len(init) != rec.order:
            raise UsageError(
                f"{name} must supply exactly order = {rec.order} values"
            )
    seq_den = iterate(rec, denominator_init, args.terms + 1)
    seq_num = iterate(rec, numerator_init, args.terms + 1)
    conv = convergence_report(seq_den, seq_num, digits)
    if conv.converged:
        try:
            pairs = [
                integerize(x, y)
                for x, y in zip(seq_num.terms, seq_den.terms)
                if y != 0
            ]
            conv = conv.attach_delta(delta_estimate(pairs, conv.limit_fraction))
        except ExperimentError:
            pass  # delta is a best-effort diagnostic here
    report = build_report(
        "limit",
        {
            "recurrence_file": os.path.basename(args.recurrence),
            "initA": [str(v) for v in numerator_init],
            "initB": [str(v) for v in denominator_init],
            "terms": args.terms,
            "digits": digits,
        },
        recurrence=rec,
        empirical=True,
        extras={
            "converged": conv.converged,
            "stabilized_at": conv.stabilized_at,
        },
        **_convergence_fields(conv),
    )
    if not conv.converged:
        print(
            f"warning: ratio not converged ({conv.achieved_digits} digits"
            f" achieved of {digits})",
            file=sys.stderr,
        )
    _emit(report, args)
    return EXIT_OK if conv.converged else EXIT_PRECISION


def cmd_identify(args) -> int:
    value = read_value_file(args.value)
    digits = args.digits if args.digits is not None else value.digits
    digits = min(digits, value.digits)
    if digits < 4:
        raise UsageError("need at least 4 significant digits to identify")
    candidate = identify_algebraic(value, args.degree, digits)
    report = build_report(
        "identify",
        {
            "value_file": os.path.basename(args.value),
            "degree": args.degree,
            "digits": digits,
        },
        limit_digits=value.to_decimal(),
        identified=identified_payload(candidate),
        empirical=True,
        achieved_digits=value.digits,
        extras={
            "found": candidate is not None,
            "confirmed_at": None if candidate is None else candidate.confirmed_at,
        },
    )
    _emit(report, args)
    return EXIT_OK


# -- parser ------------------------------------------------------------------


def build_parser() -> _Parser:
    common = _Parser(add_help=False)
    common.add_argument(
        "--json", action="store_true", help="emit the JSON report instead of a table"
    )

    parser = _Parser(
        prog="aperylimits",
        description="Apéry-limit experiments on P-recursive sequences",
    )
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)

    p = sub.add_parser("zeta3", parents=[common], help="a(N)/b(N) -> zeta(3) run")
    p.add_argument("--terms", type=int, default=1000, metavar="N")
    p.add_argument("--digits", type=int, default=None, metavar="D")
    p.set_defaults(func=cmd_zeta3)

    p = sub.add_parser(
        "cs", parents=[common], help="binomial power-sum limits (zeta(2)/(d+1))"
    )
    p.add_argument("--d", type=int, required=True)
    p.add_argument("--terms", type=int, default=None, metavar="N")
    p.add_argument("--digits", type=int, default=None, metavar="P")
    p.set_defaults(func=cmd_cs)

    p = sub.add_parser(
        "theorem1",
        parents=[common],
        help="weighted-average sums B'(n)/A(n) -> zeta(2)",
    )
    p.add_argument("--d", type=int, required=True)
    p.add_argument("--terms", type=int, default=200, metavar="N")
    p.set_defaults(func=cmd_theorem1)

    p = sub.add_parser(
        "family", parents=[common], help="contour-integral family pipelines"
    )
    p.add_argument("--kind", choices=("cubic", "quadratic"), required=True)
    p.add_argument("--c", type=int, default=None)
    p.add_argument("--c-range", dest="c_range", default=None, metavar="LO..HI")
    p.add_argument("--terms", type=int, default=None, metavar="N")
    p.add_argument("--digits", type=int, default=None, metavar="P")
    p.set_defaults(func=cmd_family)

    p = sub.add_parser(
        "guess", parents=[common], help="guess a recurrence from a sequence file"
    )
    p.add_argument("--input", required=True, metavar="FILE")
    p.add_argument("--max-order", dest="max_order", type=int, default=4)
    p.add_argument("--max-degree", dest="max_degree", type=int, default=6)
    p.set_defaults(func=cmd_guess)

    p = sub.add_parser(
        "limit", parents=[common], help="Apéry limit of a recurrence file"
    )
    p.add_argument("--recurrence", required=True, metavar="FILE")
    p.add_argument("--initA", dest="init_a", required=True, metavar="LIST")
    p.add_argument("--initB", dest="init_b", required=True, metavar="LIST")
    p.add_argument("--terms", type=int, default=400, metavar="N")
    p.add_argument("--digits", type=int, default=None, metavar="D")
    p.set_defaults(func=cmd_limit)

    p = sub.add_parser(
        "identify", parents=[common], help="minimal polynomial of a decimal value"
    )
    p.add_argument("--value", required=True, metavar="FILE")
    p.add_argument("--degree", type=int, default=3)
    p.add_argument("--digits", type=int, default=None)
    p.set_defaults(func=cmd_identify)

    return parser


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except UsageError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    try:
        return args.func(args)
    except UsageError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except InputFormatError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except InsufficientTerms as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except (PrecisionExhausted, NotFound) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_PRECISION
    except DomainError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except ExperimentError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_PRECISION


if __name__ == "__main__":
    sys.exit(main())
