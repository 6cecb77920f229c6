"""``alt-xi``: evaluate, check, scan and integrate from the shell.

    alt-xi eval --function xi_a --s 0.5+12i --method gamma-series
    alt-xi check --suite all
    alt-xi scan --t-min 10 --t-max 16 --step 0.05
    alt-xi integrate --target varphi_plain

Results go to stdout as JSON lines (default) or CSV; diagnostics go to
stderr as a single line starting with E_PARSE, E_DOMAIN or E_CONV.
Exit status: 0 success, 1 failed check or non-convergence, 2 bad input.
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import math
import os
import re
import sys
from dataclasses import dataclass

from . import incomplete_gamma, theta_kernel, zeta_family
from .checks import SUITES, run_suite
from .complex_gamma import gamma, real_pow_complex
from .errors import AltXiError, DomainError
from .mellin_oracle import SCHEMES, QuadratureSpec, mellin_xi_a, special_integral
from .settings import DEFAULT_SETTINGS, EvalResult, EvalSettings

EXIT_OK, EXIT_FAIL, EXIT_USAGE = 0, 1, 2
TOL_ENV = "ALT_XI_TOL"

# ---------------------------------------------------------------- complex numbers

_REAL = r"(?:\d+(?:\.\d*)?|\.\d+)(?:[eE][+-]?\d+)?"
_COMPLEX_RE = re.compile(
    rf"^(?P<re>[+-]?{_REAL})?(?:(?P<sign>[+-])?(?P<im>{_REAL})?(?P<i>i))?$"
)


class ParseError(ValueError):
    pass


def parse_complex(text: str) -> complex:
    """Parse ``<real>``, ``<real>+<real>i``, ``<real>-<real>i``, ``<real>i`` or ``i``.

    A bare ``i`` stands for 1i.  No whitespace is allowed.
    """
    m = _COMPLEX_RE.match(text)
    if not text or m is None:
        raise ParseError(f"cannot parse {text!r} as a complex number")
    re_part, sign, im_part, unit = m.group("re", "sign", "im", "i")
    if unit is None:
        return complex(float(re_part), 0.0)
    if re_part is not None and sign is None:
        if im_part is not None:
            raise ParseError(f"cannot parse {text!r} as a complex number")
        # "<real>i": the regex put the whole number in the real slot
        return complex(0.0, float(re_part))
    im = 1.0 if im_part is None else float(im_part)
    if sign == "-":
        im = -im
    return complex(0.0 if re_part is None else float(re_part), im)


def format_complex(z: complex) -> str:
    """Inverse of :func:`parse_complex`; shortest repr round-trips exactly."""
    z = complex(z)
    if z.imag == 0.0 and math.copysign(1.0, z.imag) > 0:
        return repr(z.real)
    sign = "-" if math.copysign(1.0, z.imag) < 0 else "+"
    return f"{z.real!r}{sign}{abs(z.imag)!r}i"


def _complex_arg(text: str) -> complex:
    try:
        return parse_complex(text)
    except ParseError as exc:
        raise argparse.ArgumentTypeError(str(exc)) from None


# ---------------------------------------------------------------- records


@dataclass(frozen=True)
class OutputRecord:
    function: str
    s: complex
    value: complex
    method: str
    est_error: float
    terms_used: int
    order: complex | None = None  # the order a of the incomplete gammas

    @classmethod
    def from_result(cls, function, s, r: EvalResult, order=None) -> "OutputRecord":
        return cls(function, complex(s), r.value, r.method, r.est_error, r.terms_used, order)

    def as_dict(self) -> dict:
        d = {
            "function": self.function,
            "s": {"re": self.s.real, "im": self.s.imag},
            "value": {"re": self.value.real, "im": self.value.imag},
            "method": self.method,
            "est_error": self.est_error,
            "terms_used": self.terms_used,
        }
        if self.order is not None:
            d["a"] = {"re": self.order.real, "im": self.order.imag}
        return d

    def csv_header(self) -> list[str]:
        cols = ["function", "s_re", "s_im", "value_re", "value_im", "method", "est_error", "terms_used"]
        return cols + (["a_re", "a_im"] if self.order is not None else [])

    def csv_row(self) -> list[str]:
        row = [self.function, self.s.real, self.s.imag, self.value.real, self.value.imag,
               self.method, self.est_error, self.terms_used]
        if self.order is not None:
            row += [self.order.real, self.order.imag]
        return [v if isinstance(v, str) else repr(v) for v in row]


def render(record: OutputRecord, fmt: str) -> str:
    if fmt == "json":
        return json.dumps(record.as_dict())
    buf = io.StringIO()
    w = csv.writer(buf, lineterminator="\n")
    w.writerow(record.csv_header())
    w.writerow(record.csv_row())
    return buf.getvalue().rstrip("\n")


# ---------------------------------------------------------------- eval


def _real_arg(s: complex, what: str) -> float:
    if s.imag != 0.0:
        raise DomainError(f"{what} takes a real argument, got s={format_complex(s)}")
    return s.real


def _kernel_result(v: float, settings, method: str) -> EvalResult:
    # kernel sums stop once a term drops below rel_tol of the total
    return EvalResult(v, (settings.rel_tol + 4e-16) * abs(v), 0, method)


def _kernel(fn):
    def run(s, settings):
        return _kernel_result(fn(_real_arg(s, "the kernel"), settings), settings, "series")
    return run


def _varphi_tagged(method):
    def run(s, settings):
        x = _real_arg(s, "varphi")
        if method == "theta":
            return _kernel_result(theta_kernel.varphi_from_theta(x, settings), settings, "series")
        if method == "difference":
            return _kernel_result(theta_kernel.phi_difference(x, settings), settings, "difference")
        tag = "quartet" if x >= theta_kernel.REFLECTION_THRESHOLD else "reflection"
        return _kernel_result(theta_kernel.varphi(x, settings), settings, tag)
    return run


def _gamma(s, settings):
    g = gamma(s)
    return EvalResult(g, 5e-14 * abs(g), 15, "series")


def _xi_classical(s, settings):
    z = zeta_family.zeta(s, settings)
    f = 0.5 * s * (s - 1.0) * real_pow_complex(math.pi, -0.5 * s) * gamma(0.5 * s)
    return EvalResult(f * z.value, abs(f) * z.est_error, z.terms_used, z.method)


def _xi_a_critical(s, settings):
    if s.real != 0.5:
        raise DomainError(f"the critical-line method needs Re s = 0.5, got s={format_complex(s)}")
    return zeta_family.xi_a_critical(s.imag, settings)


def _xi_a_quadrature(s, settings):
    return mellin_xi_a(s, QuadratureSpec(points=settings.quad_points), settings)


def _incomplete(fn):
    def run(s, settings, order):
        return fn(order, _real_arg(s, "the incomplete gamma argument"), settings)
    return run


# function -> {method: evaluator}; the first method listed is the default.
EVALUATORS = {
    "eta": {
        "auto": zeta_family.eta,
        "quartet": zeta_family.quartet_eta,
        "alternating": zeta_family.alternating_eta,
    },
    "zeta": {"auto": zeta_family.zeta},
    "xi": {"via-xi-a": zeta_family.xi, "classical": _xi_classical},
    "xi_a": {
        "gamma-series": zeta_family.xi_a_gamma_series,
        "direct": zeta_family.xi_a_direct,
        "lower-series": zeta_family.xi_a_lower_series,
        "critical": _xi_a_critical,
        "quadrature": _xi_a_quadrature,
    },
    "varphi": {
        "quartet": _varphi_tagged("quartet"),
        "theta": _varphi_tagged("theta"),
        "difference": _varphi_tagged("difference"),
    },
    "phi": {"series": _kernel(theta_kernel.phi_series)},
    "gamma": {"lanczos": _gamma},
    "lower_gamma": {
        "auto": _incomplete(incomplete_gamma.lower_gamma),
        "series": _incomplete(incomplete_gamma.lower_series),
    },
    "upper_gamma": {
        "auto": _incomplete(incomplete_gamma.upper_gamma),
        "continued-fraction": _incomplete(incomplete_gamma.upper_continued_fraction),
    },
}
INCOMPLETE = ("lower_gamma", "upper_gamma")


def cmd_eval(args, settings: EvalSettings) -> int:
    methods = EVALUATORS[args.function]
    method = args.method or next(iter(methods))
    if method not in methods:
        raise ParseError(f"method {method!r} is not available for {args.function}; choose from {sorted(methods)}")
    fn = methods[method]
    if args.function in INCOMPLETE:
        if args.a is None:
            raise ParseError(f"{args.function} needs the order --a")
        result = fn(args.s, settings, args.a)
        record = OutputRecord.from_result(args.function, args.s, result, order=args.a)
    else:
        if args.a is not None:
            raise ParseError(f"--a applies only to {' and '.join(INCOMPLETE)}")
        record = OutputRecord.from_result(args.function, args.s, fn(args.s, settings))
    print(render(record, args.format))
    return EXIT_OK


# ---------------------------------------------------------------- check / scan / integrate


def cmd_check(args, settings: EvalSettings) -> int:
    checks = run_suite(args.suite, settings)
    failed = [c for c in checks if not c.passed]
    for c in checks:
        print(c.line())
    print(f"{len(checks) - len(failed)}/{len(checks)} checks passed")
    for c in failed:
        print(f"E_CHECK {c.suite}/{c.name} residual={c.residual:.3e} tol={c.tol:.1e}", file=sys.stderr)
    return EXIT_OK if not failed else EXIT_FAIL


def cmd_scan(args, settings: EvalSettings) -> int:
    result = zeta_family.scan_critical_line(args.t_min, args.t_max, args.step, settings, workers=args.workers)
    w = csv.writer(sys.stdout, lineterminator="\n")
    w.writerow(["t", "xi_a", "sign"])
    for rec in result.records:
        w.writerow([repr(rec.t), repr(rec.xi_a), rec.sign])
    sys.stdout.flush()
    print(json.dumps(result.zeros))
    return EXIT_OK


# Mellin exponent s at which each special integral equals xi_a(s)
TARGET_S = {"varphi_over_x": 0.0, "varphi_over_sqrtx": 1.0, "varphi_plain": 2.0}
TARGETS = ("xi_a_at",) + tuple(TARGET_S)


def cmd_integrate(args, settings: EvalSettings) -> int:
    spec = QuadratureSpec(scheme=args.scheme, points=settings.quad_points, split_at=args.split_at)
    if args.target == "xi_a_at":
        if args.s is None:
            raise ParseError("integrate --target xi_a_at needs --s")
        s = args.s
        result = mellin_xi_a(s, spec, settings)
    else:
        s = complex(TARGET_S[args.target])
        result = special_integral(args.target, spec, settings)
    print(render(OutputRecord.from_result(args.target, s, result), args.format))
    return EXIT_OK


# ---------------------------------------------------------------- parser


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        print(f"E_PARSE: {message}", file=sys.stderr)
        sys.exit(EXIT_USAGE)


def _default_tol() -> float:
    raw = os.environ.get(TOL_ENV)
    if raw is None:
        return DEFAULT_SETTINGS.rel_tol
    try:
        return float(raw)
    except ValueError:
        raise ParseError(f"{TOL_ENV}={raw!r} is not a number") from None


def build_parser(default_tol: float = DEFAULT_SETTINGS.rel_tol) -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--tol", type=float, default=default_tol,
                        help=f"relative tolerance (default {default_tol:g}, or ${TOL_ENV})")
    common.add_argument("--max-terms", type=int, default=DEFAULT_SETTINGS.max_terms)
    common.add_argument("--quad-points", type=int, default=DEFAULT_SETTINGS.quad_points)
    common.add_argument("--format", choices=("json", "csv"), default="json")

    p = _Parser(prog="alt-xi", description="Alternating zeta and Xi functions.")
    sub = p.add_subparsers(dest="command", required=True, parser_class=_Parser)

    e = sub.add_parser("eval", parents=[common], help="evaluate a function at one point")
    e.add_argument("--function", required=True, choices=sorted(EVALUATORS))
    e.add_argument("--s", required=True, type=_complex_arg, help="point, e.g. 0.5+12i")
    e.add_argument("--a", type=_complex_arg, help="order of lower_gamma / upper_gamma")
    e.add_argument("--method", help="evaluation route (default: the first listed for the function)")

    c = sub.add_parser("check", parents=[common], help="run an identity / regression suite")
    c.add_argument("--suite", required=True, choices=SUITES + ("all",))

    s = sub.add_parser("scan", parents=[common], help="scan xi_a on the critical line")
    s.add_argument("--t-min", type=float, required=True)
    s.add_argument("--t-max", type=float, required=True)
    s.add_argument("--step", type=float, required=True)
    s.add_argument("--workers", type=int, default=1)

    i = sub.add_parser("integrate", parents=[common], help="quadrature of the kernel integrals")
    i.add_argument("--target", required=True, choices=TARGETS)
    i.add_argument("--s", type=_complex_arg)
    i.add_argument("--scheme", choices=SCHEMES, default="tanh_sinh")
    i.add_argument("--split-at", type=float, default=1.0)
    return p


COMMANDS = {"eval": cmd_eval, "check": cmd_check, "scan": cmd_scan, "integrate": cmd_integrate}


def main(argv=None) -> int:
    try:
        parser = build_parser(_default_tol())
        args = parser.parse_args(argv)
        settings = EvalSettings(rel_tol=args.tol, max_terms=args.max_terms, quad_points=args.quad_points)
        return COMMANDS[args.command](args, settings)
    except AltXiError as exc:
        print(f"{exc.code}: {exc}", file=sys.stderr)
        return EXIT_USAGE if isinstance(exc, DomainError) else EXIT_FAIL
    except ArithmeticError as exc:
        print(f"E_CONV: {exc}", file=sys.stderr)
        return EXIT_FAIL
    except ValueError as exc:
        # ParseError and invalid settings such as --tol 0
        print(f"E_PARSE: {exc}", file=sys.stderr)
        return EXIT_USAGE

if __name__ == "__main__":
    sys.exit(main())
