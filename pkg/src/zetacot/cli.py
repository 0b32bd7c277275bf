"""``zeta`` command line tool.

Subcommands::

    zeta even <s>       exact zeta(2s) from the cotangent chain
    zeta any <s>        numeric zeta(s) from polygamma values
    zeta table <max_s>  sweep s = 2..max_s (text, json or csv)
    zeta check <max_s>  run every consistency check, exit 0 iff all pass

Exit codes: 0 success, 1 verification failure, 2 usage error.
"""
from __future__ import annotations

import argparse
import csv
import io
import json
import os
import sys
import time
from dataclasses import dataclass
from typing import Iterable, List, Optional, Sequence

import mpmath

from .bigfloat import BigFloat, format_bound, to_fraction
from .exact import CotChain, PiPower, zeta_even_exact
from .numeric import reflection_residual, render_pi_power, zeta_via_polygamma
from .oracle import zeta_dirichlet, zeta_even_bernoulli

EXIT_OK = 0
EXIT_VERIFY = 1
EXIT_USAGE = 2

DEFAULT_PREC = 128
PREC_ENV = "ZETA_DEFAULT_PREC"

KINDS = ("exact", "numeric")
PIPELINES = ("cotangent", "polygamma", "bernoulli_oracle", "dirichlet_oracle")
FIELDS = ("argument", "kind", "exact", "numeric", "error_bound", "pipeline", "elapsed_ms", "precision_bits")


@dataclass
class ZetaResult:
    argument: int
    kind: str
    pipeline: str
    elapsed: float  # milliseconds
    exact_value: Optional[PiPower] = None
    numeric_value: Optional[BigFloat] = None

    def __post_init__(self) -> None:
        if self.kind not in KINDS:
            raise ValueError(f"unknown kind {self.kind!r}")
        if self.pipeline not in PIPELINES:
            raise ValueError(f"unknown pipeline {self.pipeline!r}")
        if self.kind == "exact":
            if self.exact_value is None or self.pipeline not in ("cotangent", "bernoulli_oracle"):
                raise ValueError("exact results need an exact value from an exact pipeline")
        elif self.numeric_value is None:
            raise ValueError("numeric results need a numeric value")

    def to_dict(self) -> dict:
        num = self.numeric_value
        return {
            "argument": self.argument,
            "kind": self.kind,
            "exact": None if self.exact_value is None else self.exact_value.format(compact=True),
            "numeric": None if num is None else num.to_string(),
            "error_bound": None if num is None else format_bound(num.error_bound),
            "pipeline": self.pipeline,
            "elapsed_ms": round(self.elapsed, 3),
            "precision_bits": None if num is None else num.precision_bits,
        }

    @classmethod
    def from_dict(cls, d: dict) -> ZetaResult:
        exact = None if d["exact"] is None else PiPower.parse(d["exact"])
        num = None
        if d["numeric"] is not None:
            prec = int(d["precision_bits"])
            ctx = mpmath.MPContext()
            ctx.prec = prec + 16
            value = mpmath.mp.make_mpf(ctx.mpf(d["numeric"])._mpf_)
            # rounding down keeps format_bound(bound) equal to the printed string
            bound = mpmath.mp.make_mpf(mpmath.libmp.from_str(d["error_bound"], prec + 16, "d"))
            num = BigFloat(value, prec, bound)
        return cls(
            argument=int(d["argument"]),
            kind=d["kind"],
            pipeline=d["pipeline"],
            elapsed=float(d["elapsed_ms"]),
            exact_value=exact,
            numeric_value=num,
        )


def _emit(out, line: str = "") -> None:
    out.write(line + "\n")
    out.flush()


def _default_prec() -> int:
    raw = os.environ.get(PREC_ENV)
    if not raw:
        return DEFAULT_PREC
    try:
        prec = int(raw)
    except ValueError:
        raise SystemExit(f"zeta: {PREC_ENV} must be an integer, got {raw!r}")
    return prec


def row_result(s: int, precision_bits: int, chain: CotChain) -> ZetaResult:
    """One table row: exact + rendered for even s, polygamma for odd s."""
    t0 = time.perf_counter()
    if s % 2 == 0:
        exact = zeta_even_exact(s // 2, chain)
        num = render_pi_power(exact, precision_bits)
        kind, pipeline = "exact", "cotangent"
    else:
        exact = None
        num = zeta_via_polygamma(s, precision_bits)
        kind, pipeline = "numeric", "polygamma"
    elapsed = (time.perf_counter() - t0) * 1000.0
    return ZetaResult(s, kind, pipeline, elapsed, exact, num)


def render_table(results: Sequence[ZetaResult], fmt: str) -> str:
    rows = [r.to_dict() for r in results]
    if fmt == "json":
        return json.dumps(rows, indent=2)
    if fmt == "csv":
        buf = io.StringIO()
        writer = csv.DictWriter(buf, fieldnames=FIELDS, lineterminator="\n")
        writer.writeheader()
        for row in rows:
            writer.writerow({k: ("" if v is None else v) for k, v in row.items()})
        return buf.getvalue().rstrip("\n")
    lines = []
    for row in rows:
        exact = row["exact"] or "-"
        lines.append(
            f"s={row['argument']:<4d} {row['kind']:<8s} {row['pipeline']:<10s} "
            f"exact={exact:<24s} numeric={row['numeric']} "
            f"err<={row['error_bound']} ({row['elapsed_ms']:.3f} ms)"
        )
    return "\n".join(lines)


# -- checks -------------------------------------------------------------------


@dataclass
class CheckOutcome:
    name: str
    passed: bool
    detail: str


def _first_failure(name: str, cases: Iterable, probe) -> CheckOutcome:
    checked = []
    for s in cases:
        ok, discrepancy = probe(s)
        checked.append(s)
        if not ok:
            return CheckOutcome(name, False, f"first failure at s={s}, discrepancy {discrepancy}")
    if not checked:
        return CheckOutcome(name, True, "no cases")
    return CheckOutcome(name, True, f"s={checked[0]}..{checked[-1]}")


def run_checks(max_s: int, precision_bits: int) -> List[CheckOutcome]:
    chain = CotChain()
    evens = [s for s in range(2, max_s + 1) if s % 2 == 0]
    odds = [s for s in range(3, max_s + 1, 2)]

    def exact_vs_bernoulli(s):
        a = zeta_even_exact(s // 2, chain)
        b = zeta_even_bernoulli(s // 2)
        return a == b, str(a.coefficient - b.coefficient if a.pi_exponent == b.pi_exponent else "pi exponent")

    def numeric_agreement(reference):
        def probe(s):
            z = zeta_via_polygamma(s, precision_bits)
            ref = reference(s)
            return z.agrees_with(ref), format_bound(z.distance(ref))
        return probe

    def reflection(s):
        r = reflection_residual(s, precision_bits, chain)
        return to_fraction(r.value) <= to_fraction(r.error_bound), format_bound(r.value)

    return [
        _first_failure("exact_vs_bernoulli", evens, exact_vs_bernoulli),
        _first_failure(
            "polygamma_vs_exact",
            evens,
            numeric_agreement(lambda s: render_pi_power(zeta_even_exact(s // 2, chain), precision_bits)),
        ),
        _first_failure(
            "polygamma_vs_dirichlet", odds, numeric_agreement(lambda s: zeta_dirichlet(s, precision_bits))
        ),
        _first_failure("reflection_residual", evens, reflection),
    ]


# -- commands -----------------------------------------------------------------


def cmd_even(args, out) -> int:
    s = args.s
    exact = zeta_even_exact(s)
    _emit(out, f"zeta({2 * s}) = {exact}")
    if args.numeric:
        num = render_pi_power(exact, args.prec)
        _emit(out, f"zeta({2 * s}) ≈ {num.to_string()} (error <= {format_bound(num.error_bound)})")
    if args.verify:
        oracle = zeta_even_bernoulli(s)
        if oracle != exact:
            _emit(out, f"verify=FAIL bernoulli_oracle gives {oracle}")
            return EXIT_VERIFY
        _emit(out, "verify=ok")
    return EXIT_OK


def cmd_any(args, out) -> int:
    s = args.s
    z, lo, hi = zeta_via_polygamma(s, args.prec, parts=True)
    _emit(out, f"zeta({s}) ≈ {z.to_string()} (error <= {format_bound(z.error_bound)})")
    if args.show_parts:
        _emit(out, f"psi^({s - 1})(1/4) = {lo.to_string()}")
        _emit(out, f"psi^({s - 1})(3/4) = {hi.to_string()}")
    if args.verify:
        ref = zeta_dirichlet(s, args.prec)
        if not z.agrees_with(ref):
            _emit(out, f"verify=FAIL dirichlet_oracle differs by {format_bound(z.distance(ref))}")
            return EXIT_VERIFY
        _emit(out, "verify=ok")
    return EXIT_OK


def cmd_table(args, out) -> int:
    chain = CotChain()
    results = [row_result(s, args.prec, chain) for s in range(2, args.max_s + 1)]
    _emit(out, render_table(results, args.format))
    return EXIT_OK


def cmd_check(args, out) -> int:
    outcomes = run_checks(args.max_s, args.prec)
    for o in outcomes:
        _emit(out, f"{'PASS' if o.passed else 'FAIL'} {o.name}: {o.detail}")
    return EXIT_OK if all(o.passed for o in outcomes) else EXIT_VERIFY


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="zeta", description="Riemann zeta values at integer arguments.")
    sub = parser.add_subparsers(dest="command", required=True)

    def add_prec(p):
        p.add_argument("--prec", type=int, default=_default_prec(), help="working precision in bits")

    p = sub.add_parser("even", help="exact zeta(2s) via cotangent derivatives")
    p.add_argument("s", type=int)
    add_prec(p)
    p.add_argument("--numeric", action="store_true", help="also print the numeric value")
    p.add_argument("--verify", action="store_true", help="compare with the Bernoulli oracle")
    p.set_defaults(func=cmd_even, min_s=1)

    p = sub.add_parser("any", help="numeric zeta(s) via polygamma values at 1/4 and 3/4")
    p.add_argument("s", type=int)
    add_prec(p)
    p.add_argument("--show-parts", action="store_true", help="print both polygamma summands")
    p.add_argument("--verify", action="store_true", help="compare with direct summation")
    p.set_defaults(func=cmd_any, min_s=2)

    p = sub.add_parser("table", help="sweep s = 2..max_s")
    p.add_argument("max_s", type=int)
    add_prec(p)
    p.add_argument("--format", choices=("text", "json", "csv"), default="text")
    p.set_defaults(func=cmd_table, min_s=2)

    p = sub.add_parser("check", help="run all consistency checks up to max_s")
    p.add_argument("max_s", type=int)
    add_prec(p)
    p.set_defaults(func=cmd_check, min_s=2)
    return parser


def main(argv: Optional[Sequence[str]] = None, out=None) -> int:
    out = sys.stdout if out is None else out
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return EXIT_USAGE if exc.code else EXIT_OK
    value = args.s if hasattr(args, "s") else args.max_s
    if value < args.min_s:
        what = "s" if hasattr(args, "s") else "max_s"
        hint = " (s = 1 is the pole of zeta)" if args.command == "any" and value == 1 else ""
        print(f"zeta {args.command}: {what} must be >= {args.min_s}, got {value}{hint}", file=sys.stderr)
        return EXIT_USAGE
    if args.prec <= 8:
        print(f"zeta: --prec must exceed 8 bits, got {args.prec}", file=sys.stderr)
        return EXIT_USAGE
    try:
        return args.func(args, out)
    except OSError as exc:
        print(f"zeta: {exc}", file=sys.stderr)
        return EXIT_VERIFY


if __name__ == "__main__":
    sys.exit(main())
