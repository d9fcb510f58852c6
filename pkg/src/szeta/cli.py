"""Command-line front end: comparison table, constants, and self-checks.

Exit codes: 0 success, 2 usage (argparse), 3 zero-file ingestion problems,
4 coverage shortfalls, 5 failed verification properties.
"""

from __future__ import annotations

import argparse
import math
import os
import sys
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass

import numpy as np

from .formulas import FormulaInputs, MomentReport, build_report, correction_integral
from .moment import QuadratureSpec, second_moment
from .primes import euler_product_A, lemma7_residual, prime_constant_K
from .special import (
    BRACKET_SERIES_CUTOFF,
    EULER_GAMMA,
    logarithmic_integral,
    riemann_siegel_theta,
    zeta_real,
)
from .zeros import CoverageError, ZeroFileError, ingest_zeros, select_anchor

__all__ = ["RunConfig", "main", "cmd_table", "cmd_constants", "cmd_verify"]

ZEROS_ENV_VAR = "SZETA_ZEROS"
EXIT_PARSE = 3
EXIT_COVERAGE = 4
EXIT_PROPERTY = 5

DEFAULT_CUTOFFS = tuple(float(c) for c in range(10000, 70001, 10000))

_SMOOTH_FLAG_TO_MODEL = {"exact": "exact_theta", "asymptotic": "paper_asymptotic"}


@dataclass(frozen=True)
class RunConfig:
    """Resolved options shared by the subcommands."""

    zeros_path: str | None
    cutoffs: tuple[float, ...] = DEFAULT_CUTOFFS
    beta: float = 0.5
    prime_count: int = 5000
    gauss_order: int = 8
    smooth_model: str = "exact_theta"
    output_format: str = "csv"
    parallel: bool = False
    v_grid: int = 11

    def __post_init__(self):
        if not self.cutoffs:
            raise ValueError("cutoffs must be nonempty")
        if any(b <= a for a, b in zip(self.cutoffs, self.cutoffs[1:])):
            raise ValueError("cutoffs must be strictly ascending")


def _formula_inputs(config: RunConfig) -> FormulaInputs:
    # The template T is replaced by the per-row anchor; any valid value works.
    return FormulaInputs(
        T=10000.0,
        beta=config.beta,
        prime_count=config.prime_count,
        quad=QuadratureSpec(
            gauss_order=config.gauss_order, smooth_model=config.smooth_model
        ),
    )


def _table_rows(config: RunConfig) -> list[MomentReport]:
    catalog = ingest_zeros(config.zeros_path)
    inputs = _formula_inputs(config)

    def one(cutoff: float) -> MomentReport:
        return build_report(catalog, cutoff, inputs)

    if config.parallel and len(config.cutoffs) > 1:
        with ThreadPoolExecutor(max_workers=min(8, len(config.cutoffs))) as pool:
            return list(pool.map(one, config.cutoffs))
    return [one(c) for c in config.cutoffs]


def _emit_rows(rows: list[MomentReport], output_format: str, out) -> None:
    if output_format in ("csv", "tsv"):
        sep = "," if output_format == "csv" else "\t"
        out.write(
            sep.join(
                (
                    "cutoff",
                    "T",
                    "empirical",
                    "formula_A",
                    "goldston_B",
                    "goldston_C",
                    "diff_A",
                    "rel_diff_A",
                )
            )
            + "\n"
        )
        for r in rows:
            fields = (
                f"{r.cutoff:g}",
                repr(r.anchor),
                repr(r.empirical),
                repr(r.formula_a),
                repr(r.goldston_b),
                repr(r.goldston_c),
                repr(r.delta_a),
                repr(r.rel_delta_a),
            )
            out.write(sep.join(fields) + "\n")
        return
    header = (
        f"{'cutoff':>8} {'T':>13} {'empirical':>12} {'A':>11} "
        f"{'B':>11} {'C':>11} {'emp-A':>9}"
    )
    out.write(header + "\n")
    for r in rows:
        out.write(
            f"{r.cutoff:8g} {r.anchor:13.5f} {r.empirical:12.3f} "
            f"{r.formula_a:11.2f} {r.goldston_b:11.2f} {r.goldston_c:11.2f} "
            f"{r.delta_a:9.3f}\n"
        )


def cmd_table(config: RunConfig, out=None) -> int:
    """Emit one comparison row per cutoff; nonzero exit on data problems."""
    out = out if out is not None else sys.stdout
    try:
        rows = _table_rows(config)
    except ZeroFileError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_PARSE
    except (CoverageError, ValueError) as exc:
        # ValueError surfaces anchors the data cannot support (for example a
        # cutoff at or below the first zero), the same failure class.
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_COVERAGE
    _emit_rows(rows, config.output_format, out)
    return 0


def cmd_constants(config: RunConfig, out=None) -> int:
    """Print the constants entering the formula, with truncation metadata."""
    out = out if out is not None else sys.stdout
    pc = config.prime_count
    out.write(f"C0 = {EULER_GAMMA:.10f}\n")
    out.write(
        f"K = {prime_constant_K():.6f} "
        "(prime powers p^m, m >= 2, primes below 1000000)\n"
    )
    out.write(f"A(v) on a {config.v_grid}-point grid, first {pc} primes:\n")
    for v in np.linspace(0.0, 1.0, config.v_grid):
        out.write(f"  A({v:.3f}) = {euler_product_A(float(v), pc):.12f}\n")
    out.write("Li(T/2pi) at the default table cutoffs:\n")
    for cutoff in config.cutoffs:
        li = logarithmic_integral(cutoff / (2.0 * math.pi))
        out.write(f"  T = {cutoff:g}: Li = {li:.6f}, Li/pi = {li / math.pi:.6f}\n")
    return 0


def _check_zeta_values() -> tuple[bool, str]:
    d1 = abs(zeta_real(2.0) - math.pi**2 / 6.0)
    d2 = abs(zeta_real(0.0) + 0.5)
    return d1 < 1e-12 and d2 < 1e-12, f"|zeta(2)-pi^2/6| = {d1:.2e}, |zeta(0)+1/2| = {d2:.2e}"


def _check_li_derivative() -> tuple[bool, str]:
    x, h = 10.0, 1e-5
    num = (logarithmic_integral(x + h) - logarithmic_integral(x - h)) / (2.0 * h)
    err = abs(num - 1.0 / math.log(x))
    return err < 1e-6, f"centered difference vs 1/log x: {err:.2e}"


def _check_theta_oracle() -> tuple[bool, str]:
    from mpmath import mp

    worst = 0.0
    with mp.workdps(30):
        for t in (10.0, 100.0, 1000.0, 10000.0):
            ref = float(
                mp.im(mp.loggamma(mp.mpf(1) / 4 + 1j * mp.mpf(t) / 2))
                - t / 2 * mp.log(mp.pi)
            )
            worst = max(worst, abs(ref - float(riemann_siegel_theta(t))))
    return worst < 1e-9, f"theta vs log-gamma, max |diff| = {worst:.2e}"


def _check_bracket_branches() -> tuple[bool, str]:
    from .special import _bracket_direct, _bracket_series

    # Probe from the crossover upward: below it the direct branch is never
    # used and its 1/v^2 cancellation noise would dominate the comparison.
    worst = 0.0
    for v in np.linspace(BRACKET_SERIES_CUTOFF, 2.0 * BRACKET_SERIES_CUTOFF, 7):
        worst = max(worst, abs(_bracket_direct(float(v), 2000) - _bracket_series(float(v), 2000)))
    return worst < 1e-9, f"series vs direct at and above crossover: {worst:.2e}"


def _check_correction_convergence() -> tuple[bool, str]:
    inputs = FormulaInputs(T=10000.0)
    base = correction_integral(inputs, refine=1)
    fine = correction_integral(inputs, refine=3)
    err = abs(base - fine)
    return err < 1e-8, f"refined panels move the correction by {err:.2e}"


def _check_k_truncation() -> tuple[bool, str]:
    d = abs(prime_constant_K(prime_limit=1_000_000) - prime_constant_K(prime_limit=4_000_000))
    return d < 5e-8, f"prime limit 1e6 vs 4e6: {d:.2e}"


def _check_lemma7_ladder() -> tuple[bool, str]:
    xs = (1e2, 1e3, 1e4, 1e5)
    worst_slope_lo, worst_slope_hi = 10.0, -10.0
    for r in (0.0, 0.5, 1.0):
        res = [abs(lemma7_residual(r, x)) for x in xs]
        if any(b >= a for a, b in zip(res, res[1:])):
            return False, f"residuals not decreasing at r = {r}: {res}"
        slope = np.polyfit(np.log(xs), np.log(res), 1)[0]
        worst_slope_lo = min(worst_slope_lo, slope)
        worst_slope_hi = max(worst_slope_hi, slope)
        x = 1e4
        envelope = 10.0 * x**-0.5 * math.log(x) ** 2 * math.log(math.log(x))
        if abs(lemma7_residual(r, x)) > envelope:
            return False, f"residual at x = 1e4, r = {r} above envelope {envelope:.3e}"
    ok = -0.65 <= worst_slope_lo and worst_slope_hi <= -0.35
    return ok, f"fitted decay exponents in [{worst_slope_lo:.3f}, {worst_slope_hi:.3f}]"


def _catalog_checks(config: RunConfig):
    try:
        catalog = ingest_zeros(config.zeros_path)
    except ZeroFileError as exc:
        yield "zero catalog counting cross-validation", False, str(exc)
        return
    yield (
        "zero catalog counting cross-validation",
        True,
        f"{catalog.count} zeros, coverage {catalog.coverage:.3f}",
    )

    anchor = select_anchor(catalog, min(catalog.coverage, 20000.0))
    base = second_moment(catalog, anchor, QuadratureSpec(gauss_order=4)).value
    fine = second_moment(catalog, anchor, QuadratureSpec(gauss_order=8)).value
    rel = abs(base - fine) / abs(fine)
    yield (
        "empirical moment order doubling",
        rel < 1e-6,
        f"orders 4 vs 8 at T = {anchor:.2f}: rel diff {rel:.2e}",
    )

    serial = second_moment(catalog, anchor, QuadratureSpec(parallel=False)).value
    threaded = second_moment(catalog, anchor, QuadratureSpec(parallel=True)).value
    yield (
        "parallel scheduling determinism",
        serial == threaded,
        f"serial {serial!r} vs parallel {threaded!r}",
    )


def cmd_verify(config: RunConfig, out=None) -> int:
    """Run the property suite; exit 0 iff every executed check passes."""
    out = out if out is not None else sys.stdout
    checks = [
        ("zeta special values", _check_zeta_values),
        ("logarithmic integral derivative", _check_li_derivative),
        ("theta against log-gamma", _check_theta_oracle),
        ("bracket branch consistency", _check_bracket_branches),
        ("correction integral self-convergence", _check_correction_convergence),
        ("prime constant truncation", _check_k_truncation),
        ("prime-power residual ladder", _check_lemma7_ladder),
    ]
    failed = 0
    for name, fn in checks:
        ok, detail = fn()
        failed += 0 if ok else 1
        out.write(f"{'ok  ' if ok else 'FAIL'} {name}: {detail}\n")
    if config.zeros_path is not None:
        for name, ok, detail in _catalog_checks(config):
            failed += 0 if ok else 1
            out.write(f"{'ok  ' if ok else 'FAIL'} {name}: {detail}\n")
    else:
        out.write("skip zero catalog checks: no zero file given\n")
    return 0 if failed == 0 else EXIT_PROPERTY


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="szeta",
        description="Second moment of the zeta argument: formula against zero data.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def add_zeros(p, required):
        p.add_argument(
            "--zeros",
            default=os.environ.get(ZEROS_ENV_VAR),
            required=required and ZEROS_ENV_VAR not in os.environ,
            help=f"zero ordinate file (default: ${ZEROS_ENV_VAR})",
        )

    t = sub.add_parser("table", help="empirical moment against the predictions")
    add_zeros(t, required=True)
    t.add_argument("--cutoffs", default=None, help="comma-separated ascending heights")
    t.add_argument("--beta", type=float, default=0.5, help="prime cutoff exponent, x = T^beta")
    t.add_argument("--primes", type=int, default=5000, help="Euler product truncation")
    t.add_argument("--gauss-order", type=int, default=8, help="nodes per zero gap")
    t.add_argument(
        "--smooth",
        choices=sorted(_SMOOTH_FLAG_TO_MODEL),
        default="exact",
        help="smooth counting model subtracted from the zero count",
    )
    t.add_argument("--format", choices=("csv", "tsv", "pretty"), default="csv")
    t.add_argument("--parallel", action="store_true", help="fan rows out across threads")

    c = sub.add_parser("constants", help="print the constants entering the formula")
    c.add_argument("--primes", type=int, default=5000)
    c.add_argument("--v-grid", type=int, default=11, help="points of the A(v) grid")

    v = sub.add_parser("verify", help="run the property suite")
    add_zeros(v, required=False)
    return parser


def _parse_cutoffs(text: str | None, parser: argparse.ArgumentParser) -> tuple[float, ...]:
    if text is None:
        return DEFAULT_CUTOFFS
    try:
        cutoffs = tuple(float(p) for p in text.split(","))
    except ValueError:
        parser.error(f"cannot parse cutoff list {text!r}")
    if not cutoffs or any(b <= a for a, b in zip(cutoffs, cutoffs[1:])):
        parser.error("cutoffs must be nonempty and strictly ascending")
    return cutoffs


def main(argv=None) -> int:
    parser = _build_parser()
    args = parser.parse_args(argv)
    if args.command == "table":
        config = RunConfig(
            zeros_path=args.zeros,
            cutoffs=_parse_cutoffs(args.cutoffs, parser),
            beta=args.beta,
            prime_count=args.primes,
            gauss_order=args.gauss_order,
            smooth_model=_SMOOTH_FLAG_TO_MODEL[args.smooth],
            output_format=args.format,
            parallel=args.parallel,
        )
        try:
            _formula_inputs(config)
        except ValueError as exc:
            parser.error(str(exc))
        return cmd_table(config)
    if args.command == "constants":
        config = RunConfig(zeros_path=None, prime_count=args.primes, v_grid=args.v_grid)
        return cmd_constants(config)
    config = RunConfig(zeros_path=args.zeros)
    return cmd_verify(config)


if __name__ == "__main__":
    sys.exit(main())
