"""Closed-form and quadrature evaluators for the second-moment predictions.

Three quantities are produced for a height T: the full prediction (smooth
main term plus the prime-correction v-integral), and two baseline values
(the plain asymptotic, and the same minus Li(T/2pi)/pi), so the table
builder can put them side by side with the empirical moment.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, replace

from .moment import QuadratureSpec, second_moment
from .primes import prime_constant_K
from .quadrature import adaptive_gauss, fixed_gauss
from .special import (
    BRACKET_SERIES_CUTOFF,
    EULER_GAMMA,
    logarithmic_integral,
    zeta_pair_bracket,
)
from .zeros import ZeroCatalog, select_anchor

__all__ = [
    "FormulaInputs",
    "MomentReport",
    "main_term_integral",
    "correction_integral",
    "evaluate_theorem1",
    "evaluate_goldston",
    "evaluate_goldston_li",
    "evaluate_short_interval",
    "build_report",
]

TWO_PI = 2.0 * math.pi

# Below this distance from v = 1 the power-difference quotient switches to
# its analytic limit log(hi/lo).
_POWER_LIMIT_SWITCH = 1e-6


@dataclass(frozen=True)
class FormulaInputs:
    """Evaluation point and truncation policy for the prediction formula.

    v_upper = None means the height-dependent default 1 - 1/T.  The prime
    cutoff x is tied to T through beta as x = T**beta.
    """

    T: float
    beta: float = 0.5
    prime_count: int = 5000
    v_upper: float | None = None
    quad: QuadratureSpec = QuadratureSpec()

    def __post_init__(self):
        if self.T <= TWO_PI:
            raise ValueError(f"T must exceed 2*pi, got {self.T}")
        if not 0.0 < self.beta <= 0.5:
            raise ValueError(f"beta must lie in (0, 1/2], got {self.beta}")
        if self.v_upper is not None and not 0.0 < self.v_upper < 1.0:
            raise ValueError(f"v_upper must lie in (0, 1), got {self.v_upper}")
        if self.prime_count < 1:
            raise ValueError("prime_count must be positive")

    @property
    def x(self) -> float:
        return self.T**self.beta

    @property
    def effective_v_upper(self) -> float:
        return self.v_upper if self.v_upper is not None else 1.0 - 1.0 / self.T


def _loglog_primitive(a: float) -> float:
    """integral of log(u) e^u du from 0 to a (a > 0).

    The endpoint singularity is only logarithmic: on [0, min(a, 1)] the
    exact series sum_k a^{k+1} (log a / (k+1) - 1/(k+1)^2) / k! applies;
    any remainder over [1, a] is smooth and handled by composite Gauss.
    """
    c = min(a, 1.0)
    log_c = math.log(c)
    terms = []
    power = c  # c^{k+1} / k!
    for k in range(0, 60):
        kp1 = k + 1.0
        terms.append(power * (log_c / kp1 - 1.0 / (kp1 * kp1)))
        power *= c / kp1
    total = math.fsum(terms)
    if a > 1.0:
        total += fixed_gauss(
            lambda u: math.log(u) * math.exp(u), 1.0, a, order=20, panels=max(1, math.ceil(a - 1.0))
        )
    return total


def main_term_integral(T: float) -> float:
    """(1/2pi^2) * integral from 2pi to T of [loglog(t/2pi) + 1 + C0 - K] dt.

    Lower endpoint 2pi, where the loglog term has its (integrable)
    singularity; the substitution u = log(t/2pi) turns that piece into
    the primitive of log(u) e^u, evaluated exactly near u = 0.
    """
    if T <= TWO_PI:
        raise ValueError(f"main term needs T > 2*pi, got {T}")
    a = math.log(T / TWO_PI)
    loglog_part = TWO_PI * _loglog_primitive(a)
    const = 1.0 + EULER_GAMMA - prime_constant_K()
    return (loglog_part + const * (T - TWO_PI)) / (2.0 * math.pi**2)


def _power_difference(one_minus_v: float, log_hi: float, log_lo: float) -> float:
    """(hi^(1-v) - lo^(1-v)) / (1-v), stable through the v -> 1 limit."""
    if one_minus_v < _POWER_LIMIT_SWITCH:
        return log_hi - log_lo
    return (math.expm1(one_minus_v * log_hi) - math.expm1(one_minus_v * log_lo)) / one_minus_v


def _correction_quadrature(
    integrand, v_upper: float, abs_tol: float, refine: int
) -> float:
    seeds = [p for p in (BRACKET_SERIES_CUTOFF, 0.5, 1.0 - _POWER_LIMIT_SWITCH) if p < v_upper]
    cuts = [0.0, *seeds, v_upper]
    if refine > 1:
        dense = []
        for lo, hi in zip(cuts[:-1], cuts[1:]):
            dense.extend(lo + (hi - lo) * j / refine for j in range(refine))
        cuts = [*dense, v_upper]
    return adaptive_gauss(
        integrand, 0.0, v_upper, abs_tol=abs_tol, breakpoints=tuple(cuts[1:-1])
    )


def correction_integral(
    inputs: FormulaInputs, abs_tol: float = 1e-9, refine: int = 1
) -> float:
    """(1/pi) * integral over v in (0, v_upper) of the prime correction.

    Integrand: [zeta(1-v) zeta(1+v) A(v) + 1/v^2] times the power
    difference ((T/2pi)^(1-v) - x^(1-v))/(1-v) times v.

    Args:
        inputs: point and truncation policy.
        abs_tol: absolute tolerance of the adaptive pass (before the 1/pi).
        refine: initial-panel multiplier for self-convergence checks.

    Returns:
        the correction term.
    """
    log_hi = math.log(inputs.T / TWO_PI)
    log_lo = inputs.beta * math.log(inputs.T)
    pc = inputs.prime_count

    def integrand(v: float) -> float:
        return zeta_pair_bracket(v, pc) * _power_difference(1.0 - v, log_hi, log_lo) * v

    return _correction_quadrature(integrand, inputs.effective_v_upper, abs_tol, refine) / math.pi


def evaluate_theorem1(inputs: FormulaInputs) -> float:
    """Full prediction: smooth main term plus prime correction."""
    return main_term_integral(inputs.T) + correction_integral(inputs)


def evaluate_goldston(T: float) -> float:
    """Baseline (T/2pi^2) [loglog(T/2pi) + 1 + C0 - K]."""
    if T <= TWO_PI:
        raise ValueError(f"baseline needs T > 2*pi, got {T}")
    bracket = math.log(math.log(T / TWO_PI)) + 1.0 + EULER_GAMMA - prime_constant_K()
    return T / (2.0 * math.pi**2) * bracket


def evaluate_goldston_li(T: float) -> float:
    """Baseline minus Li(T/2pi)/pi."""
    return evaluate_goldston(T) - logarithmic_integral(T / TWO_PI) / math.pi


def evaluate_short_interval(
    T: float, H: float, inputs: FormulaInputs, abs_tol: float = 1e-9
) -> float:
    """Prediction for the window [T, T+H]; exactly telescopes in T.

    The main part is a difference of the running main term; the correction
    replaces the x-anchored power difference with one between T+H and T,
    which is what the [0, T+H] minus [0, T] difference leaves when both
    use the same x.
    """
    if T <= TWO_PI:
        raise ValueError(f"short interval needs T > 2*pi, got {T}")
    if H < 0.0:
        raise ValueError(f"window length must be nonnegative, got {H}")
    if H == 0.0:
        return 0.0
    main = main_term_integral(T + H) - main_term_integral(T)
    log_hi = math.log((T + H) / TWO_PI)
    log_lo = math.log(T / TWO_PI)
    pc = inputs.prime_count
    v_upper = inputs.v_upper if inputs.v_upper is not None else 1.0 - 1.0 / T

    def integrand(v: float) -> float:
        return zeta_pair_bracket(v, pc) * _power_difference(1.0 - v, log_hi, log_lo) * v

    corr = _correction_quadrature(integrand, v_upper, abs_tol, refine=1) / math.pi
    return main + corr


@dataclass(frozen=True)
class MomentReport:
    """One comparison row: empirical moment against the three predictions."""

    cutoff: float
    anchor: float
    empirical: float
    formula_a: float
    goldston_b: float
    goldston_c: float

    @property
    def delta_a(self) -> float:
        return self.empirical - self.formula_a

    @property
    def rel_delta_a(self) -> float:
        return self.delta_a / self.empirical


def build_report(
    catalog: ZeroCatalog, cutoff: float, inputs: FormulaInputs
) -> MomentReport:
    """Assemble one table row at the largest zero below `cutoff`.

    The anchor replaces inputs.T; everything else in `inputs` (beta, prime
    count, v_upper policy, quadrature spec) is used as given.
    """
    anchor = select_anchor(catalog, cutoff)
    row_inputs = replace(inputs, T=anchor)
    empirical = second_moment(catalog, anchor, inputs.quad).value
    return MomentReport(
        cutoff=float(cutoff),
        anchor=anchor,
        empirical=empirical,
        formula_a=evaluate_theorem1(row_inputs),
        goldston_b=evaluate_goldston(anchor),
        goldston_c=evaluate_goldston_li(anchor),
    )
