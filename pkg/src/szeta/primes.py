"""Prime sieves and the prime-indexed quantities used by the moment formula.

Everything here is plain double precision over numpy arrays, with exact
(fsum) reductions so results are bit-reproducible across runs.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from functools import lru_cache

import numpy as np

__all__ = [
    "PrimeTable",
    "EulerProductSpec",
    "sieve_primes",
    "first_primes",
    "von_mangoldt",
    "prime_constant_K",
    "euler_product_A",
    "log_euler_product_A",
    "prime_sum_B",
    "lemma7_residual",
]


def sieve_primes(limit: int) -> np.ndarray:
    """All primes <= limit, ascending, via a boolean Eratosthenes sieve.

    Args:
        limit: inclusive upper bound, >= 2.

    Returns:
        int64 array of primes.
    """
    if limit < 2:
        raise ValueError(f"sieve limit must be >= 2, got {limit}")
    is_prime = np.ones(limit + 1, dtype=bool)
    is_prime[:2] = False
    for i in range(2, int(limit**0.5) + 1):
        if is_prime[i]:
            is_prime[i * i :: i] = False
    return np.nonzero(is_prime)[0].astype(np.int64)


def first_primes(count: int) -> np.ndarray:
    """The first `count` primes, ascending."""
    if count < 1:
        raise ValueError(f"prime count must be >= 1, got {count}")
    if count < 6:
        bound = 13
    else:
        # Rosser-type upper bound for the n-th prime
        n = float(count)
        bound = int(n * (math.log(n) + math.log(math.log(n)))) + 10
    primes = sieve_primes(bound)
    while len(primes) < count:
        bound *= 2
        primes = sieve_primes(bound)
    return primes[:count]


@dataclass(frozen=True)
class PrimeTable:
    """Primes up to a bound, with cached float views for vector arithmetic."""

    limit: int
    primes: np.ndarray

    @classmethod
    def build(cls, limit: int) -> "PrimeTable":
        return cls(limit=limit, primes=sieve_primes(limit))

    def __post_init__(self):
        if len(self.primes) == 0:
            raise ValueError("empty prime table")
        if np.any(np.diff(self.primes) <= 0):
            raise ValueError("primes must be strictly increasing")


@dataclass(frozen=True)
class EulerProductSpec:
    """Truncation and diagnostic-grid choices for the Euler product."""

    prime_count: int = 5000
    v_grid: int = 11

    def __post_init__(self):
        if self.prime_count < 1:
            raise ValueError("prime_count must be positive")
        if self.v_grid < 2:
            raise ValueError("v_grid must be at least 2")


@lru_cache(maxsize=8)
def _prime_arrays(prime_count: int):
    """(p, log p, p - 1) float64 arrays for the first `prime_count` primes."""
    p = first_primes(prime_count).astype(np.float64)
    return p, np.log(p), p - 1.0


def von_mangoldt(n: int) -> float:
    """The von Mangoldt function: log p if n = p^k, else 0."""
    if n < 1:
        raise ValueError(f"von_mangoldt needs n >= 1, got {n}")
    if n == 1:
        return 0.0
    m = n
    spf = 0
    for d in range(2, int(math.isqrt(m)) + 1):
        if m % d == 0:
            spf = d
            break
    if spf == 0:
        return math.log(n)  # n itself prime
    while m % spf == 0:
        m //= spf
    return math.log(spf) if m == 1 else 0.0


@lru_cache(maxsize=8)
def prime_constant_K(prime_limit: int = 1_000_000, m_limit: int = 64) -> float:
    """The constant K = sum_{m>=2} sum_p (1/m - 1/m^2) p^{-m}.

    Only prime squares and higher powers enter.  Truncations converge fast:
    the tail above prime_limit is O(1/(prime_limit log prime_limit)) from
    the m=2 term, and the m-tail is geometric.

    Args:
        prime_limit: sieve bound for the inner sums.
        m_limit: largest exponent m.

    Returns:
        K, about 0.176248 at the defaults.
    """
    if prime_limit < 2 or m_limit < 2:
        raise ValueError("prime_limit >= 2 and m_limit >= 2 required")
    primes = sieve_primes(prime_limit).astype(np.float64)
    terms = []
    for m in range(2, m_limit + 1):
        # primes with p^-m below 1e-22 cannot move the 1e-8 target
        cut = math.exp(min(22 * math.log(10.0) / m, math.log(prime_limit + 1.0)))
        head = primes[: np.searchsorted(primes, cut, side="right")]
        if len(head) == 0:
            break
        coeff = 1.0 / m - 1.0 / (m * m)
        terms.append(coeff * math.fsum(np.power(head, -float(m))))
    return math.fsum(terms)


def log_euler_product_A(v: float, prime_count: int = 5000) -> float:
    """log of the truncated Euler product A(v), exactly cancellation-free.

    Each factor (1 - p^{-1-v})(1 - 2/p + p^{-1-v})/(1 - 1/p)^2 equals
    1 - ((1 - p^{-v})/(p - 1))^2, an algebraic identity, so the log-sum
    needs no subtractions: every summand is log1p of a small negative
    quantity built from expm1.  This keeps (1 - A(v))/v^2 fully accurate
    down to v -> 0, where A behaves as exp(-B(0) v^2 + O(v^3)).

    Args:
        v: point in [0, 1].
        prime_count: number of leading primes kept in the product.

    Returns:
        log A(v) <= 0.
    """
    if not 0.0 <= v <= 1.0:
        raise ValueError(f"euler product argument must lie in [0, 1], got {v}")
    _, logp, pm1 = _prime_arrays(prime_count)
    r = -np.expm1(-v * logp) / pm1
    return math.fsum(np.log1p(-r * r))


def euler_product_A(v: float, prime_count: int = 5000) -> float:
    """The truncated arithmetic factor A(v) over the first `prime_count` primes.

    A(0) = 1 exactly; A(1) equals prod (1 - p^-2) over the same primes.
    Nonincreasing on [0, 1].
    """
    return math.exp(log_euler_product_A(v, prime_count))


def prime_sum_B(r: float, prime_count: int = 5000) -> complex:
    """B(ir) = sum_p (log p / (p^{1+ir} - 1))^2 over the first primes.

    Args:
        r: real frequency; B(-ir) is the conjugate of B(ir).
        prime_count: truncation.

    Returns:
        complex value of the prime sum.
    """
    if not math.isfinite(r):
        raise ValueError("r must be finite")
    p, logp, _ = _prime_arrays(prime_count)
    denom = p * np.exp(1j * r * logp) - 1.0
    term = (logp / denom) ** 2
    return complex(math.fsum(term.real), math.fsum(term.imag))


def _proper_prime_power_sum(r: float, x: float) -> complex:
    """sum_{n <= x} (Lambda(n) log n - Lambda(n)^2) n^{-1-ir}.

    The summand vanishes unless n = p^k with k >= 2, where it equals
    (k-1) log^2 p, so only proper prime powers are enumerated.
    """
    re_parts: list[float] = []
    im_parts: list[float] = []
    for p in sieve_primes(int(math.isqrt(int(x))) + 1):
        p = int(p)
        lp = math.log(p)
        pk = p * p
        k = 2
        while pk <= x:
            w = (k - 1) * lp * lp / pk
            phase = -r * k * lp
            re_parts.append(w * math.cos(phase))
            im_parts.append(w * math.sin(phase))
            pk *= p
            k += 1
    return complex(math.fsum(re_parts), math.fsum(im_parts))


def lemma7_residual(r: float, x: float, prime_count: int = 20000) -> float:
    """|B(ir) - truncated prime-power sum up to x|.

    Decays like x^{-1/2} times slow logs; prime_count must be large enough
    that the B-side truncation sits below that scale (the default keeps the
    B tail near 6e-5, well under the residual for x <= 1e5).

    Args:
        r: real frequency.
        x: prime-power cutoff, >= 4.
        prime_count: truncation of the B sum.

    Returns:
        absolute difference between the two sides.
    """
    if x < 4:
        raise ValueError(f"cutoff x must be >= 4, got {x}")
    return abs(prime_sum_B(r, prime_count) - _proper_prime_power_sum(r, x))
