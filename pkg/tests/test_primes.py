import cmath
import math

import numpy as np
import pytest

from szeta.primes import (
    EulerProductSpec,
    PrimeTable,
    _proper_prime_power_sum,
    euler_product_A,
    first_primes,
    lemma7_residual,
    log_euler_product_A,
    prime_constant_K,
    prime_sum_B,
    sieve_primes,
    von_mangoldt,
)

# Independent high-precision values (40-digit arithmetic, literal formulas).
A_ORACLE = {
    (0.25, 2000): 0.94101321633376104866,
    (0.5, 2000): 0.83034707310957506024,
}
K_ORACLE = 0.17624781244258139505  # via sum_m (1/m - 1/m^2) primezeta(m)


def test_sieve_counts_and_contents():
    primes = sieve_primes(10_000)
    assert len(primes) == 1229
    assert list(primes[:5]) == [2, 3, 5, 7, 11]
    assert primes[-1] == 9973
    # no even entry beyond 2
    assert not np.any(primes[1:] % 2 == 0)


def test_sieve_rejects_tiny_limit():
    with pytest.raises(ValueError):
        sieve_primes(1)


def test_first_primes_exact_prefix():
    assert list(first_primes(5)) == [2, 3, 5, 7, 11]
    thousand = first_primes(1000)
    assert len(thousand) == 1000
    assert thousand[-1] == 7919
    assert np.all(np.diff(thousand) > 0)


def test_prime_table_and_spec_validation():
    table = PrimeTable.build(100)
    assert table.primes[-1] == 97
    with pytest.raises(ValueError):
        PrimeTable(limit=10, primes=np.array([5, 3]))
    with pytest.raises(ValueError):
        EulerProductSpec(prime_count=0)
    with pytest.raises(ValueError):
        EulerProductSpec(v_grid=1)


def test_von_mangoldt_against_literal_definition():
    # enumerate p^k <= 300 directly and compare everywhere
    expected = {1: 0.0}
    for p in map(int, sieve_primes(300)):
        pk = p
        while pk <= 300:
            expected[pk] = math.log(p)
            pk *= p
    for n in range(1, 301):
        assert von_mangoldt(n) == pytest.approx(expected.get(n, 0.0), abs=1e-15)


def test_von_mangoldt_rejects_nonpositive():
    with pytest.raises(ValueError):
        von_mangoldt(0)


def test_prime_constant_small_truncation_brute_force():
    primes = [p for p in range(2, 101) if all(p % d for d in range(2, p))]
    brute = math.fsum(
        (1.0 / m - 1.0 / (m * m)) * p**-float(m)
        for m in range(2, 17)
        for p in primes
    )
    # np.power vs ** may differ in the last ulp per term, nothing more
    assert prime_constant_K(prime_limit=100, m_limit=16) == pytest.approx(brute, abs=1e-14)


def test_prime_constant_single_term_case():
    # p = 2, m = 2 is the only admissible term: (1/2 - 1/4) * 2^-2
    assert prime_constant_K(prime_limit=2, m_limit=2) == 0.0625


def test_prime_constant_doubling_both_truncations():
    k1 = prime_constant_K(prime_limit=1_000_000, m_limit=64)
    k2 = prime_constant_K(prime_limit=2_000_000, m_limit=128)
    assert 0.0 < k2 - k1 < 1e-8


def test_prime_constant_truncation_monotone():
    k4 = prime_constant_K(prime_limit=10_000)
    k5 = prime_constant_K(prime_limit=100_000)
    k6 = prime_constant_K(prime_limit=1_000_000)
    assert k4 < k5 < k6
    assert k6 - k5 < k5 - k4


def test_prime_constant_against_primezeta_oracle():
    assert abs(prime_constant_K() - K_ORACLE) < 5e-8


def test_euler_product_at_zero_is_exactly_one():
    assert euler_product_A(0.0, 777) == 1.0
    assert log_euler_product_A(0.0, 777) == 0.0


def test_euler_product_at_one_matches_literal_product():
    p = first_primes(5000).astype(np.float64)
    literal = float(np.prod(1.0 - p**-2.0))
    assert euler_product_A(1.0, 5000) == pytest.approx(literal, rel=1e-12)


def test_euler_product_high_precision_oracle():
    for (v, count), expected in A_ORACLE.items():
        assert euler_product_A(v, count) == pytest.approx(expected, rel=1e-13)


def test_euler_product_nonincreasing():
    grid = np.linspace(0.0, 1.0, 21)
    values = [euler_product_A(float(v), 1000) for v in grid]
    assert all(b <= a for a, b in zip(values, values[1:]))


def test_euler_product_truncation_stability():
    assert abs(euler_product_A(0.5, 2500) - euler_product_A(0.5, 5000)) < 1e-4


def test_euler_product_truncation_grid():
    # The 5000 vs 20000 prime tail peaks near v = 0.34 at about 1.23e-6
    # (sum over the dropped primes of ((1-p^-v)/(p-1))^2, all one-signed).
    grid = np.linspace(0.0, 1.0, 100)
    worst = max(abs(euler_product_A(float(v), 5000) - euler_product_A(float(v), 20000)) for v in grid)
    assert worst < 2e-6


def test_euler_product_domain():
    for v in (-0.1, 1.0001):
        with pytest.raises(ValueError):
            log_euler_product_A(v)


def test_prime_sum_B_real_at_zero():
    b0 = prime_sum_B(0.0, 500)
    literal = math.fsum(
        (math.log(p) / (p - 1.0)) ** 2 for p in map(int, first_primes(500))
    )
    assert b0.imag == 0.0
    assert b0.real == pytest.approx(literal, rel=1e-14)
    assert b0.real == pytest.approx(1.3830513487229200292, rel=1e-13)


def test_prime_sum_B_two_prime_closed_form():
    # with only p = 2, 3 the sum is log^2(2)/(2-1)^2 + log^2(3)/(3-1)^2
    expected = math.log(2.0) ** 2 + (math.log(3.0) / 2.0) ** 2
    assert prime_sum_B(0.0, 2) == complex(expected, 0.0)


def test_prime_sum_B_complex_brute_force():
    primes = map(int, first_primes(5000))
    terms = [(math.log(p) / (p * cmath.exp(1j * math.log(p)) - 1.0)) ** 2 for p in primes]
    brute = complex(math.fsum(t.real for t in terms), math.fsum(t.imag for t in terms))
    got = prime_sum_B(1.0, 5000)
    assert got.real == pytest.approx(brute.real, rel=1e-13)
    assert got.imag == pytest.approx(brute.imag, rel=1e-13)


def test_prime_sum_B_conjugate_symmetry():
    for r in (0.3, 1.7):
        left = prime_sum_B(-r, 800)
        right = prime_sum_B(r, 800)
        assert left.real == pytest.approx(right.real, abs=1e-14)
        assert left.imag == pytest.approx(-right.imag, abs=1e-14)


def test_prime_sum_B_rejects_nonfinite():
    with pytest.raises(ValueError):
        prime_sum_B(float("nan"))


def test_proper_prime_power_sum_matches_literal_loop():
    """The weight (k-1) log^2 p at p^k must equal Lambda(n)(log n - Lambda(n))."""
    for r in (0.0, 0.7):
        re_terms, im_terms = [], []
        for n in range(2, 1001):
            lam = von_mangoldt(n)
            w = lam * (math.log(n) - lam)
            if w == 0.0:
                continue
            phase = -r * math.log(n)
            re_terms.append(w / n * math.cos(phase))
            im_terms.append(w / n * math.sin(phase))
        expected = complex(math.fsum(re_terms), math.fsum(im_terms))
        got = _proper_prime_power_sum(r, 1000.0)
        assert got.real == pytest.approx(expected.real, abs=1e-14)
        assert got.imag == pytest.approx(expected.imag, abs=1e-14)


def test_proper_prime_power_sum_sieve_enumeration():
    # second, longer-range check built from the sieve rather than von_mangoldt
    x = 1e5
    terms = []
    for p in map(int, sieve_primes(int(math.isqrt(int(x))))):
        pk, k = p * p, 2
        while pk <= x:
            terms.append((k - 1) * math.log(p) ** 2 / pk)
            pk *= p
            k += 1
    got = _proper_prime_power_sum(0.0, x)
    assert got.imag == 0.0
    assert got.real == pytest.approx(math.fsum(terms), abs=1e-14)


def test_lemma7_residual_shrinks_with_cutoff():
    assert lemma7_residual(0.5, 1e4) < lemma7_residual(0.5, 1e2)


def test_lemma7_residual_smallest_cutoff_closed_form():
    # below x = 4 the only proper prime power is 4 = 2^2, weight log^2(2)/4
    expected = abs(prime_sum_B(0.0, 20000).real - math.log(2.0) ** 2 / 4.0)
    assert lemma7_residual(0.0, 4.0) == pytest.approx(expected, abs=1e-15)


def test_lemma7_residual_rejects_small_cutoff():
    with pytest.raises(ValueError):
        lemma7_residual(0.0, 3.0)
