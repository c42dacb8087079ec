"""gcd, primality, budgeted factorization, sieve."""

import random

import pytest

from rrseq.numtheory import (
    FactorBudget,
    factorize,
    gcd_many,
    is_prime,
    primes_up_to,
)


def test_gcd_many_basics():
    assert gcd_many([200, 160, 200]) == 40
    assert gcd_many([40]) == 40
    assert gcd_many([0, 12]) == 12
    assert gcd_many([7, 11]) == 1


def test_gcd_many_rejects_bad_input():
    with pytest.raises(ValueError):
        gcd_many([])
    with pytest.raises(ValueError):
        gcd_many([-4, 8])


def test_gcd_divides_every_value():
    rng = random.Random(99)
    for _ in range(500):
        vals = [rng.randrange(1, 10**9) for _ in range(rng.randrange(1, 8))]
        g = gcd_many(vals)
        assert g >= 1
        assert all(v % g == 0 for v in vals)


def test_is_prime_matches_sieve():
    sieve = set(primes_up_to(2000))
    for n in range(-5, 2001):
        assert is_prime(n) == (n in sieve), n


@pytest.mark.parametrize("n", [561, 1105, 1729, 41041, 825265, 321197185])
def test_carmichael_numbers_rejected(n):
    assert not is_prime(n)


def test_large_primality():
    assert is_prime(2**61 - 1)
    assert not is_prime(2**67 - 1)  # 193707721 * 761838257287
    assert not is_prime((2**61 - 1) ** 2)
    # beyond the deterministic-witness bound: derived-base path
    assert is_prime(2**89 - 1)
    assert not is_prime(2**89 - 3)


def test_factorize_small_round_trip():
    for n in range(1, 2000):
        f = factorize(n)
        assert f.complete
        assert f.reassemble() == n
        assert f.input == n
        assert all(is_prime(p) and e >= 1 for p, e in f.factors)
        assert list(f.factors) == sorted(f.factors)


def test_factorize_examples():
    assert factorize(40).factors == ((2, 3), (5, 1))
    assert factorize(1).factors == ()
    assert factorize(97).factors == ((97, 1),)
    assert factorize(2**20).factors == ((2, 20),)
    assert factorize(43692).factors == ((2, 2), (3, 1), (11, 1), (331, 1))


def test_factorize_rejects_nonpositive():
    for n in (0, -1, -40):
        with pytest.raises(ValueError):
            factorize(n)


def test_rho_stage_splits_semiprime():
    # both factors above the trial bound, so rho has to do the work
    budget = FactorBudget(trial_bound=10)
    f = factorize(1009 * 1013, budget)
    assert f.complete
    assert f.factors == ((1009, 1), (1013, 1))


def test_rho_splits_large_semiprime():
    p, q = 1_000_003, 1_000_033
    f = factorize(p * q, FactorBudget(trial_bound=100))
    assert f.complete
    assert f.factors == ((p, 1), (q, 1))


def test_budget_exhaustion_reports_cofactor():
    budget = FactorBudget(trial_bound=2, rho_rounds=0, rho_iters=1)
    n = 8 * 1009**2
    f = factorize(n, budget)
    assert f.factors == ((2, 3),)
    assert f.cofactor == 1009**2
    assert not f.complete
    assert f.reassemble() == n


def test_budget_validation():
    with pytest.raises(ValueError):
        FactorBudget(trial_bound=1)
    with pytest.raises(ValueError):
        FactorBudget(rho_iters=0)
    with pytest.raises(ValueError):
        FactorBudget(rho_rounds=-1)


def test_primes_up_to():
    assert primes_up_to(1) == []
    assert primes_up_to(2) == [2]
    assert primes_up_to(30) == [2, 3, 5, 7, 11, 13, 17, 19, 23, 29]
    assert len(primes_up_to(100)) == 25
    assert len(primes_up_to(10**4)) == 1229
