"""Exact integer utilities: list gcd, primality, budgeted factoring, prime sieve.

Everything here works on arbitrary-precision Python ints and is purely
functional, so concurrent use needs no locking.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Iterable, Sequence

# Deterministic Miller-Rabin witness set: correct for every n below
# 3,317,044,064,679,887,385,961,981 (> 2^64), per the known verified bounds.
_MR_BASES_64 = (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37, 41)
_MR_DETERMINISTIC_BOUND = 3_317_044_064_679_887_385_961_981

_SMALL_PRIMES = (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37, 41, 43, 47)


@dataclass(frozen=True)
class FactorBudget:
    """Effort limits for `factorize`.

    trial_bound: largest divisor tried by trial division.
    rho_rounds:  number of Brent-rho restarts (distinct polynomial offsets).
    rho_iters:   iteration cap per rho round.
    """

    trial_bound: int = 10**6
    rho_rounds: int = 24
    rho_iters: int = 1 << 17

    def __post_init__(self) -> None:
        if self.trial_bound < 2:
            raise ValueError("trial_bound must be at least 2")
        if self.rho_rounds < 0 or self.rho_iters < 1:
            raise ValueError("rho budget must be non-negative")


DEFAULT_BUDGET = FactorBudget()


@dataclass(frozen=True)
class Factorization:
    """Result of a budgeted factorization.

    `factors` lists (prime, exponent) pairs in ascending prime order.
    `cofactor` is the unfactored remainder: 1 when the factorization is
    complete, otherwise a composite (or unresolved) part that exceeded
    the budget.  Invariant: prod(p**e) * cofactor == input.
    """

    input: int
    factors: tuple[tuple[int, int], ...]
    cofactor: int = 1

    @property
    def complete(self) -> bool:
        return self.cofactor == 1

    def reassemble(self) -> int:
        out = self.cofactor
        for p, e in self.factors:
            out *= p**e
        return out

    def distinct_primes(self) -> tuple[int, ...]:
        return tuple(p for p, _ in self.factors)


def gcd_many(values: Iterable[int]) -> int:
    """Greatest common divisor of a non-empty collection (0 acts as identity)."""
    vals = list(values)
    if not vals:
        raise ValueError("gcd_many requires at least one value")
    if any(v < 0 for v in vals):
        raise ValueError("gcd_many is defined for non-negative integers")
    return math.gcd(*vals)


def _miller_rabin(n: int, bases: Sequence[int]) -> bool:
    d = n - 1
    r = 0
    while d % 2 == 0:
        d //= 2
        r += 1
    for a in bases:
        a %= n
        if a in (0, 1, n - 1):
            continue
        x = pow(a, d, n)
        if x in (1, n - 1):
            continue
        for _ in range(r - 1):
            x = x * x % n
            if x == n - 1:
                break
        else:
            return False
    return True


def _derived_bases(n: int, count: int) -> list[int]:
    # Deterministic pseudo-random bases derived from n itself, so repeated
    # calls always agree.  splitmix64-style scramble.
    bases = []
    state = (n ^ 0x9E3779B97F4A7C15) & (2**64 - 1)
    while len(bases) < count:
        state = (state + 0x9E3779B97F4A7C15) & (2**64 - 1)
        z = state
        z = ((z ^ (z >> 30)) * 0xBF58476D1CE4E5B9) & (2**64 - 1)
        z = ((z ^ (z >> 27)) * 0x94D049BB133111EB) & (2**64 - 1)
        z ^= z >> 31
        a = 2 + z % (n - 3)
        bases.append(a)
    return bases


def is_prime(n: int) -> bool:
    """Primality test.

    Deterministic (exact) for all n below ~3.3e24, which covers the full
    64-bit range.  Above that it falls back to Miller-Rabin with 64
    rounds of bases derived deterministically from n; the error
    probability is below 4**-64 = 2**-128 and identical inputs always
    give identical answers.
    """
    if n < 2:
        return False
    for p in _SMALL_PRIMES:
        if n == p:
            return True
        if n % p == 0:
            return False
    if n < _MR_DETERMINISTIC_BOUND:
        return _miller_rabin(n, _MR_BASES_64)
    return _miller_rabin(n, _derived_bases(n, 64))


def _brent_rho(n: int, c: int, max_iters: int) -> int:
    """One Brent-rho round on composite odd n; returns a nontrivial factor or 1."""
    if n % 2 == 0:
        return 2
    y, m = 2, 128
    g = r = q = 1
    iters = 0
    x = ys = y
    while g == 1 and iters < max_iters:
        x = y
        for _ in range(r):
            y = (y * y + c) % n
        k = 0
        while k < r and g == 1:
            ys = y
            for _ in range(min(m, r - k)):
                y = (y * y + c) % n
                q = q * abs(x - y) % n
            g = math.gcd(q, n)
            k += m
        r *= 2
        iters += r
    if g == n:
        # Backtrack one step at a time to recover the factor.
        g = 1
        while g == 1:
            ys = (ys * ys + c) % n
            g = math.gcd(abs(x - ys), n)
    return g if g != n else 1


def _rho_factor(n: int, budget: FactorBudget) -> int:
    for c in range(1, budget.rho_rounds + 1):
        f = _brent_rho(n, c, budget.rho_iters)
        if 1 < f < n:
            return f
    return 1


def factorize(n: int, budget: FactorBudget = DEFAULT_BUDGET) -> Factorization:
    """Factor n within the given budget.

    All prime factors reachable by trial division up to budget.trial_bound
    and by the bounded rho stage are extracted; whatever remains is
    reported as `cofactor` rather than dropped.
    """
    if n < 1:
        raise ValueError("factorize requires n >= 1")
    if n == 1:
        return Factorization(input=1, factors=())

    counts: dict[int, int] = {}
    rem = n
    for d in (2, 3):
        while rem % d == 0:
            counts[d] = counts.get(d, 0) + 1
            rem //= d
    d = 5
    limit = budget.trial_bound
    while d <= limit and d * d <= rem:
        for cand in (d, d + 2):
            while rem % cand == 0:
                counts[cand] = counts.get(cand, 0) + 1
                rem //= cand
        d += 6

    # Second stage: split the remainder with bounded Brent-rho.
    pending = [rem] if rem > 1 else []
    cofactor = 1
    while pending:
        m = pending.pop()
        if m == 1:
            continue
        if is_prime(m):
            counts[m] = counts.get(m, 0) + 1
            continue
        f = _rho_factor(m, budget)
        if f == 1:
            cofactor *= m
            continue
        pending.append(f)
        pending.append(m // f)

    factors = tuple(sorted(counts.items()))
    return Factorization(input=n, factors=factors, cofactor=cofactor)


def primes_up_to(bound: int) -> list[int]:
    """Ascending list of all primes <= bound (empty for bound < 2)."""
    if bound < 0:
        raise ValueError("bound must be non-negative")
    if bound < 2:
        return []
    sieve = bytearray([1]) * (bound + 1)
    sieve[0] = sieve[1] = 0
    for p in range(2, math.isqrt(bound) + 1):
        if sieve[p]:
            sieve[p * p :: p] = bytearray(len(sieve[p * p :: p]))
    return [i for i, flag in enumerate(sieve) if flag]
