"""Exact periodic autocorrelation of integer rows, plain and modular.

The profile is kept as unnormalized integer sums: divisibility reasoning
downstream (gcd of off-peak values) needs exact integers, so no 1/N
prefactor is ever applied.
"""

from __future__ import annotations

from dataclasses import dataclass

from .sequence import SequenceLike, as_elements


@dataclass(frozen=True)
class CorrProfile:
    """Periodic autocorrelation values C(0..N-1) of an integer row.

    For any real row, C(k) == C(N-k) for 1 <= k <= N-1.
    """

    values: tuple[int, ...]

    def __len__(self) -> int:
        return len(self.values)

    def __getitem__(self, k: int) -> int:
        return self.values[k]

    @property
    def peak(self) -> int:
        return self.values[0]

    def offpeak(self) -> tuple[int, ...]:
        return self.values[1:]


def periodic_autocorr(seq: SequenceLike) -> CorrProfile:
    """C(k) = sum_j a(j) * a(j+k mod N), exact integers, k = 0..N-1."""
    a = as_elements(seq)
    n = len(a)
    if n < 2:
        raise ValueError("autocorrelation needs at least 2 points")
    half = n // 2
    values = [0] * n
    values[0] = sum(x * x for x in a)
    # C(k) == C(n-k): compute the first half, mirror the rest.
    for k in range(1, half + 1):
        values[k] = sum(a[j] * a[(j + k) % n] for j in range(n))
    for k in range(half + 1, n):
        values[k] = values[n - k]
    return CorrProfile(tuple(values))


def autocorr_mod(seq: SequenceLike, n: int) -> CorrProfile:
    """The periodic autocorrelation reduced element-wise modulo n."""
    if n < 2:
        raise ValueError("modulus must be at least 2")
    profile = periodic_autocorr(seq)
    return CorrProfile(tuple(v % n for v in profile.values))
