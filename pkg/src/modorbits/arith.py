"""Elementary number theory: factorization, divisors, divisor counts.

Single queries use trial division.  Range queries can share a
:class:`DivisorSieve`, a smallest-prime-factor table backed by numpy.
"""

from __future__ import annotations

from dataclasses import dataclass
from math import comb, isqrt, prod

import numpy as np


@dataclass(frozen=True)
class Factorization:
    value: int
    factors: tuple[tuple[int, int], ...]

    def __post_init__(self):
        primes = [p for p, _ in self.factors]
        assert primes == sorted(set(primes)), self.factors
        assert all(e >= 1 for _, e in self.factors), self.factors
        assert prod(p**e for p, e in self.factors) == self.value, self

    @property
    def primes(self) -> list[int]:
        return [p for p, _ in self.factors]

    @property
    def num_prime_factors(self) -> int:
        """Number of distinct primes."""
        return len(self.factors)

    def is_squarefree(self) -> bool:
        return all(e == 1 for _, e in self.factors)


def _check_positive(m: int, name: str = "m") -> None:
    if m < 1:
        raise ValueError(f"{name} must be a positive integer, got {m}")


def factorize(m: int) -> Factorization:
    """Prime factorization of ``m`` by trial division.

    >>> factorize(12).factors
    ((2, 2), (3, 1))
    """
    _check_positive(m)
    factors = []
    rest = m
    for p in (2, 3):
        if rest % p == 0:
            e = 0
            while rest % p == 0:
                rest //= p
                e += 1
            factors.append((p, e))
    # candidates 6k-1, 6k+1
    p, step = 5, 2
    while p * p <= rest:
        if rest % p == 0:
            e = 0
            while rest % p == 0:
                rest //= p
                e += 1
            factors.append((p, e))
        p += step
        step = 6 - step
    if rest > 1:
        factors.append((rest, 1))
    return Factorization(m, tuple(factors))


def repeated_prime(m: int) -> int | None:
    """Smallest prime p with p^2 | m, or None when m is square-free."""
    for p, e in factorize(m).factors:
        if e > 1:
            return p
    return None


def is_squarefree(m: int) -> bool:
    return repeated_prime(m) is None


def squarefree_upto(max_n: int) -> list[int]:
    return [m for m in range(1, max_n + 1) if is_squarefree(m)]


def divisor_count(m: int) -> int:
    return prod(e + 1 for _, e in factorize(m).factors)


def _divisors_of(f: Factorization) -> list[int]:
    divs = [1]
    for p, e in f.factors:
        divs = [d * p**k for d in divs for k in range(e + 1)]
    divs.sort()
    return divs


def divisors(m: int) -> list[int]:
    """All positive divisors of ``m`` in increasing order."""
    return _divisors_of(factorize(m))


def divisor_count_upto(m: int, k: int) -> int:
    """Number of positive divisors of ``m`` not exceeding ``k``."""
    _check_positive(m)
    _check_positive(k, "k")
    if k >= m:
        return divisor_count(m)
    return sum(1 for d in divisors(m) if d <= k)


def binomial(r: int, k: int) -> int:
    return comb(r, k)


class DivisorSieve:
    """Smallest-prime-factor table for all integers up to ``limit``.

    Built once, read-only afterwards.  ``spf[m]`` is the least prime
    dividing ``m`` for ``m >= 2``.
    """

    def __init__(self, limit: int):
        if limit < 1:
            raise ValueError("limit must be positive")
        self.limit = limit
        dtype = np.int32 if limit < 2**31 else np.int64
        spf = np.zeros(limit + 1, dtype=dtype)
        for p in range(2, isqrt(limit) + 1):
            if spf[p] == 0:
                block = spf[p * p :: p]
                block[block == 0] = p
        rest = np.flatnonzero(spf == 0)
        spf[rest] = rest
        spf[:2] = 0
        self.spf = spf

    def __contains__(self, m: int) -> bool:
        return 1 <= m <= self.limit

    def factorize(self, m: int) -> Factorization:
        if m > self.limit:
            return factorize(m)
        _check_positive(m)
        spf = self.spf
        factors = []
        while m > 1:
            p = int(spf[m])
            e = 0
            while m % p == 0:
                m //= p
                e += 1
            factors.append((p, e))
        return Factorization(prod(p**e for p, e in factors), tuple(factors))

    def divisors(self, m: int) -> list[int]:
        return _divisors_of(self.factorize(m))

    def squarefree_mask(self) -> np.ndarray:
        """Boolean array, entry m true iff m is square-free (entry 0 false)."""
        mask = np.ones(self.limit + 1, dtype=bool)
        mask[0] = False
        for p in range(2, isqrt(self.limit) + 1):
            if self.spf[p] == p:
                mask[p * p :: p * p] = False
        return mask

    def divisor_counts(self, values: np.ndarray) -> np.ndarray:
        """Vectorised d(m) for an array of integers in [1, limit]."""
        rest = np.asarray(values, dtype=np.int64).copy()
        if rest.size and (rest.min() < 1 or rest.max() > self.limit):
            raise ValueError("values outside sieve range")
        out = np.ones(rest.shape, dtype=np.int64)
        live = np.flatnonzero(rest > 1)
        while live.size:
            r = rest[live]
            p = self.spf[r].astype(np.int64)
            e = np.zeros(r.shape, dtype=np.int64)
            hit = np.ones(r.shape, dtype=bool)
            while hit.any():
                hit = r % p == 0
                r[hit] //= p[hit]
                e += hit
            out[live] *= e + 1
            rest[live] = r
            live = live[r > 1]
        return out
