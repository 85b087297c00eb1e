"""Vectorised orbit statistics for every modulus up to a bound.

The per-modulus routines in :mod:`modorbits.orbits` cost a factorization
per a <= n/2, which is too slow for sweeps to 10^4 in pure Python.  The
two counts are recomputed here over whole ranges at once, each by its
own route:

* :func:`lattice_census` walks every (a, b, c) with b, c > a >= 1 and
  b*c - a^2 <= max_n, binning by n = b*c - a^2.
* :func:`divisor_sum_census` evaluates sum_i d(i^2+n) through a
  smallest-prime-factor sieve and sum_i d_{<=i}(i^2+n) by sieving the
  residues i^2 = -n (mod c).
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .arith import DivisorSieve, factorize
from .orbits import OrbitReport, check_report

CHUNK = 1 << 21


def _ragged_arange(starts: np.ndarray, lengths: np.ndarray) -> tuple[np.ndarray, np.ndarray]:
    """Concatenate arange(s, s + l) over (s, l); also return the group index."""
    total = int(lengths.sum())
    group = np.repeat(np.arange(lengths.size), lengths)
    offsets = np.cumsum(lengths) - lengths
    return starts[group] + (np.arange(total) - offsets[group]), group


@dataclass
class LatticeCensus:
    max_n: int
    a_plus: np.ndarray
    diagonal: np.ndarray
    y_fixed: np.ndarray

    @property
    def t_plus(self) -> np.ndarray:
        """Number of y-orbits on A+ and A- together (Burnside on y)."""
        orbits3 = self.a_plus + 2 * self.y_fixed
        assert not np.any(orbits3 % 3)
        return 2 * (orbits3 // 3)


def lattice_census(max_n: int) -> LatticeCensus:
    size = max_n + 1
    a_plus = np.zeros(size, dtype=np.int64)
    diag = np.zeros(size, dtype=np.int64)
    fixed = np.zeros(size, dtype=np.int64)
    a = 1
    while 2 * a + 1 <= max_n:
        hi = max_n + a * a
        bs = np.arange(a + 1, hi // (a + 1) + 1, dtype=np.int64)
        counts = hi // bs - a
        cs, group = _ragged_arange(np.full(bs.size, a + 1, dtype=np.int64), counts)
        b = bs[group]
        n = b * cs - a * a
        a_plus += np.bincount(n, minlength=size)
        on_diag = b == cs
        diag += np.bincount(n[on_diag], minlength=size)
        # y fixes (a, b, c) iff b == c == 2a
        fixed += np.bincount(n[on_diag & (b == 2 * a)], minlength=size)
        a += 1
    return LatticeCensus(max_n, a_plus, diag, fixed)


@dataclass
class DivisorSumCensus:
    max_n: int
    d_n: np.ndarray
    d_sum: np.ndarray
    d_upto_sum: np.ndarray

    def counts(self) -> tuple[np.ndarray, np.ndarray]:
        """(d(n) + (2/3) * inner sum, inner sum mod 3); entries n <= 3 are meaningless."""
        inner = self.d_sum - 2 * self.d_upto_sum
        return self.d_n + 2 * inner // 3, inner % 3


def divisor_sum_census(max_n: int, moduli=None, sieve: DivisorSieve | None = None) -> DivisorSumCensus:
    size = max_n + 1
    top = (max_n // 2) ** 2 + max_n
    if sieve is None or sieve.limit < top:
        sieve = DivisorSieve(top)
    ns_all = np.arange(size, dtype=np.int64)
    d_n = np.zeros(size, dtype=np.int64)
    d_n[1:] = sieve.divisor_counts(ns_all[1:])

    ns = np.asarray(sorted(moduli) if moduli is not None else range(1, size), dtype=np.int64)
    lens = ns // 2
    d_sum = np.zeros(size, dtype=np.int64)
    start = 0
    while start < ns.size:
        stop = start
        acc = 0
        while stop < ns.size and (acc == 0 or acc + lens[stop] <= CHUNK):
            acc += lens[stop]
            stop += 1
        block_n, block_len = ns[start:stop], lens[start:stop]
        i, group = _ragged_arange(np.ones(block_n.size, dtype=np.int64), block_len)
        n = block_n[group]
        d = sieve.divisor_counts(i * i + n)
        d_sum += np.bincount(n, weights=d, minlength=size).astype(np.int64)
        start = stop

    # sum_{i <= n/2} #{c <= i : c | i^2 + n}, grouped by c and by i mod c
    d_upto = np.zeros(size, dtype=np.int64)
    for c in range(1, max_n // 2 + 1):
        r = np.arange(c, dtype=np.int64)
        target = (-(r * r)) % c
        first = 2 * c + (target - 2 * c) % c
        counts = np.where(first <= max_n, (max_n - first) // c + 1, 0)
        if not counts.any():
            continue
        k, group = _ragged_arange(np.zeros(c, dtype=np.int64), counts)
        n = first[group] + c * k
        hits = (n // 2 - r[group]) // c
        d_upto += np.bincount(n, weights=hits, minlength=size).astype(np.int64)
    return DivisorSumCensus(max_n, d_n, d_sum, d_upto)


def sweep_reports(max_n: int, moduli=None, sieve: DivisorSieve | None = None) -> list[OrbitReport]:
    """OrbitReports for every square-free n <= max_n, checked like verify_report."""
    if moduli is None:
        base = DivisorSieve(max(max_n, 1))
        mask = base.squarefree_mask()
        moduli = [int(n) for n in np.flatnonzero(mask)]
    lattice = lattice_census(max_n)
    t_plus = lattice.t_plus
    dsc = divisor_sum_census(max_n, moduli, sieve)
    via_sum, remainder = dsc.counts()
    reports = []
    for n in moduli:
        t = int(t_plus[n])
        count = 2 if n == 1 else int(dsc.d_n[n]) + t
        r = OrbitReport(
            n=n,
            d_n=int(dsc.d_n[n]),
            a_plus_size=int(lattice.a_plus[n]),
            t_plus_size=t,
            count_triples=count,
            count_divisor_sum=int(via_sum[n]) if n > 3 else None,
            diagonal_size=int(lattice.diagonal[n]),
        )
        r.violations = check_report(r)
        if n > 3 and remainder[n]:
            r.violations.append(f"n={n}: divisor sum not divisible by 3")
        if n % 2 and n > 1 and factorize(n).num_prime_factors == 1 and r.diagonal_size != 1:
            r.violations.append(f"n={n}: prime modulus with {r.diagonal_size} diagonal elements")
        reports.append(r)
    return reports
