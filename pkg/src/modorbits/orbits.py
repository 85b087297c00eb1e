"""Orbits of PSL(2, Z) on M_{-n}: canonical representatives and counts.

Every orbit contains exactly one of

* an x-pair {z, x(z)} of norm-zero elements (a singleton when n = 1), or
* one totally positive y-triple,

so the canonical representative of an orbit is that pair or triple with
its members sorted.  :func:`reduce` walks any element down to it by a
norm-decreasing descent.
"""

from __future__ import annotations

from dataclasses import dataclass, field

from . import enumeration as en
from .arith import DivisorSieve, binomial, divisor_count, divisor_count_upto, factorize
from .core import (
    ElementClass,
    Gen,
    Signature,
    apply_x,
    apply_y,
    apply_y2,
    check_modulus,
    classify,
)
from .errors import ModulusMismatch, OutOfDomain

PAIR = "pair"
TRIPLE = "triple"


@dataclass(frozen=True)
class OrbitRep:
    n: int
    kind: str
    members: tuple[Signature, ...]

    def __post_init__(self):
        assert self.kind in (PAIR, TRIPLE)
        assert list(self.members) == sorted(set(self.members))

    @classmethod
    def pair(cls, z: Signature) -> "OrbitRep":
        assert z.a == 0
        return cls(z.n, PAIR, tuple(sorted({z, apply_x(z)})))

    @classmethod
    def triple(cls, s: Signature) -> "OrbitRep":
        return cls(s.n, TRIPLE, en.PositiveTriple.from_member(s).members)

    def to_json(self) -> dict:
        return {"n": self.n, "kind": self.kind, "members": [list(s.abc) for s in self.members]}

    def __str__(self):
        name = "NormZeroPair" if self.kind == PAIR else "Triple"
        return name + "{" + ",".join(str(s) for s in self.members) + "}"


@dataclass
class Descent:
    """Record of one descent: the representative plus how it was reached.

    ``word`` satisfies ``apply_word(start, word) in rep.members``.
    ``produced`` holds every signature computed along the way.
    """

    start: Signature
    rep: OrbitRep
    iterations: int
    word: list[Gen]
    classes: list[ElementClass]
    produced: list[Signature] = field(repr=False)


def descend(s: Signature) -> Descent:
    word: list[Gen] = []
    classes = [classify(s)]
    produced = [s]
    if classes[0] is ElementClass.NORM_ZERO:
        return Descent(s, OrbitRep.pair(s), 0, word, classes, produced)

    cur = s
    if classes[0] is ElementClass.TOTALLY_NEGATIVE:
        cur = apply_x(cur)
        word.append(Gen.X)
        classes.append(classify(cur))
        produced.append(cur)

    iterations = 0
    while True:
        iterations += 1
        ys, y2s = apply_y(cur), apply_y2(cur)
        produced += [ys, y2s]
        ky, ky2 = classify(ys), classify(y2s)
        classes += [ky, ky2]
        # cur is totally positive here, so only ys or y2s can leave that class
        if ky is ElementClass.NORM_ZERO:
            word.append(Gen.Y)
            return Descent(s, OrbitRep.pair(ys), iterations, word, classes, produced)
        if ky2 is ElementClass.NORM_ZERO:
            word.append(Gen.Y2)
            return Descent(s, OrbitRep.pair(y2s), iterations, word, classes, produced)
        if ky is ElementClass.TOTALLY_POSITIVE and ky2 is ElementClass.TOTALLY_POSITIVE:
            return Descent(s, OrbitRep.triple(cur), iterations, word, classes, produced)

        assert (ky is ElementClass.TOTALLY_NEGATIVE) != (ky2 is ElementClass.TOTALLY_NEGATIVE)
        beta, g = (ys, Gen.Y) if ky is ElementClass.TOTALLY_NEGATIVE else (y2s, Gen.Y2)
        assert abs(beta.a) < abs(cur.a)
        cur = apply_x(beta)
        word += [g, Gen.X]
        classes.append(classify(cur))
        produced.append(cur)


def reduce(s: Signature) -> OrbitRep:
    """Canonical representative of the orbit of ``s``."""
    return descend(s).rep


def same_orbit(s1: Signature, s2: Signature) -> bool:
    if s1.n != s2.n:
        raise ModulusMismatch(f"moduli differ: {s1.n} vs {s2.n}")
    return reduce(s1) == reduce(s2)


def norm_zero_reps(n: int) -> list[OrbitRep]:
    reps = {OrbitRep.pair(z) for z in en.norm_zero(n)}
    return sorted(reps, key=lambda r: r.members)


def canonical_reps(n: int, sieve: DivisorSieve | None = None) -> list[OrbitRep]:
    """One representative per orbit: norm-zero pairs first, then triples."""
    triples = [OrbitRep(n, TRIPLE, t.members) for t in en.t_plus(n, sieve)]
    return norm_zero_reps(n) + sorted(triples, key=lambda r: r.members)


def count_orbits(n: int, sieve: DivisorSieve | None = None) -> int:
    """Orbit count as d(n) + |T+(-n)|, with the n = 1 exception."""
    check_modulus(n)
    if n == 1:
        return 2
    return divisor_count(n) + len(en.t_plus(n, sieve))


@dataclass(frozen=True)
class DivisorSumTerm:
    i: int
    m: int
    d: int
    d_upto: int

    @property
    def value(self) -> int:
        return self.d - 2 * self.d_upto


def divisor_sum_terms(n: int, sieve: DivisorSieve | None = None) -> list[DivisorSumTerm]:
    """Terms d(i^2+n) and d_{<=i}(i^2+n) for i = 1 .. floor(n/2)."""
    terms = []
    for i in range(1, n // 2 + 1):
        m = i * i + n
        if sieve is not None and m in sieve:
            divs = sieve.divisors(m)
            terms.append(DivisorSumTerm(i, m, len(divs), sum(1 for q in divs if q <= i)))
        else:
            terms.append(DivisorSumTerm(i, m, divisor_count(m), divisor_count_upto(m, i)))
    return terms


def count_orbits_divisor_sum(n: int, sieve: DivisorSieve | None = None) -> int:
    """Orbit count d(n) + (2/3) * sum_i [d(i^2+n) - 2 d_{<=i}(i^2+n)], n > 3."""
    check_modulus(n)
    if n <= 3:
        raise OutOfDomain(f"divisor-sum formula needs n > 3, got {n}")
    total = sum(t.value for t in divisor_sum_terms(n, sieve))
    if total % 3:
        raise ArithmeticError(f"divisor sum {total} for n={n} is not divisible by 3")
    return divisor_count(n) + 2 * total // 3


def expected_diagonal_size(n: int) -> int:
    """|A+_{b=c}(-n)| predicted from the shape of n.

    Even n: 0.  Odd n with r prime factors: the number of ways to split
    the primes between b+a > b-a, i.e. sum_{k < r/2} C(r,k) (+ C(r,r/2)/2
    for even r), which is 2^(r-1).
    """
    if n == 1 or n % 2 == 0:
        return 0
    r = factorize(n).num_prime_factors
    total = sum(binomial(r, k) for k in range((r + 1) // 2))
    if r % 2 == 0:
        total += binomial(r, r // 2) // 2
    return total


@dataclass
class OrbitReport:
    n: int
    d_n: int
    a_plus_size: int
    t_plus_size: int
    count_triples: int
    count_divisor_sum: int | None
    diagonal_size: int
    violations: list[str] = field(default_factory=list)

    @property
    def congruent_mod4(self) -> bool:
        return self.count_triples % 4 == 0

    @property
    def ok(self) -> bool:
        return not self.violations

    @property
    def norm_zero_orbits(self) -> int:
        """Orbits through norm-zero elements: d(n), except 2 for n = 1."""
        return 2 if self.n == 1 else self.d_n

    def table_row(self) -> tuple[int, int, int, int]:
        return (self.n, self.t_plus_size, self.norm_zero_orbits, self.count_triples)

    def to_json(self) -> dict:
        return {
            "n": self.n,
            "d": self.d_n,
            "a_plus": self.a_plus_size,
            "t_plus": self.t_plus_size,
            "thm1": self.count_triples,
            "thm2": self.count_divisor_sum,
            "mod4_ok": self.congruent_mod4,
            "violations": list(self.violations),
        }


def check_report(r: OrbitReport) -> list[str]:
    """Laws every report must satisfy; returns violation messages."""
    n = r.n
    bad = []
    if r.count_divisor_sum is not None and r.count_divisor_sum != r.count_triples:
        bad.append(f"n={n}: count mismatch, triples {r.count_triples} vs divisor-sum {r.count_divisor_sum}")
    if n not in (1, 2) and not r.congruent_mod4:
        bad.append(f"n={n}: orbit count {r.count_triples} not divisible by 4")
    if n != 3 and r.a_plus_size % 3:
        bad.append(f"n={n}: |A+| = {r.a_plus_size} not divisible by 3")
    if (r.a_plus_size == 1) != (n == 3):
        bad.append(f"n={n}: |A+| = {r.a_plus_size} breaks '|A+| = 1 iff n = 3'")
    if n != 3 and 3 * r.t_plus_size != 2 * r.a_plus_size:
        bad.append(f"n={n}: |T+| = {r.t_plus_size} is not 2/3 of |A+| = {r.a_plus_size}")
    want = expected_diagonal_size(n)
    if r.diagonal_size != want:
        bad.append(f"n={n}: |A+ with b=c| = {r.diagonal_size}, expected {want}")
    if n > 1 and r.count_triples < 2:
        bad.append(f"n={n}: action looks transitive ({r.count_triples} orbit)")
    return bad


def verify_report(n: int, sieve: DivisorSieve | None = None) -> OrbitReport:
    check_modulus(n)
    plus = en.a_plus(n, sieve)
    triples = en.t_plus(n, sieve)
    diag = [s for s in plus if s.b == s.c]
    report = OrbitReport(
        n=n,
        d_n=divisor_count(n),
        a_plus_size=len(plus),
        t_plus_size=len(triples),
        count_triples=count_orbits(n, sieve),
        count_divisor_sum=count_orbits_divisor_sum(n, sieve) if n > 3 else None,
        diagonal_size=len(diag),
    )
    report.violations = check_report(report)
    if n % 2 == 1 and n > 1 and factorize(n).num_prime_factors == 1:
        expect = Signature(n, (n - 1) // 2, (n + 1) // 2, (n + 1) // 2)
        if diag != [expect]:
            report.violations.append(f"n={n}: prime diagonal is {diag}, expected [{expect}]")
    return report


__all__ = [
    "OrbitRep",
    "OrbitReport",
    "Descent",
    "descend",
    "reduce",
    "same_orbit",
    "canonical_reps",
    "norm_zero_reps",
    "count_orbits",
    "count_orbits_divisor_sum",
    "divisor_sum_terms",
    "expected_diagonal_size",
    "verify_report",
    "check_report",
]
