"""Finite signature sets attached to a modulus n.

``a_plus``      positive signatures with b > a and c > a
``a_minus``     their componentwise negations
``t_plus``      y-orbits of A+ and A- (the totally positive triples)
``norm_zero``   the 2 d(n) elements sqrt(-n)/c
``diagonal``    elements of A+ with b == c
"""

from __future__ import annotations

import enum
from dataclasses import dataclass

from .arith import DivisorSieve, divisors
from .core import Signature, apply_y, check_modulus, classify, ElementClass


class SetKind(enum.Enum):
    A_PLUS = "a+"
    A_MINUS = "a-"
    T_PLUS = "t+"
    NORM_ZERO = "zero"
    DIAGONAL = "diag"

    @property
    def label(self) -> str:
        return _LABELS[self]


_LABELS = {
    SetKind.A_PLUS: "APlus",
    SetKind.A_MINUS: "AMinus",
    SetKind.T_PLUS: "TPlus",
    SetKind.NORM_ZERO: "NormZero",
    SetKind.DIAGONAL: "BEqualsC",
}


@dataclass(frozen=True)
class SignatureSet:
    n: int
    kind: SetKind
    elements: tuple[Signature, ...]

    def __len__(self):
        return len(self.elements)

    def __iter__(self):
        return iter(self.elements)

    def __contains__(self, s):
        return s in self.elements

    def triples(self) -> list[tuple[int, int, int]]:
        return [s.abc for s in self.elements]

    def to_json(self) -> dict:
        return {"n": self.n, "kind": self.kind.label, "elements": [list(t) for t in self.triples()]}

    def csv_rows(self) -> list[tuple]:
        return [(self.n, self.kind.label, *s.abc) for s in self.elements]


@dataclass(frozen=True)
class PositiveTriple:
    """A full y-orbit of totally positive elements, members sorted."""

    n: int
    members: tuple[Signature, ...]

    def __post_init__(self):
        assert list(self.members) == sorted(set(self.members))
        assert len(self.members) in (1, 3)
        assert all(classify(s) is ElementClass.TOTALLY_POSITIVE for s in self.members)
        assert apply_y(self.members[0]) in self.members

    @classmethod
    def from_member(cls, s: Signature) -> "PositiveTriple":
        return cls(s.n, tuple(sorted({s, apply_y(s), apply_y(apply_y(s))})))

    def __len__(self):
        return len(self.members)

    def __iter__(self):
        return iter(self.members)

    def to_json(self) -> list[list[int]]:
        return [list(s.abc) for s in self.members]


def a_plus(n: int, sieve: DivisorSieve | None = None) -> SignatureSet:
    """Enumerate A+(-n) by running through divisors c of a^2 + n for a <= n/2."""
    check_modulus(n)
    divs = sieve.divisors if sieve is not None else divisors
    out = []
    for a in range(1, n // 2 + 1):
        m = a * a + n
        for c in divs(m):
            if c <= a:
                continue
            b = m // c
            if b <= a:
                # divisors ascend, so b only shrinks from here
                break
            out.append(Signature(n, a, b, c))
    return SignatureSet(n, SetKind.A_PLUS, tuple(sorted(out)))


def a_minus(n: int, sieve: DivisorSieve | None = None) -> SignatureSet:
    plus = a_plus(n, sieve)
    neg = sorted(Signature(n, -s.a, -s.b, -s.c) for s in plus)
    return SignatureSet(n, SetKind.A_MINUS, tuple(neg))


def group_y_orbits(elements) -> list[PositiveTriple]:
    """Partition a y-closed collection of signatures into y-orbits."""
    seen = set()
    triples = []
    for s in sorted(elements):
        if s in seen:
            continue
        t = PositiveTriple.from_member(s)
        seen.update(t.members)
        triples.append(t)
    return triples


def t_plus(n: int, sieve: DivisorSieve | None = None) -> list[PositiveTriple]:
    """The totally positive triples, one per y-orbit of A+ and A-."""
    plus = a_plus(n, sieve)
    minus = SignatureSet(n, SetKind.A_MINUS, tuple(Signature(n, -s.a, -s.b, -s.c) for s in plus))
    return group_y_orbits(plus.elements + minus.elements)


def norm_zero(n: int) -> SignatureSet:
    check_modulus(n)
    pos = [Signature(n, 0, n // c, c) for c in divisors(n)]
    neg = [Signature(n, 0, -s.b, -s.c) for s in pos]
    return SignatureSet(n, SetKind.NORM_ZERO, tuple(sorted(neg + pos)))


def diagonal(n: int, sieve: DivisorSieve | None = None) -> SignatureSet:
    """Elements of A+(-n) with b == c."""
    elems = tuple(s for s in a_plus(n, sieve) if s.b == s.c)
    return SignatureSet(n, SetKind.DIAGONAL, elems)


def diagonal_from_factor_pairs(n: int) -> list[Signature]:
    """Solve b^2 - a^2 = n directly from factor pairs n = (b+a)(b-a).

    Used as an independent check on :func:`diagonal`.
    """
    out = []
    for low in divisors(n):
        high = n // low
        if high <= low or (high - low) % 2:
            continue
        a, b = (high - low) // 2, (high + low) // 2
        out.append(Signature(n, a, b, b))
    return sorted(out)
