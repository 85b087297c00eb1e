"""Elements (a + sqrt(-n))/c and the action of the generators x, y, y^2.

An element is stored by its signature (a, b, c) with b*c = a^2 + n.  The
generators act on signatures by integer formulas:

    x  : (a, b, c) -> (-a, c, b)
    y  : (a, b, c) -> (b - a, -2a + b + c, b)
    y^2: (a, b, c) -> (c - a, c, -2a + b + c)

where x(z) = -1/z and y(z) = (z - 1)/z.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass
from typing import Iterable, Sequence

from .arith import repeated_prime
from .errors import NotDivisible, NotSquareFree


@dataclass(frozen=True, order=True)
class Signature:
    n: int
    a: int
    b: int
    c: int

    def __post_init__(self):
        assert self.b * self.c == self.a * self.a + self.n, self

    @property
    def abc(self) -> tuple[int, int, int]:
        return (self.a, self.b, self.c)

    def to_json(self) -> dict:
        return {"n": self.n, "a": self.a, "b": self.b, "c": self.c}

    def __str__(self):
        return f"({self.a},{self.b},{self.c})"


class ElementClass(enum.Enum):
    TOTALLY_POSITIVE = "totally-positive"
    TOTALLY_NEGATIVE = "totally-negative"
    NORM_ZERO = "norm-zero"


class Gen(enum.Enum):
    X = "x"
    Y = "y"
    Y2 = "yy"


def check_modulus(n: int) -> None:
    if n < 1:
        raise ValueError(f"n must be a positive integer, got {n}")
    p = repeated_prime(n)
    if p is not None:
        raise NotSquareFree(n, p)


def make_signature(n: int, a: int, c: int) -> Signature:
    """Signature of (a + sqrt(-n))/c; b is derived as (a^2 + n)/c."""
    check_modulus(n)
    if c == 0:
        raise ValueError("denominator c must be nonzero")
    num = a * a + n
    if num % c:
        raise NotDivisible(n, a, c)
    return Signature(n, a, num // c, c)


def apply_x(s: Signature) -> Signature:
    return Signature(s.n, -s.a, s.c, s.b)


def apply_y(s: Signature) -> Signature:
    a, b, c = s.a, s.b, s.c
    return Signature(s.n, b - a, -2 * a + b + c, b)


def apply_y2(s: Signature) -> Signature:
    a, b, c = s.a, s.b, s.c
    return Signature(s.n, c - a, c, -2 * a + b + c)


_ACTIONS = {Gen.X: apply_x, Gen.Y: apply_y, Gen.Y2: apply_y2}


def apply_gen(s: Signature, g: Gen) -> Signature:
    return _ACTIONS[g](s)


def apply_word(s: Signature, word: Iterable[Gen]) -> Signature:
    """Apply generators left to right; the empty word is the identity."""
    for g in word:
        s = _ACTIONS[g](s)
    return s


def parse_word(text: str) -> list[Gen]:
    """Parse a dotted word such as ``"x.y.yy"``."""
    text = text.strip()
    if not text:
        return []
    try:
        return [Gen(tok) for tok in text.split(".")]
    except ValueError as exc:
        raise ValueError(f"bad generator word {text!r}; use x, y, yy joined by '.'") from exc


def format_word(word: Sequence[Gen]) -> str:
    return ".".join(g.value for g in word)


def classify(s: Signature) -> ElementClass:
    ac = s.a * s.c
    if ac > 0:
        return ElementClass.TOTALLY_POSITIVE
    if ac < 0:
        return ElementClass.TOTALLY_NEGATIVE
    return ElementClass.NORM_ZERO


def norm(s: Signature) -> int:
    """|a|, the combinatorial norm (not the field norm)."""
    return abs(s.a)


def sign(v: int) -> int:
    return (v > 0) - (v < 0)


def y_triple(s: Signature) -> tuple[Signature, Signature, Signature]:
    return (s, apply_y(s), apply_y2(s))


def is_positive_triple(s: Signature) -> bool:
    """True iff s, ys, y^2 s are all totally positive.

    Equivalent to 0 < a < b, c or 0 > a > b, c.
    """
    a, b, c = s.a, s.b, s.c
    return (0 < a < b and a < c) or (0 > a > b and a > c)
