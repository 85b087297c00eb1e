"""Brute-force cross-checks that share no code path with the fast routines.

* :func:`box_enumerate_a_plus` scans a box of (a, b, c) for
  b*c - a^2 == n, the way a direct triple loop would.
* :func:`bfs_ball` explores an orbit breadth-first from one element.
* :func:`reduced_form_count` counts reduced binary quadratic forms of
  discriminant -4n, a classical count of the same orbits.
"""

from __future__ import annotations

import random
from dataclasses import dataclass, field
from math import isqrt

import numpy as np

from .arith import divisors
from .core import Signature, apply_x, apply_y, apply_y2, check_modulus, norm
from .enumeration import SetKind, SignatureSet, a_plus
from .errors import CapExceeded
from .orbits import canonical_reps, reduce

DEFAULT_BUDGET = 10**6
DEFAULT_SEED = 20190101


def box_enumerate_a_plus(n: int, limit: int = 100, raw: bool = False) -> SignatureSet:
    """All (a, b, c) with 1 <= a < limit, 2 <= b, c < limit, b, c > a, bc - a^2 = n.

    The scan is complete only when ``limit > (n + 1) / 2``; smaller limits
    are refused unless ``raw`` is set.
    """
    if n < 1 or limit < 2:
        raise ValueError("need n >= 1 and limit >= 2")
    if not raw and 2 * limit <= n + 1:
        raise ValueError(f"limit {limit} too small to be complete for n={n}; need > {(n + 1) / 2}")
    bc = np.arange(2, limit, dtype=np.int64)
    grid = np.multiply.outer(bc, bc)
    found = []
    for a in range(1, limit):
        hit = grid == n + a * a
        hit[: max(0, a - 1), :] = False  # b > a
        hit[:, : max(0, a - 1)] = False  # c > a
        for bi, ci in zip(*np.nonzero(hit)):
            found.append(Signature(n, a, int(bc[bi]), int(bc[ci])))
    return SignatureSet(n, SetKind.A_PLUS, tuple(sorted(found)))


@dataclass(frozen=True)
class BfsBall:
    center: Signature
    depth: int
    elements: tuple[Signature, ...]

    def __contains__(self, s):
        return s in set(self.elements)

    def __len__(self):
        return len(self.elements)


def bfs_ball(s: Signature, depth: int, budget: int = DEFAULT_BUDGET) -> BfsBall:
    """Everything reachable from ``s`` by at most ``depth`` generators."""
    if depth < 0:
        raise ValueError("depth must be non-negative")
    seen = {s}
    frontier = [s]
    for _ in range(depth):
        nxt = []
        for t in frontier:
            for u in (apply_x(t), apply_y(t), apply_y2(t)):
                if u not in seen:
                    seen.add(u)
                    nxt.append(u)
        if len(seen) > budget:
            raise CapExceeded(f"ball around {s} exceeded {budget} elements")
        frontier = nxt
        if not frontier:
            break
    return BfsBall(s, depth, tuple(sorted(seen)))


def random_signature(n: int, max_norm: int, rng: random.Random) -> Signature:
    a = rng.randint(-max_norm, max_norm)
    c = rng.choice(divisors(a * a + n)) * rng.choice((1, -1))
    return Signature(n, a, (a * a + n) // c, c)


@dataclass
class Verdict:
    n: int
    depth: int
    balls: int
    overlaps: list[tuple[str, str, Signature]] = field(default_factory=list)
    reachability_failures: list[Signature] = field(default_factory=list)
    enumeration_match: bool = True
    sampled: int = 0

    @property
    def disjoint(self) -> bool:
        return not self.overlaps

    @property
    def passed(self) -> bool:
        return self.disjoint and not self.reachability_failures and self.enumeration_match

    @property
    def summary(self) -> str:
        if self.disjoint:
            sep = f"no overlap found at depth {self.depth} among {self.balls} balls"
        else:
            sep = f"{len(self.overlaps)} overlaps at depth {self.depth}"
        return (
            f"n={self.n}: {sep}; {len(self.reachability_failures)}/{self.sampled} "
            f"reachability failures; enumeration {'matches' if self.enumeration_match else 'DIFFERS'}"
        )

    def to_json(self) -> dict:
        return {
            "n": self.n,
            "depth": self.depth,
            "balls": self.balls,
            "disjoint": self.disjoint,
            "reachability_failures": [list(s.abc) for s in self.reachability_failures],
            "enumeration_match": self.enumeration_match,
            "note": self.summary,
        }


def oracle_check(
    n: int,
    depth: int = 8,
    sample_size: int = 50,
    seed: int = DEFAULT_SEED,
    budget: int = DEFAULT_BUDGET,
) -> Verdict:
    """Falsification test of the canonical representatives of n.

    1. depth-``depth`` balls around distinct representatives share nothing;
    2. for random s with 2*norm(s) + 1 <= depth the members of reduce(s)
       all lie in the ball around s;
    3. the box scan of A+ agrees with the divisor-driven enumeration.

    Disjoint balls are evidence, not proof, that the orbits differ.
    """
    check_modulus(n)
    if depth < 2:
        raise ValueError("depth must be at least 2")
    reps = canonical_reps(n)
    verdict = Verdict(n, depth, len(reps))

    owner: dict[Signature, str] = {}
    for rep in reps:
        tag = str(rep)
        for s in bfs_ball(rep.members[0], depth, budget).elements:
            prev = owner.setdefault(s, tag)
            if prev != tag:
                verdict.overlaps.append((prev, tag, s))

    rng = random.Random(seed * 1000003 + n)
    max_norm = (depth - 1) // 2
    for _ in range(sample_size):
        s = random_signature(n, max_norm, rng)
        ball = set(bfs_ball(s, depth, budget).elements)
        if not set(reduce(s).members) <= ball:
            verdict.reachability_failures.append(s)
    verdict.sampled = sample_size

    limit = -(-(n + 3) // 2)
    verdict.enumeration_match = box_enumerate_a_plus(n, limit).elements == a_plus(n).elements
    return verdict


def reduced_form_count(n: int) -> int:
    """2 x number of reduced positive definite forms A x^2 + 2B xy + C y^2, AC - B^2 = n.

    Forms with negative A mirror the positive ones, hence the factor 2.
    """
    count = 0
    for A in range(1, isqrt(4 * n // 3) + 1):
        for B in range(-(A // 2), A // 2 + 1):
            num = n + B * B
            if num % A:
                continue
            C = num // A
            if C < A:
                continue
            if B < 0 and (2 * -B == A or A == C):
                continue
            count += 1
    return 2 * count
