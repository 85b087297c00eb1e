import csv
import random
from pathlib import Path

import pytest

from modorbits.arith import DivisorSieve, divisors, squarefree_upto
from modorbits.core import Signature

DATA = Path(__file__).parent / "data"


def published_table():
    with open(DATA / "published_table.csv", newline="") as f:
        return [tuple(int(v) for v in row.values()) for row in csv.DictReader(f)]


def random_signatures(count, max_n=200, max_a=50, seed=12345):
    """Uniform-ish valid signatures: n square-free, random a, random signed divisor c."""
    rng = random.Random(seed)
    pool = squarefree_upto(max_n)
    out = []
    for _ in range(count):
        n = rng.choice(pool)
        a = rng.randint(-max_a, max_a)
        m = a * a + n
        c = rng.choice(divisors(m)) * rng.choice((1, -1))
        out.append(Signature(n, a, m // c, c))
    return out


@pytest.fixture(scope="session")
def small_sieve():
    return DivisorSieve(10**6)
