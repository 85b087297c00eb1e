"""Counting orbits for n = 11 two ways, then a small table.

The first count adds d(n) norm-zero orbits to the number of totally
positive triples.  The second needs only divisor counts of i^2 + n.
"""

from modorbits import count_orbits, count_orbits_divisor_sum, divisor_count
from modorbits.enumeration import a_plus, t_plus
from modorbits.orbits import divisor_sum_terms, verify_report
from modorbits.arith import squarefree_upto

n = 11
plus = a_plus(n)
print(f"A+(-{n}) has {len(plus)} elements:", " ".join(str(s) for s in plus))
print(f"they fall into {len(t_plus(n))} triples; d({n}) = {divisor_count(n)}")
print(f"orbits from triples: {count_orbits(n)}")

print("\n  i   i^2+n  d   d<=i")
for t in divisor_sum_terms(n):
    print(f"{t.i:3d} {t.m:7d} {t.d:2d} {t.d_upto:5d}")
print(f"orbits from divisor sums: {count_orbits_divisor_sum(n)}")

print("\n  n  |T+|  orbits")
for m in squarefree_upto(30):
    r = verify_report(m)
    print(f"{m:3d} {r.t_plus_size:5d} {r.count_triples:7d}" + ("" if r.ok else "  !"))
