"""Independent checks on the fast routines.

Breadth-first balls around distinct representatives never meet, a box scan
reproduces A+, and a count of reduced quadratic forms agrees with the
orbit count.
"""

from modorbits import count_orbits
from modorbits.arith import squarefree_upto
from modorbits.oracle import box_enumerate_a_plus, oracle_check, reduced_form_count
from modorbits.enumeration import a_plus

for n in (1, 3, 11, 30):
    print(oracle_check(n, depth=8, sample_size=20).summary)

bad = [n for n in squarefree_upto(100) if box_enumerate_a_plus(n, 100).elements != a_plus(n).elements]
print(f"\nbox scan vs divisor enumeration, n <= 100: {len(bad)} mismatches")

bad = [n for n in squarefree_upto(300) if reduced_form_count(n) != count_orbits(n)]
print(f"reduced forms vs orbit count, n <= 300: {len(bad)} mismatches")
