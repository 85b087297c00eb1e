"""Walking an element down to its canonical representative.

Each step either stops (both y-images positive, or one hits norm zero) or
moves to a strictly smaller |a|.  The recorded word takes the start to a
member of the representative.
"""

import random

from modorbits import Gen, apply_word, canonical_reps, make_signature, same_orbit
from modorbits.core import format_word
from modorbits.orbits import descend

n = 14
for a, c in [(-9, 5), (17, 3), (0, 7), (6, 5)]:
    s = make_signature(n, a, c)
    d = descend(s)
    print(f"{str(s):>14} -> {d.rep}  in {d.iterations} steps, word {format_word(d.word) or '-'}")
    assert apply_word(s, d.word) in d.rep.members

reps = canonical_reps(n)
print(f"\nn={n} has {len(reps)} orbits:")
for r in reps:
    print("  ", r)

# scrambling by a random word never changes the orbit
rng = random.Random(1)
s = make_signature(n, 2, 3)
word = [rng.choice(list(Gen)) for _ in range(25)]
t = apply_word(s, word)
print(f"\n{s} scrambled by {len(word)} letters is {t}; same orbit: {same_orbit(s, t)}")
