"""Signatures and the two generators.

An element (a + sqrt(-n))/c is stored as the integer triple (a, b, c) with
b*c = a^2 + n.  x and y act by simple integer rules, and the sign of a*c
splits everything into three classes.
"""

from modorbits import apply_x, apply_y, apply_y2, classify, make_signature, norm

n = 5
s = make_signature(n, 1, 2)
print(f"n={n}, start at {s}  ({classify(s).value}, norm {norm(s)})")

for name, f in [("x", apply_x), ("y", apply_y), ("y^2", apply_y2)]:
    t = f(s)
    print(f"  {name:>3}: {t}  {classify(t).value}")

# relations: x^2 = 1, y^3 = 1
assert apply_x(apply_x(s)) == s
assert apply_y(apply_y(apply_y(s))) == s

# a totally negative element goes to a totally positive one under x
neg = make_signature(n, -3, 2)
print(f"\n{neg} is {classify(neg).value}; x gives {apply_x(neg)} ({classify(apply_x(neg)).value})")

# fixed points exist only for n = 1 (x) and n = 3 (y)
print("x fixes", make_signature(1, 0, 1), "->", apply_x(make_signature(1, 0, 1)))
print("y fixes", make_signature(3, 1, 2), "->", apply_y(make_signature(3, 1, 2)))
