#!/usr/bin/env python3
"""A gallery of rim hooks and their Fibonacci arithmetic.

Rim hooks (skew shapes with no 2x2 block) encode descent sets: reading
cells bottom-left to top-right, row boundaries are descents.  The
classes with a fixed double-descent set have Fibonacci sizes, and every
class member grows out of a minimal element by adding squares to rows.
"""

from ddperm import bruteforce, rimhooks as rh

print("the three rim hooks of length 6 encoding double-descent set {2}:\n")
for hook in rh.enumerate_rimhooks((2,), 6):
    print(rh.format_skew(hook))
    print(hook.ascii())
    print()

print("class sizes #R({m}; n) = F(n-m) * F(m-1):")
header = "m\\n " + " ".join(f"{n:>4}" for n in range(3, 13))
print(header)
for m in range(2, 7):
    cells = []
    for n in range(3, 13):
        cells.append(f"{rh.count_singleton(m, n):>4}" if n > m else "   .")
    print(f"{m:>3} " + " ".join(cells))
print()

print("empty double-descent set: #R({}; n) = F(n+1)")
for n in range(2, 11):
    formula = rh.count_empty(n)
    oracle = bruteforce.count_rimhooks_exact((), n)
    print(f"  n={n:>2}: {formula:>3} (enumeration agrees: {formula == oracle})")
print()

print("minimal staircases and their extensions at n = 6:")
total = 0
h = 1
while rh.minimal_empty(h).length <= 6:
    minimal = rh.minimal_empty(h)
    grown = rh.extensions(minimal, 6)
    total += len(grown)
    print(f"  height {h}: minimal {rh.format_skew(minimal)} "
          f"-> {len(grown)} extensions")
    h += 1
print(f"  total {total} = F(7) = {rh.fibonacci(7)}")
print()

print("square addition (append right in a row, shift higher rows right):")
hook = rh.RimHook((2, 2, 3))
print(f"  start          {rh.format_skew(hook)}")
for row in (2, 1, 3):
    hook = rh.add_square(hook, row)
    print(f"  add to row {row} -> {rh.format_skew(hook)}   "
          f"(double descents: {set(hook.double_descents()) or '{}'})")
