#!/usr/bin/env python3
"""Rotation classes and cyclic double descents.

Wrapping a word around lets double descents sit at every position,
including across the seam.  Each rotation class has one representative
starting with its maximum, and the classes without any cyclic double
descent are counted by the ascent-start sequence one length down.
"""

from ddperm import bruteforce, circular as cp
from ddperm.counting import no_dd_ascent_counts

w = (2, 4, 1, 3)
print("rotating", w, "to its canonical representative:")
v = w
while v[0] != len(v):
    v = cp.rotate(v)
    print("  ->", v)
print()

rep = (4, 2, 1, 3)
print("cyclic double descents of", rep, ":", cp.cyclic_double_descent_set(rep))
print("(position 1 would need w_4 > w_1, impossible when w_1 is the maximum)")
print()

print("classes of S_n with no cyclic double descents:")
print(f"{'n':>3} {'enumerated':>11} {'formula':>8}")
for n in range(3, 10):
    exact = bruteforce.count_circular_no_dd_exact(n)
    formula = cp.count_no_cyclic_dd(n)
    print(f"{n:>3} {exact:>11} {formula:>8}")
    assert exact == formula
print()
print("the formula column is the ascent-start sequence shifted by one:")
print(" ", no_dd_ascent_counts(8))
