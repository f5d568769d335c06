#!/usr/bin/env python3
"""Exact verification of the two closed-form generating functions.

The exponential generating function of the no-double-descent counts is
(sqrt(3)/2) e^(x/2) / cos((sqrt(3)/2) x + pi/6), and the ascent-start
variant is 1/2 + (sqrt(3)/2) tan((sqrt(3)/2) x + pi/6).  Expanding both
in Q(sqrt 3) arithmetic, every coefficient times n! must land exactly
on the integer computed by the convolution recursions; no floats, no
tolerances.
"""

from math import factorial

from ddperm import counting, series

ORDER = 16

egf = series.egf_no_dd(ORDER)
expected = counting.no_dd_counts(ORDER)

print("no-double-descent counts vs (sqrt3/2) e^(x/2) / cos((sqrt3/2)x + pi/6):")
print(f"{'n':>3} {'n! * coeff':>16} {'recursion':>16}")
for n in range(ORDER + 1):
    coeff = egf.coefficient(n)
    assert coeff.is_rational
    value = coeff.a * factorial(n)
    print(f"{n:>3} {str(value):>16} {expected[n]:>16}")
    assert value == expected[n]
print("exact match at every order")
print()

# the ascent-start series satisfies the differential identity
# y' = y^2 - y + 1, which is the series form of its convolution
y = series.egf_no_dd_ascent(ORDER)
assert y.derivative() == (y * y - y + 1).truncate(ORDER - 1)
print("y = ascent-start egf satisfies y' = y^2 - y + 1 up to order", ORDER - 1)

g = series.egf_no_dd(ORDER)
assert g.derivative() == (g * y).truncate(ORDER - 1)
print("g = no-double-descent egf satisfies g' = g * y up to order", ORDER - 1)
