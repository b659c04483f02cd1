"""
The weighted Bernstein family from both ends
============================================

A family member is weight * C(n,k) * x**k * (1-x)**(n-k) with
weight = 2**(b*(1-s)).  Setting s=1 gives the classic Bernstein basis.
The same numbers fall out of an exponential generating series, which is
how the library cross-checks itself.
"""

from fractions import Fraction as F

from unibern import UnifiedIndex, eval_closed, eval_recurrence, series_expand, to_polynomial

# the classic case: b=1, s=1 means weight 1 and basis index k=1
idx = UnifiedIndex(b=1, s=1)
print("closed form, n=2, x=1/2:", eval_closed(2, idx, F(1, 2)))

# the same members read off the generating series (an independent code path)
print("series route, first members at x=1/2:", series_expand(idx, F(1, 2), 5))

# a weighted member: b=1, s=2 carries weight 1/2 and k=2
idx12 = UnifiedIndex(b=1, s=2)
print("weight of (b=1, s=2):", idx12.weight)
print("member n=3 at x=1/2:", eval_closed(3, idx12, F(1, 2)))  # 3/16

# the recurrence stepping k down (weight fixed) agrees exactly
for n in range(6):
    assert eval_recurrence(n, idx12, F(1, 3)) == eval_closed(n, idx12, F(1, 3))
print("recurrence == closed form for n <= 5 at x=1/3: exact")

# monomial coefficients, e.g. 3x(1-x)^2 = 3x - 6x^2 + 3x^3
print("monomial coefficients of member (n=3, k=1):", to_polynomial(3, idx).coefficients)
