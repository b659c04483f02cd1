"""
Stirling numbers and higher-order Bernoulli polynomials
=======================================================

The family's generating series factors into the Stirling generating series
(exp(t)-1)**k / k! times the order-k Bernoulli series, so each member is a
binomial convolution of S(j, k) with B_{n-j}^{(k)}(1-x).  Everything here
is exact rational arithmetic.
"""

from fractions import Fraction as F

from unibern import (
    UnifiedIndex,
    bernoulli_higher,
    connection_identity,
    stirling2,
    stirling2_via_series,
)

# two independent routes to S(n, v): triangular recurrence vs. series coefficients
print("S(4,2) by recurrence:", stirling2(4, 2))
print("S(4,2) from (e^t-1)^2/2!:", stirling2_via_series(4, 2))

# classical Bernoulli values are the v=1 column
print("B_2 =", bernoulli_higher(2, 1, 0))          # 1/6
print("B_1^{(3)}(x) at x=0:", bernoulli_higher(1, 3, 0))  # -3/2

# the convolution identity, exactly
idx = UnifiedIndex(b=2, s=1)  # k = 2, weight 1
lhs, rhs = connection_identity(4, idx, F(1, 3))
print(f"member(4, k=2, x=1/3): closed form {lhs} == convolution {rhs}")

# it holds with nontrivial weights too
idx = UnifiedIndex(b=1, s=2)  # k = 2, weight 1/2
lhs, rhs = connection_identity(5, idx, F(2, 7))
print(f"member(5, k=2, x=2/7): closed form {lhs} == convolution {rhs}")
