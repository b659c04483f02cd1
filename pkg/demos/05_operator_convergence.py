"""
The sampling operator and how fast it converges
===============================================

The normalized basis sums to 1 exactly, so the operator S_n(f) is positive
and reproduces constants and degree-1 polynomials.  For f(x) = x**2 the
error is exactly x(1-x)/n, which shows up as halving sup-errors when n
doubles.
"""

import math
from fractions import Fraction as F

from unibern import SampledFunction, apply_operator, convergence_table, partition_check, table_to_csv

# partition of unity, exactly, even off [0, 1]
print("sum of basis at x=3/11, n=7:", partition_check(7, F(3, 11)))
print("sum of basis at x=-1/2, n=7:", partition_check(7, F(-1, 2)))

# degree-1 reproduction and the quadratic variance term
f_x = SampledFunction(lambda x: x, "x")
f_x2 = SampledFunction(lambda x: x * x, "x^2")
print("S_5(x) at 2/5:", apply_operator(f_x, 5, F(2, 5)))
print("S_10(x^2) at 1/2:", apply_operator(f_x2, 10, F(1, 2)), "= 1/4 + (1/4)/10")

# sup-error table over a uniform grid; halving n halves the error
grid = [F(i, 8) for i in range(9)]
rows = convergence_table(f_x2, [10, 20, 40], grid)
print()
print(table_to_csv(rows))

# double samplers work too; the result type follows the sampler
f_sin = SampledFunction(lambda x: math.sin(math.pi * float(x)), "sin(pi x)")
rows = convergence_table(f_sin, [8, 16, 32, 64], grid)
print(table_to_csv(rows))
