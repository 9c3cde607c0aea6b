"""
Weight enumerators, the transform identity, and the trace bound
===============================================================

Two quadratic enumerators attach to a pair of operators: B sums traces
of sandwiched tensor operators, A sums products of separate traces.
They determine each other through an orthogonal transform, and on
projections A is bounded by the rescaled B.
"""

import numpy as np

from wstar import (
    build_code,
    macwilliams_check,
    rains_check,
    transform_matrix,
    weight_A,
    weight_B,
)

code = build_code(9, 2, 2)
p = code.projection
a = weight_A(code.two_j, p, p)
b = weight_B(code.two_j, p, p)
print(" d        A_d          B_d      k*B_d - A_d")
for d in range(len(a)):
    print(f"{d:2d}  {a[d]:11.6f}  {b[d]:11.6f}  {code.k * b[d] - a[d]:12.3e}")
# detection grade 2 shows up as equality in the first three rows

# the transform sends B to A and squares to the identity
t = transform_matrix(code.two_j)
print("transform deviation:", float(np.max(np.abs(a - t @ b))))
print("involution defect:  ", float(np.max(np.abs(t @ t - np.eye(code.two_j + 1)))))

# same identity on arbitrary Hermitian operators
x = np.diag([2.0, 0.5, -1.0, 0.0]).astype(complex)
y = np.ones((4, 4), complex) + np.diag([1, 2, 3, 4])
print("identity on a hand-made pair:", macwilliams_check(3, x, y))

# the trace bound: for a projection P and any M, k * B_d(P, PMP) >= A_d
m = np.arange(100, dtype=complex).reshape(10, 10) / 10
print("trace bound gap:", rains_check(code.projection, m).gap)
