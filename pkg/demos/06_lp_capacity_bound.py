"""
Linear programming bound on code dimension
==========================================

Any k-dimensional code detecting s grades forces its B enumerator into
a polytope: equalities up to grade s, transform inequalities beyond,
and a trace normalization.  Emptiness of that polytope rules out the
code, so scanning k gives an upper bound on the dimension.
"""

from wstar import build_code, build_lp, feasible, weight_B

# at two_j = 5, detection grade 2: k = 1 is allowed, k = 2 is not
for k in (1, 2):
    lp = build_lp(5, 2, k)
    ok, witness = feasible(lp)
    print(f"k = {k}: feasible = {ok}")
    if witness is not None:
        print("   witness B =", [round(float(v), 6) for v in witness])

# a constructed code always lands inside the polytope for its own k:
# build_code(9, 2, 2) exists, and its enumerator satisfies every row
code = build_code(9, 2, 2)
b = weight_B(9, code.projection, code.projection)
lp = build_lp(9, 2, 2)
eq_err = max(abs(float(row @ b) - rhs) for row, rhs in zip(lp.a_eq, lp.b_eq))
print(f"constructed code satisfies its own LP equalities to {eq_err:.3e}")

# per-k detail for the scan at two_j = 4, s = 1
from wstar import max_k

report = max_k(4, 1)
print(f"two_j = 4, s = 1: k_max = {report.k_max}, scan {list(report.per_k)}")

# tighter spins leave no slack: at two_j = 4 with s = 3 only k = 1 survives
print("two_j = 4, s = 3:", list(max_k(4, 3).per_k))
