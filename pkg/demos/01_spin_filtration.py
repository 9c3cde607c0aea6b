"""
Building the spin filtration and checking its axioms
====================================================

An irreducible spin representation turns matrix space into a nested
family of subspaces graded by how many ladder steps an operator can
move a state.  This script builds the family for a few spins, prints
the dimension profile, and verifies the filtration axioms.
"""

import numpy as np

from wstar import build_irrep, pure_terms, su2_filtration, verify_axioms

# twice the spin, so 5 means l = 5/2
for two_j in (1, 3, 5):
    rep = build_irrep(two_j)
    filt = su2_filtration(rep)
    dims = [basis.dim for _, basis in filt.grades]
    print(f"two_j = {two_j}: grade dimensions {dims}")
    # each grade has dimension (t+1)^2 until it saturates the full matrix space
    assert dims == [min((t + 1) ** 2, (two_j + 1) ** 2) for t in range(two_j + 1)]

# the axioms: identity in grade 0, adjoint-closed, products add grades
report = verify_axioms(su2_filtration(build_irrep(5)))
print(f"axiom residual at two_j = 5: {report.max_residual:.3e} (passed={report.passed})")

# new directions entering at grade d form one tensor-operator multiplet
rep = build_irrep(4)
for d, basis in pure_terms(su2_filtration(rep)):
    print(f"  grade {d} contributes {basis.dim} new directions (expect {2 * d + 1})")

# the ladder operators themselves: e raises, f lowers, h grades
print("h diagonal:", np.real(np.diag(rep.h)))
