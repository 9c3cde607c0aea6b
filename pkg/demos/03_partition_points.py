"""
Exact partitioned point families on the moment curve
====================================================

construct(d, S) places (d+1)(S-1)+1 rational points on the moment curve
in dimension d and colors them into S parts whose convex hulls share a
common point.  Everything is exact rational arithmetic, so verification
is equality, not tolerance.
"""

from fractions import Fraction

from wstar import construct, transport, verify_partition

# three parts in the plane: 3(3-1)+1 = 7 points
part = construct(2, 3)
print("parameters:", [str(t) for t in part.points])
print("coloring:  ", list(part.color))
print("coefficients per part:")
for j in range(part.parts):
    idx = part.part_indices(j)
    print(f"  part {j}: points {idx}, weights {[str(part.coeff[i]) for i in idx]}")
print("verified:", verify_partition(part))

# affine reparameterization t -> a t + b moves the points but keeps the
# combinatorics and the convex coefficients bit for bit
moved = transport(part, Fraction(3, 2), Fraction(-1, 3))
print("after transport:", [str(t) for t in moved.points])
print("coefficients unchanged:", moved.coeff == part.coeff)
print("still verified:", verify_partition(moved))

# the count grows linearly with both d and S
for d in range(1, 5):
    sizes = [len(construct(d, s).points) for s in range(1, 5)]
    print(f"d = {d}: point counts {sizes}")
