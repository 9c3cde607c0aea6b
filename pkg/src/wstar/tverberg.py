"""Exact Tverberg partitions of points on the moment curve.

A Tverberg partition splits a point set into S parts whose convex hulls
share a common point.  On the moment curve t -> (t, t^2, ..., t^d) the
minimum number of points, (d+1)(S-1) + 1, is achieved by consecutive
integer parameters colored round-robin (index mod S).  The base case
d = 1 is an interval argument; dimension d is built from dimension d-1
by averaging S shifted copies ("windows") of the lower construction.
All arithmetic is over exact rationals, so every identity is checked
with equality, not tolerance.
"""

from dataclasses import dataclass
from fractions import Fraction


def moment_curve(t, d: int) -> tuple:
    """Point (t, t^2, ..., t^d) on the degree-d moment curve."""
    if d < 1:
        raise ValueError(f"moment curve needs d >= 1, got {d}")
    t = Fraction(t)
    return tuple(t**r for r in range(1, d + 1))


@dataclass(frozen=True)
class TverbergPartition:
    """Partition data: point parameters, round-robin colors, convex
    coefficients, and the common point the parts agree on."""

    d: int
    parts: int
    points: tuple  # of Fraction, the curve parameters
    color: tuple  # color[i] in 0..parts-1
    coeff: tuple  # of Fraction, convex weight of points[i] within its part
    common_point: tuple  # of Fraction, length d

    def part_indices(self, j: int) -> list[int]:
        return [i for i, c in enumerate(self.color) if c == j]


def _part_combination(p: TverbergPartition, j: int) -> tuple:
    total = [Fraction(0)] * p.d
    for i in p.part_indices(j):
        m = moment_curve(p.points[i], p.d)
        for r in range(p.d):
            total[r] += p.coeff[i] * m[r]
    return tuple(total)


def verify(p: TverbergPartition) -> bool:
    """Exact check: coefficients are convex weights summing to 1 within
    each part, and every part's combination equals the common point."""
    if len(p.points) != len(p.color) or len(p.points) != len(p.coeff):
        return False
    if len(p.common_point) != p.d:
        return False
    for j in range(p.parts):
        idx = p.part_indices(j)
        if not idx:
            return False
        if any(p.coeff[i] < 0 for i in idx):
            return False
        if sum(p.coeff[i] for i in idx) != 1:
            return False
        if _part_combination(p, j) != p.common_point:
            return False
    return True


def base_partition(S: int) -> TverbergPartition:
    """Dimension-1 partition of {0, ..., 2S-2} into S parts meeting at S-1.

    Part j < S-1 is the pair {j, j+S}, an interval containing S-1, with
    weights ((j+1)/S, (S-1-j)/S); part S-1 is the single point S-1.
    """
    if S < 1:
        raise ValueError(f"need at least one part, got S={S}")
    n = 2 * S - 1
    points = tuple(Fraction(t) for t in range(n))
    color = tuple(t % S for t in range(n))
    coeff = [Fraction(0)] * n
    for j in range(S - 1):
        coeff[j] = Fraction(j + 1, S)
        coeff[j + S] = Fraction(S - 1 - j, S)
    coeff[S - 1] = Fraction(1)
    return TverbergPartition(1, S, points, color, tuple(coeff), (Fraction(S - 1),))


def lift(windows: list[TverbergPartition]) -> TverbergPartition:
    """Raise dimension by one from S unit-shifted copies of one partition.

    windows[k] must be the transport by t -> t + k of windows[0], whose
    points are the consecutive integers 0..N-1.  The lifted partition
    lives on 0..N+S-2 with colors index mod S; the new weight of point t
    averages the old weight of t - k over the windows containing t.
    Correctness of the averaging is not taken on faith: the result is
    re-verified exactly before being returned.
    """
    S = len(windows)
    if S < 1:
        raise ValueError("need at least one window")
    w0 = windows[0]
    N = len(w0.points)
    if w0.points != tuple(Fraction(t) for t in range(N)):
        raise ValueError("window 0 must sit on the consecutive integers 0..N-1")
    for k, w in enumerate(windows):
        if w.d != w0.d or w.parts != S:
            raise ValueError(f"window {k} has mismatched dimension or part count")
        if w.points != tuple(q + k for q in w0.points) or w.coeff != w0.coeff or w.color != w0.color:
            raise ValueError(f"window {k} is not the unit shift by {k} of window 0")

    d = w0.d + 1
    n = N + S - 1
    points = tuple(Fraction(t) for t in range(n))
    color = tuple(t % S for t in range(n))
    coeff = tuple(
        sum((w0.coeff[t - k] for k in range(S) if 0 <= t - k < N), Fraction(0)) / S
        for t in range(n)
    )
    out = TverbergPartition(d, S, points, color, coeff, (Fraction(0),) * d)
    out = TverbergPartition(d, S, points, color, coeff, _part_combination(out, 0))
    if not verify(out):
        raise AssertionError("lifted partition failed exact verification")
    return out


def construct(d: int, S: int) -> TverbergPartition:
    """Tverberg partition of (d+1)(S-1)+1 consecutive integer parameters
    on the degree-d moment curve, colored index mod S."""
    if d < 1:
        raise ValueError(f"dimension must be >= 1, got {d}")
    if S < 1:
        raise ValueError(f"part count must be >= 1, got {S}")
    if d == 1:
        return base_partition(S)
    prev = construct(d - 1, S)
    return lift([transport(prev, 1, k) for k in range(S)])


def transport(p: TverbergPartition, a, b) -> TverbergPartition:
    """Affine reparameterization t -> a t + b, a nonzero.

    Colors and coefficients carry over bit for bit; only the parameters
    and the common point move.  This is exact because each new moment
    coordinate is a fixed affine combination of the old ones.
    """
    a = Fraction(a)
    b = Fraction(b)
    if a == 0:
        raise ValueError("affine map must be invertible (a != 0)")
    points = tuple(a * t + b for t in p.points)
    out = TverbergPartition(p.d, p.parts, points, p.color, p.coeff, p.common_point)
    return TverbergPartition(p.d, p.parts, points, p.color, p.coeff, _part_combination(out, 0))
