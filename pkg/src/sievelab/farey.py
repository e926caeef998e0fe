"""Farey point sets and spacing modulo 1.

The point set of interest is the Farey sequence of order Q: all reduced
fractions p/q with 0 <= p < q <= Q, in increasing order.  Its minimal gap
modulo 1 is exactly 1/(Q(Q-1)) for Q >= 2, attained between 1/Q and
1/(Q-1); the coarser convention delta^{-1} = Q^2 is also carried around
for comparisons (see spacing_q2).
"""

from dataclasses import dataclass
from fractions import Fraction

from .arith import euler_phi


@dataclass(frozen=True)
class FareySet:
    """The Farey sequence of order Q, as exact rationals in [0, 1)."""

    order: int
    points: tuple

    def __len__(self):
        return len(self.points)

    def __iter__(self):
        return iter(self.points)


@dataclass(frozen=True)
class SpacedPoints:
    """An arbitrary finite point set with its minimal gap modulo 1."""

    points: tuple
    min_gap: object

    @classmethod
    def from_points(cls, points):
        pts = tuple(points)
        return cls(points=pts, min_gap=min_gap_mod1(pts))


def farey_sequence(Q):
    """All reduced p/q with 0 <= p < q <= Q in increasing order.

    Generated by the classical neighbor recurrence: from consecutive terms
    a/b, c/d the next term is (kc - a)/(kd - b) with k = (Q + b) // d.
    Exact, ordered, and O(|F(Q)|).
    """
    if Q < 1:
        raise ValueError("Farey order must be >= 1, got %r" % (Q,))
    points = [Fraction(0, 1)]
    a, b, c, d = 0, 1, 1, Q
    while c < d:
        points.append(Fraction(c, d))
        k = (Q + b) // d
        a, b, c, d = c, d, k * c - a, k * d - b
    return FareySet(order=Q, points=tuple(points))


def farey_size(Q):
    """|F(Q)| = sum of euler_phi(q) for q <= Q."""
    return sum(euler_phi(q) for q in range(1, Q + 1))


def min_gap_mod1(points):
    """min over j != k of ||x_j - x_k||, with ||x|| = distance to nearest int.

    Exact when the points are Fractions.  The wraparound gap between the
    largest and smallest point (mod 1) is included.
    """
    pts = sorted(x % 1 for x in points)
    if len(pts) < 2:
        raise ValueError("min_gap_mod1 needs at least 2 points")
    gaps = [b - a for a, b in zip(pts, pts[1:])]
    gaps.append(1 + pts[0] - pts[-1])
    # Circular gaps; the mod-1 metric folds anything above 1/2 back down.
    return min(min(g, 1 - g) for g in gaps)
