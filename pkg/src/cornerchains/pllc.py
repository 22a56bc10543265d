"""Superset table of possible last lower corners.

``possible_last_lower_corners`` builds, up to an x-bound, the set of
integer points (a, b) that can appear as the last lower corner of a
hypothetical counterexample pair, together with a witness direction per
point.  The table is a superset by construction: rows are admitted by a
chain of necessary conditions, never proved to actually occur.

Row admission, per point (a, b) with b < a and b <= (a-b-1)^2 (the
integer-equivalent height cutoff, which avoids any irrational bound):

  * b = 0 rows are always admitted, with witness direction (0, -1);
  * rows with a > 2b > 0 are admitted with witness direction (1, -2);
  * any other row is admitted only if some previously admitted pair
    (r, s) with r < a, s < b, r - s < a - b supplies a direction
    (rho, sigma) orthogonal to (a - r, b - s) that lies strictly between
    the earlier pair's witness and the current minimum, gives the point
    valuation at least rho, and passes the theta-bar divisibility test.
    The admitted witness is the minimum qualifying direction.
"""

from __future__ import annotations

from dataclasses import dataclass

from .numerics import DomainError, gcd
from .geometry import Direction, dir_lt, in_sector_lower, primitive

_TOP = Direction(1, -1)  # exclusive upper limit for witness directions


@dataclass(frozen=True)
class FinalPair:
    """Candidate point (a, b) with its witness direction."""

    a: int
    b: int
    direction: Direction

    def __post_init__(self) -> None:
        if not (0 <= self.b < self.a):
            raise DomainError(f"final pair needs 0 <= b < a, got ({self.a}, {self.b})")
        if self.b > (self.a - self.b - 1) ** 2:
            raise DomainError(f"({self.a}, {self.b}) exceeds the height cutoff")
        if not in_sector_lower(self.direction):
            raise DomainError(f"witness {self.direction} outside [(0,-1), (1,-1))")


@dataclass(frozen=True)
class PllcTable:
    """Ordered final pairs plus an O(1)-membership view of their points."""

    x_max: int
    pairs: tuple[FinalPair, ...]

    @property
    def points(self) -> frozenset[tuple[int, int]]:
        return self._points

    def __post_init__(self) -> None:
        object.__setattr__(self, "_points", frozenset((p.a, p.b) for p in self.pairs))

    def __contains__(self, point: tuple[int, int]) -> bool:
        return point in self._points


def possible_last_lower_corners(x_max: int) -> PllcTable:
    """Build the candidate table for all points with a <= x_max."""
    if x_max < 1:
        raise DomainError(f"x_max must be >= 1, got {x_max}")
    pairs: list[FinalPair] = []
    for a in range(1, x_max + 1):
        b = 0
        # The height cutoff b <= (a-b-1)^2 is equivalent to the defining
        # bound only on b < a, so both conditions gate the loop.
        while b < a and b <= (a - b - 1) ** 2:
            if b == 0:
                pairs.append(FinalPair(a, b, Direction(0, -1)))
            elif a > 2 * b:
                pairs.append(FinalPair(a, b, Direction(1, -2)))
            else:
                best = _TOP
                for prev in pairs:
                    r, s = prev.a, prev.b
                    if not (r < a and s < b and r - s < a - b):
                        continue
                    cand = primitive(b - s, r - a)
                    if not (dir_lt(prev.direction, cand) and dir_lt(cand, best)):
                        continue
                    v = cand.rho * a + cand.sigma * b
                    if v < cand.rho:
                        continue
                    theta = v // gcd(cand.rho + cand.sigma, v)
                    n1 = gcd(a - r, b - s)
                    n2 = gcd(r, s)
                    if theta <= n1 or n2 % theta == 0:
                        best = cand
                if best != _TOP:
                    pairs.append(FinalPair(a, b, best))
            b += 1
    return PllcTable(x_max=x_max, pairs=tuple(pairs))
