"""Corners, primitive directions, linear valuations, and the y-step quantum.

A *corner* is an integer triple (a ⊛ l, b) whose geometric realization is
the plane point (a/l, b).  The level l is carried through the recursion
unreduced, so (14 ⊛ 4, 6) and (7 ⊛ 2, 6) are distinct corners even though
they realize the same point; corner equality is componentwise.

A *direction* is a primitive integer vector (rho, sigma).  It defines the
valuation val(rho, sigma; x, y) = rho*x + sigma*y, and directions are
ordered counterclockwise by cross product.  ``dir_of`` maps a displacement
to the unique primitive direction orthogonal to it whose valuation
increases to the upper-left of the segment.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .numerics import DomainError, InvariantError, gcd

Point = tuple[Fraction, Fraction]


@dataclass(frozen=True)
class Corner:
    """Lattice corner (a ⊛ l, b) with realization (a/l, b)."""

    a: int
    l: int
    b: int

    def __post_init__(self) -> None:
        if self.l < 1 or self.a < 1 or self.b < 0:
            raise InvariantError(f"bad corner ({self.a} ⊛ {self.l}, {self.b})")

    def point(self) -> Point:
        return (Fraction(self.a, self.l), Fraction(self.b))

    def display(self) -> str:
        if self.l == 1:
            return f"{self.a}:{self.b}"
        return f"{self.a}⊛{self.l}:{self.b}"

    def key(self) -> tuple[int, int, int]:
        return (self.l, self.a, self.b)


def realize(c: Corner) -> Point:
    return c.point()


def same_realization(c1: Corner, c2: Corner) -> bool:
    """True when two corners denote the same plane point."""
    return c1.a * c2.l == c2.a * c1.l and c1.b == c2.b


def v11_times_l(c: Corner) -> int:
    """l * val((1,1); realization) -- sign and comparisons only need this."""
    return c.a + c.b * c.l

def v1m1_times_l(c: Corner) -> int:
    """l * val((1,-1); realization)."""
    return c.a - c.b * c.l


@dataclass(frozen=True)
class Direction:
    """Primitive integer vector (rho, sigma)."""

    rho: int
    sigma: int

    def __post_init__(self) -> None:
        if self.rho == 0 and self.sigma == 0:
            raise InvariantError("zero direction")
        if gcd(self.rho, self.sigma) != 1:
            raise InvariantError(f"non-primitive direction ({self.rho}, {self.sigma})")

    def display(self) -> str:
        return f"({self.rho},{self.sigma})"


def val(d: Direction, p: Point) -> Fraction:
    return d.rho * p[0] + d.sigma * p[1]


def val_corner(d: Direction, c: Corner) -> Fraction:
    return Fraction(d.rho * c.a + d.sigma * c.b * c.l, c.l)


def primitive(x: int, y: int) -> Direction:
    if x == 0 and y == 0:
        raise DomainError("zero vector has no direction")
    g = gcd(x, y)
    return Direction(x // g, y // g)


def dir_of(vx: Fraction | int, vy: Fraction | int) -> Direction:
    """Primitive (rho, sigma) positively proportional to (vy, -vx).

    The result is orthogonal to (vx, vy): rho*vx + sigma*vy = 0.  Scaling
    (vx, vy) by any positive rational leaves the result unchanged.
    """
    fx, fy = Fraction(vx), Fraction(vy)
    if fx == 0 and fy == 0:
        raise DomainError("zero vector has no direction")
    scale = fx.denominator * fy.denominator
    return primitive(int(fy * scale), int(-fx * scale))


def dir_between(top: Corner, bottom: Corner) -> Direction:
    """dir_of applied to the displacement realization(top) - realization(bottom).

    Requires both corners at the same level; works in integers.
    """
    if top.l != bottom.l:
        raise DomainError("corners live at different levels")
    return primitive((top.b - bottom.b) * top.l, bottom.a - top.a)


def cross(d1: Direction, d2: Direction) -> int:
    return d1.rho * d2.sigma - d1.sigma * d2.rho


def cmp_dir(d1: Direction, d2: Direction) -> int:
    """-1, 0, or 1 as d1 is angularly below, equal to, or above d2.

    d1 < d2 exactly when the cross product rho1*sigma2 - sigma1*rho2 is
    positive (counterclockwise order).  Only meaningful within an open
    half-plane; antipodal pairs are outside the contract.
    """
    if d1 == d2:
        return 0
    c = cross(d1, d2)
    if c == 0:
        raise DomainError(f"antipodal directions {d1} / {d2} are not comparable")
    return -1 if c > 0 else 1


def dir_lt(d1: Direction, d2: Direction) -> bool:
    return cmp_dir(d1, d2) < 0


def in_sector_upper(d: Direction) -> bool:
    """Membership in the half-open sector from (1,-1) exclusive to (1,0) inclusive."""
    return d.sigma <= 0 and d.rho + d.sigma > 0


def in_sector_lower(d: Direction) -> bool:
    """Membership in the half-open sector from (0,-1) inclusive to (1,-1) exclusive."""
    if d == Direction(0, -1):
        return True
    return d.rho >= 1 and d.sigma < 0 and d.rho + d.sigma < 0


def gap(rho: int, l: int) -> int:
    """rho / gcd(rho, l): the y-step between level-l lattice points along (rho, sigma)."""
    if rho < 1 or l < 1:
        raise DomainError(f"gap requires rho, l >= 1, got ({rho}, {l})")
    return rho // gcd(rho, l)
