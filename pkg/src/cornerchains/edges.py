"""Valid edges: the ordered corner pairs the chain search is built from.

An edge (A, A') at a common level l, with direction (rho, sigma) =
dir_of(A - A'), is *valid* when

  1. (rho, sigma) lies in the half-open sector from (1,-1) exclusive to
     (1,0) inclusive;
  2. val((1,-1); A') != 0, val((1,-1); A) < 0, and the latter is smaller;
  3. with d = gcd(a, b), there is mu in N with mu/d equal to
     (rho + sigma) / val(A), satisfying d does not divide mu,
     mu <= l(bl - a) + 1/(b/d), and mu < d whenever l = 1.  The point
     F = (mu/d)A then has valuation rho + sigma.

A level-1 edge whose lower end has positive val((1,-1)) additionally
requires the lower end to sit in the candidate table of possible last
lower corners; that check belongs to the enumeration loops (which hold
the table), not to the constructor.

An edge is *simple* when its F point satisfies f2 - 1 = gap(rho, l) and
either gap(rho, l) > 1 or the lower end has positive height.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .numerics import DomainError, InvariantError, gcd
from .geometry import (
    Corner,
    Direction,
    dir_between,
    gap,
    in_sector_upper,
    primitive,
    v1m1_times_l,
    val_corner,
)
from .pllc import PllcTable


@dataclass(frozen=True)
class ValidEdge:
    top: Corner
    bottom: Corner
    direction: Direction
    d: int
    mu: int
    f: Corner
    simple: bool

    @property
    def level(self) -> int:
        return self.top.l

    def display(self) -> str:
        return f"({self.top.display()})-({self.bottom.display()})"

    def key(self) -> tuple[tuple[int, int, int], tuple[int, int, int]]:
        return (self.top.key(), self.bottom.key())


def mu_of(top: Corner, direction: Direction) -> int | None:
    """The multiplier mu with mu/d = (rho+sigma)/val(top), if integral.

    Returns None when the quotient is not of the form mu/d with mu a
    positive integer; requires val(top) > 0.
    """
    v = val_corner(direction, top)
    if v <= 0:
        raise DomainError(f"valuation of {top.display()} along {direction} is not positive")
    d = gcd(top.a, top.b)
    q = Fraction(direction.rho + direction.sigma, 1) / v * d
    if q.denominator != 1 or q <= 0:
        return None
    return int(q)


def valid_edge(top: Corner, bottom: Corner) -> ValidEdge:
    """Validate (top, bottom) as an edge and attach its derived data.

    Raises InvariantError when any structural condition fails.  The
    candidate-table condition on level-1 edges with an upper lower end is
    the caller's responsibility.
    """
    if top.l != bottom.l:
        raise InvariantError("edge endpoints at different levels")
    if top == bottom:
        raise InvariantError("degenerate edge")
    l = top.l
    direction = dir_between(top, bottom)
    if not in_sector_upper(direction):
        raise InvariantError(
            f"direction {direction.display()} of {top.display()}-{bottom.display()}"
            " outside ((1,-1), (1,0]]"
        )
    v_top = v1m1_times_l(top)
    v_bot = v1m1_times_l(bottom)
    if v_bot == 0 or v_top >= 0 or v_top >= v_bot:
        raise InvariantError(
            f"height condition fails for {top.display()}-{bottom.display()}"
        )
    d = gcd(top.a, top.b)
    if val_corner(direction, top) <= 0:
        raise InvariantError(f"non-positive valuation for {top.display()}-{bottom.display()}")
    mu = mu_of(top, direction)
    if mu is None:
        raise InvariantError(f"no integral multiplier for {top.display()}-{bottom.display()}")
    if mu % d == 0:
        raise InvariantError(f"multiplier {mu} divisible by d={d}")
    b_red = top.b // d
    # mu <= l(bl - a) + 1/(b/d) = l(bl - a) + d/b, cleared of denominators.
    if mu * top.b > l * (top.b * l - top.a) * top.b + d:
        raise InvariantError(f"multiplier {mu} exceeds its bound")
    if l == 1 and mu >= d:
        raise InvariantError(f"level-1 multiplier {mu} not below d={d}")
    f = Corner(mu * (top.a // d), l, mu * b_red)
    if val_corner(direction, f) != direction.rho + direction.sigma:
        raise InvariantError("F point off the unit-valuation line")
    if val_corner(direction, top) != val_corner(direction, bottom):
        raise InvariantError("edge endpoints not collinear with its direction")
    g = gap(direction.rho, l)
    simple = f.b - 1 == g and (g > 1 or bottom.b > 0)
    return ValidEdge(top, bottom, direction, d, mu, f, simple)


def is_simple(edge: ValidEdge) -> bool:
    return edge.simple


def starting_edges(a: int, b: int, table: PllcTable) -> list[ValidEdge]:
    """All valid edges descending from the level-1 corner (a, b).

    Scans the multipliers mu = 1 .. d-1; each determines the F point, its
    direction, and the arithmetic progression of candidate lower ends.  A
    candidate is kept when it lies strictly below the diagonal, or
    strictly above it and in the candidate table.  Emission order is
    (mu ascending, step ascending).
    """
    if not (1 <= a < b):
        raise DomainError(f"starting corner needs 1 <= a < b, got ({a}, {b})")
    if table.x_max < a:
        raise DomainError(f"candidate table bound {table.x_max} below a={a}")
    top = Corner(a, 1, b)
    d = gcd(a, b)
    edges: list[ValidEdge] = []
    for mu in range(1, d):
        f1 = mu * (a // d)
        f2 = mu * (b // d)
        direction = dir_from_f(f1, f2, 1)
        rho, sigma = direction.rho, direction.sigma
        for i in range(1, b // rho + 1):
            ap = a + i * sigma
            bp = b - i * rho
            v = ap - bp
            if v < 0 or (v > 0 and (ap, bp) in table):
                edges.append(valid_edge(top, Corner(ap, 1, bp)))
    return edges


def dir_from_f(f1: int, f2: int, l: int) -> Direction:
    """dir_of(F - (1,1)) for F realizing (f1/l, f2), in integers."""
    return primitive((f2 - 1) * l, l - f1)
