"""The arithmetic filter on complete chains.

Every edge carries a reduced fraction p/q with
p/q = (rho + sigma) / val(direction; top); q is the denominator after
reduction.  For each ordered pair of edge indices h < i the chain yields
the divisor bound

    D(h, i) = gcd( (b_h - b'_h) / gap(rho_h, l_h),
                   b_h, b_{h+1}, a_h * l_i / l_h, a'_h * l_i / l_h )

and the chain is *admissible* when, for every such pair,

    omega(D(h, i)) >= i - h,   q_i divides D(h, i),   q_h does not divide q_i.

Chains with a single edge are vacuously admissible.
"""

from __future__ import annotations

from dataclasses import dataclass

from .numerics import DomainError, gcd, omega
from .geometry import gap
from .chains import Chain
from .edges import ValidEdge


@dataclass(frozen=True)
class EdgeArithmetic:
    """Reduced fraction p/q attached to an edge; q drives the filter."""

    q: int
    p: int


def edge_arithmetic(edge: ValidEdge) -> EdgeArithmetic:
    """q = val/gcd(rho+sigma, val) and p = (rho+sigma)/gcd(...) for an edge.

    The valuation of the top corner is an integer even at level l > 1,
    but the computation clears l first so all gcds stay integral.
    """
    top = edge.top
    rho, sigma = edge.direction.rho, edge.direction.sigma
    u = rho * top.a + sigma * top.b * top.l  # l * val(direction; top)
    if u <= 0:
        raise DomainError(f"edge {edge.display()} has non-positive valuation")
    t = (rho + sigma) * top.l
    g = gcd(t, u)
    return EdgeArithmetic(q=u // g, p=t // g)


@dataclass(frozen=True)
class PairCheck:
    """Diagnostics for one (h, i) pair of the filter."""

    h: int
    i: int
    d: int
    q_h: int
    q_i: int
    omega_d: int
    ok: bool


def divisor_bound(chain: Chain, h: int, i: int) -> int:
    """D(h, i) for 0 <= h < i < length."""
    eh = chain.edges[h]
    l_h = eh.level
    l_i = chain.edges[i].level
    step = gap(eh.direction.rho, l_h)
    diff = eh.top.b - eh.bottom.b
    assert diff % step == 0 and l_i % l_h == 0
    b_next = chain.edges[h + 1].top.b
    return gcd(
        gcd(diff // step, eh.top.b),
        gcd(b_next, gcd(eh.top.a * (l_i // l_h), eh.bottom.a * (l_i // l_h))),
    )


def _pair_check(chain: Chain, qs: list[int], h: int, i: int) -> PairCheck:
    d = divisor_bound(chain, h, i)
    w = omega(d)
    ok = w >= i - h and d % qs[i] == 0 and qs[i] % qs[h] != 0
    return PairCheck(h=h, i=i, d=d, q_h=qs[h], q_i=qs[i], omega_d=w, ok=ok)


def is_admissible(chain: Chain) -> bool:
    """True when every (h, i) pair passes; short-circuits on first failure."""
    j = chain.length - 1
    if j == 0:
        return True
    qs = [edge_arithmetic(e).q for e in chain.edges]
    for h in range(j):
        for i in range(h + 1, j + 1):
            if not _pair_check(chain, qs, h, i).ok:
                return False
    return True


def admissibility_report(chain: Chain) -> tuple[PairCheck, ...]:
    """All (h, i) checks, for diagnostics export; empty for single-edge chains."""
    j = chain.length - 1
    qs = [edge_arithmetic(e).q for e in chain.edges]
    return tuple(
        _pair_check(chain, qs, h, i) for h in range(j) for i in range(h + 1, j + 1)
    )
