"""(m, n)-families attached to a final corner.

For a final corner (a ⊛ l, b) and each integer 1 <= k < l - a/b, the
degree pairs compatible with the corner solve

    (m + n) * b * k - n * (b*l - a) = k,   m, n >= 2 coprime.

With e = gcd(k, b*l - a), solutions exist only when b is coprime to
(b*l - a)/e; the minimal-N Bezout solution of M*b - N*(b*l - a)/e = 1
seeds an arithmetic progression with steps

    step_m = (b*l - a - b*k) / e,   step_n = b*k / e.

When k/e > 1 the progression splits into k/e residue classes, of which
only those with a coprime base survive; their steps scale by k/e.  Every
emitted family therefore consists entirely of coprime pairs.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .numerics import DomainError, InvariantError, bezout_minimal, gcd, rceil
from .geometry import Corner
from .chains import is_final_corner


@dataclass(frozen=True)
class MnFamily:
    """Arithmetic progression (m0 + j*step_m, n0 + j*step_n), j >= 0."""

    k: int
    i: int
    m0: int
    n0: int
    step_m: int
    step_n: int

    def __post_init__(self) -> None:
        if self.m0 < 2 or self.n0 < 2 or gcd(self.m0, self.n0) != 1:
            raise InvariantError(f"bad family base ({self.m0}, {self.n0})")
        if self.step_m < 1 or self.step_n < 1:
            raise InvariantError("family steps must be positive")

    def member(self, j: int) -> tuple[int, int]:
        return (self.m0 + j * self.step_m, self.n0 + j * self.step_n)


def mn_families(corner: Corner) -> list[MnFamily]:
    """All (m, n)-families for a final corner, ordered by (k, i)."""
    if not is_final_corner(corner):
        raise DomainError(f"{corner.display()} is not a final corner")
    a, l, b = corner.a, corner.l, corner.b
    w = b * l - a
    out: list[MnFamily] = []
    for k in range(1, rceil(l - Fraction(a, b))):
        e = gcd(k, w)
        c = w // e
        if gcd(b, c) != 1:
            continue
        big_m, big_n = bezout_minimal(b, c)
        n = big_n * k // e
        m = big_m - n
        dm = (w - b * k) // e
        dn = b * k // e
        if m == 1 or n == 1:
            m += dm
            n += dn
        assert m >= 2 and n >= 2
        kbar = k // e
        if kbar == 1:
            out.append(MnFamily(k=k, i=0, m0=m, n0=n, step_m=dm, step_n=dn))
        else:
            for i in range(kbar):
                mi = m + i * dm
                ni = n + i * dn
                if gcd(mi, ni) == 1:
                    out.append(
                        MnFamily(k=k, i=i, m0=mi, n0=ni, step_m=kbar * dm, step_n=kbar * dn)
                    )
    return out
