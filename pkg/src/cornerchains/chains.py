"""Chain construction: generated corners, edge children, complete chains.

Each valid edge generates successor corners: the lower end itself when it
sits strictly below the diagonal, or otherwise one corner per feasible
multiplicity gamma on the edge's line, at the raised level
l1 = lcm(l, rho).  A generated corner is *final* when l1 - a1/b1 > 1;
final corners terminate a chain.

A final corner can still admit children (its level keeps the branch
geometrically meaningful), and the corpus of reference tables is only
reproduced when such corners are both emitted as finals *and* expanded.
``FinalReading`` keeps both behaviours available; NON_EXCLUSIVE is the
default and the one validated against the reference data.

``complete_chains`` runs the breadth-first expansion of a level-1 root
edge, capped at omega(gcd(b, (b - b') / rho)) + 1 rounds.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass
from typing import Optional, Protocol

from .numerics import DomainError, InvariantError, gcd, lcm, omega
from .geometry import Corner, dir_lt, gap, v1m1_times_l, val_corner
from .edges import ValidEdge, dir_from_f, valid_edge
from .pllc import PllcTable


class FinalReading(enum.Enum):
    """Whether corners passing the final test also get expanded."""

    NON_EXCLUSIVE = "non-exclusive"
    EXCLUSIVE = "exclusive"


@dataclass(frozen=True)
class GeneratedCorner:
    """A successor corner; gamma is None when it is the edge's lower end."""

    corner: Corner
    gamma: Optional[int]


class SearchTrace(Protocol):
    """Observer hooks used to record the explored forest for export."""

    def on_expansion(
        self,
        edge: ValidEdge,
        generated: list[tuple[GeneratedCorner, bool]],
        children: list[ValidEdge],
    ) -> None: ...


def is_final_corner(c: Corner) -> bool:
    """l - a/b > 1, the chain-terminating condition."""
    return c.b >= 1 and (c.l - 1) * c.b > c.a


def generated_corners(edge: ValidEdge) -> list[GeneratedCorner]:
    """All corners generated by a valid edge, in increasing height.

    Lower end below the diagonal: the lower end itself, at the same level.
    Otherwise the candidates sit on the edge's line at level
    l1 = lcm(rho, l); a simple edge forces the single multiplicity
    gamma_max, a non-simple edge scans b'+1 .. gamma_max.  Candidates must
    land strictly below the diagonal (automatic for simple edges) and
    satisfy l1 - a1/b1 > 1 or gcd(a1, b1) > 1.
    """
    top, bottom = edge.top, edge.bottom
    if v1m1_times_l(bottom) < 0:
        return [GeneratedCorner(bottom, None)]
    rho, sigma = edge.direction.rho, edge.direction.sigma
    l = top.l
    l1 = lcm(rho, l)
    step = gap(rho, l)
    assert (top.b - bottom.b) % step == 0
    gamma_max = min((top.b - bottom.b) // step, top.b - 1)
    x_step = (-sigma) * (l1 // rho)  # x-numerator change per unit of gamma
    base = top.a * (l1 // l) - top.b * x_step

    def candidate(gamma: int) -> Corner:
        return Corner(base + gamma * x_step, l1, gamma)

    out: list[GeneratedCorner] = []
    if edge.simple:
        c = candidate(gamma_max)
        if is_final_corner(c) or gcd(c.a, c.b) > 1:
            # Below-diagonal holds automatically for simple edges here.
            assert v1m1_times_l(c) < 0
            out.append(GeneratedCorner(c, gamma_max))
    else:
        for gamma in range(bottom.b + 1, gamma_max + 1):
            c = candidate(gamma)
            if v1m1_times_l(c) < 0 and (is_final_corner(c) or gcd(c.a, c.b) > 1):
                out.append(GeneratedCorner(c, gamma))
    return out


def corner_children(
    edge: ValidEdge,
    corner: Corner,
    table: PllcTable,
    *,
    allow_final: bool = False,
) -> list[ValidEdge]:
    """All edges (corner, bottom) that are children of ``edge``.

    The multiplier range [lo, hi] fixes the child's direction strictly
    below the parent's; each multiplier yields an arithmetic progression
    of candidate lower ends stepped by the y-quantum of the child
    direction.  Level-1 candidates above the diagonal must additionally
    sit in the possible-last-lower-corner table (bound x_max >= a1
    required).  Emission order is (multiplier ascending, step ascending).
    """
    a1, l1, b1 = corner.a, corner.l, corner.b
    if not allow_final and is_final_corner(corner):
        raise DomainError(f"{corner.display()} is final; expansion not requested")
    if l1 == 1 and table.x_max < a1:
        raise DomainError(f"candidate table bound {table.x_max} below a1={a1}")
    rho, sigma = edge.direction.rho, edge.direction.sigma
    d1 = gcd(a1, b1)
    u = rho * a1 + sigma * b1 * l1  # l1 * val(parent direction; corner) > 0
    assert u > 0
    lo = 1 + (d1 * (rho + sigma) * l1) // u
    hi = d1 if l1 == 1 else l1 * (b1 * l1 - a1) + d1 // b1
    children: list[ValidEdge] = []
    for mu in range(lo, hi + 1):
        if mu % d1 == 0:
            continue
        f1 = mu * (a1 // d1)
        f2 = mu * (b1 // d1)
        child_dir = dir_from_f(f1, f2, l1)
        step = gap(child_dir.rho, l1)
        if step > b1:
            continue
        x_step = child_dir.sigma * (l1 // gcd(child_dir.rho, l1))
        for j in range(1, b1 // step + 1):
            ap = a1 + j * x_step
            bp = b1 - j * step
            v = ap - bp * l1
            if l1 > 1:
                keep = v != 0
            else:
                keep = v < 0 or (v > 0 and (ap, bp) in table)
            if keep:
                child = valid_edge(corner, Corner(ap, l1, bp))
                if not dir_lt(child.direction, edge.direction):
                    raise InvariantError(
                        f"child {child.display()} does not descend from {edge.display()}"
                    )
                children.append(child)
    return children


def children_and_finals(
    edge: ValidEdge,
    table: PllcTable,
    reading: FinalReading = FinalReading.NON_EXCLUSIVE,
    trace: SearchTrace | None = None,
) -> tuple[list[ValidEdge], list[Corner]]:
    """Split the successors of an edge into child edges and final corners.

    Under NON_EXCLUSIVE a final corner is reported *and* expanded; under
    EXCLUSIVE it only terminates.
    """
    children: list[ValidEdge] = []
    finals: list[Corner] = []
    generated: list[tuple[GeneratedCorner, bool]] = []
    for gen in generated_corners(edge):
        final = is_final_corner(gen.corner)
        generated.append((gen, final))
        if final:
            finals.append(gen.corner)
            if reading is FinalReading.EXCLUSIVE:
                continue
        children.extend(corner_children(edge, gen.corner, table, allow_final=True))
    if trace is not None:
        trace.on_expansion(edge, generated, children)
    return children, finals


def chain_length_cap(edge: ValidEdge) -> int:
    """Maximum chain length explored from a level-1 root edge."""
    rho = edge.direction.rho
    diff = edge.top.b - edge.bottom.b
    assert diff % rho == 0
    return omega(gcd(edge.top.b, diff // rho)) + 1


@dataclass(frozen=True)
class Chain:
    """A complete chain: consecutive child edges closed by a final corner."""

    edges: tuple[ValidEdge, ...]
    final: Corner

    def __post_init__(self) -> None:
        if not self.edges:
            raise InvariantError("chain without edges")
        if self.edges[0].level != 1:
            raise InvariantError("chain must start at level 1")
        if not is_final_corner(self.final):
            raise InvariantError(f"{self.final.display()} is not a final corner")
        seq = [*self.edges]
        for prev, nxt in zip(seq, seq[1:]):
            self._check_successor(prev, nxt.top)
            if not dir_lt(nxt.direction, prev.direction):
                raise InvariantError("chain directions must strictly decrease")
        self._check_successor(seq[-1], self.final)

    @staticmethod
    def _check_successor(edge: ValidEdge, corner: Corner) -> None:
        if corner.l % edge.level != 0:
            raise InvariantError("levels must divide along a chain")
        if corner.b >= edge.top.b:
            raise InvariantError("heights must strictly decrease along a chain")
        if corner != edge.bottom and val_corner(edge.direction, corner) != val_corner(
            edge.direction, edge.top
        ):
            raise InvariantError("successor corner off its edge's line")

    @property
    def length(self) -> int:
        return len(self.edges)

    @property
    def root(self) -> Corner:
        return self.edges[0].top

    def corners(self) -> list[Corner]:
        return [*(e.top for e in self.edges), self.final]

    def key(self) -> tuple[tuple[int, int, int], ...]:
        parts: list[tuple[int, int, int]] = []
        for e in self.edges:
            parts.append(e.top.key())
            parts.append(e.bottom.key())
        parts.append(self.final.key())
        return tuple(parts)

    def corner_seq_key(self) -> tuple[tuple[int, int, int], ...]:
        """The shape identity: upper corners plus the final corner.

        Chains differing only in their lower-end witnesses describe the
        same counterexample shape; table views collapse on this key.
        """
        return tuple(c.key() for c in self.corners())

    def display(self) -> str:
        inner = " ".join(e.display() for e in self.edges)
        return f"{inner} => {self.final.display()}"


def complete_chains(
    root: ValidEdge,
    table: PllcTable,
    reading: FinalReading = FinalReading.NON_EXCLUSIVE,
    trace: SearchTrace | None = None,
) -> list[Chain]:
    """Breadth-first enumeration of the complete chains rooted at ``root``.

    Output order is discovery order: by round (hence by length), then by
    parent order, then by emission order within an expansion.
    """
    if root.level != 1:
        raise DomainError("root edge must sit at level 1")
    cap = chain_length_cap(root)
    done: list[Chain] = []
    frontier: list[tuple[ValidEdge, ...]] = [(root,)]
    for _ in range(cap):
        nxt: list[tuple[ValidEdge, ...]] = []
        for prefix in frontier:
            children, finals = children_and_finals(prefix[-1], table, reading, trace)
            for corner in finals:
                done.append(Chain(edges=prefix, final=corner))
            for child in children:
                nxt.append(prefix + (child,))
        frontier = nxt
    return done
