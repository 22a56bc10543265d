"""Exact-arithmetic enumeration of corner chains and (m, n)-families
constraining hypothetical plane Jacobian pairs, with deterministic
dataset export for the interactive explorer."""

from .numerics import DomainError, InvariantError, Rational, bezout_minimal, gcd, lcm, omega
from .geometry import Corner, Direction, cmp_dir, dir_of, gap, realize, val
from .pllc import FinalPair, PllcTable, possible_last_lower_corners
from .edges import ValidEdge, mu_of, starting_edges, valid_edge
from .chains import (
    Chain,
    FinalReading,
    GeneratedCorner,
    children_and_finals,
    complete_chains,
    corner_children,
    generated_corners,
    is_final_corner,
)
from .admissibility import EdgeArithmetic, edge_arithmetic, is_admissible
from .families import MnFamily, mn_families
from .search import (
    CandidateRow,
    ChainRecord,
    SearchResult,
    admissible_complete_chains,
    enumerate_counterexamples,
)

__version__ = "0.1.0"

__all__ = [
    "DomainError",
    "InvariantError",
    "Rational",
    "bezout_minimal",
    "gcd",
    "lcm",
    "omega",
    "Corner",
    "Direction",
    "cmp_dir",
    "dir_of",
    "gap",
    "realize",
    "val",
    "FinalPair",
    "PllcTable",
    "possible_last_lower_corners",
    "ValidEdge",
    "mu_of",
    "starting_edges",
    "valid_edge",
    "Chain",
    "FinalReading",
    "GeneratedCorner",
    "children_and_finals",
    "complete_chains",
    "corner_children",
    "generated_corners",
    "is_final_corner",
    "EdgeArithmetic",
    "edge_arithmetic",
    "is_admissible",
    "MnFamily",
    "mn_families",
    "CandidateRow",
    "ChainRecord",
    "SearchResult",
    "admissible_complete_chains",
    "enumerate_counterexamples",
]
