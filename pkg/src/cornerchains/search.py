"""Top-level bounded search and the degree-bounded candidate enumeration.

``admissible_complete_chains(M)`` scans every level-1 corner (a, b) with
2 <= a < b and a + b <= M, enumerates the complete chains rooted at each
of its starting edges, filters them with the arithmetic admissibility
test, and attaches the (m, n)-families of each admissible chain's final
corner.  The (a, b) cells are independent, so they form the parallelism
unit; results are concatenated in cell order, which makes the output
identical for any worker count.

``enumerate_counterexamples(D)`` expands the families of the admissible
chains into concrete (m, n) pairs while max(m, n) * (a0 + b0) stays
within the degree bound D.  Since m, n >= 2 are coprime, max(m, n) >= 3,
so chains with a0 + b0 > D / 3 cannot contribute and M = floor(D / 3)
suffices.
"""

from __future__ import annotations

from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass, field
import os

from .numerics import DomainError
from .geometry import Corner
from .pllc import PllcTable, possible_last_lower_corners
from .edges import ValidEdge, starting_edges
from .chains import (
    Chain,
    FinalReading,
    GeneratedCorner,
    complete_chains,
)
from .admissibility import PairCheck, admissibility_report, is_admissible
from .families import MnFamily, mn_families

CornerKey = tuple[int, int, int]
EdgeKey = tuple[CornerKey, CornerKey]


@dataclass
class SearchGraph:
    """The forest actually explored: corners, edges, and their relations.

    ``corners`` maps corner keys to Corner objects; ``start`` marks the
    scanned level-1 grid cells (present even when they have no edges).
    ``edges`` maps edge keys to edges; ``generated`` maps an expanded
    edge's key to its successor corners with their final flags.  Edges
    absent from ``generated`` were discovered but never expanded (the
    depth cap cut them off).
    """

    corners: dict[CornerKey, Corner] = field(default_factory=dict)
    start: set[CornerKey] = field(default_factory=set)
    edges: dict[EdgeKey, ValidEdge] = field(default_factory=dict)
    generated: dict[EdgeKey, list[tuple[CornerKey, bool]]] = field(default_factory=dict)

    def add_corner(self, c: Corner) -> None:
        self.corners.setdefault(c.key(), c)

    def add_start(self, c: Corner) -> None:
        self.add_corner(c)
        self.start.add(c.key())

    def add_edge(self, e: ValidEdge) -> None:
        self.add_corner(e.top)
        self.add_corner(e.bottom)
        self.edges.setdefault(e.key(), e)

    def on_expansion(
        self,
        edge: ValidEdge,
        generated: list[tuple[GeneratedCorner, bool]],
        children: list[ValidEdge],
    ) -> None:
        self.add_edge(edge)
        links = self.generated.setdefault(edge.key(), [])
        seen = {key for key, _ in links}
        for gen, final in generated:
            self.add_corner(gen.corner)
            if gen.corner.key() not in seen:
                links.append((gen.corner.key(), final))
        for child in children:
            self.add_edge(child)

    def merge(self, other: "SearchGraph") -> None:
        for key, corner in other.corners.items():
            self.corners.setdefault(key, corner)
        self.start.update(other.start)
        for key, edge in other.edges.items():
            self.edges.setdefault(key, edge)
        for key, links in other.generated.items():
            if key not in self.generated:
                self.generated[key] = list(links)


@dataclass(frozen=True)
class ChainRecord:
    """A complete chain with its filter verdict and attached families."""

    chain: Chain
    admissible: bool
    families: tuple[MnFamily, ...]
    checks: tuple[PairCheck, ...]


@dataclass(frozen=True)
class SearchResult:
    m_bound: int
    reading: FinalReading
    records: tuple[ChainRecord, ...]
    table: PllcTable
    graph: SearchGraph | None


def _expand_cell(
    a: int,
    b: int,
    table: PllcTable,
    reading: FinalReading,
    want_graph: bool,
) -> tuple[list[ChainRecord], SearchGraph | None]:
    graph = SearchGraph() if want_graph else None
    if graph is not None:
        graph.add_start(Corner(a, 1, b))
    records: list[ChainRecord] = []
    for edge in starting_edges(a, b, table):
        if graph is not None:
            graph.add_edge(edge)
        for chain in complete_chains(edge, table, reading, trace=graph):
            admissible = is_admissible(chain)
            families = tuple(mn_families(chain.final)) if admissible else ()
            checks = admissibility_report(chain) if chain.length > 1 else ()
            records.append(ChainRecord(chain, admissible, families, checks))
    return records, graph


def default_threads() -> int:
    return max(1, os.cpu_count() or 1)


def admissible_complete_chains(
    m_bound: int,
    *,
    threads: int | None = None,
    reading: FinalReading = FinalReading.NON_EXCLUSIVE,
    record_graph: bool = False,
) -> SearchResult:
    """All complete chains with a0 + b0 <= m_bound, flagged and decorated.

    Records every complete chain (not only the admissible ones) so the
    exported dataset can show why a branch dies; families are attached to
    admissible chains only.
    """
    if m_bound < 4:
        raise DomainError(f"bound must be >= 4, got {m_bound}")
    threads = default_threads() if threads is None else max(1, threads)
    table = possible_last_lower_corners(m_bound // 2)
    cells = [(a, b) for a in range(2, m_bound // 2 + 1) for b in range(a + 1, m_bound - a + 1)]

    def work(cell: tuple[int, int]):
        return _expand_cell(cell[0], cell[1], table, reading, record_graph)

    if threads == 1 or len(cells) <= 1:
        outputs = [work(cell) for cell in cells]
    else:
        with ThreadPoolExecutor(max_workers=threads) as pool:
            outputs = list(pool.map(work, cells))

    records: list[ChainRecord] = []
    graph = SearchGraph() if record_graph else None
    for cell_records, cell_graph in outputs:
        records.extend(cell_records)
        if graph is not None and cell_graph is not None:
            graph.merge(cell_graph)
    return SearchResult(
        m_bound=m_bound,
        reading=reading,
        records=tuple(records),
        table=table,
        graph=graph,
    )


@dataclass(frozen=True)
class FamilyRow:
    """One table row: a chain shape together with one of its families.

    Chains that differ only in lower-end witnesses share their corner
    sequence and final corner, hence their families; the table view keeps
    the first-discovered chain as the representative of each
    (corner sequence, family) row.
    """

    record: ChainRecord
    family: MnFamily

    @property
    def chain(self) -> Chain:
        return self.record.chain


def family_rows(result: SearchResult) -> list[FamilyRow]:
    """Deduplicated (chain shape, family) rows, in discovery order."""
    rows: list[FamilyRow] = []
    seen: set[tuple] = set()
    for record in result.records:
        if not record.admissible:
            continue
        shape = record.chain.corner_seq_key()
        for fam in record.families:
            key = (shape, fam.k, fam.i)
            if key not in seen:
                seen.add(key)
                rows.append(FamilyRow(record, fam))
    return rows


@dataclass(frozen=True)
class CandidateRow:
    """One concrete (m, n) choice for an admissible chain."""

    record: ChainRecord
    k: int
    i: int
    j: int
    m: int
    n: int
    max_degree: int
    swapped: bool = False

    @property
    def chain(self) -> Chain:
        return self.record.chain


def _row_sort_key(row: CandidateRow):
    root = row.chain.root
    return (
        root.a + root.b,
        (root.a, root.b),
        row.chain.corner_seq_key(),
        row.k,
        row.i,
        row.j,
        row.swapped,
    )


def enumerate_counterexamples(
    degree_bound: int,
    *,
    include_swapped: bool = False,
    threads: int | None = None,
    reading: FinalReading = FinalReading.NON_EXCLUSIVE,
) -> tuple[SearchResult, list[CandidateRow]]:
    """All (chain, (m, n)) shapes with max degree <= degree_bound.

    Only the primary orientation of each pair is emitted; with
    ``include_swapped`` the mirrored (n, m) rows are added as well.  Rows
    come back sorted by (a0 + b0, root, chain, k, i, j).
    """
    if degree_bound < 9:
        raise DomainError(f"degree bound must be >= 9, got {degree_bound}")
    result = admissible_complete_chains(
        max(4, degree_bound // 3), threads=threads, reading=reading
    )
    rows: list[CandidateRow] = []
    for row in family_rows(result):
        record, fam = row.record, row.family
        weight = record.chain.root.a + record.chain.root.b
        j = 0
        while True:
            m, n = fam.member(j)
            degree = max(m, n) * weight
            if degree > degree_bound:
                break
            rows.append(CandidateRow(record, fam.k, fam.i, j, m, n, degree))
            if include_swapped:
                rows.append(
                    CandidateRow(record, fam.k, fam.i, j, n, m, degree, swapped=True)
                )
            j += 1
    rows.sort(key=_row_sort_key)
    return result, rows
