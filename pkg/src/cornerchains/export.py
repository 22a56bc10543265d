"""Deterministic, schema-versioned export of search results.

One JSON document carries everything a consumer needs: the candidate
point table, the explored corners and edges with their relations, the
complete chains with families (and optional per-pair filter diagnostics),
and the degree-bounded candidate rows.  Output bytes depend only on the
input data: keys are sorted, entity ids come from fixed sort orders, and
no timestamps are embedded.  Integers whose magnitude exceeds 2**53 are
rendered as decimal strings so consumers with binary64 numbers cannot
lose precision; at normal scales everything stays numeric.

CSV export writes one file per entity type with a fixed header; any
column change requires a schema version bump.
"""

from __future__ import annotations

import csv
import io
import json
from pathlib import Path
from typing import Any, Iterable

from .numerics import InvariantError
from .geometry import Corner
from .pllc import PllcTable
from .search import CandidateRow, SearchGraph, SearchResult, family_rows

SCHEMA_VERSION = 1
TOOL_NAME = "cornerchains"
TOOL_VERSION = "0.1.0"

_SAFE_INT = 2**53

CSV_HEADERS = {
    "pllc": ["a", "b", "rho", "sigma"],
    "edges": [
        "id",
        "top_a",
        "top_l",
        "top_b",
        "bot_a",
        "bot_l",
        "bot_b",
        "rho",
        "sigma",
        "d",
        "mu",
        "f1",
        "f2",
        "simple",
    ],
    "chains": [
        "id",
        "a0",
        "b0",
        "length",
        "admissible",
        "path",
        "final_a",
        "final_l",
        "final_b",
    ],
    "families": ["a0", "b0", "final_a", "final_l", "final_b", "k", "i", "m0", "n0", "dm", "dn"],
    "candidates": [
        "a0",
        "b0",
        "v11",
        "length",
        "final_a",
        "final_l",
        "final_b",
        "k",
        "i",
        "j",
        "m",
        "n",
        "max_degree",
        "swapped",
    ],
}


def _corner_obj(c: Corner) -> dict[str, Any]:
    return {"a": c.a, "l": c.l, "b": c.b, "display": c.display()}


def _pllc_rows(table: PllcTable) -> list[dict[str, Any]]:
    return [
        {"a": p.a, "b": p.b, "rho": p.direction.rho, "sigma": p.direction.sigma}
        for p in table.pairs
    ]


def build_dataset(
    *,
    command: str,
    bound_name: str,
    bound: int,
    result: SearchResult | None = None,
    candidates: list[CandidateRow] | None = None,
    table: PllcTable | None = None,
    annotations: list[dict[str, Any]] | None = None,
    diagnostics: bool = False,
    include_swapped: bool = False,
) -> dict[str, Any]:
    """Assemble the exportable document for one CLI command."""
    if result is not None:
        table = result.table
    if table is None:
        raise InvariantError("dataset needs a candidate point table")
    meta: dict[str, Any] = {
        "tool": TOOL_NAME,
        "version": TOOL_VERSION,
        "command": command,
        bound_name: bound,
    }
    dataset: dict[str, Any] = {
        "schema_version": SCHEMA_VERSION,
        "meta": meta,
        "pllc": _pllc_rows(table),
        "corners": [],
        "edges": [],
        "chains": [],
        "families": [],
        "candidates": [],
    }
    if result is None:
        return dataset

    meta["final_corner_reading"] = result.reading.value
    meta["diagnostics"] = diagnostics
    if command == "counterexamples":
        meta["include_swapped"] = include_swapped

    graph = result.graph or _graph_from_records(result)
    corner_ids = {key: idx for idx, key in enumerate(sorted(graph.corners))}
    edge_ids = {key: idx for idx, key in enumerate(sorted(graph.edges))}

    member_corners: set[tuple[int, int, int]] = set()
    member_edges: set[tuple] = set()
    for record in result.records:
        if not record.admissible:
            continue
        for edge in record.chain.edges:
            member_edges.add(edge.key())
            member_corners.add(edge.top.key())
            member_corners.add(edge.bottom.key())
        member_corners.add(record.chain.final.key())

    final_keys = {
        link[0]
        for links in graph.generated.values()
        for link in links
        if link[1]
    }
    for record in result.records:
        final_keys.add(record.chain.final.key())

    edges_by_top: dict[tuple[int, int, int], list[int]] = {}
    for key, idx in edge_ids.items():
        edges_by_top.setdefault(key[0], []).append(idx)

    for key, idx in corner_ids.items():
        corner = graph.corners[key]
        dataset["corners"].append(
            {
                "id": idx,
                **_corner_obj(corner),
                "v11": {"num": corner.a + corner.b * corner.l, "den": corner.l},
                "start": key in graph.start,
                "final": key in final_keys,
                "admissible_member": key in member_corners,
                "edge_ids": sorted(edges_by_top.get(key, [])),
            }
        )

    for key, idx in edge_ids.items():
        edge = graph.edges[key]
        links = graph.generated.get(key)
        dataset["edges"].append(
            {
                "id": idx,
                "top": corner_ids[edge.top.key()],
                "bottom": corner_ids[edge.bottom.key()],
                "rho": edge.direction.rho,
                "sigma": edge.direction.sigma,
                "d": edge.d,
                "mu": edge.mu,
                "f": {"a": edge.f.a, "l": edge.f.l, "b": edge.f.b},
                "simple": edge.simple,
                "expanded": links is not None,
                "generated": [
                    {"corner": corner_ids[ckey], "final": final}
                    for ckey, final in (links or [])
                ],
                "admissible_member": key in member_edges,
            }
        )

    annotation_index = _index_annotations(annotations or [])
    chain_ids: dict[tuple, int] = {}
    for idx, record in enumerate(result.records):
        chain = record.chain
        chain_ids[chain.key()] = idx
        root = chain.root
        row: dict[str, Any] = {
            "id": idx,
            "a0": root.a,
            "b0": root.b,
            "edge_ids": [edge_ids[e.key()] for e in chain.edges],
            "chain": _chain_triples(chain),
            "corners": [c.display() for c in chain.corners()],
            "final": {"a": chain.final.a, "l": chain.final.l, "b": chain.final.b},
            "length": chain.length,
            "admissible": record.admissible,
            "families": [
                _family_row(record, fam, annotation_index) for fam in record.families
            ],
        }
        if diagnostics:
            row["checks"] = [
                {
                    "h": c.h,
                    "i": c.i,
                    "D": c.d,
                    "q_h": c.q_h,
                    "q_i": c.q_i,
                    "omega": c.omega_d,
                    "ok": c.ok,
                }
                for c in record.checks
            ]
        dataset["chains"].append(row)

    # Table view: one row per (chain shape, family), first-discovered
    # chain as representative.  This is the form the reference tables use.
    for frow in family_rows(result):
        chain = frow.chain
        fam = frow.family
        entry = {
            "chain_id": chain_ids[chain.key()],
            "a0": chain.root.a,
            "b0": chain.root.b,
            "chain": _chain_triples(chain),
            "final": {"a": chain.final.a, "l": chain.final.l, "b": chain.final.b},
            "length": chain.length,
            "k": fam.k,
            "i": fam.i,
            "m0": fam.m0,
            "n0": fam.n0,
            "dm": fam.step_m,
            "dn": fam.step_n,
        }
        note = annotation_index.get(_family_match_key(chain, fam.k, fam.i))
        if note is not None:
            entry["annotation"] = note
        dataset["families"].append(entry)

    for row in candidates or []:
        chain = row.chain
        entry: dict[str, Any] = {
            "chain_id": chain_ids[chain.key()],
            "k": row.k,
            "i": row.i,
            "j": row.j,
            "m": row.m,
            "n": row.n,
            "max_degree": row.max_degree,
            "swapped": row.swapped,
        }
        note = annotation_index.get(_candidate_match_key(row))
        if note is not None:
            entry["annotation"] = note
        dataset["candidates"].append(entry)
    return dataset


def _chain_triples(chain) -> list[list[int]]:
    """Alternating (a, l, b) triples: top0, bottom0, top1, ..., final."""
    triples: list[list[int]] = []
    for edge in chain.edges:
        triples.append([edge.top.a, edge.top.l, edge.top.b])
        triples.append([edge.bottom.a, edge.bottom.l, edge.bottom.b])
    triples.append([chain.final.a, chain.final.l, chain.final.b])
    return triples


def _graph_from_records(result: SearchResult) -> SearchGraph:
    """Minimal graph covering exactly the entities the chains reference."""
    graph = SearchGraph()
    for record in result.records:
        for edge in record.chain.edges:
            graph.add_edge(edge)
        graph.add_corner(record.chain.final)
        graph.add_start(record.chain.root)
    return graph


def _family_row(record, fam, annotation_index) -> dict[str, Any]:
    row = {
        "k": fam.k,
        "i": fam.i,
        "m0": fam.m0,
        "n0": fam.n0,
        "dm": fam.step_m,
        "dn": fam.step_n,
    }
    note = annotation_index.get(_family_match_key(record.chain, fam.k, fam.i))
    if note is not None:
        row["annotation"] = note
    return row


def _family_match_key(chain, k: int, i: int) -> tuple:
    root = chain.root
    final = chain.final
    return ("family", root.a, root.b, final.a, final.l, final.b, k, i)


def _candidate_match_key(row: CandidateRow) -> tuple:
    root = row.chain.root
    final = row.chain.final
    return (
        "candidate",
        root.a,
        root.b,
        final.a,
        final.l,
        final.b,
        row.k,
        row.i,
        row.j,
    )


def _index_annotations(entries: Iterable[dict[str, Any]]) -> dict[tuple, str]:
    index: dict[tuple, str] = {}
    for entry in entries:
        match = entry["match"]
        final = match["final"]
        base = (
            match["a0"],
            match["b0"],
            final[0],
            final[1],
            final[2],
            match["k"],
            match.get("i", 0),
        )
        if "j" in match:
            index[("candidate", *base[:7], match["j"])] = entry["note"]
        else:
            index[("family", *base)] = entry["note"]
    return index


def _stringify_big_ints(value: Any) -> Any:
    if isinstance(value, bool):
        return value
    if isinstance(value, int):
        return str(value) if abs(value) > _SAFE_INT else value
    if isinstance(value, list):
        return [_stringify_big_ints(v) for v in value]
    if isinstance(value, dict):
        return {k: _stringify_big_ints(v) for k, v in value.items()}
    return value


def dataset_bytes(dataset: dict[str, Any]) -> bytes:
    payload = _stringify_big_ints(dataset)
    text = json.dumps(payload, sort_keys=True, indent=1, ensure_ascii=False)
    return (text + "\n").encode("utf-8")


def export_json(dataset: dict[str, Any], path: str | Path) -> Path:
    path = Path(path)
    try:
        path.write_bytes(dataset_bytes(dataset))
    except OSError as exc:
        raise OSError(f"cannot write dataset to {path}: {exc}") from exc
    return path


def load_json(path: str | Path) -> dict[str, Any]:
    with open(path, "rb") as handle:
        return json.loads(handle.read().decode("utf-8"))


def _csv_text(header: list[str], rows: Iterable[Iterable[Any]]) -> str:
    buf = io.StringIO()
    writer = csv.writer(buf)
    writer.writerow(header)
    for row in rows:
        writer.writerow(list(row))
    return buf.getvalue()


def export_csv(dataset: dict[str, Any], out_dir: str | Path) -> list[Path]:
    """Write one CSV per non-empty entity table; returns the paths written."""
    out = Path(out_dir)
    out.mkdir(parents=True, exist_ok=True)
    corners = {c["id"]: c for c in dataset.get("corners", [])}
    written: list[Path] = []

    def emit(name: str, rows: list[list[Any]]) -> None:
        path = out / f"{name}.csv"
        path.write_text(_csv_text(CSV_HEADERS[name], rows), encoding="utf-8")
        written.append(path)

    emit("pllc", [[r["a"], r["b"], r["rho"], r["sigma"]] for r in dataset["pllc"]])

    if dataset.get("edges"):
        emit(
            "edges",
            [
                [
                    e["id"],
                    corners[e["top"]]["a"],
                    corners[e["top"]]["l"],
                    corners[e["top"]]["b"],
                    corners[e["bottom"]]["a"],
                    corners[e["bottom"]]["l"],
                    corners[e["bottom"]]["b"],
                    e["rho"],
                    e["sigma"],
                    e["d"],
                    e["mu"],
                    e["f"]["a"],
                    e["f"]["b"],
                    e["simple"],
                ]
                for e in dataset["edges"]
            ],
        )
    if dataset.get("chains"):
        emit(
            "chains",
            [
                [
                    c["id"],
                    c["a0"],
                    c["b0"],
                    c["length"],
                    c["admissible"],
                    " ".join(c["corners"]),
                    c["final"]["a"],
                    c["final"]["l"],
                    c["final"]["b"],
                ]
                for c in dataset["chains"]
            ],
        )
    if dataset.get("families"):
        emit(
            "families",
            [
                [
                    f["a0"],
                    f["b0"],
                    f["final"]["a"],
                    f["final"]["l"],
                    f["final"]["b"],
                    f["k"],
                    f["i"],
                    f["m0"],
                    f["n0"],
                    f["dm"],
                    f["dn"],
                ]
                for f in dataset["families"]
            ],
        )
    if dataset.get("candidates"):
        chains = {c["id"]: c for c in dataset["chains"]}
        emit(
            "candidates",
            [
                [
                    chains[r["chain_id"]]["a0"],
                    chains[r["chain_id"]]["b0"],
                    chains[r["chain_id"]]["a0"] + chains[r["chain_id"]]["b0"],
                    chains[r["chain_id"]]["length"],
                    chains[r["chain_id"]]["final"]["a"],
                    chains[r["chain_id"]]["final"]["l"],
                    chains[r["chain_id"]]["final"]["b"],
                    r["k"],
                    r["i"],
                    r["j"],
                    r["m"],
                    r["n"],
                    r["max_degree"],
                    r["swapped"],
                ]
                for r in dataset["candidates"]
            ],
        )
    return written
