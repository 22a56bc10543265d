"""Command-line entry points.

Three subcommands wire the engine together:

  pllc             -- the possible-last-lower-corner table up to an x-bound
  chains           -- all complete chains with a0 + b0 <= M, flagged and
                      decorated with (m, n)-families
  counterexamples  -- concrete (m, n) choices with max degree <= D

Data always goes to files (JSON document or a directory of CSVs); stdout
carries a short human summary.  All configuration is via flags, never the
environment.  Exit codes: 0 success, 2 usage error, 1 broken internal
invariant.
"""

from __future__ import annotations

import argparse
import json
import sys
from importlib import resources
from pathlib import Path
from typing import Any, Sequence

from .numerics import DomainError, InvariantError
from .chains import FinalReading
from .pllc import possible_last_lower_corners
from .search import admissible_complete_chains, enumerate_counterexamples, family_rows
from . import export


def _positive_int(text: str) -> int:
    try:
        value = int(text)
    except ValueError as exc:
        raise argparse.ArgumentTypeError(f"not an integer: {text!r}") from exc
    if value < 1:
        raise argparse.ArgumentTypeError(f"must be positive, got {value}")
    return value


def _load_annotations(path: str | None) -> list[dict[str, Any]]:
    if path is None:
        data = resources.files("cornerchains").joinpath("data/annotations.json")
        return json.loads(data.read_text(encoding="utf-8"))
    return json.loads(Path(path).read_text(encoding="utf-8"))


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="cornerchains",
        description="Exact enumeration of corner chains constraining plane Jacobian pairs.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def common(p: argparse.ArgumentParser) -> None:
        p.add_argument("--out", help="output path (JSON file, or directory for CSV)")
        p.add_argument("--format", choices=("json", "csv"), default="json")

    p_pllc = sub.add_parser("pllc", help="possible last lower corners up to an x-bound")
    p_pllc.add_argument("--xmax", type=_positive_int, required=True)
    common(p_pllc)

    def search_flags(p: argparse.ArgumentParser) -> None:
        p.add_argument("--threads", type=_positive_int, default=None,
                       help="worker count for the (a, b) scan (default: all cores)")
        p.add_argument("--final-reading", choices=[r.value for r in FinalReading],
                       default=FinalReading.NON_EXCLUSIVE.value,
                       help="whether final corners are also expanded (default: non-exclusive)")
        p.add_argument("--annotations", metavar="PATH", default=None,
                       help="JSON file of informational notes keyed by chain and family")

    p_chains = sub.add_parser("chains", help="complete chains with a0 + b0 <= M")
    p_chains.add_argument("--max-v11", type=_positive_int, required=True, metavar="M")
    p_chains.add_argument("--diagnostics", action="store_true",
                          help="include per-pair filter diagnostics in the export")
    search_flags(p_chains)
    common(p_chains)

    p_cand = sub.add_parser("counterexamples", help="degree-bounded (m, n) candidates")
    p_cand.add_argument("--max-degree", type=_positive_int, required=True, metavar="D")
    p_cand.add_argument("--include-swapped", action="store_true",
                        help="also list each pair with m and n swapped")
    search_flags(p_cand)
    common(p_cand)
    return parser


def _write(dataset: dict[str, Any], fmt: str, out: str | None, default_stem: str) -> list[Path]:
    if fmt == "json":
        path = Path(out) if out else Path(f"{default_stem}.json")
        return [export.export_json(dataset, path)]
    out_dir = Path(out) if out else Path(f"{default_stem}_csv")
    return export.export_csv(dataset, out_dir)


def _cmd_pllc(args: argparse.Namespace) -> int:
    table = possible_last_lower_corners(args.xmax)
    dataset = export.build_dataset(
        command="pllc", bound_name="x_max", bound=args.xmax, table=table
    )
    paths = _write(dataset, args.format, args.out, f"pllc_x{args.xmax}")
    print(f"pllc x_max={args.xmax}: {len(table.pairs)} points")
    _print_paths(paths)
    return 0


def _summarize_chains(records) -> dict[int, int]:
    counts: dict[int, int] = {}
    for record in records:
        if record.admissible:
            counts[record.chain.length] = counts.get(record.chain.length, 0) + 1
    return counts


def _cmd_chains(args: argparse.Namespace) -> int:
    result = admissible_complete_chains(
        args.max_v11,
        threads=args.threads,
        reading=FinalReading(args.final_reading),
        record_graph=True,
    )
    dataset = export.build_dataset(
        command="chains",
        bound_name="max_v11",
        bound=args.max_v11,
        result=result,
        annotations=_load_annotations(args.annotations),
        diagnostics=args.diagnostics,
    )
    paths = _write(dataset, args.format, args.out, f"chains_m{args.max_v11}")
    counts = _summarize_chains(result.records)
    total = sum(counts.values())
    table_rows = family_rows(result)
    print(f"admissible complete chains with v11 <= {args.max_v11}: {total}")
    for length in sorted(counts):
        print(f"  length {length}: {counts[length]}")
    print(f"family rows: {len(table_rows)}")
    _print_paths(paths)
    return 0


def _cmd_counterexamples(args: argparse.Namespace) -> int:
    result, rows = enumerate_counterexamples(
        args.max_degree,
        include_swapped=args.include_swapped,
        threads=args.threads,
        reading=FinalReading(args.final_reading),
    )
    dataset = export.build_dataset(
        command="counterexamples",
        bound_name="max_degree",
        bound=args.max_degree,
        result=result,
        candidates=rows,
        annotations=_load_annotations(args.annotations),
        include_swapped=args.include_swapped,
    )
    paths = _write(dataset, args.format, args.out, f"candidates_d{args.max_degree}")
    by_length: dict[int, int] = {}
    for row in rows:
        by_length[row.chain.length] = by_length.get(row.chain.length, 0) + 1
    print(f"candidate (m, n) rows with max degree <= {args.max_degree}: {len(rows)}")
    for length in sorted(by_length):
        print(f"  chain length {length}: {by_length[length]}")
    _print_paths(paths)
    return 0


def _print_paths(paths: list[Path]) -> None:
    for path in paths:
        print(f"wrote {path}")


def main(argv: Sequence[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    handlers = {
        "pllc": _cmd_pllc,
        "chains": _cmd_chains,
        "counterexamples": _cmd_counterexamples,
    }
    try:
        return handlers[args.command](args)
    except (InvariantError, DomainError, AssertionError) as exc:
        print(f"internal invariant violated: {exc}", file=sys.stderr)
        return 1
    except OSError as exc:
        print(str(exc), file=sys.stderr)
        return 1


if __name__ == "__main__":
    sys.exit(main())
