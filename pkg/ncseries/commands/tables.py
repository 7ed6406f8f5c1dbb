"""
tables: signed counts of the hatted composition sets.

Lists C(1)[n] (or sigma C(1)[n] with --shifted) by number of parts k, the
signed weight (-1)^k times the number of kept compositions, and the
excluded compositions in brackets.
"""

import argparse
import logging
from typing import List, Sequence

from ncseries.languages import hatted_signed_sum, iter_compositions
from ncseries.models.report import RunConfig

logger = logging.getLogger(__name__)


def add_parser(subparsers, common: argparse.ArgumentParser) -> None:
    parser = subparsers.add_parser("tables", parents=[common], help="hatted composition tables")
    parser.add_argument("--n", type=int, required=True, help="the weight n")
    parser.add_argument("--shifted", action="store_true", help="use sigma C(1): parts >= 2")
    parser.set_defaults(handler=run)


def render_composition(parts: Sequence[int]) -> str:
    """Concatenated digits, or '+'-joined parts once a part has two digits."""
    if all(part < 10 for part in parts):
        return "".join(str(part) for part in parts)
    return "+".join(str(part) for part in parts)


def run(args: argparse.Namespace, config: RunConfig) -> int:
    report = hatted_signed_sum(args.n, args.shifted)
    rows: List[List[List[int]]] = [[] for _ in report.per_k]
    for composition in iter_compositions(args.n, max_rise=1, min_part=2 if args.shifted else 1):
        rows[len(composition) - 1].append(list(composition))
    report = report.model_copy(update={"rows": rows})

    if config.format == "json":
        print(report.model_dump_json())
        return 0

    title = "sigma C(1)" if args.shifted else "C(1)"
    print(f"hatted {title}[{args.n}]")
    for k, (weight, row) in enumerate(zip(report.per_k, rows), start=1):
        cells = [
            f"[{render_composition(c)}]" if c in report.excluded else render_composition(c)
            for c in row
        ]
        print(f"k={k} weight={weight}: {' '.join(cells)}")
    excluded = ", ".join(render_composition(c) for c in report.excluded) or "none"
    print(f"excluded: {excluded}")
    print(f"total: {report.total}")
    return 0
