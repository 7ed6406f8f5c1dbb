"""
verify: run identity checkers and report pass/fail per identity.
"""

import argparse
import logging
from typing import List

from pydantic import TypeAdapter

from ncseries.identities import IDENTITIES
from ncseries.models.report import IdentityReport, RunConfig
from ncseries.store import SeriesStore
from ncseries.verifier import verify

logger = logging.getLogger(__name__)

reports_adapter = TypeAdapter(List[IdentityReport])


def add_parser(subparsers, common: argparse.ArgumentParser) -> None:
    parser = subparsers.add_parser("verify", parents=[common], help="verify identities")
    parser.add_argument("identities", nargs="+", help=f"'all' or any of: {', '.join(IDENTITIES)}")
    parser.add_argument("--sequential", action="store_true", help="run checkers one after another")
    parser.set_defaults(handler=run)


def render_report(report: IdentityReport) -> str:
    orders = ", ".join(f"{key}={value}" for key, value in report.orders.items())
    if report.passed:
        return f"PASS {report.identity} ({orders}): {len(report.checks)} checks"
    line = f"FAIL {report.identity} ({orders})"
    if report.discrepancy is not None:
        d = report.discrepancy
        line += f": {d.location}: expected {d.expected}, got {d.actual}"
    return line


def run(args: argparse.Namespace, config: RunConfig) -> int:
    reports = verify(args.identities, config.bounds, config.seed, concurrent=False if args.sequential else None)
    logger.debug(f"{SeriesStore.size()} series stored: {', '.join(SeriesStore.names())}")
    if config.format == "json":
        print(reports_adapter.dump_json(reports).decode())
    else:
        for report in reports:
            print(render_report(report))
    return 0 if all(report.passed for report in reports) else 1
