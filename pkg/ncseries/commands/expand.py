"""
expand: render a named series inside the truncation context.
"""

import argparse
import logging

from ncseries.catalog import CATALOG, named_series
from ncseries.models.report import RunConfig

logger = logging.getLogger(__name__)


def add_parser(subparsers, common: argparse.ArgumentParser) -> None:
    parser = subparsers.add_parser("expand", parents=[common], help="expand a named series")
    parser.add_argument("name", help=f"one of: {', '.join(CATALOG)}")
    parser.set_defaults(handler=run)


def run(args: argparse.Namespace, config: RunConfig) -> int:
    ctx = config.bounds.context
    series = named_series(args.name, ctx)
    logger.info(f"Expanded {args.name} in {ctx}: {len(series)} words")
    if config.format == "json":
        print(series.to_json())
    else:
        print(series)
    return 0
