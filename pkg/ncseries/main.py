"""
Command line entry point.

This module configures logging, builds the argument parser, mounts every
command module and maps errors to exit codes: 0 on success, 1 when a
verification fails, 2 for an unknown series, target or identity and 64 for
bad flags or invalid bounds.
"""

import argparse
import logging
import sys
from typing import List, NoReturn, Optional

from pydantic import ValidationError

from ncseries import __version__
from ncseries.commands import expand, involutions, qseries, tables, verify
from ncseries.config import settings
from ncseries.errors import UnknownIdentity, UnknownName, UnknownTarget
from ncseries.models.report import Bounds, RunConfig

logger = logging.getLogger(__name__)

EXIT_OK = 0
EXIT_FAILED = 1
EXIT_UNKNOWN = 2
EXIT_USAGE = 64

COMMANDS = (expand, tables, qseries, verify, involutions)


class CommandParser(argparse.ArgumentParser):
    """Argument parser that exits with the usage code on bad flags."""

    def error(self, message: str) -> NoReturn:
        self.print_usage(sys.stderr)
        self.exit(EXIT_USAGE, f"{self.prog}: error: {message}\n")


def configure_logging(level: Optional[str] = None) -> None:
    # stderr only; stdout carries the deterministic command output
    logging.basicConfig(
        level=(level or settings.log_level).upper(),
        format="%(asctime)s [%(levelname)s] %(name)s: %(message)s",
        stream=sys.stderr,
    )


def build_parser() -> CommandParser:
    common = CommandParser(add_help=False)
    common.add_argument("--max-len", type=int, default=settings.max_len, help="maximum word length L")
    common.add_argument("--max-weight", type=int, default=settings.max_weight, help="maximum word weight W")
    common.add_argument("--max-z", type=int, default=settings.max_z, help="maximum z-degree of q-polynomials")
    common.add_argument("--max-q", type=int, default=settings.max_q, help="maximum q-degree of q-polynomials")
    common.add_argument("--format", choices=("text", "json"), default="text")
    common.add_argument("--seed", type=int, default=settings.seed, help="seed for random link sets")
    common.add_argument("--log-level", default=None, help="overrides NCSERIES_LOG_LEVEL")

    parser = CommandParser(
        prog="ncseries",
        description="Truncated noncommutative series, shift plethysm and Rogers-Ramanujan identity checks.",
    )
    parser.add_argument("--version", action="version", version=f"%(prog)s {__version__}")
    subparsers = parser.add_subparsers(dest="command", required=True, parser_class=CommandParser)
    for command in COMMANDS:
        command.add_parser(subparsers, common)
    return parser


def main(argv: Optional[List[str]] = None) -> int:
    args = build_parser().parse_args(argv)
    configure_logging(args.log_level)

    try:
        config = RunConfig(
            command=args.command,
            bounds=Bounds(max_len=args.max_len, max_weight=args.max_weight, max_z=args.max_z, max_q=args.max_q),
            format=args.format,
            seed=args.seed,
        )
    except ValidationError as e:
        print(f"ncseries: invalid arguments: {e.errors()[0]['msg']}", file=sys.stderr)
        return EXIT_USAGE

    try:
        return args.handler(args, config)
    except (UnknownName, UnknownTarget, UnknownIdentity) as e:
        print(f"ncseries: {e}", file=sys.stderr)
        return EXIT_UNKNOWN
    except ValueError as e:
        print(f"ncseries: {e}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
