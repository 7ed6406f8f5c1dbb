"""
involutions: exhaustive checks of the sign-reversing involutions.

Runs phi on C(1) x P2 and psi on N x P2, then on --count random link sets
and modules drawn from --seed. The pairs are taken inside the bounds met
with (4, 8).
"""

import argparse
import logging
import random
from typing import List

from pydantic import TypeAdapter

from ncseries.identities import INVOLUTION_CONTEXT
from ncseries.involutions import check_phi, check_psi
from ncseries.languages import composition_module_spec, composition_spec, random_link_spec, random_module_spec
from ncseries.models.language import InvolutionReport
from ncseries.models.report import RunConfig

logger = logging.getLogger(__name__)

reports_adapter = TypeAdapter(List[InvolutionReport])


def add_parser(subparsers, common: argparse.ArgumentParser) -> None:
    parser = subparsers.add_parser("involutions", parents=[common], help="check the K-duality involutions")
    parser.add_argument("--count", type=int, default=20, help="number of random link sets and modules")
    parser.set_defaults(handler=run)


def run(args: argparse.Namespace, config: RunConfig) -> int:
    if args.count < 0:
        raise ValueError(f"--count must be nonnegative, got {args.count}")
    ctx = config.bounds.context.meet(INVOLUTION_CONTEXT)
    rng = random.Random(config.seed)
    reports = [check_phi(composition_spec(1), ctx), check_psi(composition_module_spec(), ctx)]
    for _ in range(args.count):
        reports.append(check_phi(random_link_spec(rng), ctx))
        reports.append(check_psi(random_module_spec(rng), ctx))

    if config.format == "json":
        print(reports_adapter.dump_json(reports).decode())
    else:
        for report in reports:
            status = "PASS" if report.passed else "FAIL"
            line = f"{status} {report.name}: {report.pairs_checked} pairs, {len(report.fixed_points)} fixed points"
            if report.failures:
                line += f"; {report.failures[0]}"
            print(line)
    failed = sum(not report.passed for report in reports)
    logger.info(f"{len(reports) - failed}/{len(reports)} involution checks passed in {ctx} (seed {config.seed})")
    return 0 if not failed else 1
