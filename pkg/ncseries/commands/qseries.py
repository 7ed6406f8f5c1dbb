"""
qseries: print q-polynomials.

Targets: ``pathlength`` (plane trees on n vertices by path length, with
--oracle for direct enumeration), ``rr-product`` (the product with
residues --a, --b mod 5), ``rr-sum`` (a Rogers-Ramanujan sum side) and
``sptrees`` (the umbral image of the tree language).
"""

import argparse
import logging
from math import comb

from ncseries import qseries
from ncseries.catalog import named_series
from ncseries.errors import UnknownTarget
from ncseries.models.qpoly import QPoly
from ncseries.models.report import RunConfig

logger = logging.getLogger(__name__)


def add_parser(subparsers, common: argparse.ArgumentParser) -> None:
    parser = subparsers.add_parser("qseries", parents=[common], help="print a q-series")
    parser.add_argument("target", help=f"one of: {', '.join(qseries.QSERIES_TARGETS)}")
    parser.add_argument("--n", type=int, default=None, help="number of vertices for pathlength")
    parser.add_argument("--oracle", action="store_true", help="count enumerated trees instead")
    parser.add_argument("--a", type=int, default=1, help="first residue of rr-product")
    parser.add_argument("--b", type=int, default=4, help="second residue of rr-product")
    parser.add_argument("--variant", choices=("first", "second"), default="first", help="rr-sum variant")
    parser.set_defaults(handler=run)


def build_target(args: argparse.Namespace, config: RunConfig) -> QPoly:
    bounds = config.bounds
    if args.target == "pathlength":
        n = bounds.max_len if args.n is None else args.n
        coeffs = qseries.path_length_coeffs(n, "oracle" if args.oracle else "algebraic")
        return QPoly.q_series(coeffs, comb(n, 2))
    if args.target == "rr-product":
        return qseries.rr_product(args.a, args.b, bounds.max_q)
    if args.target == "rr-sum":
        return qseries.rr_sum_side(args.variant, bounds.max_z, bounds.max_q)
    if args.target == "sptrees":
        return qseries.umbral(named_series("sptrees", bounds.context))
    raise UnknownTarget(f"Unknown q-series target '{args.target}'. Known targets: {', '.join(qseries.QSERIES_TARGETS)}")


def run(args: argparse.Namespace, config: RunConfig) -> int:
    poly = build_target(args, config)
    if config.format == "json":
        print(poly.to_json())
    else:
        print(poly)
    return 0
