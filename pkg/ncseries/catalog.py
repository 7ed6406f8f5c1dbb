"""
Named series.

This module registers every language and family the toolkit can expand by
name. Each entry is built from the core operations on demand and memoized
in the ``SeriesStore``, so the catalog doubles as a regression surface for
the algebra underneath it.
"""

import logging
from typing import Callable, Dict, List, NamedTuple

from ncseries import languages, plethysm
from ncseries.algebra import inverse, shift, sign_by_length
from ncseries.errors import UnknownName
from ncseries.models.series import NCSeries, TruncationContext
from ncseries.store import SeriesStore

logger = logging.getLogger(__name__)


class CatalogEntry(NamedTuple):
    description: str
    build: Callable[[TruncationContext], NCSeries]


def _compositions(max_rise):
    return lambda ctx: languages.compositions(max_rise, ctx)


def _partitions(m):
    return lambda ctx: languages.partitions_m_distinct(m, ctx)


CATALOG: Dict[str, CatalogEntry] = {
    # Shift-plethystic trees
    "sptrees": CatalogEntry("shift-plethystic trees, A = X0 / (1 - sigma A)", languages.sp_trees_recursive),
    "sptrees-cf": CatalogEntry(
        "depth-W continued fraction X0/(1 - X1/(1 - ...))",
        lambda ctx: languages.sp_trees_cf(ctx.max_weight, ctx),
    ),
    "sptrees-oracle": CatalogEntry("preorder words of enumerated plane trees", languages.sp_trees_oracle),
    "sptrees-enriched": CatalogEntry("trees enriched with 1/(1 - X1)", plethysm.sp_trees_enriched),
    "sptrees-inverse": CatalogEntry(
        "plethystic inverse of the tree language",
        lambda ctx: plethysm.plethystic_inverse(named_series("sptrees", ctx)),
    ),
    "sptrees-graded-inverse": CatalogEntry(
        "plethystic inverse of the graded tree language",
        lambda ctx: plethysm.plethystic_inverse(sign_by_length(named_series("sptrees", ctx))),
    ),
    # Compositions and partitions
    "compositions": CatalogEntry("all compositions", _compositions(None)),
    "c0": CatalogEntry("compositions with risings <= 0 (weakly decreasing)", _compositions(0)),
    "c1": CatalogEntry("compositions with risings <= 1", _compositions(1)),
    "c2": CatalogEntry("compositions with risings <= 2", _compositions(2)),
    "sigma-c1": CatalogEntry("shifted C(1): risings <= 1, parts >= 2", lambda ctx: shift(named_series("c1", ctx), 1)),
    "p0": CatalogEntry("partitions in weakly increasing order", _partitions(0)),
    "p1": CatalogEntry("partitions with distinct parts", _partitions(1)),
    "p2": CatalogEntry("2-distinct partitions", _partitions(2)),
    "sigma-p2": CatalogEntry("2-distinct partitions with parts >= 2", lambda ctx: shift(named_series("p2", ctx), 1)),
    "partitions-dual": CatalogEntry(
        "K-dual of the partitions: inverse of the graded partitions",
        lambda ctx: inverse(sign_by_length(named_series("p0", ctx))),
    ),
    "decreasing-partitions": CatalogEntry(
        "partitions in weakly decreasing order, prod_{n=W..1} 1/(1 - X_n)",
        plethysm.decreasing_partitions_product,
    ),
    "distinct-increasing": CatalogEntry(
        "distinct parts in increasing order, prod_{n=1..W} (1 + X_n)",
        lambda ctx: plethysm.distinct_parts_product(ctx, descending=False),
    ),
    "module-n": CatalogEntry(
        "C(1)-module N: risings <= 1 and first part >= 2",
        lambda ctx: languages.module_language(languages.composition_module_spec(), ctx),
    ),
    "module-n-dual": CatalogEntry(
        "K-dual module of N",
        lambda ctx: languages.module_language(languages.module_dual(languages.composition_module_spec()), ctx),
    ),
    # Enriched trees and branchless families
    "branchless": CatalogEntry("L = 1 + X0 + X0X1 + X0X1X2 + ...", plethysm.branchless),
    "branchless-plus": CatalogEntry("L+ = L - 1, trees enriched with 1 + X1", plethysm.branchless_plus),
    "branchless-even": CatalogEntry("X0 + X0X2 + X0X2X4 + ..., trees enriched with 1 + X2", plethysm.even_branchless_plus),
    "branchless-odd": CatalogEntry("X1 + X1X3 + X1X3X5 + ...", plethysm.odd_branchless_plus),
    "sigma0": CatalogEntry("X0 + X1 + X2 + ...", plethysm.letter_sum),
    "shifted-branchless-sum": CatalogEntry("Sigma_0 o_s L+", plethysm.shifted_branchless_sum),
    "enriched-sigma-l": CatalogEntry("trees enriched with sigma L", plethysm.shifted_branchless_enriched),
    "chain-enrichment": CatalogEntry("M = (1 - sigma L+)^-1", plethysm.chain_enrichment),
    "enriched-chain": CatalogEntry("trees enriched with (1 - sigma L+)^-1", plethysm.chain_enriched),
}

ALIASES = {
    "a": "sptrees",
    "p": "p0",
    "partitions": "p0",
    "n": "module-n",
    "n-dual": "module-n-dual",
    "l": "branchless",
    "l-plus": "branchless-plus",
}


def canonical_name(name: str) -> str:
    key = name.strip().lower().replace("_", "-")
    key = ALIASES.get(key, key)
    if key not in CATALOG:
        raise UnknownName(f"Unknown series '{name}'. Known series: {', '.join(catalog_names())}")
    return key


def catalog_names() -> List[str]:
    return list(CATALOG)


def named_series(name: str, ctx: TruncationContext) -> NCSeries:
    """Build (or fetch from the store) the series registered as ``name`` inside ``ctx``."""
    key = canonical_name(name)
    cached = SeriesStore.get(key, ctx)
    if cached is not None:
        return cached
    logger.debug(f"Building {key} in {ctx}")
    return SeriesStore.put(key, ctx, CATALOG[key].build(ctx))
