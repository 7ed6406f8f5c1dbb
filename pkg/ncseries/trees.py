"""
Direct enumeration of plane rooted trees.

Used as an oracle that is independent of the series algebra: trees are
built structurally and only afterwards turned into preorder words.
"""

from collections import Counter
from functools import lru_cache
from math import comb
from typing import Dict, Iterator, Optional, Tuple

from ncseries.models.language import PlaneTree


def catalan(n: int) -> int:
    return comb(2 * n, n) // (n + 1)


@lru_cache(maxsize=None)
def plane_forests(size: int) -> Tuple[Tuple[PlaneTree, ...], ...]:
    """All ordered sequences of plane trees with ``size`` vertices in total."""
    if size == 0:
        return ((),)
    forests = []
    for first in range(1, size + 1):
        for tree in plane_trees(first):
            for rest in plane_forests(size - first):
                forests.append((tree,) + rest)
    return tuple(forests)


@lru_cache(maxsize=None)
def plane_trees(size: int) -> Tuple[PlaneTree, ...]:
    """All plane rooted trees with exactly ``size`` vertices."""
    if size < 1:
        return ()
    return tuple(PlaneTree(children=forest) for forest in plane_forests(size - 1))


def iter_plane_trees(max_vertices: int, max_path_length: Optional[int] = None) -> Iterator[PlaneTree]:
    for size in range(1, max_vertices + 1):
        for tree in plane_trees(size):
            if max_path_length is None or tree.path_length() <= max_path_length:
                yield tree


def path_length_distribution(size: int) -> Dict[int, int]:
    """Number of plane trees on ``size`` vertices, by path length."""
    counts = Counter(tree.path_length() for tree in plane_trees(size))
    return dict(sorted(counts.items()))
