"""
Tests for the named-series catalog and the series store.
"""

import pytest

from ncseries.catalog import ALIASES, CATALOG, canonical_name, catalog_names, named_series
from ncseries.errors import UnknownName
from ncseries.models.series import NCSeries, TruncationContext
from ncseries.store import SeriesStore

CTX = TruncationContext.of(3, 6)


@pytest.fixture(autouse=True)
def clear_store():
    """Clear the series store before each test."""
    SeriesStore.clear()
    yield
    SeriesStore.clear()


def test_canonical_names():
    assert canonical_name("SPTREES") == "sptrees"
    assert canonical_name("module_n") == "module-n"
    assert canonical_name("a") == "sptrees"
    assert all(target in CATALOG for target in ALIASES.values())
    with pytest.raises(UnknownName):
        canonical_name("c7")


@pytest.mark.parametrize("name", catalog_names())
def test_every_entry_builds(name):
    series = named_series(name, CTX)
    assert isinstance(series, NCSeries)
    assert series.context == CTX


def test_named_series_values():
    assert str(named_series("c1", TruncationContext.of(2, 3))) == "1 + X1 + X2 + X3 + X1X1 + X1X2 + X2X1"
    assert str(named_series("sptrees", TruncationContext.of(1, 0))) == "X0"
    assert str(named_series("sptrees-inverse", CTX)) == "X0 - X0X1"
    assert named_series("sigma-c1", CTX).coeff((2, 3)) == 1
    assert named_series("sigma-c1", CTX).coeff((1, 2)) == 0


def test_store_memoizes():
    """Test that a named series is built once per context."""
    first = named_series("p2", CTX)
    assert SeriesStore.size() == 1
    assert named_series("P2", CTX) is first
    named_series("p2", TruncationContext.of(2, 6))
    assert SeriesStore.size() == 2
    assert SeriesStore.names() == ["p2"]


def test_store_clear():
    named_series("c0", CTX)
    assert SeriesStore.get("c0", CTX) is not None
    SeriesStore.clear()
    assert SeriesStore.size() == 0
    assert SeriesStore.get("c0", CTX) is None
