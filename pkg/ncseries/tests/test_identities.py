"""
Tests for the identity checkers and their registry.
"""

import pytest

from ncseries import identities
from ncseries.catalog import named_series
from ncseries.errors import UnknownIdentity
from ncseries.identities import IDENTITIES, _Comparison, canonical_identity, check_identity, identity_names
from ncseries.models.qpoly import QPoly
from ncseries.models.report import Bounds
from ncseries.models.series import NCSeries, TruncationContext
from ncseries.qseries import umbral
from ncseries.store import SeriesStore

SMALL = Bounds(max_len=4, max_weight=8, max_z=5, max_q=12)


@pytest.fixture(autouse=True)
def clear_store():
    """Clear the series store before each test."""
    SeriesStore.clear()
    yield
    SeriesStore.clear()


@pytest.mark.parametrize("identity", list(IDENTITIES))
def test_identity_holds_at_small_bounds(identity):
    report = check_identity(identity, SMALL, seed=7)
    assert report.passed, f"{identity} failed: {report.discrepancy}"
    assert report.identity == identity
    assert report.checks, "every checker runs at least one check"


ACCEPTANCE_BOUNDS = [
    ("continued-fraction", Bounds(max_len=7, max_weight=21)),
    ("path-length", Bounds(max_len=6, max_weight=15)),
    ("quotient", Bounds(max_len=6, max_weight=15)),
    ("quotient-dual", Bounds(max_len=6, max_weight=15)),
    ("local-minima", Bounds(max_len=6, max_weight=15)),
    ("rr-sum-sides", Bounds(max_len=6, max_weight=36)),
    ("branchless", Bounds(max_len=4, max_weight=8, max_z=8, max_q=30)),
    ("rogers-odd", Bounds(max_len=4, max_weight=8, max_z=8, max_q=30)),
    ("shifted-sums", Bounds(max_len=4, max_weight=8, max_z=8, max_q=30)),
    ("signed-compositions-zero", Bounds(max_len=4, max_weight=8, max_q=30)),
    ("closing-partitions", Bounds(max_len=4, max_weight=8, max_q=30)),
    ("closing-pentagonal", Bounds(max_len=4, max_weight=8, max_q=30)),
]


@pytest.mark.parametrize("identity, bounds", ACCEPTANCE_BOUNDS, ids=[name for name, _ in ACCEPTANCE_BOUNDS])
def test_identity_holds_at_full_bounds(identity, bounds):
    report = check_identity(identity, bounds, seed=7)
    assert report.passed, f"{identity} failed at {bounds}: {report.discrepancy}"


def test_sixth_path_length_row():
    """Test the z^6 row of umbral(A) at (6, 15): plane trees on six vertices by path length."""
    trees_q = umbral(named_series("sptrees", TruncationContext.of(6, 15)))
    assert trees_q.row(6) == {5: 1, 6: 4, 7: 6, 8: 7, 9: 7, 10: 5, 11: 5, 12: 3, 13: 2, 14: 1, 15: 1}


def test_quotient_at_default_bounds():
    report = check_identity("quotient_thm", Bounds(max_len=6, max_weight=15))
    assert report.passed, f"quotient failed: {report.discrepancy}"
    assert report.orders == {"max_len": 6, "max_weight": 15}


def test_rr_first_to_q40():
    report = check_identity("RR_FIRST", Bounds(max_len=4, max_weight=8, max_q=40))
    assert report.passed, f"rr-first failed: {report.discrepancy}"
    assert report.orders["max_q"] == 40


def test_rogers_odd_at_q30():
    report = check_identity("rogers-odd", Bounds(max_len=4, max_weight=8, max_z=6, max_q=30))
    assert report.passed, f"rogers-odd failed: {report.discrepancy}"


def test_tiny_bounds():
    """Test that checkers still agree when almost everything is truncated away."""
    report = check_identity("quotient", Bounds(max_len=2, max_weight=2, max_z=1, max_q=2))
    assert report.passed, f"quotient failed at (2, 2): {report.discrepancy}"


def test_aliases():
    assert canonical_identity("quotient_thm") == "quotient"
    assert canonical_identity("RR_FIRST") == "rr-first"
    assert canonical_identity(" sp_inverse ") == "sp-inverse"
    with pytest.raises(UnknownIdentity):
        canonical_identity("rr-third")
    with pytest.raises(UnknownIdentity):
        check_identity("nonsense")


def test_registry_covers_every_checker():
    checkers = {
        name for name in dir(identities)
        if name.startswith("check_") and name != "check_identity" and callable(getattr(identities, name))
        and getattr(identities, name).__module__ == identities.__name__
    }
    registered = {entry.check.__name__ for entry in IDENTITIES.values()}
    assert checkers == registered, f"unregistered checkers: {checkers - registered}"
    assert identity_names()[0] == "continued-fraction"
    assert len(identity_names()) == len(set(identity_names()))


def test_comparison_keeps_first_discrepancy():
    ctx = TruncationContext.of(2, 3)
    check = _Comparison("example", {"max_len": 2, "max_weight": 3})
    one = NCSeries.one(ctx)
    assert check.series("equal", one, one)
    assert not check.series("off by X1", one, one + NCSeries.letter(1, ctx))
    assert not check.qpoly("off by q", QPoly.one(0, 3), QPoly.q_series({0: 1, 1: 2}, 3))
    report = check.report()
    assert not report.passed
    assert report.checks == ["equal", "off by X1", "off by q"]
    assert report.discrepancy.location == "off by X1: coefficient of X1"
    assert (report.discrepancy.expected, report.discrepancy.actual) == ("0", "1")
