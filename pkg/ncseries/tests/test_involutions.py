"""
Tests for the sign-reversing involutions phi and psi.
"""

import random

import pytest

from ncseries.errors import InvalidPair
from ncseries.involutions import check_phi, check_psi, involution_phi, involution_psi
from ncseries.languages import composition_module_spec, composition_spec, partition_spec, random_link_spec, random_module_spec
from ncseries.models.series import TruncationContext

CTX = TruncationContext.of(4, 8)


def test_phi_moves_one_letter():
    """Test that phi moves the boundary letter and undoes itself."""
    c1 = composition_spec(1)
    assert involution_phi(((1, 2), (3,)), c1) == ((1, 2, 3), ())
    assert involution_phi(((1, 2, 3), ()), c1) == ((1, 2), (3,))
    assert involution_phi(((), ()), c1) == ((), ())
    # 2 -> 4 is not a link of C(1), so the last letter of the left word moves
    assert involution_phi(((1, 2), (4,)), c1) == ((1,), (2, 4))


def test_phi_rejects_pairs_outside_domain():
    with pytest.raises(InvalidPair):
        involution_phi(((1, 3), ()), composition_spec(1))
    with pytest.raises(InvalidPair):
        involution_phi(((1,), (2, 3)), composition_spec(1))


def test_psi_fixed_points():
    """Test that psi fixes a head letter unless the first dual letter links to it."""
    n = composition_module_spec()
    assert involution_psi(((2,), ()), n) == ((2,), ())
    assert involution_psi(((2,), (4,)), n) == ((2,), (4,))
    assert involution_psi(((2,), (3,)), n) == ((2, 3), ())
    assert involution_psi(((2, 3), ()), n) == ((2,), (3,))
    with pytest.raises(InvalidPair):
        involution_psi(((1,), ()), n)


def test_check_phi_on_compositions():
    report = check_phi(composition_spec(1), CTX)
    assert report.passed, f"phi failed: {report.failures}"
    assert report.fixed_points == [((), ())]
    assert report.pairs_checked > 0
    assert report.name == "phi[C(1)]"


def test_check_psi_on_module():
    report = check_psi(composition_module_spec(), CTX)
    assert report.passed, f"psi failed: {report.failures}"
    assert report.fixed_points, "psi has fixed points (a, 1) for every head letter a"
    assert all(len(left) == 1 for left, _ in report.fixed_points)


def test_check_phi_on_partitions():
    report = check_phi(partition_spec(2), CTX)
    assert report.passed, f"phi failed on P2: {report.failures}"


@pytest.mark.parametrize("seed", [0, 1, 2, 3])
def test_random_specs(seed):
    rng = random.Random(seed)
    phi = check_phi(random_link_spec(rng), CTX)
    psi = check_psi(random_module_spec(rng), CTX)
    assert phi.passed, f"phi failed for seed {seed}: {phi.failures}"
    assert psi.passed, f"psi failed for seed {seed}: {psi.failures}"
