"""
Tests for truncated (z, q) polynomials.
"""

from fractions import Fraction

import pytest
from pydantic import ValidationError

from ncseries.errors import ZeroConstantTerm
from ncseries.models.qpoly import QPoly, QPolyTerm


def test_rendering():
    assert str(QPoly.q_series({0: 1, 1: -1, 4: -1}, 10)) == "1 - q - q^4"
    assert str(QPoly.q_series({2: Fraction(1, 2), 3: -2}, 10)) == "1/2 q^2 - 2 q^3"
    assert str(QPoly.zero(2, 5)) == "0"
    bivariate = QPoly(3, 5, {(1, 0): 1, (2, 1): 1, (3, 2): 1, (3, 3): 1})
    assert str(bivariate) == "z + q z^2 + (q^2 + q^3) z^3"


def test_truncated_product():
    """Test that products drop degrees above the bounds."""
    one_minus_q = QPoly.q_series({0: 1, 1: -1}, 3)
    assert (one_minus_q ** 4).q_coeffs() == [1, -4, 6, -4]
    z = QPoly.monomial(1, 0, 2, 3)
    assert (z * z * z).is_zero(), "z^3 is outside max_z = 2"


def test_inverse_and_division():
    one_minus_q = QPoly.q_series({0: 1, 1: -1}, 5)
    assert one_minus_q.inverse() == QPoly.q_series({m: 1 for m in range(6)}, 5)
    one_minus_q2 = QPoly.q_series({0: 1, 2: -1}, 5)
    assert one_minus_q2 / one_minus_q == QPoly.q_series({0: 1, 1: 1}, 5)
    with pytest.raises(ZeroConstantTerm):
        QPoly.monomial(0, 1, 0, 5).inverse()


def test_substitutions():
    poly = QPoly(2, 5, {(1, 0): 1, (2, 1): 1})
    assert poly.subst_z_zq() == QPoly(2, 5, {(1, 1): 1, (2, 3): 1})
    assert poly.subst_z(1) == QPoly.q_series({0: 1, 1: 1}, 5)
    assert poly.subst_z(-1) == QPoly.q_series({0: -1, 1: 1}, 5)
    assert poly.row(2) == {1: 1}


def test_scale_z():
    """Test that z -> z(1 - q) multiplies the z^n row by (1 - q)^n."""
    poly = QPoly(2, 4, {(1, 0): 1, (2, 0): 1})
    factor = QPoly.q_series({0: 1, 1: -1}, 4)
    expected = QPoly(2, 4, {(1, 0): 1, (1, 1): -1, (2, 0): 1, (2, 1): -2, (2, 2): 1})
    assert poly.scale_z(factor) == expected


def test_first_difference():
    left = QPoly.q_series({0: 1, 3: 2}, 5)
    right = QPoly.q_series({0: 1, 3: 1}, 5)
    assert left.first_difference(left) is None
    assert left.first_difference(right) == ((0, 3), 2, 1)


def test_json_format():
    poly = QPoly(2, 6, {(0, 0): 1, (1, 2): Fraction(-3, 4), (2, 6): 5})
    payload = poly.to_payload()
    assert [(t.z, t.q, t.coeff) for t in payload.terms] == [(0, 0, "1"), (1, 2, "-3/4"), (2, 6, "5")]
    assert QPoly.from_json(poly.to_json()) == poly
    with pytest.raises(ValidationError):
        QPolyTerm(z=0, q=0, coeff="one half")
