"""
Tests for the truncated series algebra.

This module contains tests for the series model, the ring operations,
inversion, the shift and the JSON series format.
"""

import json
import random
from fractions import Fraction

import pytest
from pydantic import ValidationError

from ncseries.algebra import (
    add,
    eq_trunc,
    first_difference,
    geometric,
    inverse,
    mul,
    product,
    series_from_terms,
    shift,
    sign_by_length,
)
from ncseries.errors import NonzeroConstantTerm, ZeroConstantTerm
from ncseries.models.series import NCSeries, TruncationContext

CTX = TruncationContext.of(3, 4)


def X(*word: int) -> NCSeries:
    return NCSeries.monomial(word, CTX)


def test_context_validation():
    """Test that truncation contexts reject negative bounds."""
    assert TruncationContext.of(0, 0).admits(())
    assert not CTX.admits((1, 1, 1, 1)), "length 4 is outside (3, 4)"
    assert not CTX.admits((5,)), "weight 5 is outside (3, 4)"
    with pytest.raises(ValidationError):
        TruncationContext(max_len=-1, max_weight=3)


def test_canonical_form():
    """Test that terms outside the context and zero coefficients are dropped."""
    series = series_from_terms([((1,), 1), ((1,), -1), ((0, 1), 2), ((5,), 1), ((), 1)], CTX)
    assert series.words() == [(), (0, 1)], f"Unexpected words {series.words()}"
    assert str(series) == "1 + 2 X0X1"
    assert str(1 - X(1) + Fraction(1, 2) * X(0, 1)) == "1 - X1 + 1/2 X0X1"
    assert str(NCSeries.zero(CTX)) == "0"


def test_product_is_noncommutative():
    """Test that the Cauchy product keeps the order of letters."""
    left, right = mul(X(0), X(1)), mul(X(1), X(0))
    assert left != right, "X0X1 and X1X0 must differ"
    assert left.coeff((0, 1)) == 1 and right.coeff((1, 0)) == 1
    square = mul(X(0) + X(1), X(0) + X(1))
    assert square.words() == [(0, 0), (0, 1), (1, 0), (1, 1)]


def test_product_truncates():
    """Test that products never leave the context."""
    power = product([X(1), X(1), X(1), X(1)], CTX)
    assert power.is_zero(), "X1^4 has length 4 and must vanish in (3, 4)"
    assert product([], CTX) == NCSeries.one(CTX)


def test_inverse_is_two_sided():
    """Test that the inverse of a series with constant term 2 is exact."""
    series = 2 + X(1)
    inv = inverse(series)
    assert inv.coeff(()) == Fraction(1, 2)
    assert inv.coeff((1,)) == Fraction(-1, 4)
    assert inv.coeff((1, 1)) == Fraction(1, 8)
    assert inv.coeff((1, 1, 1)) == Fraction(-1, 16)
    assert mul(series, inv) == NCSeries.one(CTX)
    assert mul(inv, series) == NCSeries.one(CTX)


def test_inverse_noncommuting_letters():
    """Test the inverse of 1 - X0 - X1, the sum of all words."""
    inv = inverse(1 - X(0) - X(1))
    assert all(c == 1 for c in inv.terms.values()), "every word over {X0, X1} has coefficient 1"
    assert inv.coeff((1, 0, 1)) == 1
    assert len(inv) == 15, "all 15 words of length <= 3 over {X0, X1} fit in (3, 4)"


def test_inverse_errors():
    """Test that inverting a series without constant term fails."""
    with pytest.raises(ZeroConstantTerm):
        inverse(X(1))
    with pytest.raises(NonzeroConstantTerm):
        geometric(1 + X(1))


def test_geometric():
    """Test that 1/(1 - X1) is the sum of the powers of X1."""
    assert geometric(X(1)) == 1 + X(1) + X(1, 1) + X(1, 1, 1)
    assert geometric(X(1)) == inverse(1 - X(1))


def test_shift():
    """Test that the shift raises letters and drops words above the weight bound."""
    assert shift(X(0, 1) + X(2), 1) == X(1, 2) + X(3)
    assert shift(X(2, 2), 1).is_zero(), "X3X3 has weight 6"
    assert shift(X(0), 0) == X(0)
    assert shift(shift(X(0, 0), 1), 1) == shift(X(0, 0), 2)


def test_sign_by_length():
    series = 1 + X(1) + X(1, 2) + X(0, 0, 1)
    assert sign_by_length(series) == 1 - X(1) + X(1, 2) - X(0, 0, 1)


def test_mixed_contexts_meet():
    """Test that binary operations live on the meet of the contexts."""
    wide = NCSeries(TruncationContext.of(5, 10), {(3, 3): 1, (1,): 1})
    total = wide + X(0)
    assert total.context == CTX
    assert total.words() == [(0,), (1,)], "X3X3 has weight 6 and is outside the meet"
    assert eq_trunc(wide, X(1))


def test_first_difference():
    assert first_difference(X(1), X(1)) is None
    word, left, right = first_difference(X(0) + X(1, 1), X(0) + 2 * X(1, 1))
    assert (word, left, right) == ((1, 1), 1, 2)


def test_json_format():
    """Test that the JSON series format keeps exact coefficients and the context."""
    series = Fraction(1, 3) - X(0, 1) + 7 * X(2)
    restored = NCSeries.from_json(series.to_json())
    assert restored == series
    assert restored.context == CTX
    assert restored.coeff(()) == Fraction(1, 3)


def test_json_coefficient_strings():
    """Test that integers are written plainly and other rationals as p/q."""
    payload = json.loads((Fraction(-1, 2) * X(1) + 3 * X(0, 1)).to_json())
    assert {tuple(t["word"]): t["coeff"] for t in payload["terms"]} == {(1,): "-1/2", (0, 1): "3"}


RANDOM_CTX = TruncationContext.of(4, 8)


def random_series(rng: random.Random) -> NCSeries:
    """Up to six random words of length 0..4 over X0..X3 with small rational coefficients."""
    terms = {}
    for _ in range(rng.randint(1, 6)):
        word = tuple(rng.randint(0, 3) for _ in range(rng.randint(0, 4)))
        terms[word] = Fraction(rng.randint(-3, 3), rng.randint(1, 3))
    return NCSeries(RANDOM_CTX, terms)


def convolution(left: NCSeries, right: NCSeries) -> NCSeries:
    """The product by brute force over every pair of words."""
    pairs = [
        (u + v, a * b)
        for u, a in left.terms.items()
        for v, b in right.terms.items()
    ]
    return series_from_terms(pairs, left.context.meet(right.context))


@pytest.mark.parametrize("seed", range(10))
def test_product_matches_word_pair_convolution(seed):
    rng = random.Random(seed)
    left, right = random_series(rng), random_series(rng)
    assert mul(left, right) == convolution(left, right), f"product differs from the convolution for seed {seed}"


@pytest.mark.parametrize("seed", range(10))
def test_product_is_associative(seed):
    rng = random.Random(seed)
    first, second, third = (random_series(rng) for _ in range(3))
    assert mul(mul(first, second), third) == mul(first, mul(second, third)), f"associativity fails for seed {seed}"


@pytest.mark.parametrize("seed", range(10))
def test_shift_is_an_algebra_map(seed):
    """Test that the shift respects sums and products, truncation included."""
    rng = random.Random(seed)
    left, right = random_series(rng), random_series(rng)
    for s in (1, 2):
        assert shift(mul(left, right), s) == mul(shift(left, s), shift(right, s)), f"shift by {s} breaks products"
        assert shift(add(left, right), s) == add(shift(left, s), shift(right, s)), f"shift by {s} breaks sums"
