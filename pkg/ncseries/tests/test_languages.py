"""
Tests for linked languages, modules, tree languages and hatted sums.
"""

import random

import pytest

from ncseries.algebra import inverse, mul, sign_by_length
from ncseries.languages import (
    composition_module_spec,
    composition_spec,
    compositions,
    excluded_partitions,
    hatted_signed_sum,
    hatted_signed_sums,
    iter_compositions,
    k_dual,
    linked_language,
    local_minima_factorization,
    module_dual,
    module_language,
    partition_spec,
    partitions_m_distinct,
    random_link_spec,
    random_module_spec,
    same_spec,
    sp_trees_cf,
    sp_trees_oracle,
    sp_trees_recursive,
)
from ncseries.models.series import NCSeries, TruncationContext


def test_compositions_with_small_risings():
    """Test the expansion of C(1) at (2, 3)."""
    c1 = compositions(1, TruncationContext.of(2, 3))
    assert str(c1) == "1 + X1 + X2 + X3 + X1X1 + X1X2 + X2X1"


def test_composition_membership():
    c1 = compositions(1, TruncationContext.of(5, 18))
    assert c1.coeff((5, 6, 7)) == 1, "5 -> 6 -> 7 only rises by 1"
    assert c1.coeff((1, 3)) == 0, "1 -> 3 rises by 2"
    assert composition_spec(1).contains((3, 1, 2, 3))
    assert not composition_spec(0).contains((1, 2))


def test_partitions_m_distinct():
    p2 = partitions_m_distinct(2, TruncationContext.of(3, 10))
    assert p2.coeff((1, 3, 6)) == 1
    assert p2.coeff((1, 2)) == 0, "parts of a 2-distinct partition differ by at least 2"
    assert p2.coeff((3, 1)) == 0, "partitions are written in increasing order"


def test_module_n():
    """Test that N keeps compositions with first part >= 2, later parts may be 1."""
    module = module_language(composition_module_spec(), TruncationContext.of(2, 5))
    expected = {
        (2,), (3,), (4,), (5,),
        (2, 1), (3, 1), (4, 1), (2, 2), (2, 3), (3, 2),
    }
    assert set(module.words()) == expected, f"Unexpected module words {module.words()}"
    assert module.constant_term == 0
    assert module_language(composition_module_spec(), TruncationContext.of(0, 5)).is_zero()


def test_k_dual_of_compositions():
    """Test that the K-dual of C(m) is P_(m+1) and that duality is an involution."""
    for m in range(3):
        assert same_spec(k_dual(composition_spec(m)), partition_spec(m + 1), 12), f"K-dual of C({m})"
    spec = composition_spec(1)
    assert k_dual(spec).name == "C(1)!"
    assert k_dual(k_dual(spec)).name == spec.name
    assert same_spec(k_dual(k_dual(spec)), spec, 12)


def test_k_duality_formula():
    """Test that (C(1)^g)^-1 is the language of 2-distinct partitions."""
    ctx = TruncationContext.of(5, 12)
    c1 = compositions(1, ctx)
    assert inverse(sign_by_length(c1)) == partitions_m_distinct(2, ctx)


def test_module_dual():
    ctx = TruncationContext.of(4, 10)
    mspec = composition_module_spec()
    dual = module_dual(mspec)
    assert dual.name == "N!"
    assert module_dual(dual).name == "N"
    module = module_language(mspec, ctx)
    graded = -sign_by_length(module)
    p2 = linked_language(k_dual(mspec.body), ctx)
    assert mul(graded, p2) == module_language(dual, ctx)


def test_random_specs_are_seeded():
    """Test that random link sets only depend on the seed."""
    ctx = TruncationContext.of(3, 8)
    first = linked_language(random_link_spec(random.Random(7)), ctx)
    second = linked_language(random_link_spec(random.Random(7)), ctx)
    assert first == second, "seed 7 must reproduce the same language"
    for seed in range(5):
        spec = random_link_spec(random.Random(seed))
        language = linked_language(spec, ctx)
        dual = linked_language(k_dual(spec), ctx)
        assert mul(sign_by_length(language), dual) == NCSeries.one(ctx), f"K-duality fails for seed {seed}"
        mspec = random_module_spec(random.Random(seed))
        assert all(mspec.body.alphabet(k) for k in range(1, 7) if mspec.head_alphabet(k))


def test_tree_language_agrees():
    """Test that the recursive, continued-fraction and enumerated tree languages agree."""
    ctx = TruncationContext.of(5, 10)
    recursive = sp_trees_recursive(ctx)
    assert recursive == sp_trees_cf(ctx.max_weight, ctx)
    assert recursive == sp_trees_oracle(ctx)


def test_tree_language_small():
    small = sp_trees_recursive(TruncationContext.of(4, 6))
    assert len(small) == 9, f"expected 9 tree words, got {small}"
    assert small.words()[:3] == [(0,), (0, 1), (0, 1, 1)]
    assert str(sp_trees_recursive(TruncationContext.of(1, 0))) == "X0"


def test_iter_compositions():
    assert set(iter_compositions(3)) == {(3,), (2, 1), (1, 2), (1, 1, 1)}
    assert set(iter_compositions(4, min_part=2)) == {(4,), (2, 2)}
    assert list(iter_compositions(0)) == []


def test_excluded_partitions():
    assert excluded_partitions(10, True) == [[7, 3], [8, 2]]
    assert excluded_partitions(11, True) == [[8, 3]]
    assert excluded_partitions(5, False) == [[4, 1]]


@pytest.mark.parametrize(
    "n, per_k, excluded",
    [
        (10, [-1, 2, -7, 7, -1], [[7, 3], [8, 2]]),
        (11, [-1, 4, -9, 11, -5], [[8, 3]]),
    ],
)
def test_hatted_tables(n, per_k, excluded):
    """Test the signed counts of the shifted hatted sets at n = 10 and 11."""
    report = hatted_signed_sum(n, shifted=True)
    assert report.per_k == per_k, f"per-k weights at n={n}: {report.per_k}"
    assert report.excluded == excluded
    assert report.total == 0


def test_hatted_small_and_invalid():
    report = hatted_signed_sum(2, shifted=True)
    assert report.per_k == [0] and report.total == 0
    with pytest.raises(ValueError):
        hatted_signed_sum(1, shifted=True)


def test_hatted_totals_vanish():
    for shifted in (False, True):
        nonzero = {r.n: r.total for r in hatted_signed_sums(30, shifted) if r.total}
        assert not nonzero, f"hatted totals must vanish (shifted={shifted}): {nonzero}"


def test_local_minima_factorization():
    word = tuple(int(d) for d in "56763454343342332")
    segments = local_minima_factorization(word)
    assert ["".join(map(str, s)) for s in segments] == ["5676", "3454", "34", "3", "34", "233", "2"]
    assert [s[0] for s in segments] == [5, 3, 3, 3, 3, 2, 2]
    assert local_minima_factorization(()) == []
