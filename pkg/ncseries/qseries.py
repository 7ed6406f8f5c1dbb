"""
q-umbral evaluation and closed-form q-series.

The umbral evaluation X_k -> z q^k turns a truncated series into a QPoly; a
word of length l and weight w lands on z^l q^w. The closed forms below are
truncated by the rule "a factor or term is included iff it can reach a
coefficient inside (max_z, max_q)", stated at each function.
"""

import logging
from fractions import Fraction
from math import comb
from typing import Callable, Dict, Literal, Optional, Sequence, Tuple

from ncseries.errors import NoConvergence, UnknownTarget
from ncseries.languages import LetterTerms, composition_spec, linked_weights, partition_spec, sp_trees_recursive
from ncseries.models.language import LinkSpec
from ncseries.models.qpoly import QPoly, product_of
from ncseries.models.series import NCSeries, TruncationContext
from ncseries.trees import path_length_distribution

logger = logging.getLogger(__name__)

Variant = Literal["first", "second"]
PathLengthSource = Literal["algebraic", "series", "oracle"]

# Residues of the Rogers-Ramanujan products, as (a, b) in prod (1 - q^(5k+a))(1 - q^(5k+b))
RR_RESIDUES: Dict[str, Tuple[int, int]] = {"first": (1, 4), "second": (2, 3)}


def umbral(series: NCSeries) -> QPoly:
    """X_k -> z q^k with max_z = L and max_q = W."""
    ctx = series.context
    terms: Dict[Tuple[int, int], Fraction] = {}
    for word, c in series.terms.items():
        degree = (len(word), sum(word))
        terms[degree] = terms.get(degree, 0) + c
    return QPoly(ctx.max_len, ctx.max_weight, terms)


def umbral_q(series: NCSeries) -> QPoly:
    """X_k -> q^k; the z-free specialization of ``umbral``."""
    return umbral(series).subst_z(1)


def linked_umbral(
    spec: LinkSpec,
    max_z: int,
    max_q: int,
    letter_terms: Optional[LetterTerms] = None,
    first: Optional[Callable[[int], bool]] = None,
) -> QPoly:
    """Umbral image of a linked language, evaluated without listing its words."""
    return QPoly(max_z, max_q, linked_weights(spec, max_z, max_q, letter_terms, first))


# Products


def q_factor(m: int, max_q: int, sign: int = -1, max_z: int = 0) -> QPoly:
    """The factor 1 + sign q^m."""
    return QPoly.one(max_z, max_q) + QPoly.monomial(0, m, max_z, max_q, sign)


def rr_product(a: int, b: int, max_q: int) -> QPoly:
    """prod over k >= 0 of (1 - q^(5k+a))(1 - q^(5k+b)), factors with exponent <= max_q."""
    if not (1 <= a <= 5 and 1 <= b <= 5):
        raise ValueError(f"residues must lie in 1..5, got ({a}, {b})")
    exponents = [e for r in (a, b) for e in range(r, max_q + 1, 5)]
    return product_of((q_factor(e, max_q) for e in exponents), 0, max_q)


def euler_product(max_q: int) -> QPoly:
    """prod over n >= 1 of (1 - q^n)."""
    return product_of((q_factor(n, max_q) for n in range(1, max_q + 1)), 0, max_q)


def partition_series(max_q: int) -> QPoly:
    """prod over n >= 1 of 1/(1 - q^n), the partition numbers."""
    return euler_product(max_q).inverse()


def q_pochhammer(n: int, max_q: int, start: int = 1, step: int = 1, sign: int = -1) -> QPoly:
    """prod over i < n of (1 + sign q^(start + i*step))."""
    return product_of((q_factor(start + i * step, max_q, sign) for i in range(n)), 0, max_q)


# Sum sides


def rr_sum_side(variant: Variant, max_z: int, max_q: int) -> QPoly:
    """
    sum over n of z^n q^(n^2 [+ n]) / ((1 - q) ... (1 - q^n)) for n <= max_z while
    the leading exponent stays <= max_q.
    """
    if variant not in RR_RESIDUES:
        raise ValueError(f"variant must be 'first' or 'second', got {variant!r}")
    extra = 0 if variant == "first" else 1
    total = QPoly.zero(max_z, max_q)
    for n in range(max_z + 1):
        lead = n * n + extra * n
        if lead > max_q:
            break
        denominator = QPoly(max_z, max_q, q_pochhammer(n, max_q).terms)
        total = total + QPoly.monomial(n, lead, max_z, max_q) / denominator
    return total


def rr_identity(variant: Variant, max_q: int) -> Tuple[QPoly, QPoly]:
    """(sum side at z = 1) * (reciprocal product) and the constant 1 it should equal."""
    sum_side = rr_sum_side(variant, max_q, max_q).subst_z(1)
    a, b = RR_RESIDUES[variant]
    return sum_side * rr_product(a, b, max_q), QPoly.one(0, max_q)


# Path lengths


def sp_trees_q(max_z: int, max_q: int) -> QPoly:
    """A(z, q) from its q-image A(z, q) = z / (1 - A(zq, q)), iterated to a fixed point."""
    z = QPoly.monomial(1, 0, max_z, max_q)
    current = QPoly.zero(max_z, max_q)
    for _ in range(max_z + 2):
        following = z * (1 - current.subst_z_zq()).inverse()
        if following == current:
            return following
        current = following
    raise NoConvergence(f"q-image of the tree equation did not stabilize at ({max_z}, {max_q})")


def path_length_coeffs(n: int, source: PathLengthSource = "algebraic") -> Dict[int, int]:
    """
    P(n, m): plane trees on n vertices by path length m, 0 <= m <= C(n, 2).

    ``algebraic`` reads the z^n row of the q-image of the tree equation,
    ``series`` the row of umbral(A) computed noncommutatively and ``oracle``
    counts enumerated trees.
    """
    if n < 1:
        raise ValueError(f"path_length_coeffs needs n >= 1, got {n}")
    top = comb(n, 2)
    if source == "oracle":
        return path_length_distribution(n)
    if source == "series":
        row = umbral(sp_trees_recursive(TruncationContext(max_len=n, max_weight=top))).row(n)
    elif source == "algebraic":
        row = sp_trees_q(n, top).row(n)
    else:
        raise UnknownTarget(f"Unknown path-length source '{source}'")
    return {m: int(c) for m, c in row.items()}


# Closed forms of the shift-plethystic identities


def _z_term(n: int, m: int, max_z: int, max_q: int, z: Optional[Fraction]) -> QPoly:
    """z^n q^m, or value^n q^m once z is specialized."""
    if z is None:
        return QPoly.monomial(n, m, max_z, max_q)
    return QPoly.monomial(0, m, 0, max_q, Fraction(z) ** n)


def _denominator(m: int, max_z: int, max_q: int, z: Optional[Fraction], weight: Optional[QPoly] = None) -> QPoly:
    """1 + z q^m [* weight], possibly with z specialized."""
    term = _z_term(1, m, max_z, max_q, z)
    if weight is not None:
        term = term * weight
    return 1 + term


def branchless_sum(max_z: int, max_q: int, z: Optional[Fraction] = None) -> QPoly:
    """
    sum over n >= 0 of q^C(n,2) z^n / prod_{k=1..n} (1 + z q^k); equals 1 + z.
    Terms run while C(n, 2) <= max_q and, unless z is specialized, n <= max_z.
    """
    out_z = 0 if z is not None else max_z
    total = QPoly.zero(out_z, max_q)
    running = QPoly.one(out_z, max_q)
    n = 0
    while comb(n, 2) <= max_q and (z is not None or n <= max_z):
        if n:
            running = running / _denominator(n, max_z, max_q, z)
        total = total + _z_term(n, comb(n, 2), max_z, max_q, z) * running
        n += 1
    return total


def rogers_odd_sum(max_z: int, max_q: int, z: Optional[Fraction] = None) -> QPoly:
    """
    sum over n >= 0 of q^(n^2) z^n / prod_{j=0..n} (1 + z q^(2j+1)); equals 1.
    Terms run while n^2 <= max_q and, unless z is specialized, n <= max_z.
    """
    out_z = 0 if z is not None else max_z
    total = QPoly.zero(out_z, max_q)
    running = QPoly.one(out_z, max_q)
    n = 0
    while n * n <= max_q and (z is not None or n <= max_z):
        running = running / _denominator(2 * n + 1, max_z, max_q, z)
        total = total + _z_term(n, n * n, max_z, max_q, z) * running
        n += 1
    return total


def shifted_branchless_sums(max_z: int, max_q: int, rescaled: bool = False) -> QPoly:
    """
    The double sum attached to Sigma_0 o_s L+:

        sum_{n>=1} z^n q^C(n,2) (1-q)^n sum_{j>=0} q^(jn) / prod_{k=1..n} (1 + z q^(j+k) (1-q)) = z

    and with ``rescaled`` (z(1 - q) -> z) the same sum without the (1 - q)
    factors, which equals z / (1 - q). Only (n, j) with n <= max_z and
    C(n, 2) + jn <= max_q contribute.
    """
    weight = None if rescaled else q_factor(1, max_q, max_z=max_z)
    total = QPoly.zero(max_z, max_q)
    j = 0
    while j <= max_q:
        running = QPoly.one(max_z, max_q)
        for n in range(1, max_z + 1):
            lead = comb(n, 2) + j * n
            if lead > max_q:
                break
            running = running / _denominator(j + n, max_z, max_q, None, weight)
            term = QPoly.monomial(n, lead, max_z, max_q) * running
            if weight is not None:
                term = term * weight**n
            total = total + term
        j += 1
    return total


def signed_letters(sign: int = -1) -> LetterTerms:
    """X_k -> sign q^k (z-free)."""
    return lambda k: ((0, k, sign),)


def signed_composition_series(shifted: bool, max_q: int) -> QPoly:
    """1 + sum_n q^n sum_k (-1)^k |C(1)[n, k]| (parts >= 2 when ``shifted``)."""
    spec = composition_spec(1, min_part=2 if shifted else 1)
    return linked_umbral(spec, 0, max_q, signed_letters())


def closing_composition_series(max_q: int) -> QPoly:
    """sum over kappa in C(1) of prod q^(kappa_i) (1 - q^(kappa_i + 1))."""
    return linked_umbral(composition_spec(1), 0, max_q, lambda k: ((0, k, 1), (0, 2 * k + 1, -1)))


def closing_partition_series(max_q: int) -> QPoly:
    """sum over lambda in P2 of prod q^(lambda_i) (q^(lambda_i + 1) - 1)."""
    return linked_umbral(partition_spec(2), 0, max_q, lambda k: ((0, 2 * k + 1, 1), (0, k, -1)))


def implicit_chain_rhs(series_q: QPoly) -> QPoly:
    """z + sum over n >= 2 of A(z) A(zq) ... A(zq^(n-1)) for a QPoly A without constant term."""
    max_z, max_q = series_q.max_z, series_q.max_q
    total = QPoly.monomial(1, 0, max_z, max_q)
    running = series_q
    for n in range(2, max_z + 1):
        running = running * series_q.subst_z_zq(n - 1)
        if running.is_zero():
            break
        total = total + running
    return total


QSERIES_TARGETS: Sequence[str] = ("pathlength", "rr-product", "rr-sum", "sptrees")
