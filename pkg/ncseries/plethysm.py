"""
Shift plethysm, plethystic inversion and enriched shift-plethystic trees.

T o_s R replaces every word X_k1 ... X_kl of T by the ordered product
(sigma^k1 R) ... (sigma^kl R). Inside a truncation context only the words
of T that lie in the same context can contribute: every factor has length
>= 1 and weight >= k_i, so a longer or heavier outer word lands outside.
"""

import logging
from collections import defaultdict
from fractions import Fraction
from typing import Dict, Union

from ncseries.algebra import add, geometric, inverse, mul, product, scale, shift
from ncseries.errors import BadConstantTerm, NoConvergence, NonzeroConstantTerm, NotInvertible
from ncseries.models.operand import PlethysmOperand
from ncseries.models.series import NCSeries, TruncationContext, Word

logger = logging.getLogger(__name__)

Operand = Union[NCSeries, PlethysmOperand]


def as_operand(inner: Operand) -> PlethysmOperand:
    if isinstance(inner, PlethysmOperand):
        return inner
    if inner.constant_term:
        raise NonzeroConstantTerm(f"plethysm needs <R, 1> = 0, got {inner.constant_term}")
    return PlethysmOperand(series=inner)


class _Substitution:
    """Products of shifted copies of R, memoized by word prefix."""

    def __init__(self, inner: NCSeries):
        self.ctx = inner.context
        self.inner = inner
        self._shifts: Dict[int, NCSeries] = {}
        self._prefixes: Dict[Word, NCSeries] = {(): NCSeries.one(self.ctx)}

    def shifted(self, k: int) -> NCSeries:
        if k not in self._shifts:
            self._shifts[k] = shift(self.inner, k)
        return self._shifts[k]

    def word(self, word: Word) -> NCSeries:
        cached = self._prefixes.get(word)
        if cached is not None:
            return cached
        head = self.word(word[:-1])
        value = mul(head, self.shifted(word[-1])) if head else head
        self._prefixes[word] = value
        return value


def word_plethysm(word: Word, inner: Operand) -> NCSeries:
    """X_k1 ... X_kl o_s R = (sigma^k1 R) ... (sigma^kl R); the empty word gives 1."""
    operand = as_operand(inner)
    return _Substitution(operand.series).word(tuple(word))


def plethysm(outer: NCSeries, inner: Operand) -> NCSeries:
    """T o_s R, the linear extension of ``word_plethysm`` over the words of T."""
    operand = as_operand(inner)
    ctx = outer.context.meet(operand.series.context)
    substitution = _Substitution(operand.series.restrict(ctx))
    total: Dict[Word, Fraction] = defaultdict(Fraction)
    for word, c in outer.restrict(ctx).items():
        for image, value in substitution.word(word).terms.items():
            total[image] += c * value
    return NCSeries._trusted(ctx, total)


def _fixed_point(label: str, ctx: TruncationContext, step) -> NCSeries:
    """
    Iterate ``step`` from 0 until two consecutive iterates agree. Every step
    used here fixes one more (length + weight) degree, hence the cap.
    """
    current = NCSeries.zero(ctx)
    for iteration in range(1, ctx.max_len + ctx.max_weight + 2):
        following = step(current)
        if following == current:
            logger.debug(f"{label}{ctx} stabilized after {iteration} steps")
            return following
        current = following
    raise NoConvergence(f"{label} did not stabilize in {ctx}")


def plethystic_inverse(inner: Operand) -> NCSeries:
    """
    Two-sided inverse under o_s, solved from T = (X0 - R+ o_s T) / alpha.
    """
    operand = as_operand(inner)
    if not operand.invertible:
        raise NotInvertible("plethystic inverse needs <R, X0> != 0")
    ctx = operand.series.context
    x0 = NCSeries.letter(0, ctx)
    tail, factor = operand.tail, 1 / operand.alpha
    return _fixed_point(
        "plethystic_inverse",
        ctx,
        lambda t: scale(factor, add(x0, scale(-1, plethysm(tail, t)))),
    )


def enriched_trees(enrichment: NCSeries, ctx: TruncationContext) -> NCSeries:
    """The M-enriched trees: the solution of A_M = X0 (M o_s A_M)."""
    if enrichment.constant_term != 1:
        raise BadConstantTerm(f"enrichment needs <M, 1> = 1, got {enrichment.constant_term}")
    ctx = enrichment.context.meet(ctx)
    enrichment = enrichment.restrict(ctx)
    x0 = NCSeries.letter(0, ctx)
    return _fixed_point("enriched_trees", ctx, lambda a: mul(x0, plethysm(enrichment, a)))


def enriched_inverse(enrichment: NCSeries) -> NCSeries:
    """X0 M^-1, the plethystic inverse of A_M."""
    return mul(NCSeries.letter(0, enrichment.context), inverse(enrichment))


# Named families


def _letter(k: int, ctx: TruncationContext) -> NCSeries:
    return NCSeries.letter(k, ctx)


def sp_trees_enriched(ctx: TruncationContext) -> NCSeries:
    """The shift-plethystic trees as A_M with M = 1/(1 - X1)."""
    return enriched_trees(geometric(_letter(1, ctx)), ctx)


def branchless_plus(ctx: TruncationContext) -> NCSeries:
    """L+ = X0 + X0X1 + X0X1X2 + ..., the (1 + X1)-enriched trees."""
    return enriched_trees(NCSeries.one(ctx) + _letter(1, ctx), ctx)


def branchless(ctx: TruncationContext) -> NCSeries:
    return NCSeries.one(ctx) + branchless_plus(ctx)


def even_branchless_plus(ctx: TruncationContext) -> NCSeries:
    """X0 + X0X2 + X0X2X4 + ..., the (1 + X2)-enriched trees."""
    return enriched_trees(NCSeries.one(ctx) + _letter(2, ctx), ctx)


def odd_branchless_plus(ctx: TruncationContext) -> NCSeries:
    return shift(even_branchless_plus(ctx), 1)


def letter_sum(ctx: TruncationContext, start: int = 0) -> NCSeries:
    """Sigma_start = X_start + X_(start+1) + ... up to the weight bound."""
    return NCSeries(ctx, {(j,): 1 for j in range(start, ctx.max_weight + 1)})


def shifted_branchless_sum(ctx: TruncationContext) -> NCSeries:
    """Sigma_0 o_s L+ = sum over j of X_j X_(j+1) ... X_(j+n-1)."""
    return plethysm(letter_sum(ctx), branchless_plus(ctx))


def shifted_branchless_enriched(ctx: TruncationContext) -> NCSeries:
    """A_{sigma L}: trees enriched with 1 + X1 + X1X2 + ..."""
    return enriched_trees(shift(branchless(ctx), 1), ctx)


def chain_enrichment(ctx: TruncationContext) -> NCSeries:
    """M = (1 - sigma L+)^-1."""
    return geometric(shift(branchless_plus(ctx), 1))


def chain_enriched(ctx: TruncationContext) -> NCSeries:
    return enriched_trees(chain_enrichment(ctx), ctx)


def decreasing_partitions_product(ctx: TruncationContext, start: int = 1) -> NCSeries:
    """prod over n = W down to ``start`` of 1/(1 - X_n), factors in that order."""
    factors = [geometric(_letter(n, ctx)) for n in range(ctx.max_weight, start - 1, -1)]
    return product(factors, ctx)


def distinct_parts_product(ctx: TruncationContext, descending: bool, sign: int = 1) -> NCSeries:
    """prod of (1 + sign X_n) for n = 1..W, ascending or descending."""
    indices = range(ctx.max_weight, 0, -1) if descending else range(1, ctx.max_weight + 1)
    return product([NCSeries.one(ctx) + _letter(n, ctx) * sign for n in indices], ctx)
