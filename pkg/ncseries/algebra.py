"""
Exact arithmetic on truncated noncommutative series.

All operations are pure: they take immutable ``NCSeries`` values and return
new ones. When two operands carry different truncation contexts the result
lives on their componentwise minimum.
"""

import logging
from collections import defaultdict
from fractions import Fraction
from typing import Dict, Iterable, List, Sequence, Tuple

from ncseries.errors import NoConvergence, NonzeroConstantTerm, ZeroConstantTerm
from ncseries.models.series import NCSeries, Number, TruncationContext, Word, word_stats

logger = logging.getLogger(__name__)

__all__ = [
    "word_stats",
    "series_from_terms",
    "add",
    "scale",
    "mul",
    "product",
    "inverse",
    "geometric",
    "shift",
    "sign_by_length",
    "coeff",
    "eq_trunc",
]


def series_from_terms(pairs: Iterable[Tuple[Iterable[int], Number]], ctx: TruncationContext) -> NCSeries:
    """
    Build a series from ``(word, coefficient)`` pairs.

    Words outside ``ctx`` are dropped, repeated words are merged by summing
    and zero coefficients disappear.
    """
    merged: Dict[Word, Fraction] = defaultdict(Fraction)
    for word, value in pairs:
        word = tuple(word)
        if ctx.admits(word):
            merged[word] += Fraction(value)
    return NCSeries(ctx, merged)


def add(left: NCSeries, right: NCSeries) -> NCSeries:
    ctx = left.context.meet(right.context)
    total: Dict[Word, Fraction] = {w: c for w, c in left.terms.items() if ctx.admits(w)}
    for word, value in right.terms.items():
        if ctx.admits(word):
            total[word] = total.get(word, 0) + value
    return NCSeries._trusted(ctx, total)


def scale(factor: Number, series: NCSeries) -> NCSeries:
    factor = Fraction(factor)
    if not factor:
        return NCSeries.zero(series.context)
    return NCSeries._trusted(series.context, {w: factor * c for w, c in series.terms.items()})


def _buckets(series: NCSeries, ctx: TruncationContext) -> List[Tuple[int, int, List[Tuple[Word, Fraction]]]]:
    """Group terms by (length, weight) so products can skip whole buckets."""
    grouped: Dict[Tuple[int, int], List[Tuple[Word, Fraction]]] = defaultdict(list)
    for word, value in series.terms.items():
        length, weight = word_stats(word)
        if length <= ctx.max_len and weight <= ctx.max_weight:
            grouped[(length, weight)].append((word, value))
    return sorted((length, weight, entries) for (length, weight), entries in grouped.items())


def mul(left: NCSeries, right: NCSeries) -> NCSeries:
    """Cauchy product: <R.S, w> is the sum over factorizations w = uv of <R,u><S,v>."""
    ctx = left.context.meet(right.context)
    max_len, max_weight = ctx.max_len, ctx.max_weight
    right_buckets = _buckets(right, ctx)
    out: Dict[Word, Fraction] = defaultdict(Fraction)
    for u_len, u_weight, u_entries in _buckets(left, ctx):
        for v_len, v_weight, v_entries in right_buckets:
            if u_len + v_len > max_len:
                break
            if u_weight + v_weight > max_weight:
                continue
            for u, a in u_entries:
                for v, b in v_entries:
                    out[u + v] += a * b
    return NCSeries._trusted(ctx, out)


def product(factors: Sequence[NCSeries], ctx: TruncationContext) -> NCSeries:
    """Ordered product of ``factors`` (left to right); the empty product is 1."""
    result = NCSeries.one(ctx)
    for factor in factors:
        result = mul(result, factor)
    return result


def _solve_inverse(series: NCSeries, alpha: Fraction) -> NCSeries:
    """
    Solve S = (1/alpha)(1 - R+ S) one length level at a time.

    Every word of R+ = R - alpha has length >= 1, so the coefficients of
    S on words of length n only depend on levels below n.
    """
    ctx = series.context
    inv_alpha = 1 / alpha
    tail = sorted(
        ((word, len(word), sum(word), value) for word, value in series.terms.items() if word),
        key=lambda entry: entry[1],
    )
    levels: List[List[Tuple[Word, int, Fraction]]] = [[((), 0, inv_alpha)]]
    result: Dict[Word, Fraction] = {(): inv_alpha}
    for length in range(1, ctx.max_len + 1):
        acc: Dict[Word, Fraction] = defaultdict(Fraction)
        for u, u_len, u_weight, a in tail:
            if u_len > length:
                break
            for v, v_weight, b in levels[length - u_len]:
                if u_weight + v_weight <= ctx.max_weight:
                    acc[u + v] += a * b
        level = []
        for word, value in acc.items():
            if value:
                level.append((word, sum(word), -inv_alpha * value))
                result[word] = -inv_alpha * value
        levels.append(level)
    return NCSeries._trusted(ctx, result)


def inverse(series: NCSeries) -> NCSeries:
    """
    Two-sided inverse of a series with nonzero constant term alpha.

    The result equals (1/alpha) * sum_n (1 - R/alpha)^n; the powers stop
    contributing after L + W steps because each one raises the minimal
    (length + weight) degree. The solution is certified by applying the
    fixed-point step once more and checking that nothing changes.
    """
    alpha = series.constant_term
    if not alpha:
        raise ZeroConstantTerm("series has zero constant term and is not invertible")
    solution = _solve_inverse(series, alpha)
    tail = add(series, NCSeries(series.context, {(): -alpha}))
    step = scale(1 / alpha, add(NCSeries.one(series.context), scale(-1, mul(tail, solution))))
    if not eq_trunc(step, solution):
        raise NoConvergence("inverse did not reach a fixed point of S = (1 - R+ S) / alpha")
    return solution


def geometric(series: NCSeries) -> NCSeries:
    """1/(1 - B) = sum of the powers of B, for B without constant term."""
    if series.constant_term:
        raise NonzeroConstantTerm(f"geometric() needs <B, 1> = 0, got {series.constant_term}")
    return inverse(add(NCSeries.one(series.context), scale(-1, series)))


def shift(series: NCSeries, s: int = 1) -> NCSeries:
    """Apply the shift X_i -> X_{i+s}; words pushed above the weight bound vanish."""
    assert s >= 0, f"shift amount must be nonnegative, got {s}"
    if s == 0:
        return series
    ctx = series.context
    shifted = {}
    for word, value in series.terms.items():
        if sum(word) + s * len(word) <= ctx.max_weight:
            shifted[tuple(k + s for k in word)] = value
    return NCSeries._trusted(ctx, shifted)


def sign_by_length(series: NCSeries) -> NCSeries:
    """Multiply the coefficient of each word w by (-1)^len(w)."""
    return NCSeries._trusted(
        series.context,
        {w: (-c if len(w) % 2 else c) for w, c in series.terms.items()},
    )


def coeff(series: NCSeries, word: Iterable[int]) -> Fraction:
    return series.coeff(word)


def eq_trunc(left: NCSeries, right: NCSeries) -> bool:
    """Compare canonical forms on the meet of both contexts."""
    ctx = left.context.meet(right.context)
    return dict(left.restrict(ctx).terms) == dict(right.restrict(ctx).terms)


def first_difference(left: NCSeries, right: NCSeries):
    """First word (canonical order) where the two series differ, or None."""
    ctx = left.context.meet(right.context)
    a, b = left.restrict(ctx), right.restrict(ctx)
    words = sorted(set(a.terms) | set(b.terms), key=lambda w: (len(w), sum(w), w))
    for word in words:
        if a.coeff(word) != b.coeff(word):
            return word, a.coeff(word), b.coeff(word)
    return None
