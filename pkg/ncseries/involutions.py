"""
Sign-reversing involutions behind the K-duality formulas.

``involution_phi`` acts on L x L! and proves L^g . L! = 1; ``involution_psi``
acts on N x L! and proves N^g . L! = N!. Both move one letter across the
boundary of the pair, so the concatenation never changes. The ``check_*``
functions run them exhaustively over every pair whose concatenation lies in
a truncation context.
"""

import logging
from typing import Callable, Iterator, List, Tuple

from ncseries.algebra import mul, series_from_terms, sign_by_length
from ncseries.errors import InvalidPair
from ncseries.languages import k_dual, linked_language, module_dual, module_language
from ncseries.models.language import InvolutionReport, LinkSpec, ModuleSpec
from ncseries.models.series import NCSeries, TruncationContext, Word, render_word

logger = logging.getLogger(__name__)

Pair = Tuple[Word, Word]

MAX_REPORTED_FAILURES = 10


def _move_left(pair: Pair) -> Pair:
    left, right = pair
    return left + right[:1], right[1:]


def _move_right(pair: Pair) -> Pair:
    left, right = pair
    return left[:-1], left[-1:] + right


def _phi(left: Word, right: Word, spec: LinkSpec) -> Pair:
    if not left and not right:
        return left, right
    if not left:
        return _move_left((left, right))
    if not right:
        return _move_right((left, right))
    if spec.link(left[-1], right[0]):
        return _move_left((left, right))
    return _move_right((left, right))


def _psi(left: Word, right: Word, mspec: ModuleSpec) -> Pair:
    if len(left) == 1:
        if right and mspec.head_link(left[0], right[0]):
            return _move_left((left, right))
        return left, right
    if right and mspec.body.link(left[-1], right[0]):
        return _move_left((left, right))
    return _move_right((left, right))


def involution_phi(pair: Pair, spec: LinkSpec) -> Pair:
    """
    phi(w, w'): move the first letter of w' to the end of w when the boundary
    pair is a link of B (or w = 1), otherwise move the last letter of w to the
    front of w'. (1, 1) is the only fixed point.
    """
    left, right = tuple(pair[0]), tuple(pair[1])
    if not spec.contains(left) or not k_dual(spec).contains(right):
        raise InvalidPair(f"({render_word(left)}, {render_word(right)}) is not in L x L! for {spec.name}")
    return _phi(left, right, spec)


def involution_psi(pair: Pair, mspec: ModuleSpec) -> Pair:
    """
    psi(w, w') on N x L!.

    For len(w) >= 2 it behaves like phi with the links B. For a single head
    letter w = a it moves the first letter of w' onto a when (a, w'_1) is in C
    and otherwise leaves the pair fixed.
    """
    left, right = tuple(pair[0]), tuple(pair[1])
    if not mspec.contains(left) or not k_dual(mspec.body).contains(right):
        raise InvalidPair(f"({render_word(left)}, {render_word(right)}) is not in N x L! for {mspec.name}")
    return _psi(left, right, mspec)


def _pairs(first: NCSeries, second: NCSeries, ctx: TruncationContext) -> Iterator[Pair]:
    """Pairs whose concatenation lies inside ``ctx``."""
    for left in first.words():
        for right in second.words():
            if ctx.admits(left + right):
                yield left, right


def _check(
    name: str,
    pairs: List[Pair],
    involution: Callable[[Pair], Pair],
    sign: Callable[[Pair], int],
    in_domain: Callable[[Pair], bool],
    is_expected_fixed: Callable[[Pair], bool],
    expected_sum: NCSeries,
    product: NCSeries,
) -> InvolutionReport:
    failures: List[str] = []
    fixed: List[Pair] = []

    def fail(message: str) -> None:
        if len(failures) < MAX_REPORTED_FAILURES:
            failures.append(message)

    for pair in pairs:
        label = f"({render_word(pair[0])}, {render_word(pair[1])})"
        image = involution(pair)
        if image[0] + image[1] != pair[0] + pair[1]:
            fail(f"{label} changes the concatenated word")
        if not in_domain(image):
            fail(f"image of {label} leaves the domain")
            continue
        if involution(image) != pair:
            fail(f"{label} is not mapped back onto itself")
        if image == pair:
            fixed.append(pair)
            if not is_expected_fixed(pair):
                fail(f"{label} is an unexpected fixed point")
        elif sign(image) != -sign(pair):
            fail(f"{label} keeps its sign")
        elif is_expected_fixed(pair):
            fail(f"{label} should be fixed")

    fixed_sum = series_from_terms(((p[0] + p[1], sign(p)) for p in fixed), expected_sum.context)
    if fixed_sum != expected_sum:
        fail(f"signed sum over fixed points is {fixed_sum}, expected {expected_sum}")
    if product != expected_sum:
        fail(f"graded product is {product}, expected {expected_sum}")
    report = InvolutionReport(name=name, pairs_checked=len(pairs), fixed_points=fixed, failures=failures)
    logger.debug(f"{name}: {report.pairs_checked} pairs, {len(fixed)} fixed, passed={report.passed}")
    return report


def check_phi(spec: LinkSpec, ctx: TruncationContext) -> InvolutionReport:
    """Exhaustive check of phi on L x L!; fixed points must be exactly {(1, 1)}."""
    dual = k_dual(spec)
    language, dual_language = linked_language(spec, ctx), linked_language(dual, ctx)
    pairs = list(_pairs(language, dual_language, ctx))
    return _check(
        name=f"phi[{spec.name}]",
        pairs=pairs,
        involution=lambda p: _phi(p[0], p[1], spec),
        sign=lambda p: -1 if len(p[0]) % 2 else 1,
        in_domain=lambda p: spec.contains(p[0]) and dual.contains(p[1]),
        is_expected_fixed=lambda p: p == ((), ()),
        expected_sum=NCSeries.one(ctx),
        product=mul(sign_by_length(language), dual_language),
    )


def check_psi(mspec: ModuleSpec, ctx: TruncationContext) -> InvolutionReport:
    """
    Exhaustive check of psi on N x L!. The fixed points must be the pairs
    (a, w') with a single head letter a and either w' = 1 or (a, w'_1) not in C,
    and their sum must be N!.
    """
    dual = k_dual(mspec.body)
    module, dual_language = module_language(mspec, ctx), linked_language(dual, ctx)
    pairs = list(_pairs(module, dual_language, ctx))
    return _check(
        name=f"psi[{mspec.name}]",
        pairs=pairs,
        involution=lambda p: _psi(p[0], p[1], mspec),
        sign=lambda p: 1 if len(p[0]) % 2 else -1,
        in_domain=lambda p: mspec.contains(p[0]) and dual.contains(p[1]),
        is_expected_fixed=lambda p: len(p[0]) == 1 and (not p[1] or not mspec.head_link(p[0][0], p[1][0])),
        expected_sum=module_language(module_dual(mspec), ctx),
        product=mul(module_graded(module), dual_language),
    )


def module_graded(module: NCSeries) -> NCSeries:
    """N^g: each word signed by (-1)^(len - 1)."""
    return -sign_by_length(module)
