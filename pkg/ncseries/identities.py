"""
Identity checkers.

Every checker evaluates both sides of one identity exactly inside the
requested bounds and returns an ``IdentityReport``. Noncommutative
identities are compared word by word at (max_len, max_weight); q-identities
are compared degree by degree at (max_z, max_q). The first disagreement is
kept as the report's discrepancy, the remaining checks still run.

Checkers are registered under hyphenated identifiers with ``register``;
``check_identity`` resolves aliases (underscores, a ``-thm`` suffix) and
runs one of them.
"""

import logging
import random
from math import comb
from typing import Callable, Dict, List, NamedTuple, Optional

from ncseries import qseries
from ncseries.algebra import first_difference, geometric, inverse, mul, product, shift, sign_by_length
from ncseries.catalog import named_series
from ncseries.config import settings
from ncseries.errors import UnknownIdentity
from ncseries.involutions import check_phi, check_psi, module_graded
from ncseries.languages import (
    composition_module_spec,
    composition_spec,
    decreasing_partition_spec,
    hatted_signed_sums,
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
)
from ncseries.models.language import InvolutionReport, PlaneTree
from ncseries.models.qpoly import QPoly
from ncseries.models.report import Bounds, Discrepancy, IdentityReport
from ncseries.models.series import NCSeries, TruncationContext, Word, render_word
from ncseries.plethysm import (
    decreasing_partitions_product,
    distinct_parts_product,
    enriched_inverse,
    enriched_trees,
    plethysm,
    plethystic_inverse,
)
from ncseries.trees import catalan

logger = logging.getLogger(__name__)

Checker = Callable[[Bounds, int], IdentityReport]


class IdentityEntry(NamedTuple):
    description: str
    check: Checker


IDENTITIES: Dict[str, IdentityEntry] = {}

# Rows z^1..z^6 of the path-length expansion of umbral(A): {path length: trees}
PATH_LENGTH_ROWS: Dict[int, Dict[int, int]] = {
    1: {0: 1},
    2: {1: 1},
    3: {2: 1, 3: 1},
    4: {3: 1, 4: 2, 5: 1, 6: 1},
    5: {4: 1, 5: 3, 6: 3, 7: 3, 8: 2, 9: 1, 10: 1},
    6: {5: 1, 6: 4, 7: 6, 8: 7, 9: 7, 10: 5, 11: 5, 12: 3, 13: 2, 14: 1, 15: 1},
}

# Trees are only enumerated up to this size; larger rows use the algebra alone.
ORACLE_MAX_VERTICES = 10

# (n, shifted) -> (signed counts by number of parts, excluded compositions)
TABLE_ANCHORS = {
    (10, True): ([-1, 2, -7, 7, -1], [[7, 3], [8, 2]]),
    (11, True): ([-1, 4, -9, 11, -5], [[8, 3]]),
}

RANDOM_SPECS = 20
RANDOM_CONTEXT = TruncationContext(max_len=4, max_weight=10)
INVOLUTION_SAMPLES = 5
INVOLUTION_CONTEXT = TruncationContext(max_len=4, max_weight=8)


def register(identity: str, description: str) -> Callable[[Checker], Checker]:
    def decorator(check: Checker) -> Checker:
        IDENTITIES[identity] = IdentityEntry(description, check)
        return check

    return decorator


class _Comparison:
    """Collects the checks of one identity and keeps the first discrepancy."""

    def __init__(self, identity: str, orders: Dict[str, int]):
        self.identity = identity
        self.orders = orders
        self.checks: List[str] = []
        self.discrepancy: Optional[Discrepancy] = None

    def _record(self, label: str, discrepancy: Optional[Discrepancy]) -> bool:
        self.checks.append(label)
        if discrepancy is None:
            return True
        logger.debug(f"{self.identity}: '{label}' disagrees at {discrepancy.location}")
        if self.discrepancy is None:
            self.discrepancy = discrepancy
        return False

    def series(self, label: str, expected: NCSeries, actual: NCSeries) -> bool:
        difference = first_difference(expected, actual)
        if difference is None:
            return self._record(label, None)
        word, a, b = difference
        location = f"{label}: coefficient of {render_word(word)}"
        return self._record(label, Discrepancy(location=location, expected=str(a), actual=str(b)))

    def qpoly(self, label: str, expected: QPoly, actual: QPoly) -> bool:
        difference = expected.first_difference(actual)
        if difference is None:
            return self._record(label, None)
        (n, m), a, b = difference
        location = f"{label}: coefficient of z^{n} q^{m}"
        return self._record(label, Discrepancy(location=location, expected=str(a), actual=str(b)))

    def value(self, label: str, expected: object, actual: object) -> bool:
        if expected == actual:
            return self._record(label, None)
        return self._record(label, Discrepancy(location=label, expected=str(expected), actual=str(actual)))

    def involution(self, report: InvolutionReport) -> bool:
        if report.passed:
            return self._record(report.name, None)
        return self._record(
            report.name,
            Discrepancy(location=report.name, expected="no failures", actual=report.failures[0]),
        )

    def report(self, detail: str = "") -> IdentityReport:
        return IdentityReport(
            identity=self.identity,
            passed=self.discrepancy is None,
            orders=self.orders,
            checks=self.checks,
            discrepancy=self.discrepancy,
            detail=detail,
        )


def _series_orders(bounds: Bounds) -> Dict[str, int]:
    return {"max_len": bounds.max_len, "max_weight": bounds.max_weight}


def _q_orders(bounds: Bounds) -> Dict[str, int]:
    return {"max_z": bounds.max_z, "max_q": bounds.max_q}


def _letter(k: int, ctx: TruncationContext) -> NCSeries:
    return NCSeries.letter(k, ctx)


def _z(max_z: int, max_q: int) -> QPoly:
    return QPoly.monomial(1, 0, max_z, max_q)


def _is_tree_word(word: Word) -> bool:
    try:
        PlaneTree.from_word(word, root_color=word[0])
    except ValueError:
        return False
    return True


# Trees, compositions and K-duality


@register("continued-fraction", "A = X0/(1 - X1/(1 - X2/(1 - ...))) = preorder words of plane trees")
def check_continued_fraction(bounds: Bounds, seed: int) -> IdentityReport:
    ctx = bounds.context
    check = _Comparison("continued-fraction", _series_orders(bounds))
    trees = named_series("sptrees", ctx)
    check.series("depth-W continued fraction", trees, sp_trees_cf(ctx.max_weight, ctx))
    check.series("enumerated plane trees", trees, sp_trees_oracle(ctx))
    check.series("trees enriched with 1/(1 - X1)", trees, named_series("sptrees-enriched", ctx))
    return check.report()


@register("tree-words", "A = X0 (C(1) - N); tree words are X0 X_kappa with kappa in C(1), kappa_1 = 1")
def check_tree_words(bounds: Bounds, seed: int) -> IdentityReport:
    ctx = bounds.context
    check = _Comparison("tree-words", _series_orders(bounds))
    trees = named_series("sptrees", ctx)
    body = named_series("c1", ctx) - named_series("module-n", ctx)
    check.series("X0 (C(1) - N)", mul(_letter(0, ctx), body), trees)

    c1 = composition_spec(1)
    malformed = [
        render_word(w) for w in trees.words()
        if not (w[0] == 0 and (len(w) == 1 or w[1] == 1) and c1.contains(w[1:]))
    ]
    check.value("words are X0 X_kappa, kappa in C(1) with kappa_1 = 1", [], malformed)
    undecodable = [render_word(w) for w in trees.words() if not _is_tree_word(w)]
    check.value("words decode to plane trees", [], undecodable)
    check.value("coefficients are 1", [], [render_word(w) for w, c in trees.items() if c != 1])
    return check.report()


@register("quotient", "A = X0 (sigma P2^g)(P2^g)^-1 with sigma P2^g = 1 - N!^g")
def check_quotient(bounds: Bounds, seed: int) -> IdentityReport:
    ctx = bounds.context
    check = _Comparison("quotient", _series_orders(bounds))
    graded = sign_by_length(named_series("p2", ctx))
    quotient = mul(mul(_letter(0, ctx), shift(graded, 1)), inverse(graded))
    check.series("X0 (sigma P2^g)(P2^g)^-1", named_series("sptrees", ctx), quotient)

    dual_module = named_series("module-n-dual", ctx)
    check.series("N! = sigma P2 - 1", named_series("sigma-p2", ctx) - 1, dual_module)
    check.series("sigma P2^g = 1 - N!^g", 1 - module_graded(dual_module), shift(graded, 1))
    return check.report()


@register("quotient-dual", "A = X0 (sigma C(1))^-1 C(1)")
def check_quotient_dual(bounds: Bounds, seed: int) -> IdentityReport:
    ctx = bounds.context
    check = _Comparison("quotient-dual", _series_orders(bounds))
    c1 = named_series("c1", ctx)
    quotient = mul(mul(_letter(0, ctx), inverse(named_series("sigma-c1", ctx))), c1)
    check.series("X0 (sigma C(1))^-1 C(1)", named_series("sptrees", ctx), quotient)
    check.series("(P2^g)^-1 = C(1)", c1, inverse(sign_by_length(named_series("p2", ctx))))
    return check.report()


@register("graded-module", "N^g P2 = N! for the C(1)-module N")
def check_graded_module(bounds: Bounds, seed: int) -> IdentityReport:
    ctx = bounds.context
    check = _Comparison("graded-module", _series_orders(bounds))
    check.value(
        "K-dual of C(1) is P2",
        True,
        same_spec(k_dual(composition_spec(1)), partition_spec(2), ctx.max_weight),
    )
    module = named_series("module-n", ctx)
    check.series("N^g P2", named_series("module-n-dual", ctx), mul(module_graded(module), named_series("p2", ctx)))
    check.involution(check_psi(composition_module_spec(), ctx.meet(INVOLUTION_CONTEXT)))
    return check.report()


@register("kdual-compositions", "(C(m)^g)^-1 = P_(m+1) and (P_(m+1)^g)^-1 = C(m) for m = 0, 1, 2")
def check_kdual_compositions(bounds: Bounds, seed: int) -> IdentityReport:
    ctx = bounds.context
    check = _Comparison("kdual-compositions", _series_orders(bounds))
    for m in (0, 1, 2):
        compositions = named_series(f"c{m}", ctx)
        partitions = partitions_m_distinct(m + 1, ctx)
        check.value(
            f"K-dual of C({m}) is P{m + 1}",
            True,
            same_spec(k_dual(composition_spec(m)), partition_spec(m + 1), ctx.max_weight),
        )
        check.series(f"(C({m})^g)^-1 = P{m + 1}", partitions, inverse(sign_by_length(compositions)))
        check.series(f"(P{m + 1}^g)^-1 = C({m})", compositions, inverse(sign_by_length(partitions)))
    check.involution(check_phi(composition_spec(1), ctx.meet(INVOLUTION_CONTEXT)))
    return check.report()


@register("partition-duals", "partitions, decreasing partitions and their distinct-part duals")
def check_partition_duals(bounds: Bounds, seed: int) -> IdentityReport:
    ctx = bounds.context
    check = _Comparison("partition-duals", _series_orders(bounds))
    partitions = named_series("p0", ctx)
    ascending = product([geometric(_letter(n, ctx)) for n in range(1, ctx.max_weight + 1)], ctx)
    check.series("P = prod_{n=1..W} 1/(1 - X_n)", ascending, partitions)
    check.series(
        "(P^g)^-1 = prod_{n=W..1} (1 + X_n)",
        distinct_parts_product(ctx, descending=True),
        named_series("partitions-dual", ctx),
    )
    check.series(
        "K-dual of P is strictly decreasing",
        linked_language(k_dual(partition_spec(0)), ctx),
        named_series("partitions-dual", ctx),
    )

    decreasing = named_series("decreasing-partitions", ctx)
    check.series("D = prod_{n=W..1} 1/(1 - X_n)", linked_language(decreasing_partition_spec(), ctx), decreasing)
    distinct = named_series("distinct-increasing", ctx)
    check.series("(D^g)^-1 = prod_{n=1..W} (1 + X_n)", distinct, inverse(sign_by_length(decreasing)))
    check.series("K-dual of D is strictly increasing", linked_language(k_dual(decreasing_partition_spec()), ctx), distinct)
    return check.report()


@register("kduality-random", "L^g L! = 1 and N^g L! = N! for random link sets")
def check_kduality_random(bounds: Bounds, seed: int) -> IdentityReport:
    ctx = bounds.context.meet(RANDOM_CONTEXT)
    check = _Comparison("kduality-random", {"max_len": ctx.max_len, "max_weight": ctx.max_weight, "seed": seed})
    rng = random.Random(seed)
    for index in range(RANDOM_SPECS):
        spec = random_link_spec(rng)
        language, dual = linked_language(spec, ctx), linked_language(k_dual(spec), ctx)
        check.series(f"L^g L! = 1 for link set #{index}", NCSeries.one(ctx), mul(sign_by_length(language), dual))

        mspec = random_module_spec(rng)
        module = module_language(mspec, ctx)
        body_dual = linked_language(k_dual(mspec.body), ctx)
        check.series(
            f"N^g L! = N! for module #{index}",
            module_language(module_dual(mspec), ctx),
            mul(module_graded(module), body_dual),
        )
    return check.report(detail=f"{RANDOM_SPECS} link sets and modules from seed {seed}")


@register("involutions", "phi and psi are sign-reversing involutions with the expected fixed points")
def check_involutions(bounds: Bounds, seed: int) -> IdentityReport:
    ctx = bounds.context.meet(INVOLUTION_CONTEXT)
    check = _Comparison("involutions", {"max_len": ctx.max_len, "max_weight": ctx.max_weight, "seed": seed})
    check.involution(check_phi(composition_spec(1), ctx))
    check.involution(check_phi(partition_spec(2), ctx))
    check.involution(check_psi(composition_module_spec(), ctx))
    rng = random.Random(seed)
    for _ in range(INVOLUTION_SAMPLES):
        check.involution(check_phi(random_link_spec(rng), ctx))
        check.involution(check_psi(random_module_spec(rng), ctx))
    return check.report()


# q-umbral evaluation


@register("path-length", "the z^n row of A(z, q) counts plane trees on n vertices by path length")
def check_path_length(bounds: Bounds, seed: int) -> IdentityReport:
    ctx = bounds.context
    check = _Comparison("path-length", _series_orders(bounds))
    trees_q = qseries.umbral(named_series("sptrees", ctx))
    algebraic = qseries.sp_trees_q(ctx.max_len, comb(ctx.max_len, 2))
    for n in range(1, ctx.max_len + 1):
        row = {m: int(c) for m, c in algebraic.row(n).items()}
        visible = {m: c for m, c in row.items() if m <= ctx.max_weight}
        check.value(f"z^{n} row of umbral(A)", visible, {m: int(c) for m, c in trees_q.row(n).items()})
        check.value(f"plane trees on {n} vertices", catalan(n - 1), sum(row.values()))
        if n <= ORACLE_MAX_VERTICES:
            check.value(f"enumerated path lengths on {n} vertices", qseries.path_length_coeffs(n, "oracle"), row)
        if n in PATH_LENGTH_ROWS:
            check.value(f"tabulated z^{n} row", PATH_LENGTH_ROWS[n], row)
    return check.report()


@register("umbral-quotient", "A(z,q) P2^g(z,q) = z sigma P2^g(z,q) and A(z,q) sigma C(1)(z,q) = z C(1)(z,q)")
def check_umbral_quotient(bounds: Bounds, seed: int) -> IdentityReport:
    ctx = bounds.context
    check = _Comparison("umbral-quotient", _series_orders(bounds))
    trees, c1 = named_series("sptrees", ctx), named_series("c1", ctx)
    graded = sign_by_length(named_series("p2", ctx))
    trees_q = qseries.umbral(trees)
    z = _z(ctx.max_len, ctx.max_weight)

    check.qpoly("A P2^g = z sigma P2^g", z * qseries.umbral(shift(graded, 1)), trees_q * qseries.umbral(graded))
    check.qpoly("A sigma C(1) = z C(1)", z * qseries.umbral(c1), trees_q * qseries.umbral(shift(c1, 1)))
    for label, series in (("A", trees), ("C(1)", c1), ("P2^g", graded)):
        check.qpoly(f"umbral(sigma {label}) = {label}(zq, q)", qseries.umbral(series).subst_z_zq(), qseries.umbral(shift(series, 1)))
    check.qpoly("umbral is multiplicative", trees_q * qseries.umbral(c1), qseries.umbral(mul(trees, c1)))
    return check.report()


# Rogers-Ramanujan


def _check_rogers_ramanujan(variant: qseries.Variant, bounds: Bounds) -> IdentityReport:
    shifted = variant == "second"
    identity = f"rr-{variant}"
    ctx, max_q = bounds.context, bounds.max_q
    check = _Comparison(identity, {**_series_orders(bounds), "max_q": max_q})
    a, b = qseries.RR_RESIDUES[variant]
    expected = qseries.rr_product(a, b, max_q)
    prefix = "sigma " if shifted else ""
    check.qpoly(
        f"1 + sum_n q^n sum_k (-1)^k |{prefix}C(1)[n, k]|",
        expected,
        qseries.signed_composition_series(shifted, max_q),
    )

    language = named_series("sigma-c1" if shifted else "c1", ctx)
    signed = qseries.umbral_q(sign_by_length(language))
    check.qpoly(f"umbral({prefix}C(1)) at z = -1", signed, qseries.umbral(language).subst_z(-1))
    # compositions of n have at most n parts, so degrees <= L are complete
    visible = min(ctx.max_len, ctx.max_weight, max_q)
    check.qpoly(f"enumerated {prefix}C(1) up to q^{visible}", expected.truncate(0, visible), signed.truncate(0, visible))
    return check.report()


@register("rr-first", "1 + sum (-1)^k |C(1)[n, k]| q^n = prod (1 - q^(5k+1))(1 - q^(5k+4))")
def check_rr_first(bounds: Bounds, seed: int) -> IdentityReport:
    return _check_rogers_ramanujan("first", bounds)


@register("rr-second", "1 + sum (-1)^k |sigma C(1)[n, k]| q^n = prod (1 - q^(5k+2))(1 - q^(5k+3))")
def check_rr_second(bounds: Bounds, seed: int) -> IdentityReport:
    return _check_rogers_ramanujan("second", bounds)


@register("rr-sum-sides", "umbral(P2) and umbral(sigma P2) are the Rogers-Ramanujan sum sides")
def check_rr_sum_sides(bounds: Bounds, seed: int) -> IdentityReport:
    ctx = bounds.context
    check = _Comparison("rr-sum-sides", _series_orders(bounds))
    for variant, name in (("first", "p2"), ("second", "sigma-p2")):
        check.qpoly(
            f"umbral({name}) = {variant} sum side",
            qseries.rr_sum_side(variant, ctx.max_len, ctx.max_weight),
            qseries.umbral(named_series(name, ctx)),
        )
    return check.report()


@register("rr-classical", "sum side times reciprocal product is 1 for both Rogers-Ramanujan identities")
def check_rr_classical(bounds: Bounds, seed: int) -> IdentityReport:
    check = _Comparison("rr-classical", {"max_q": bounds.max_q})
    for variant in ("first", "second"):
        lhs, rhs = qseries.rr_identity(variant, bounds.max_q)
        check.qpoly(f"{variant} identity", rhs, lhs)
    return check.report()


@register("signed-compositions-zero", "the hatted composition sets have total signed weight zero")
def check_signed_compositions_zero(bounds: Bounds, seed: int) -> IdentityReport:
    max_n = bounds.max_q
    check = _Comparison("signed-compositions-zero", {"max_q": max_n})
    for shifted in (False, True):
        label = "shifted" if shifted else "unshifted"
        reports = hatted_signed_sums(max_n, shifted)
        check.value(f"{label} totals vanish for n <= {max_n}", {}, {r.n: r.total for r in reports if r.total})
        for report in reports:
            anchor = TABLE_ANCHORS.get((report.n, shifted))
            if anchor is None:
                continue
            per_k, excluded = anchor
            check.value(f"{label} signed counts at n = {report.n}", per_k, report.per_k)
            check.value(f"{label} exclusions at n = {report.n}", excluded, report.excluded)
    return check.report()


# Shift-plethystic inverses


@register("branchless", "L+ has inverse X0 (1 + X1)^-1; sum q^C(n,2) z^n / prod (1 + z q^k) = 1 + z")
def check_branchless(bounds: Bounds, seed: int) -> IdentityReport:
    ctx = bounds.context
    check = _Comparison("branchless", {**_series_orders(bounds), **_q_orders(bounds)})
    x0, x1 = _letter(0, ctx), _letter(1, ctx)
    branchless = named_series("branchless-plus", ctx)
    explicit = NCSeries(ctx, {tuple(range(n)): 1 for n in range(1, ctx.max_len + 1) if comb(n, 2) <= ctx.max_weight})
    check.series("L+ = X0 + X0X1 + X0X1X2 + ...", explicit, branchless)
    check.series("L+ = X0 (1 + sigma L+)", mul(x0, 1 + shift(branchless, 1)), branchless)

    inverse_series = mul(x0, inverse(1 + x1))
    check.series("inverse of L+ is X0 (1 + X1)^-1", inverse_series, plethystic_inverse(branchless))
    check.series("L+ o_s X0 (1 + X1)^-1 = X0", x0, plethysm(branchless, inverse_series))

    max_z, max_q = bounds.max_z, bounds.max_q
    check.qpoly("sum q^C(n,2) z^n / prod (1 + z q^k) = 1 + z", 1 + _z(max_z, max_q), qseries.branchless_sum(max_z, max_q))
    check.qpoly("value at z = 1", QPoly.one(0, max_q) * 2, qseries.branchless_sum(max_z, max_q, z=1))
    check.qpoly("value at z = -1", QPoly.zero(0, max_q), qseries.branchless_sum(max_z, max_q, z=-1))
    return check.report()


@register("rogers-odd", "X0 + X0X2 + ... has inverse X0 (1 + X2)^-1; sum q^(n^2) z^n / prod (1 + z q^(2j+1)) = 1")
def check_rogers_odd(bounds: Bounds, seed: int) -> IdentityReport:
    ctx = bounds.context
    check = _Comparison("rogers-odd", {**_series_orders(bounds), **_q_orders(bounds)})
    x0, x1, x2 = _letter(0, ctx), _letter(1, ctx), _letter(2, ctx)
    even, odd = named_series("branchless-even", ctx), named_series("branchless-odd", ctx)
    explicit = NCSeries(
        ctx,
        {tuple(range(0, 2 * n, 2)): 1 for n in range(1, ctx.max_len + 1) if n * (n - 1) <= ctx.max_weight},
    )
    check.series("X0 + X0X2 + X0X2X4 + ...", explicit, even)
    check.series("odd family is the shift of the even one", shift(even, 1), odd)

    inverse_series = mul(x0, inverse(1 + x2))
    check.series("inverse is X0 (1 + X2)^-1", inverse_series, plethystic_inverse(even))
    check.series("even o_s X0 (1 + X2)^-1 = X0", x0, plethysm(even, inverse_series))
    check.series("odd o_s X0 (1 + X2)^-1 = X1", x1, plethysm(odd, inverse_series))

    max_z, max_q = bounds.max_z, bounds.max_q
    check.qpoly("sum q^(n^2) z^n / prod (1 + z q^(2j+1)) = 1", QPoly.one(max_z, max_q), qseries.rogers_odd_sum(max_z, max_q))
    check.qpoly("value at z = -1", QPoly.one(0, max_q), qseries.rogers_odd_sum(max_z, max_q, z=-1))
    return check.report()


@register("shifted-sums", "Sigma_0 o_s L+ has inverse (X0 - X1)(1 + X1 - X2)^-1 and its double sums")
def check_shifted_sums(bounds: Bounds, seed: int) -> IdentityReport:
    ctx = bounds.context
    check = _Comparison("shifted-sums", {**_series_orders(bounds), **_q_orders(bounds)})
    x0, x1, x2 = _letter(0, ctx), _letter(1, ctx), _letter(2, ctx)
    check.series("inverse of Sigma_0 is X0 - X1", x0 - x1, plethystic_inverse(named_series("sigma0", ctx)))

    shifted = named_series("shifted-branchless-sum", ctx)
    explicit = NCSeries(
        ctx,
        {
            tuple(range(j, j + n)): 1
            for n in range(1, ctx.max_len + 1)
            for j in range(ctx.max_weight + 1)
            if comb(n, 2) + j * n <= ctx.max_weight
        },
    )
    check.series("sum over j, n of X_j X_(j+1) ... X_(j+n-1)", explicit, shifted)
    expected = mul(x0 - x1, inverse(1 + (x1 - x2)))
    check.series("inverse is (X0 - X1)(1 + X1 - X2)^-1", expected, plethystic_inverse(shifted))
    check.series("X0 (1 + X1)^-1 o_s (X0 - X1)", expected, plethysm(mul(x0, inverse(1 + x1)), x0 - x1))

    max_z, max_q = bounds.max_z, bounds.max_q
    z = _z(max_z, max_q)
    check.qpoly("double sum with (1 - q) factors = z", z, qseries.shifted_branchless_sums(max_z, max_q))
    rescaled = qseries.shifted_branchless_sums(max_z, max_q, rescaled=True)
    check.qpoly("double sum after z(1 - q) -> z equals z / (1 - q)", z / qseries.q_factor(1, max_q, max_z=max_z), rescaled)
    check.qpoly("z -> z(1 - q) takes the rescaled sum back to z", z, rescaled.scale_z(qseries.q_factor(1, max_q)))
    return check.report()


@register("sp-inverse", "the inverse of A is X0 - X0X1; A(z, q) = z + A(z, q) A(zq, q)")
def check_sp_inverse(bounds: Bounds, seed: int) -> IdentityReport:
    ctx = bounds.context
    check = _Comparison("sp-inverse", _series_orders(bounds))
    x0, x1 = _letter(0, ctx), _letter(1, ctx)
    trees = named_series("sptrees", ctx)
    inverse_series = x0 - mul(x0, x1)
    check.series("inverse of A is X0 - X0X1", inverse_series, named_series("sptrees-inverse", ctx))
    check.series("A o_s (X0 - X0X1) = X0", x0, plethysm(trees, inverse_series))
    check.series("(X0 - X0X1) o_s A = X0", x0, plethysm(inverse_series, trees))
    check.series("inverse of X0 - X0X1 is A", trees, plethystic_inverse(inverse_series))
    check.series("A = X0 + X0X1 o_s A", trees, x0 + plethysm(mul(x0, x1), trees))
    check.series("inverse of A^g is X0X1 - X0", mul(x0, x1) - x0, named_series("sptrees-graded-inverse", ctx))

    trees_q = qseries.umbral(trees)
    check.qpoly("A(z,q) = z + A(z,q) A(zq,q)", trees_q, _z(ctx.max_len, ctx.max_weight) + trees_q * trees_q.subst_z_zq())
    check.qpoly("A(z,q) from its q-image", qseries.sp_trees_q(ctx.max_len, ctx.max_weight), trees_q)
    return check.report()


def _enrichments(ctx: TruncationContext) -> Dict[str, NCSeries]:
    one = NCSeries.one(ctx)
    return {
        "1/(1 - X1)": geometric(_letter(1, ctx)),
        "1 + X1": one + _letter(1, ctx),
        "1 + X2": one + _letter(2, ctx),
        "sigma L": shift(named_series("branchless", ctx), 1),
        "(1 - sigma L+)^-1": named_series("chain-enrichment", ctx),
    }


@register("enriched-inverses", "A_M has inverse X0 M^-1 for every enrichment M")
def check_enriched_inverses(bounds: Bounds, seed: int) -> IdentityReport:
    ctx = bounds.context
    check = _Comparison("enriched-inverses", _series_orders(bounds))
    x0 = _letter(0, ctx)
    for label, enrichment in _enrichments(ctx).items():
        trees = enriched_trees(enrichment, ctx)
        inverse_series = enriched_inverse(enrichment)
        check.series(f"inverse of A_M for M = {label}", inverse_series, plethystic_inverse(trees))
        check.series(f"A_M o_s X0 M^-1 = X0 for M = {label}", x0, plethysm(trees, inverse_series))
        check.series(f"X0 M^-1 o_s A_M = X0 for M = {label}", x0, plethysm(inverse_series, trees))

    shifted = named_series("enriched-sigma-l", ctx)
    running, total = NCSeries.one(ctx), NCSeries.one(ctx)
    for n in range(1, ctx.max_len + 1):
        running = mul(running, shift(shifted, n))
        total = total + running
    check.series("A_{sigma L} = X0 (1 + sigma A + sigma A sigma^2 A + ...)", mul(x0, total), shifted)

    chain = named_series("enriched-chain", ctx)
    check.series(
        "inverse of the chain-enriched trees is X0 - X0 sigma L+",
        x0 - mul(x0, shift(named_series("branchless-plus", ctx), 1)),
        plethystic_inverse(chain),
    )
    chain_q = qseries.umbral(chain)
    check.qpoly("A(z) = z + sum_n A(z) A(zq) ... A(zq^(n-1))", qseries.implicit_chain_rhs(chain_q), chain_q)
    return check.report()


# Local minima and the closing identities


@register("local-minima", "C(1) = (prod_{n=W..1} 1/(1 - X_n)) o_s A")
def check_local_minima(bounds: Bounds, seed: int) -> IdentityReport:
    ctx = bounds.context
    check = _Comparison("local-minima", _series_orders(bounds))
    trees, c1 = named_series("sptrees", ctx), named_series("c1", ctx)
    decreasing = named_series("decreasing-partitions", ctx)
    check.series("D o_s A", c1, plethysm(decreasing, trees))
    check.series(
        "prod_{n=W..1} 1/(1 - sigma^n A)",
        c1,
        product([geometric(shift(trees, n)) for n in range(ctx.max_weight, 0, -1)], ctx),
    )
    check.series(
        "sigma C(1) = (prod_{n=W..2} 1/(1 - X_n)) o_s A",
        named_series("sigma-c1", ctx),
        plethysm(decreasing_partitions_product(ctx, 2), trees),
    )
    check.series("C(1)^g = D o_s A^g", sign_by_length(c1), plethysm(decreasing, sign_by_length(trees)))

    broken = []
    for word in c1.words():
        segments = local_minima_factorization(word)
        heads = [segment[0] for segment in segments]
        if heads != sorted(heads, reverse=True) or not all(_is_tree_word(s) for s in segments):
            broken.append(render_word(word))
    check.value("local minima cut C(1) words into shifted tree words", [], broken)
    return check.report()


@register("inverse-application", "C(1) o_s (X0 - X0X1) = D and P2 o_s (X0X1 - X0) = prod (1 - X_n)")
def check_inverse_application(bounds: Bounds, seed: int) -> IdentityReport:
    ctx = bounds.context
    check = _Comparison("inverse-application", _series_orders(bounds))
    x0, x1 = _letter(0, ctx), _letter(1, ctx)
    check.series(
        "C(1) o_s (X0 - X0X1)",
        named_series("decreasing-partitions", ctx),
        plethysm(named_series("c1", ctx), x0 - mul(x0, x1)),
    )
    check.series(
        "P2 o_s (X0X1 - X0)",
        distinct_parts_product(ctx, descending=False, sign=-1),
        plethysm(named_series("p2", ctx), mul(x0, x1) - x0),
    )
    return check.report()


@register("closing-partitions", "sum q^n sum_{C(1)[n]} prod (1 - q^(kappa_i + 1)) = prod 1/(1 - q^n)")
def check_closing_partitions(bounds: Bounds, seed: int) -> IdentityReport:
    ctx, max_q = bounds.context, bounds.max_q
    check = _Comparison("closing-partitions", {**_series_orders(bounds), "max_q": max_q})
    expected = qseries.partition_series(max_q)
    check.qpoly("q-image of C(1) o_s (X0 - X0X1)", expected, qseries.closing_composition_series(max_q))
    visible = min(ctx.max_len, ctx.max_weight, max_q)
    check.qpoly(
        f"enumerated partitions up to q^{visible}",
        expected.truncate(0, visible),
        qseries.umbral_q(named_series("decreasing-partitions", ctx)).truncate(0, visible),
    )
    return check.report()


@register("closing-pentagonal", "sum over P2 of prod q^(lambda_i) (q^(lambda_i + 1) - 1) = prod (1 - q^n)")
def check_closing_pentagonal(bounds: Bounds, seed: int) -> IdentityReport:
    check = _Comparison("closing-pentagonal", {"max_q": bounds.max_q})
    check.qpoly(
        "q-image of P2 o_s (X0X1 - X0)",
        qseries.euler_product(bounds.max_q),
        qseries.closing_partition_series(bounds.max_q),
    )
    return check.report()


# Registry access


def identity_names() -> List[str]:
    return list(IDENTITIES)


def canonical_identity(identity: str) -> str:
    """Resolve underscores and a trailing ``-thm`` to a registered identifier."""
    key = identity.strip().lower().replace("_", "-")
    if key not in IDENTITIES and key.endswith("-thm"):
        key = key[: -len("-thm")]
    if key not in IDENTITIES:
        raise UnknownIdentity(f"Unknown identity '{identity}'. Known identities: {', '.join(identity_names())}")
    return key


def default_bounds() -> Bounds:
    return Bounds(
        max_len=settings.max_len,
        max_weight=settings.max_weight,
        max_z=settings.max_z,
        max_q=settings.max_q,
    )


def check_identity(identity: str, bounds: Optional[Bounds] = None, seed: Optional[int] = None) -> IdentityReport:
    """Run one registered checker; bounds and seed default to the settings."""
    key = canonical_identity(identity)
    bounds = bounds or default_bounds()
    seed = settings.seed if seed is None else seed
    logger.debug(f"Checking {key} at {bounds}")
    return IDENTITIES[key].check(bounds, seed)
