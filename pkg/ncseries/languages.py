"""
Combinatorial languages as truncated series.

Linked languages L = 1 + A + L_B and right modules N = A1 + L_{C,B} are
generated by walking their link predicates inside a truncation context.
On top of that the module builds compositions with bounded risings,
m-distinct partitions, the shift-plethystic tree language (three
independent ways) and the signed counts of the hatted composition sets.
"""

import logging
import random
from collections import defaultdict
from fractions import Fraction
from typing import Callable, Dict, Iterable, Iterator, List, Optional, Sequence, Tuple

from ncseries.algebra import geometric, mul, series_from_terms, shift
from ncseries.errors import NoConvergence
from ncseries.models.language import LinkSpec, ModuleSpec, SignedSumReport
from ncseries.models.series import NCSeries, TruncationContext, Word
from ncseries.trees import iter_plane_trees

logger = logging.getLogger(__name__)

LetterTerms = Callable[[int], Sequence[Tuple[int, int, int]]]

# Parts of the strictly decreasing compositions removed from the hatted sets.
EXCLUDED_RESIDUES = {False: (1, 4), True: (2, 3)}


# Link specifications


def composition_spec(max_rise: Optional[int] = 1, min_part: int = 1) -> LinkSpec:
    """Compositions with parts >= min_part and risings at most ``max_rise`` (None: unbounded)."""
    if max_rise is None:
        links = lambda i, j: True
        name = "compositions" if min_part == 1 else f"compositions[>={min_part}]"
    else:
        links = lambda i, j: j - i <= max_rise
        name = f"C({max_rise})" if min_part == 1 else f"C({max_rise})[>={min_part}]"
    return LinkSpec(alphabet=lambda k: k >= min_part, links=links, name=name)


def partition_spec(m: int, min_part: int = 1) -> LinkSpec:
    """Increasing partitions whose consecutive parts differ by at least ``m``."""
    assert m >= 0, f"m must be nonnegative, got {m}"
    name = f"P{m}" if min_part == 1 else f"P{m}[>={min_part}]"
    return LinkSpec(alphabet=lambda k: k >= min_part, links=lambda i, j: j - i >= m, name=name)


def decreasing_partition_spec(min_part: int = 1) -> LinkSpec:
    """Partitions written in weakly decreasing order."""
    return LinkSpec(alphabet=lambda k: k >= min_part, links=lambda i, j: i >= j, name="decreasing")


def composition_module_spec() -> ModuleSpec:
    """The C(1)-module N of compositions with risings at most 1 and first part >= 2."""
    return ModuleSpec(
        head_alphabet=lambda k: k >= 2,
        head_links=lambda i, j: j - i <= 1,
        body=composition_spec(1),
        name="N",
    )


def _dual_name(name: str) -> str:
    return name[:-1] if name.endswith("!") else f"{name}!"


def k_dual(spec: LinkSpec) -> LinkSpec:
    """Same alphabet, complementary links inside A x A."""
    alphabet, links = spec.alphabet, spec.links
    return LinkSpec(
        alphabet=alphabet,
        links=lambda i, j: alphabet(i) and alphabet(j) and not links(i, j),
        name=_dual_name(spec.name),
    )


def module_dual(mspec: ModuleSpec) -> ModuleSpec:
    """N! = A1 + L_{C^c, B^c}, the complement of C taken in A1 x A."""
    head, head_links, body_alphabet = mspec.head_alphabet, mspec.head_links, mspec.body.alphabet
    return ModuleSpec(
        head_alphabet=head,
        head_links=lambda i, j: head(i) and body_alphabet(j) and not head_links(i, j),
        body=k_dual(mspec.body),
        name=_dual_name(mspec.name),
    )


def same_spec(left: LinkSpec, right: LinkSpec, bound: int) -> bool:
    """Extensional equality of two specs on letter indices <= bound."""
    letters = range(bound + 1)
    if any(left.alphabet(k) != right.alphabet(k) for k in letters):
        return False
    alphabet = [k for k in letters if left.alphabet(k)]
    return all(left.link(i, j) == right.link(i, j) for i in alphabet for j in alphabet)


def random_link_spec(rng: random.Random, letters: Iterable[int] = range(1, 7), density: float = 0.5) -> LinkSpec:
    """A link spec on ``letters`` with each ordered pair linked with probability ``density``."""
    alphabet = frozenset(letters)
    links = frozenset((i, j) for i in sorted(alphabet) for j in sorted(alphabet) if rng.random() < density)
    return LinkSpec(
        alphabet=lambda k: k in alphabet,
        links=lambda i, j: (i, j) in links,
        name=f"random[{len(links)} links]",
    )


def random_module_spec(rng: random.Random, letters: Iterable[int] = range(1, 7), density: float = 0.5) -> ModuleSpec:
    letters = list(letters)
    body = random_link_spec(rng, letters, density)
    pool = sorted(k for k in range(max(letters) + 1) if body.alphabet(k))
    head = frozenset(k for k in pool if rng.random() < 0.5) or frozenset(pool[:1])
    head_links = frozenset((i, j) for i in sorted(head) for j in pool if rng.random() < density)
    return ModuleSpec(
        head_alphabet=lambda k: k in head,
        head_links=lambda i, j: (i, j) in head_links,
        body=body,
        name=f"random-module[{len(head)} heads]",
    )


# Word generation


def _grow(
    prefix: Word,
    weight: int,
    successors: Dict[int, List[int]],
    ctx: TruncationContext,
    out: Dict[Word, int],
) -> None:
    stack = [(prefix, weight)]
    while stack:
        word, total = stack.pop()
        out[word] = 1
        if len(word) >= ctx.max_len:
            continue
        for nxt in successors.get(word[-1], ()):
            if total + nxt <= ctx.max_weight:
                stack.append((word + (nxt,), total + nxt))


def linked_language(spec: LinkSpec, ctx: TruncationContext) -> NCSeries:
    """Generating series of L = 1 + A + L_B inside ``ctx``; all coefficients are 1."""
    letters = spec.letters(ctx.max_weight)
    successors = {i: [j for j in letters if spec.links(i, j)] for i in letters}
    words: Dict[Word, int] = {(): 1}
    if ctx.max_len >= 1:
        for letter in letters:
            _grow((letter,), letter, successors, ctx, words)
    return NCSeries(ctx, words)


def module_language(mspec: ModuleSpec, ctx: TruncationContext) -> NCSeries:
    """Generating series of the right module N = A1 + L_{C,B}."""
    body_letters = mspec.body.letters(ctx.max_weight)
    successors = {i: [j for j in body_letters if mspec.body.links(i, j)] for i in body_letters}
    heads = [k for k in range(ctx.max_weight + 1) if mspec.head_alphabet(k)]
    words: Dict[Word, int] = {}
    if ctx.max_len < 1:
        return NCSeries.zero(ctx)
    for head in heads:
        words[(head,)] = 1
        if ctx.max_len < 2:
            continue
        for second in body_letters:
            if mspec.head_links(head, second) and head + second <= ctx.max_weight:
                _grow((head, second), head + second, successors, ctx, words)
    return NCSeries(ctx, words)


def compositions(
    max_rise: Optional[int],
    ctx: TruncationContext,
    min_first: int = 1,
    min_part: int = 1,
) -> NCSeries:
    """
    Strong compositions with risings at most ``max_rise`` (None for the full
    language of compositions), first part >= min_first and all parts >= min_part.
    The empty composition is included.
    """
    series = linked_language(composition_spec(max_rise, min_part), ctx)
    if min_first <= min_part:
        return series
    return NCSeries(ctx, {w: c for w, c in series.terms.items() if not w or w[0] >= min_first})


def partitions_m_distinct(m: int, ctx: TruncationContext, min_part: int = 1) -> NCSeries:
    """The language P_m of m-distinct partitions (empty and singleton words included)."""
    return linked_language(partition_spec(m, min_part), ctx)


def iter_compositions(total: int, max_rise: Optional[int] = 1, min_part: int = 1) -> Iterator[Word]:
    """Compositions of exactly ``total``, in lexicographic order."""

    def extend(prefix: Word, remaining: int) -> Iterator[Word]:
        if remaining == 0:
            yield prefix
            return
        top = remaining if not prefix or max_rise is None else min(remaining, prefix[-1] + max_rise)
        for part in range(min_part, top + 1):
            yield from extend(prefix + (part,), remaining - part)

    if total <= 0:
        return
    yield from extend((), total)


# Shift-plethystic trees


def sp_trees_recursive(ctx: TruncationContext) -> NCSeries:
    """
    Solve A = X0 / (1 - sigma A) by filtration fixed point.

    Each iteration fixes one more (length + weight) degree, so L + W + 1
    iterations always suffice.
    """
    x0 = NCSeries.letter(0, ctx)
    current = NCSeries.zero(ctx)
    for step in range(1, ctx.max_len + ctx.max_weight + 2):
        following = mul(x0, geometric(shift(current, 1)))
        if following == current:
            logger.debug(f"sp_trees_recursive{ctx} stabilized after {step} steps")
            return following
        current = following
    raise NoConvergence(f"shift-plethystic tree language did not stabilize in {ctx}")


def sp_trees_cf(depth: int, ctx: TruncationContext) -> NCSeries:
    """The depth-n convergent X0/(1 - X1/(1 - ... /(1 - Xn)))."""
    assert depth >= 0, f"depth must be nonnegative, got {depth}"
    inner = NCSeries.letter(depth, ctx)
    for index in range(depth - 1, -1, -1):
        inner = mul(NCSeries.letter(index, ctx), geometric(inner))
    return inner


def sp_trees_oracle(ctx: TruncationContext) -> NCSeries:
    """Sum of the preorder words of all plane trees with <= L vertices and path length <= W."""
    return series_from_terms(
        ((tree.word(), 1) for tree in iter_plane_trees(ctx.max_len, ctx.max_weight)),
        ctx,
    )


# Local minima


def local_minima_factorization(word: Word) -> List[Word]:
    """
    Cut a word before every letter that is <= the first letter of the current
    segment. For a composition with risings <= 1 the segment heads form a
    weakly decreasing partition and each segment is a tree word rooted at its
    head, e.g. 56763454343342332 -> 5676 | 3454 | 34 | 3 | 34 | 233 | 2.
    """
    segments: List[List[int]] = []
    for letter in word:
        if not segments or letter <= segments[-1][0]:
            segments.append([letter])
        else:
            segments[-1].append(letter)
    return [tuple(segment) for segment in segments]


# Transfer-matrix evaluation


def linked_weights(
    spec: LinkSpec,
    max_len: int,
    max_weight: int,
    letter_terms: Optional[LetterTerms] = None,
    first: Optional[Callable[[int], bool]] = None,
) -> Dict[Tuple[int, int], Fraction]:
    """
    Evaluate sum over words w of L (1 included) of prod_i value(w_i) as a
    bivariate table {(z-degree, q-degree): coefficient}.

    ``letter_terms(k)`` lists the terms (a, b, c) of value(X_k) = sum c z^a q^b;
    the default is the umbral value z q^k. Every term must have a + b >= 1.
    ``first`` restricts the first letter (defaults to the alphabet).
    No word is materialized: the table is filled by total degree, keeping
    the contributions split by last letter.
    """
    if letter_terms is None:
        letter_terms = lambda k: ((1, k, 1),)
    starts = first or spec.alphabet
    letters = spec.letters(max_weight)
    values: Dict[int, Tuple[Tuple[int, int, Fraction], ...]] = {}
    for k in letters:
        kept = []
        for a, b, c in letter_terms(k):
            assert a + b >= 1, f"letter X{k} has a term of degree 0"
            if a <= max_len and b <= max_weight and c:
                kept.append((a, b, Fraction(c)))
        if kept:
            values[k] = tuple(kept)
    predecessors = {k: [j for j in letters if spec.links(j, k)] for k in values}

    ending: Dict[Tuple[int, int], Dict[int, Fraction]] = {}
    totals: Dict[Tuple[int, int], Fraction] = {(0, 0): Fraction(1)}
    cells = sorted(
        ((n, m) for n in range(max_len + 1) for m in range(max_weight + 1) if n + m),
        key=lambda cell: (cell[0] + cell[1], cell),
    )
    for n, m in cells:
        cell: Dict[int, Fraction] = {}
        for k, terms in values.items():
            acc = Fraction(0)
            for a, b, c in terms:
                pn, pm = n - a, m - b
                if pn < 0 or pm < 0:
                    continue
                base = 1 if (pn, pm) == (0, 0) and starts(k) else 0
                previous = ending.get((pn, pm))
                if previous:
                    base += sum(previous.get(j, 0) for j in predecessors[k])
                if base:
                    acc += c * base
            if acc:
                cell[k] = acc
        if cell:
            ending[(n, m)] = cell
            total = sum(cell.values())
            if total:
                totals[(n, m)] = total
    return totals


# Hatted composition sets


def excluded_partitions(n: int, shifted: bool) -> List[List[int]]:
    """Strictly decreasing compositions of n whose parts all lie in the excluded residues mod 5."""
    residues = EXCLUDED_RESIDUES[shifted]
    found: List[List[int]] = []

    def extend(prefix: List[int], remaining: int, bound: int) -> None:
        if remaining == 0:
            found.append(prefix)
            return
        for part in range(min(remaining, bound), 0, -1):
            if part % 5 in residues:
                extend(prefix + [part], remaining - part, part - 1)

    extend([], n, n)
    return sorted(found)


def hatted_signed_sums(max_n: int, shifted: bool) -> List[SignedSumReport]:
    """Signed counts (-1)^k |C^[n,k]| for every n up to ``max_n``, from one counting pass."""
    min_part = 2 if shifted else 1
    counts = linked_weights(composition_spec(1, min_part), max_n, max_n)
    by_weight: Dict[int, Dict[int, int]] = defaultdict(dict)
    for (length, weight), value in counts.items():
        if length:
            by_weight[weight][length] = int(value)
    reports = []
    for n in range(min_part, max_n + 1):
        row = by_weight.get(n, {})
        top = max(row, default=0)
        per_k = [(-1) ** k * row.get(k, 0) for k in range(1, top + 1)]
        excluded = excluded_partitions(n, shifted)
        for part in excluded:
            per_k[len(part) - 1] -= (-1) ** len(part)
        reports.append(SignedSumReport(n=n, shifted=shifted, per_k=per_k, total=sum(per_k), excluded=excluded))
    return reports


def hatted_signed_sum(n: int, shifted: bool) -> SignedSumReport:
    minimum = 2 if shifted else 1
    if n < minimum:
        raise ValueError(f"hatted sums need n >= {minimum} for shifted={shifted}, got {n}")
    return hatted_signed_sums(n, shifted)[-1]
