"""
Models for truncated noncommutative series.

This module defines words over the alphabet X0, X1, X2, ..., the bigraded
truncation context that makes every computation finite, and the immutable
``NCSeries`` value together with its JSON payload models.
"""

from fractions import Fraction
from types import MappingProxyType
from typing import Dict, Iterable, Iterator, List, Mapping, Optional, Tuple, Union

try:
    from typing import Self
except ImportError:  # Python < 3.11
    from typing_extensions import Self

from pydantic import BaseModel, ConfigDict, field_validator, model_validator

Word = Tuple[int, ...]
Coefficient = Fraction
Number = Union[int, Fraction, str]


def word_stats(word: Iterable[int]) -> Tuple[int, int]:
    """Return ``(length, weight)`` of a word; the weight is the sum of letter indices."""
    letters = tuple(word)
    return len(letters), sum(letters)


def canonical_key(word: Word) -> Tuple[int, int, Word]:
    """Sort key for canonical order: length, then weight, then letters."""
    return len(word), sum(word), word


def render_word(word: Word) -> str:
    if not word:
        return "1"
    return "".join(f"X{k}" for k in word)


def render_term(coeff: Fraction, word: Word, leading: bool) -> str:
    """Render one signed term; ``leading`` controls the sign spacing."""
    magnitude = abs(coeff)
    if not word:
        body = str(magnitude)
    elif magnitude == 1:
        body = render_word(word)
    else:
        body = f"{magnitude} {render_word(word)}"
    if leading:
        return f"-{body}" if coeff < 0 else body
    return f" - {body}" if coeff < 0 else f" + {body}"


class TruncationContext(BaseModel):
    """Bounds on word length (L) and word weight (W)."""

    model_config = ConfigDict(frozen=True)

    max_len: int
    max_weight: int

    @model_validator(mode='after')
    def validate_bounds(self) -> Self:
        """Validate that both bounds are nonnegative."""
        assert self.max_len >= 0, f"max_len must be nonnegative, got {self.max_len}"
        assert self.max_weight >= 0, f"max_weight must be nonnegative, got {self.max_weight}"
        return self

    @classmethod
    def of(cls, max_len: int, max_weight: int) -> "TruncationContext":
        return cls(max_len=max_len, max_weight=max_weight)

    def admits(self, word: Word) -> bool:
        return len(word) <= self.max_len and sum(word) <= self.max_weight

    def meet(self, other: "TruncationContext") -> "TruncationContext":
        """Componentwise minimum of two contexts."""
        if self == other:
            return self
        return TruncationContext(
            max_len=min(self.max_len, other.max_len),
            max_weight=min(self.max_weight, other.max_weight),
        )

    def __str__(self) -> str:
        return f"(max_len={self.max_len}, max_weight={self.max_weight})"


class NCSeries:
    """
    A truncated noncommutative series: a finite map from words to exact rationals.

    Values are immutable and kept in canonical form: every stored word lies
    inside the context and no stored coefficient is zero. Equality compares
    canonical forms on the meet of the two contexts.
    """

    __slots__ = ("_context", "_terms")

    def __init__(self, context: TruncationContext, terms: Optional[Mapping[Iterable[int], Number]] = None):
        clean: Dict[Word, Fraction] = {}
        for word, coeff in (terms or {}).items():
            word = tuple(int(k) for k in word)
            assert all(k >= 0 for k in word), f"Letter indices must be nonnegative, got {word}"
            if not context.admits(word):
                continue
            value = Fraction(coeff)
            if value:
                clean[word] = value
        self._context = context
        self._terms = clean

    @classmethod
    def _trusted(cls, context: TruncationContext, terms: Dict[Word, Fraction]) -> "NCSeries":
        """Wrap terms already known to lie in ``context``; only zeros are dropped."""
        series = cls.__new__(cls)
        series._context = context
        series._terms = {word: c for word, c in terms.items() if c}
        return series

    # Constructors
    @classmethod
    def zero(cls, context: TruncationContext) -> "NCSeries":
        return cls._trusted(context, {})

    @classmethod
    def one(cls, context: TruncationContext) -> "NCSeries":
        return cls._trusted(context, {(): Fraction(1)})

    @classmethod
    def letter(cls, index: int, context: TruncationContext, coeff: Number = 1) -> "NCSeries":
        return cls(context, {(index,): coeff})

    @classmethod
    def monomial(cls, word: Iterable[int], context: TruncationContext, coeff: Number = 1) -> "NCSeries":
        return cls(context, {tuple(word): coeff})

    # Accessors
    @property
    def context(self) -> TruncationContext:
        return self._context

    @property
    def terms(self) -> Mapping[Word, Fraction]:
        return MappingProxyType(self._terms)

    @property
    def constant_term(self) -> Fraction:
        return self._terms.get((), Fraction(0))

    def coeff(self, word: Iterable[int]) -> Fraction:
        return self._terms.get(tuple(word), Fraction(0))

    def items(self) -> List[Tuple[Word, Fraction]]:
        """Terms in canonical order."""
        return sorted(self._terms.items(), key=lambda item: canonical_key(item[0]))

    def words(self) -> List[Word]:
        return [word for word, _ in self.items()]

    def restrict(self, context: TruncationContext) -> "NCSeries":
        """Truncate to a (smaller) context."""
        context = self._context.meet(context)
        if context == self._context:
            return self
        return NCSeries._trusted(context, {w: c for w, c in self._terms.items() if context.admits(w)})

    def is_zero(self) -> bool:
        return not self._terms

    def __len__(self) -> int:
        return len(self._terms)

    def __iter__(self) -> Iterator[Word]:
        return iter(self.words())

    def __bool__(self) -> bool:
        return bool(self._terms)

    # Arithmetic delegates to ncseries.algebra
    def __add__(self, other: Union["NCSeries", Number]) -> "NCSeries":
        from ncseries import algebra
        return algebra.add(self, self._coerce(other))

    __radd__ = __add__

    def __sub__(self, other: Union["NCSeries", Number]) -> "NCSeries":
        from ncseries import algebra
        return algebra.add(self, algebra.scale(-1, self._coerce(other)))

    def __rsub__(self, other: Number) -> "NCSeries":
        from ncseries import algebra
        return algebra.add(self._coerce(other), algebra.scale(-1, self))

    def __neg__(self) -> "NCSeries":
        from ncseries import algebra
        return algebra.scale(-1, self)

    def __mul__(self, other: Union["NCSeries", Number]) -> "NCSeries":
        from ncseries import algebra
        if isinstance(other, NCSeries):
            return algebra.mul(self, other)
        return algebra.scale(other, self)

    def __rmul__(self, other: Number) -> "NCSeries":
        from ncseries import algebra
        return algebra.scale(other, self)

    def _coerce(self, other: Union["NCSeries", Number]) -> "NCSeries":
        if isinstance(other, NCSeries):
            return other
        return NCSeries(self._context, {(): other})

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, NCSeries):
            return NotImplemented
        from ncseries import algebra
        return algebra.eq_trunc(self, other)

    __hash__ = None  # type: ignore[assignment]

    def __str__(self) -> str:
        items = self.items()
        if not items:
            return "0"
        return "".join(render_term(c, w, i == 0) for i, (w, c) in enumerate(items))

    def __repr__(self) -> str:
        return f"NCSeries{self._context}: {self}"

    # Serialization
    def to_payload(self) -> "SeriesPayload":
        return SeriesPayload(
            context=self._context,
            terms=[TermPayload(word=list(w), coeff=str(c)) for w, c in self.items()],
        )

    @classmethod
    def from_payload(cls, payload: "SeriesPayload") -> "NCSeries":
        from ncseries import algebra
        pairs = [(tuple(term.word), Fraction(term.coeff)) for term in payload.terms]
        return algebra.series_from_terms(pairs, payload.context)

    def to_json(self) -> str:
        return self.to_payload().model_dump_json()

    @classmethod
    def from_json(cls, text: str) -> "NCSeries":
        return cls.from_payload(SeriesPayload.model_validate_json(text))


class TermPayload(BaseModel):
    """One term of the JSON series format."""

    word: List[int]
    coeff: str

    @field_validator('coeff')
    @classmethod
    def validate_coeff(cls, value: str) -> str:
        """Validate that the coefficient is an exact rational string."""
        try:
            Fraction(value)
        except (ValueError, ZeroDivisionError) as exc:
            raise ValueError(f"Coefficient '{value}' is not an exact rational") from exc
        return value


class SeriesPayload(BaseModel):
    """JSON series format: context plus terms in canonical order."""

    context: TruncationContext
    terms: List[TermPayload]
