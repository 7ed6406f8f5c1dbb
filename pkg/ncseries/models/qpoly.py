"""
Truncated bivariate polynomials in (z, q).

``QPoly`` is the target of the q-umbral evaluation X_k -> z q^k. Coefficients
are exact rationals; every product is truncated to z-degree <= max_z and
q-degree <= max_q. A polynomial with ``max_z == 0`` is a plain q-series.
"""

from fractions import Fraction
from typing import Dict, Iterable, List, Mapping, Optional, Tuple, Union

from pydantic import BaseModel, field_validator

from ncseries.errors import ZeroConstantTerm

Number = Union[int, Fraction, str]
Degree = Tuple[int, int]


def render_q_term(coeff: Fraction, m: int) -> str:
    """Unsigned rendering of |coeff| q^m."""
    magnitude = abs(coeff)
    if m == 0:
        return str(magnitude)
    power = "q" if m == 1 else f"q^{m}"
    return power if magnitude == 1 else f"{magnitude} {power}"


def render_q(coeffs: Mapping[int, Fraction]) -> str:
    """Ascending-power rendering of a univariate q-polynomial, e.g. '1 - q - q^4'."""
    parts = []
    for m, c in sorted(coeffs.items()):
        body = render_q_term(c, m)
        if not parts:
            parts.append(f"-{body}" if c < 0 else body)
        else:
            parts.append(f" - {body}" if c < 0 else f" + {body}")
    return "".join(parts) or "0"


class QPoly:
    """An immutable truncated polynomial sum c[n, m] z^n q^m."""

    __slots__ = ("_max_z", "_max_q", "_terms")

    def __init__(self, max_z: int, max_q: int, terms: Optional[Mapping[Degree, Number]] = None):
        assert max_z >= 0 and max_q >= 0, f"degree bounds must be nonnegative, got ({max_z}, {max_q})"
        clean: Dict[Degree, Fraction] = {}
        for (n, m), value in (terms or {}).items():
            if 0 <= n <= max_z and 0 <= m <= max_q:
                value = Fraction(value)
                if value:
                    clean[(n, m)] = value
        self._max_z = max_z
        self._max_q = max_q
        self._terms = clean

    @classmethod
    def _trusted(cls, max_z: int, max_q: int, terms: Dict[Degree, Fraction]) -> "QPoly":
        poly = cls.__new__(cls)
        poly._max_z = max_z
        poly._max_q = max_q
        poly._terms = {d: c for d, c in terms.items() if c}
        return poly

    @classmethod
    def zero(cls, max_z: int, max_q: int) -> "QPoly":
        return cls._trusted(max_z, max_q, {})

    @classmethod
    def one(cls, max_z: int, max_q: int) -> "QPoly":
        return cls.monomial(0, 0, max_z, max_q)

    @classmethod
    def monomial(cls, n: int, m: int, max_z: int, max_q: int, coeff: Number = 1) -> "QPoly":
        return cls(max_z, max_q, {(n, m): coeff})

    @classmethod
    def q_series(cls, coeffs: Mapping[int, Number], max_q: int) -> "QPoly":
        """A univariate polynomial from {q-degree: coefficient}."""
        return cls(0, max_q, {(0, m): c for m, c in coeffs.items()})

    # Accessors
    @property
    def max_z(self) -> int:
        return self._max_z

    @property
    def max_q(self) -> int:
        return self._max_q

    @property
    def terms(self) -> Dict[Degree, Fraction]:
        return dict(self._terms)

    def coeff(self, n: int, m: int) -> Fraction:
        return self._terms.get((n, m), Fraction(0))

    def row(self, n: int) -> Dict[int, Fraction]:
        """The coefficient of z^n as {q-degree: coefficient}."""
        return {m: c for (k, m), c in sorted(self._terms.items()) if k == n}

    def q_coeffs(self) -> List[Fraction]:
        """Dense coefficient list of a univariate polynomial, q^0 .. q^max_q."""
        assert self._max_z == 0, "q_coeffs() needs a univariate polynomial"
        return [self.coeff(0, m) for m in range(self._max_q + 1)]

    def is_zero(self) -> bool:
        return not self._terms

    def truncate(self, max_z: int, max_q: int) -> "QPoly":
        max_z, max_q = min(max_z, self._max_z), min(max_q, self._max_q)
        return QPoly._trusted(max_z, max_q, {(n, m): c for (n, m), c in self._terms.items() if n <= max_z and m <= max_q})

    def _meet(self, other: "QPoly") -> Tuple[int, int]:
        return min(self._max_z, other._max_z), min(self._max_q, other._max_q)

    # Arithmetic
    def __add__(self, other: Union["QPoly", Number]) -> "QPoly":
        other = self._coerce(other)
        max_z, max_q = self._meet(other)
        total = {d: c for d, c in self._terms.items() if d[0] <= max_z and d[1] <= max_q}
        for (n, m), c in other._terms.items():
            if n <= max_z and m <= max_q:
                total[(n, m)] = total.get((n, m), 0) + c
        return QPoly._trusted(max_z, max_q, total)

    __radd__ = __add__

    def __neg__(self) -> "QPoly":
        return QPoly._trusted(self._max_z, self._max_q, {d: -c for d, c in self._terms.items()})

    def __sub__(self, other: Union["QPoly", Number]) -> "QPoly":
        return self + (-self._coerce(other))

    def __rsub__(self, other: Number) -> "QPoly":
        return self._coerce(other) + (-self)

    def __mul__(self, other: Union["QPoly", Number]) -> "QPoly":
        if not isinstance(other, QPoly):
            return self.scale(other)
        max_z, max_q = self._meet(other)
        out: Dict[Degree, Fraction] = {}
        right = sorted(other._terms.items())
        for (n1, m1), a in self._terms.items():
            if n1 > max_z or m1 > max_q:
                continue
            for (n2, m2), b in right:
                n, m = n1 + n2, m1 + m2
                if n > max_z:
                    break
                if m <= max_q:
                    out[(n, m)] = out.get((n, m), 0) + a * b
        return QPoly._trusted(max_z, max_q, out)

    def __rmul__(self, other: Number) -> "QPoly":
        return self.scale(other)

    def scale(self, factor: Number) -> "QPoly":
        factor = Fraction(factor)
        return QPoly._trusted(self._max_z, self._max_q, {d: factor * c for d, c in self._terms.items()})

    def __pow__(self, exponent: int) -> "QPoly":
        assert exponent >= 0, "negative powers go through inverse()"
        result = QPoly.one(self._max_z, self._max_q)
        for _ in range(exponent):
            result = result * self
        return result

    def inverse(self) -> "QPoly":
        """Multiplicative inverse."""
        return QPoly.one(self._max_z, self._max_q) / self

    def __truediv__(self, other: "QPoly") -> "QPoly":
        """
        Solve S * other = self degree by degree in lexicographic (n, m) order;
        the cost is linear in the number of terms of ``other``.
        """
        alpha = other.coeff(0, 0)
        if not alpha:
            raise ZeroConstantTerm("polynomial has zero constant term and is not invertible")
        max_z, max_q = self._meet(other)
        inv_alpha = 1 / alpha
        tail = [(d, c) for d, c in other._terms.items() if d != (0, 0) and d[0] <= max_z and d[1] <= max_q]
        solved: Dict[Degree, Fraction] = {}
        for n in range(max_z + 1):
            for m in range(max_q + 1):
                acc = self._terms.get((n, m), Fraction(0))
                for (a, b), c in tail:
                    if a <= n and b <= m:
                        previous = solved.get((n - a, m - b))
                        if previous:
                            acc -= c * previous
                if acc:
                    solved[(n, m)] = inv_alpha * acc
        return QPoly._trusted(max_z, max_q, solved)

    # Substitutions
    def subst_z(self, value: Number) -> "QPoly":
        """Specialize z to a rational constant; the result is univariate."""
        value = Fraction(value)
        out: Dict[Degree, Fraction] = {}
        for (n, m), c in self._terms.items():
            out[(0, m)] = out.get((0, m), 0) + c * value**n
        return QPoly._trusted(0, self._max_q, out)

    def subst_z_zq(self, power: int = 1) -> "QPoly":
        """z -> z q^power, the q-image of the shift."""
        return QPoly(self._max_z, self._max_q, {(n, m + power * n): c for (n, m), c in self._terms.items()})

    def scale_z(self, factor: "QPoly") -> "QPoly":
        """z -> z * factor for a univariate ``factor`` (e.g. z(1 - q) -> z)."""
        assert factor._max_z == 0, "scale_z() takes a univariate factor"
        result = QPoly.zero(self._max_z, min(self._max_q, factor._max_q))
        for n in range(self._max_z + 1):
            row = self.row(n)
            if not row:
                continue
            power = QPoly._trusted(self._max_z, factor._max_q, dict(factor._terms)) ** n
            result = result + QPoly(self._max_z, self._max_q, {(n, m): c for m, c in row.items()}) * power
        return result

    # Comparison and rendering
    def _coerce(self, other: Union["QPoly", Number]) -> "QPoly":
        if isinstance(other, QPoly):
            return other
        return QPoly(self._max_z, self._max_q, {(0, 0): other})

    def first_difference(self, other: "QPoly") -> Optional[Tuple[Degree, Fraction, Fraction]]:
        """First degree (n, m) in lexicographic order where the two differ, on the common bounds."""
        max_z, max_q = self._meet(other)
        degrees = sorted(
            d for d in set(self._terms) | set(other._terms) if d[0] <= max_z and d[1] <= max_q
        )
        for degree in degrees:
            a, b = self.coeff(*degree), other.coeff(*degree)
            if a != b:
                return degree, a, b
        return None

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, QPoly):
            return NotImplemented
        return self.first_difference(other) is None

    __hash__ = None  # type: ignore[assignment]

    def render(self) -> str:
        """Ascending powers of z with q-polynomial coefficients, e.g. 'z + q z^2 + (q^2 + q^3) z^3'."""
        if self._max_z == 0:
            return render_q(self.row(0))
        parts: List[str] = []
        for n in sorted({n for n, _ in self._terms}):
            row = self.row(n)
            zpart = "" if n == 0 else ("z" if n == 1 else f"z^{n}")
            if len(row) == 1:
                (m, c), = row.items()
                body = render_q_term(c, m)
                if zpart:
                    body = zpart if (m == 0 and abs(c) == 1) else f"{body} {zpart}"
                negative = c < 0
            else:
                body = f"({render_q(row)}) {zpart}" if zpart else render_q(row)
                negative = False
            if not parts:
                parts.append(f"-{body}" if negative else body)
            else:
                parts.append(f" - {body}" if negative else f" + {body}")
        return "".join(parts) or "0"

    def __str__(self) -> str:
        return self.render()

    def __repr__(self) -> str:
        return f"QPoly(max_z={self._max_z}, max_q={self._max_q}): {self.render()}"

    # Serialization
    def to_payload(self) -> "QPolyPayload":
        return QPolyPayload(
            max_z=self._max_z,
            max_q=self._max_q,
            terms=[QPolyTerm(z=n, q=m, coeff=str(c)) for (n, m), c in sorted(self._terms.items())],
        )

    @classmethod
    def from_payload(cls, payload: "QPolyPayload") -> "QPoly":
        terms: Dict[Degree, Fraction] = {}
        for term in payload.terms:
            terms[(term.z, term.q)] = terms.get((term.z, term.q), 0) + Fraction(term.coeff)
        return cls(payload.max_z, payload.max_q, terms)

    def to_json(self) -> str:
        return self.to_payload().model_dump_json()

    @classmethod
    def from_json(cls, text: str) -> "QPoly":
        return cls.from_payload(QPolyPayload.model_validate_json(text))


def product_of(factors: Iterable[QPoly], max_z: int, max_q: int) -> QPoly:
    result = QPoly.one(max_z, max_q)
    for factor in factors:
        result = result * factor
    return result


class QPolyTerm(BaseModel):
    z: int
    q: int
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


class QPolyPayload(BaseModel):
    """JSON format: degree bounds plus terms sorted by (z, q)."""

    max_z: int
    max_q: int
    terms: List[QPolyTerm]
