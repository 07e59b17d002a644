"""Exact Laurent polynomials in one variable ``A`` with integer coefficients."""

from collections import Counter
from collections.abc import Iterable, Mapping
from dataclasses import dataclass
from functools import cached_property


@dataclass(frozen=True)
class LaurentPolynomial:
    """Sum of ``coeff * A**exp`` terms; zero coefficients are never stored."""

    terms: tuple[tuple[int, int], ...]

    def __init__(self, terms: Mapping[int, int] | Iterable[tuple[int, int]] = ()) -> None:
        """Merge duplicate exponents, drop zeros and sort by descending exponent."""
        pairs = terms.items() if isinstance(terms, Mapping) else terms
        merged: Counter[int] = Counter()
        for exp, coeff in pairs:
            merged[int(exp)] += int(coeff)
        object.__setattr__(
            self,
            "terms",
            tuple(sorted(((e, c) for e, c in merged.items() if c), reverse=True)),
        )

    @classmethod
    def monomial(cls, coeff: int = 1, exp: int = 0) -> "LaurentPolynomial":
        """``coeff * A**exp``."""
        return cls({exp: coeff})

    @classmethod
    def zero(cls) -> "LaurentPolynomial":
        """The zero polynomial."""
        return cls()

    @classmethod
    def one(cls) -> "LaurentPolynomial":
        """The constant 1."""
        return cls({0: 1})

    @cached_property
    def term_map(self) -> dict[int, int]:
        """Exponent to coefficient."""
        return dict(self.terms)

    def coefficient(self, exp: int) -> int:
        """Coefficient of ``A**exp``."""
        return self.term_map.get(exp, 0)

    @property
    def is_zero(self) -> bool:
        """True for the zero polynomial."""
        return not self.terms

    @property
    def is_monomial(self) -> bool:
        """True when exactly one term is present."""
        return len(self.terms) == 1

    def __add__(self, other: "LaurentPolynomial | int") -> "LaurentPolynomial":
        """Term-wise sum."""
        other = _coerce(other)
        return LaurentPolynomial([*self.terms, *other.terms])

    __radd__ = __add__

    def __neg__(self) -> "LaurentPolynomial":
        """Negate every coefficient."""
        return LaurentPolynomial((e, -c) for e, c in self.terms)

    def __sub__(self, other: "LaurentPolynomial | int") -> "LaurentPolynomial":
        """Difference."""
        return self + (-_coerce(other))

    def __rsub__(self, other: "LaurentPolynomial | int") -> "LaurentPolynomial":
        """Reflected difference."""
        return _coerce(other) - self

    def __mul__(self, other: "LaurentPolynomial | int") -> "LaurentPolynomial":
        """Product."""
        other = _coerce(other)
        return LaurentPolynomial((e1 + e2, c1 * c2) for e1, c1 in self.terms for e2, c2 in other.terms)

    __rmul__ = __mul__

    def __pow__(self, n: int) -> "LaurentPolynomial":
        """Integer power. Negative powers exist only for monomials ``±A**k``.

        Raises:
            ValueError: For a negative power of anything but a unit monomial.

        """
        if n < 0:
            if not self.is_monomial or abs(self.terms[0][1]) != 1:
                msg = "only the monomials ±A^k are invertible"
                raise ValueError(msg)
            exp, coeff = self.terms[0]
            return LaurentPolynomial({-exp: coeff}) ** (-n)
        result = LaurentPolynomial.one()
        base = self
        while n:
            if n & 1:
                result = result * base
            base = base * base
            n >>= 1
        return result

    def invert_variable(self) -> "LaurentPolynomial":
        """Substitute ``A -> A**-1``."""
        return LaurentPolynomial((-e, c) for e, c in self.terms)

    def to_json(self) -> list[list[int]]:
        """``[[exp, coeff], ...]`` sorted by descending exponent."""
        return [[e, c] for e, c in self.terms]

    @classmethod
    def from_json(cls, data: Iterable[Iterable[int]]) -> "LaurentPolynomial":
        """Inverse of :meth:`to_json`."""
        return cls((int(e), int(c)) for e, c in data)

    def __str__(self) -> str:
        """Render like ``-A^2 - A^-2``; terms by descending exponent."""
        if not self.terms:
            return "0"
        pieces: list[str] = []
        for i, (exp, coeff) in enumerate(self.terms):
            magnitude = abs(coeff)
            if exp == 0:
                body = str(magnitude)
            else:
                power = "A" if exp == 1 else f"A^{exp}"
                body = power if magnitude == 1 else f"{magnitude}{power}"
            if i == 0:
                pieces.append(f"-{body}" if coeff < 0 else body)
            else:
                pieces.append(f"{'-' if coeff < 0 else '+'} {body}")
        return " ".join(pieces)


def _coerce(value: "LaurentPolynomial | int") -> LaurentPolynomial:
    if isinstance(value, LaurentPolynomial):
        return value
    return LaurentPolynomial.monomial(int(value), 0)


A = LaurentPolynomial.monomial(1, 1)
LOOP_VALUE = -(A**2) - A ** (-2)
