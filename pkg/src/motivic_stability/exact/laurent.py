"""Laurent polynomials in the Lefschetz symbol L with integer coefficients."""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Mapping


@dataclass(frozen=True)
class LaurentPoly:
    """Sparse Laurent polynomial; ``terms`` holds sorted (exponent, coefficient) pairs."""

    terms: tuple[tuple[int, int], ...] = ()

    def __post_init__(self):
        acc: dict[int, int] = {}
        for e, c in self.terms:
            acc[int(e)] = acc.get(int(e), 0) + int(c)
        object.__setattr__(self, "terms", tuple(sorted((e, c) for e, c in acc.items() if c)))

    @classmethod
    def from_dict(cls, terms: Mapping[int, int]) -> "LaurentPoly":
        return cls(tuple(terms.items()))

    @classmethod
    def monomial(cls, exponent: int, coeff: int = 1) -> "LaurentPoly":
        return cls(((exponent, coeff),))

    @classmethod
    def constant(cls, c: int) -> "LaurentPoly":
        return cls(((0, c),))

    def as_dict(self) -> dict[int, int]:
        return dict(self.terms)

    def coeff(self, exponent: int) -> int:
        return self.as_dict().get(exponent, 0)

    @property
    def is_zero(self) -> bool:
        return not self.terms

    @property
    def min_exponent(self) -> int | None:
        return self.terms[0][0] if self.terms else None

    @property
    def max_exponent(self) -> int | None:
        return self.terms[-1][0] if self.terms else None

    def _coerce(self, other):
        if isinstance(other, LaurentPoly):
            return other
        if isinstance(other, int):
            return LaurentPoly.constant(other)
        return NotImplemented

    def __add__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return LaurentPoly(self.terms + other.terms)

    __radd__ = __add__

    def __neg__(self):
        return LaurentPoly(tuple((e, -c) for e, c in self.terms))

    def __sub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return LaurentPoly(
            tuple((e1 + e2, c1 * c2) for e1, c1 in self.terms for e2, c2 in other.terms)
        )

    __rmul__ = __mul__

    def __pow__(self, n: int):
        if n < 0:
            if len(self.terms) == 1 and self.terms[0][1] in (1, -1):
                e, c = self.terms[0]
                return LaurentPoly.monomial(e * n, c ** (-n))
            raise ValueError("only unit monomials can be inverted")
        out = LaurentPoly.constant(1)
        for _ in range(n):
            out = out * self
        return out

    def evaluate(self, q: int) -> int | Fraction:
        """Substitute L = q exactly; returns an int whenever the value is integral."""
        if q == 0 and self.terms and self.terms[0][0] < 0:
            raise ZeroDivisionError("negative power of L evaluated at 0")
        total = Fraction(0)
        for e, c in self.terms:
            total += c * Fraction(q) ** e
        return int(total) if total.denominator == 1 else total

    def __str__(self):
        if not self.terms:
            return "0"
        out = ""
        for e, c in reversed(self.terms):
            mag = abs(c)
            if e == 0:
                body = str(mag)
            else:
                mono = "L" if e == 1 else f"L^{e}"
                body = mono if mag == 1 else f"{mag}*{mono}"
            if not out:
                out = ("-" if c < 0 else "") + body
            else:
                out += (" - " if c < 0 else " + ") + body
        return out

    def to_json(self) -> dict[str, str]:
        return {str(e): str(c) for e, c in self.terms}

    @classmethod
    def from_json(cls, data: Mapping[str, str]) -> "LaurentPoly":
        return cls(tuple((int(e), int(c)) for e, c in data.items()))


L = LaurentPoly.monomial(1)
