"""Dense univariate polynomials over Z or F_p."""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Sequence

from .domain import ZZ, Domain, common_domain


def _trim(coeffs: list[int]) -> tuple[int, ...]:
    while coeffs and coeffs[-1] == 0:
        coeffs.pop()
    return tuple(coeffs)


@dataclass(frozen=True)
class Poly:
    """Polynomial with ascending coefficients; ``coeffs[i]`` multiplies x^i.

    The zero polynomial has an empty coefficient tuple and degree -1.
    """

    coeffs: tuple[int, ...]
    domain: Domain = ZZ

    def __post_init__(self):
        object.__setattr__(self, "coeffs", _trim([self.domain.reduce(int(c)) for c in self.coeffs]))

    @classmethod
    def from_roots(cls, roots: Iterable[int], domain: Domain = ZZ) -> "Poly":
        out = cls((1,), domain)
        for r in roots:
            out = out * cls((-r, 1), domain)
        return out

    @classmethod
    def monic(cls, lower: Sequence[int], domain: Domain = ZZ) -> "Poly":
        """The monic polynomial x^d + lower[d-1] x^(d-1) + ... + lower[0]."""
        return cls(tuple(lower) + (1,), domain)

    @classmethod
    def x(cls, domain: Domain = ZZ) -> "Poly":
        return cls((0, 1), domain)

    @property
    def degree(self) -> int:
        return len(self.coeffs) - 1

    @property
    def is_zero(self) -> bool:
        return not self.coeffs

    @property
    def leading(self) -> int:
        return self.coeffs[-1] if self.coeffs else 0

    @property
    def is_monic(self) -> bool:
        return self.leading == 1

    def lower_coeffs(self) -> tuple[int, ...]:
        """Coefficients a_0, ..., a_{d-1} below the leading term."""
        return self.coeffs[:-1]

    def _lift(self, other) -> "Poly":
        if isinstance(other, Poly):
            common_domain(self.domain, other.domain)
            return other
        if isinstance(other, int):
            return Poly((other,), self.domain)
        return NotImplemented

    def __add__(self, other):
        other = self._lift(other)
        if other is NotImplemented:
            return other
        a, b = self.coeffs, other.coeffs
        if len(a) < len(b):
            a, b = b, a
        out = list(a)
        for i, c in enumerate(b):
            out[i] += c
        return Poly(tuple(out), self.domain)

    __radd__ = __add__

    def __neg__(self):
        return Poly(tuple(-c for c in self.coeffs), self.domain)

    def __sub__(self, other):
        other = self._lift(other)
        if other is NotImplemented:
            return other
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        other = self._lift(other)
        if other is NotImplemented:
            return other
        a, b = self.coeffs, other.coeffs
        if not a or not b:
            return Poly((), self.domain)
        out = [0] * (len(a) + len(b) - 1)
        for i, ca in enumerate(a):
            if ca:
                for j, cb in enumerate(b):
                    out[i + j] += ca * cb
        return Poly(tuple(out), self.domain)

    __rmul__ = __mul__

    def __pow__(self, n: int):
        if n < 0:
            raise ValueError("negative exponent")
        out = Poly((1,), self.domain)
        base = self
        while n:
            if n & 1:
                out = out * base
            base = base * base
            n >>= 1
        return out

    def __call__(self, point: int) -> int:
        acc = 0
        for c in reversed(self.coeffs):
            acc = acc * point + c
        return self.domain.reduce(acc)

    def derivative(self) -> "Poly":
        return Poly(tuple(i * c for i, c in enumerate(self.coeffs) if i), self.domain)

    def divmod(self, divisor: "Poly") -> tuple["Poly", "Poly"]:
        """Euclidean division. Over Z the divisor must have unit leading coefficient."""
        common_domain(self.domain, divisor.domain)
        if divisor.is_zero:
            raise ZeroDivisionError("polynomial division by zero")
        inv = self.domain.inverse(divisor.leading)
        rem = list(self.coeffs)
        dd = divisor.degree
        quot = [0] * max(len(rem) - dd, 0)
        dc = divisor.coeffs
        red = self.domain.reduce
        for k in range(len(rem) - 1, dd - 1, -1):
            c = red(rem[k] * inv)
            if c:
                quot[k - dd] = c
                for i in range(dd + 1):
                    rem[k - dd + i] -= c * dc[i]
            rem[k] = 0
        return Poly(tuple(quot), self.domain), Poly(tuple(rem[:dd]), self.domain)

    def __floordiv__(self, other: "Poly") -> "Poly":
        return self.divmod(other)[0]

    def __mod__(self, other: "Poly") -> "Poly":
        return self.divmod(other)[1]

    def make_monic(self) -> "Poly":
        if self.is_zero:
            return self
        inv = self.domain.inverse(self.leading)
        return Poly(tuple(c * inv for c in self.coeffs), self.domain)

    def reduce_to(self, domain: Domain) -> "Poly":
        """Image under Z -> F_p."""
        return Poly(self.coeffs, domain)

    def __str__(self):
        if self.is_zero:
            return "0"
        parts = []
        for i in range(self.degree, -1, -1):
            c = self.coeffs[i]
            if not c:
                continue
            sign = "-" if c < 0 else "+"
            mag = abs(c)
            if i == 0:
                body = str(mag)
            else:
                mono = "x" if i == 1 else f"x^{i}"
                body = mono if mag == 1 else f"{mag}*{mono}"
            parts.append((sign, body))
        head_sign, head = parts[0]
        out = ("-" if head_sign == "-" else "") + head
        for sign, body in parts[1:]:
            out += f" {sign} {body}"
        return out


def poly_gcd(f: Poly, g: Poly) -> Poly:
    """Monic gcd over a prime field."""
    domain = common_domain(f.domain, g.domain)
    if not domain.is_field:
        # content and unit ambiguity over Z: reduce mod p or use resultant predicates instead
        raise ValueError("poly_gcd is only defined over prime fields")
    if f.is_zero and g.is_zero:
        raise ValueError("gcd(0, 0) is undefined")
    a, b = f, g
    while not b.is_zero:
        a, b = b, a % b
    return a.make_monic()


def poly_gcd_many(polys: Sequence[Poly]) -> Poly:
    out = polys[0]
    for f in polys[1:]:
        out = poly_gcd(out, f)
    return out.make_monic()


def common_domain_of(*polys: Poly):
    return common_domain(*(f.domain for f in polys))
