"""Resultants, Bezout matrices, the scanning map and the membership predicates
of the configuration schemes F_d, C_d and Poly_nu^{d,m}."""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from typing import Sequence

import numpy as np

from .exact import ExactMatrix, GF, Poly, common_domain_of, det_exact, poly_gcd, poly_gcd_many

MAX_IRREDUCIBLE_PRIME = 7
MAX_IRREDUCIBLE_DEGREE = 8


class BoundsError(ValueError):
    """Requested enumeration exceeds the desk-scale limits."""


@dataclass(frozen=True)
class FamilySpec:
    """Parameters of Poly_nu^{d,m}: m-tuples of monic degree-d polynomials whose
    common factor has no root of multiplicity >= nu."""

    nu: int
    m: int
    d: int

    def __post_init__(self):
        if self.nu < 1 or self.m < 1 or self.d < 0:
            raise ValueError(f"invalid family nu={self.nu}, m={self.m}, d={self.d}")

    @classmethod
    def F(cls, d: int) -> "FamilySpec":
        return cls(1, 2, d)

    @classmethod
    def C(cls, d: int) -> "FamilySpec":
        return cls(2, 1, d)

    def to_json(self) -> dict[str, int]:
        return {"nu": self.nu, "m": self.m, "d": self.d}

    def __str__(self):
        return f"Poly_{self.nu}^({self.d},{self.m})"


# -- resultants ---------------------------------------------------------------

def sylvester_matrix(f: Poly, g: Poly) -> ExactMatrix:
    """deg g shifted rows of f followed by deg f shifted rows of g, descending coefficients."""
    domain = common_domain_of(f, g)
    if f.is_zero or g.is_zero:
        raise ValueError("Sylvester matrix of a zero polynomial")
    m, n = f.degree, g.degree
    if m < 1 and n < 1:
        raise ValueError("Sylvester matrix needs at least one nonconstant polynomial")
    size = m + n
    fd = f.coeffs[::-1]
    gd = g.coeffs[::-1]
    rows = []
    for i in range(n):
        rows.append([0] * i + list(fd) + [0] * (size - m - 1 - i))
    for i in range(m):
        rows.append([0] * i + list(gd) + [0] * (size - n - 1 - i))
    return ExactMatrix.from_rows(rows, domain)


def resultant(f: Poly, g: Poly) -> int:
    return det_exact(sylvester_matrix(f, g))


def bezout_matrix(f: Poly, g: Poly) -> ExactMatrix:
    """Coefficient matrix B[i][j] of x^i y^j in (f(x)g(y) - f(y)g(x)) / (x - y)."""
    domain = common_domain_of(f, g)
    d = f.degree
    if d != g.degree:
        raise ValueError(f"Bezout matrix needs equal degrees, got {f.degree} and {g.degree}")
    if d < 1 or not (f.is_monic and g.is_monic):
        raise ValueError("Bezout matrix needs monic polynomials of degree >= 1")
    fc = f.coeffs
    gc = g.coeffs
    # numerator as a polynomial in x whose coefficients are lists indexed by the power of y
    num = [[fc[i] * gc[j] - fc[j] * gc[i] for j in range(d + 1)] for i in range(d + 1)]
    # synthetic division by (x - y)
    quot = [[0] * (d + 1) for _ in range(d)]
    carry = [0] * (d + 2)
    for i in range(d, 0, -1):
        row = [num[i][j] + carry[j] for j in range(d + 1)]
        quot[i - 1] = row
        carry = [0] + row
    remainder = [num[0][j] + carry[j] for j in range(d + 1)] + carry[d + 1:]
    if any(remainder):
        raise ArithmeticError("Cayley quotient is not exact")
    return ExactMatrix.from_rows([row[:d] for row in quot], domain)


# -- scanning map and membership ----------------------------------------------

def scan(f: Poly) -> tuple[Poly, Poly]:
    """f -> (f, f + f')."""
    if not f.is_monic or f.degree < 1:
        raise ValueError("scan needs a monic polynomial of degree >= 1")
    return f, f + f.derivative()


def scan_coordinates(f: Poly) -> tuple[int, ...]:
    """Flattened affine coordinates (a_0..a_{d-1}, b_0..b_{d-1}) of scan(f)."""
    f, g = scan(f)
    return f.lower_coeffs() + g.lower_coeffs()


def _check_monic_pair(f: Poly, g: Poly) -> None:
    common_domain_of(f, g)
    if not (f.is_monic and g.is_monic):
        raise ValueError("expected monic polynomials")
    if f.degree != g.degree:
        raise ValueError(f"expected equal degrees, got {f.degree} and {g.degree}")


def in_F(pair: tuple[Poly, Poly]) -> bool:
    """Point of F_d: resultant invertible in the coefficient ring."""
    f, g = pair
    _check_monic_pair(f, g)
    if f.degree == 0:
        return True
    return f.domain.is_unit(resultant(f, g))


def in_C(f: Poly) -> bool:
    """Squarefree monic f. Over F_p this is gcd(f, f') = 1; over Z the scanned
    pair must have unit resultant."""
    if not f.is_monic:
        raise ValueError("expected a monic polynomial")
    if f.degree <= 1:
        return True
    if f.domain.is_field:
        return coprime(f, f.derivative())
    return in_F(scan(f))


# -- multiplicity detection over F_p -------------------------------------------

def _check_irreducible_bounds(p: int, max_deg: int) -> None:
    if p > MAX_IRREDUCIBLE_PRIME or max_deg > MAX_IRREDUCIBLE_DEGREE:
        raise BoundsError(
            f"irreducible enumeration limited to p <= {MAX_IRREDUCIBLE_PRIME}, "
            f"degree <= {MAX_IRREDUCIBLE_DEGREE} (got p={p}, degree={max_deg})"
        )


def _digits(count: int, p: int, width: int) -> np.ndarray:
    idx = np.arange(count, dtype=np.int64)
    return np.stack([(idx // p**j) % p for j in range(width)], axis=1) if width else np.zeros((count, 0), np.int64)


@lru_cache(maxsize=None)
def _irreducible_lowers(p: int, n: int) -> tuple[tuple[int, ...], ...]:
    """Lower coefficient vectors of the monic irreducibles of degree n over F_p.

    A monic polynomial of degree n is reducible iff some irreducible of degree
    k <= n/2 divides it, so every reducible one is struck out as a product
    (irreducible of degree k) * (monic of degree n - k).
    """
    total = p**n
    reducible = np.zeros(total, dtype=bool)
    weights = p ** np.arange(n, dtype=np.int64)
    for k in range(1, n // 2 + 1):
        cofactors = _digits(p ** (n - k), p, n - k)
        cofactors = np.hstack([cofactors, np.ones((len(cofactors), 1), np.int64)])
        for lower in _irreducible_lowers(p, k):
            pi = lower + (1,)
            prod = np.zeros((len(cofactors), n + 1), dtype=np.int64)
            for i, c in enumerate(pi):
                if c:
                    prod[:, i:i + n - k + 1] += c * cofactors
            prod %= p
            reducible[prod[:, :n] @ weights] = True
    survivors = np.flatnonzero(~reducible)
    return tuple(tuple(int(x) for x in (s // weights) % p) for s in survivors)


def enumerate_irreducibles(p: int, max_deg: int) -> list[Poly]:
    """All monic irreducible polynomials over F_p of degree 1..max_deg."""
    _check_irreducible_bounds(p, max_deg)
    dom = GF(p)
    return [Poly.monic(low, dom) for n in range(1, max_deg + 1) for low in _irreducible_lowers(p, n)]


def has_mult_root(g: Poly, nu: int) -> bool:
    """True iff pi^nu divides g for some monic irreducible pi."""
    if not g.domain.is_field or not g.is_monic:
        raise ValueError("has_mult_root needs a monic polynomial over a prime field")
    if nu < 1:
        raise ValueError("nu must be >= 1")
    top = g.degree // nu
    if top == 0:
        return False
    p = g.domain.p
    _check_irreducible_bounds(p, top)
    for k in range(1, top + 1):
        for low in _irreducible_lowers(p, k):
            pi = Poly.monic(low, g.domain)
            if (g % pi**nu).is_zero:
                return True
    return False


def in_poly(polys: Sequence[Poly], spec: FamilySpec) -> bool:
    """Point of Poly_nu^{d,m}: gcd of the tuple has no root of multiplicity >= nu."""
    if len(polys) != spec.m:
        raise ValueError(f"expected {spec.m} polynomials, got {len(polys)}")
    dom = common_domain_of(*polys)
    if not dom.is_field:
        raise ValueError("in_poly is defined over prime fields")
    for f in polys:
        if not f.is_monic or f.degree != spec.d:
            raise ValueError(f"expected monic polynomials of degree {spec.d}, got {f}")
    return not has_mult_root(poly_gcd_many(list(polys)), spec.nu)


def coprime(f: Poly, g: Poly) -> bool:
    return poly_gcd(f, g).degree == 0
