"""Grothendieck-ring classes as Laurent polynomials in the Lefschetz class L."""

from __future__ import annotations

from fractions import Fraction
from functools import lru_cache

from .exact import L, LaurentPoly
from .schemes import FamilySpec

# A class in K_0 is a Laurent polynomial in L; no separate wrapper is needed.
TateClass = LaurentPoly

ONE = LaurentPoly.constant(1)


def class_affine(n: int) -> TateClass:
    if n < 0:
        raise ValueError("dimension must be nonnegative")
    return L**n


def class_projective(n: int) -> TateClass:
    if n < 0:
        raise ValueError("dimension must be nonnegative")
    return LaurentPoly(tuple((k, 1) for k in range(n + 1)))


def gysin_class(x: TateClass, z: TateClass, codim: int) -> TateClass:
    """Class of the open complement U = X - Z of a smooth closed Z of codimension ``codim``.

    Works on homological classes (Euler classes of motives, where Z(1)[2] is L):
    the Gysin triangle M(U) -> M(X) -> M(Z)(c)[2c] gives [U] = [X] - L^c [Z].
    Use ``dual_class`` to pass to the point-counting class of a smooth U.
    """
    if codim < 1:
        raise ValueError("codimension must be positive")
    return x - L**codim * z


def dual_class(c: TateClass, dim: int) -> TateClass:
    """L^dim * c(L^-1): homological class of a smooth dim-dimensional variety to its
    point-counting class, and back."""
    return LaurentPoly(tuple((dim - e, k) for e, k in c.terms))


@lru_cache(maxsize=None)
def _family_class(nu: int, m: int, d: int) -> TateClass:
    if d < nu:
        return L ** (d * m)
    # A^{dm} is stratified by the largest h with h^nu dividing the tuple;
    # the stratum with deg h = k is Poly_nu^{d-k*nu,m} x A^k.
    strata = LaurentPoly()
    k = 1
    while d - k * nu >= 0:
        strata = strata + L**k * _family_class(nu, m, d - k * nu)
        k += 1
    return L ** (d * m) - strata


def class_poly_family(spec: FamilySpec) -> TateClass:
    return _family_class(spec.nu, spec.m, spec.d)


def stratification_sum(spec: FamilySpec) -> TateClass:
    """Sum over the strata of the class identity; equals L^{dm} when the recursion holds."""
    total = LaurentPoly()
    k = 0
    while spec.d - k * spec.nu >= 0:
        total = total + L**k * class_poly_family(FamilySpec(spec.nu, spec.m, spec.d - k * spec.nu))
        k += 1
    return total


def specialize(c: TateClass, q: int) -> int | Fraction:
    """Evaluate the class at L = q."""
    return c.evaluate(q)
