from .domain import GF, ZZ, Domain, DomainMismatchError, is_prime
from .groups import FgAbelianGroup, direct_sum, group_tensor, invariant_factors
from .laurent import L, LaurentPoly
from .matrix import ExactMatrix, det_cofactor, det_exact
from .poly import Poly, common_domain_of, poly_gcd, poly_gcd_many

__all__ = [
    "GF",
    "ZZ",
    "Domain",
    "DomainMismatchError",
    "is_prime",
    "FgAbelianGroup",
    "direct_sum",
    "group_tensor",
    "invariant_factors",
    "L",
    "LaurentPoly",
    "ExactMatrix",
    "det_cofactor",
    "det_exact",
    "Poly",
    "poly_gcd",
    "poly_gcd_many",
    "common_domain_of",
]
