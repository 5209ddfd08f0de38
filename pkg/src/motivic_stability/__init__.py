"""Exact-arithmetic workbench for resultant-defined configuration schemes,
their point counts and Grothendieck classes, and split mixed Tate motives."""

from .enumeration import CountRecord, cache_lookup, cache_store, count_partitioned, count_points
from .schemes import (
    FamilySpec,
    bezout_matrix,
    enumerate_irreducibles,
    has_mult_root,
    in_C,
    in_F,
    in_poly,
    resultant,
    scan,
    sylvester_matrix,
)
from .tate import class_affine, class_poly_family, class_projective, dual_class, gysin_class, specialize

__version__ = "0.1.0"
