import itertools
import random

import pytest
from hypothesis import given
from hypothesis import strategies as st

from conftest import all_monic
from motivic_stability.exact import GF, ZZ, ExactMatrix, Poly, det_exact, poly_gcd
from motivic_stability.schemes import (
    BoundsError,
    FamilySpec,
    bezout_matrix,
    enumerate_irreducibles,
    has_mult_root,
    in_C,
    in_F,
    in_poly,
    resultant,
    scan,
    scan_coordinates,
    sylvester_matrix,
)

x = Poly.x()


def root_product(roots, g):
    """Res(prod (x - r), g) = prod g(r)."""
    out = 1
    for r in roots:
        out *= g(r)
    return out


class TestSylvester:
    def test_linear(self):
        assert sylvester_matrix(x - 2, x - 5).to_rows() == [[1, -2], [1, -5]]

    def test_quadratics(self):
        assert sylvester_matrix(x**2 + 1, x**2 - 1).to_rows() == [
            [1, 0, 1, 0],
            [0, 1, 0, 1],
            [1, 0, -1, 0],
            [0, 1, 0, -1],
        ]

    def test_unequal_degrees(self):
        assert sylvester_matrix(x**2, x).to_rows() == [[1, 0, 0], [1, 0, 0], [0, 1, 0]]

    def test_both_constant(self):
        with pytest.raises(ValueError):
            sylvester_matrix(Poly((2,)), Poly((3,)))


class TestResultant:
    def test_examples(self):
        assert resultant(x**2 - 1, x**2 - 4) == root_product([1, -1], x**2 - 4) == 9
        assert resultant(x, x) == 0
        # roots +-i: (i^2 - 1)((-i)^2 - 1) = (-2)(-2)
        assert resultant(x**2 + 1, x**2 - 1) == 4

    @given(
        st.lists(st.integers(-6, 6), min_size=1, max_size=4),
        st.lists(st.integers(-9, 9), min_size=1, max_size=5),
    )
    def test_root_product_oracle(self, roots, gcoeffs):
        g = Poly(tuple(gcoeffs))
        if g.is_zero:
            return
        f = Poly.from_roots(roots)
        assert resultant(f, g) == root_product(roots, g)

    @pytest.mark.parametrize("p", [2, 3])
    def test_common_root_criterion(self, p):
        for d1, d2 in itertools.product(range(1, 4), repeat=2):
            for f in all_monic(p, d1):
                for g in all_monic(p, d2):
                    vanishes = resultant(f, g) == 0
                    assert vanishes == (poly_gcd(f, g).degree > 0)

    def test_multiplicativity(self):
        rng = random.Random(11)
        for _ in range(300):
            f = Poly.monic([rng.randint(-5, 5) for _ in range(rng.randint(1, 3))])
            g = Poly(tuple(rng.randint(-5, 5) for _ in range(rng.randint(1, 4))) + (rng.choice([-2, 1, 3]),))
            h = Poly(tuple(rng.randint(-5, 5) for _ in range(rng.randint(0, 3))) + (rng.choice([-1, 2]),))
            assert resultant(f, g * h) == resultant(f, g) * resultant(f, h)

    def test_depends_on_g_mod_f(self):
        rng = random.Random(5)
        for _ in range(200):
            f = Poly.monic([rng.randint(-4, 4) for _ in range(rng.randint(1, 3))])
            g = Poly(tuple(rng.randint(-4, 4) for _ in range(5)) + (1,))
            r = g % f
            if r.is_zero:
                assert resultant(f, g) == 0
            else:
                assert resultant(f, g) == resultant(f, r)


class TestBezout:
    def test_quadratics(self):
        b = bezout_matrix(x**2 + 1, x**2 - 1)
        assert b.to_rows() == [[0, -2], [-2, 0]]
        assert det_exact(b) == -4

    @pytest.mark.parametrize("a,b", [(3, 7), (-2, 5), (0, 0)])
    def test_linear(self, a, b):
        assert bezout_matrix(x - a, x - b).to_rows() == [[a - b]]

    def test_same_poly_is_zero(self):
        f = x**3 - 2 * x + 5
        assert all(e == 0 for e in bezout_matrix(f, f).entries)

    def test_symmetric(self):
        f, g = x**4 + 3 * x**2 - x + 2, x**4 - x**3 + 7
        b = bezout_matrix(f, g)
        assert all(b[i, j] == b[j, i] for i in range(4) for j in range(4))

    def test_unequal_degrees(self):
        with pytest.raises(ValueError):
            bezout_matrix(x**2, x)

    def test_sign_depends_on_degree_only(self):
        rng = random.Random(17)
        for d in range(1, 5):
            seen = set()
            for _ in range(120):
                f = Poly.monic([rng.randint(-6, 6) for _ in range(d)])
                g = Poly.monic([rng.randint(-6, 6) for _ in range(d)])
                r, b = resultant(f, g), det_exact(bezout_matrix(f, g))
                assert abs(r) == abs(b)
                if r:
                    seen.add(b // r)
            assert len(seen) == 1
            assert seen == {(-1) ** (d * (d - 1) // 2)}


class TestScan:
    def test_worked_coordinates(self):
        assert scan_coordinates(Poly.monic([3, 1])) == (3, 1, 4, 3)

    def test_linear(self):
        assert scan(x) == (x, x + 1)

    def test_char_two(self):
        y = Poly.x(GF(2))
        assert scan(y**2) == (y**2, y**2)

    def test_non_monic(self):
        with pytest.raises(ValueError):
            scan(2 * x + 1)


class TestMembership:
    def test_in_F(self):
        y = Poly.x(GF(2))
        assert in_F((y, y + 1))
        assert not in_F((x**2 + 1, x**2 + 1))
        assert not in_F((x - 2, x - 5))
        assert in_F((x - 2, x - 3))

    def test_in_F_preconditions(self):
        with pytest.raises(ValueError):
            in_F((x, x**2))
        with pytest.raises(ValueError):
            in_F((2 * x, x))

    def test_in_F_degree_zero(self):
        one = Poly((1,))
        assert in_F((one, one))

    def test_in_C(self):
        y = Poly.x(GF(2))
        assert in_C(y**2 + y)
        assert not in_C(x**2)
        assert not in_C(Poly.x(GF(3)) ** 2)
        # roots 0, -1: f'(0) f'(-1) = 1 * (-1), a unit
        assert in_C(x**2 + x)
        assert in_C(Poly((1,))) and in_C(x + 7)

    def test_in_C_over_Z_needs_unit(self):
        # x^2 - 4 is squarefree over Q but its discriminant-type resultant is not a unit
        assert not in_C(x**2 - 4)

    @pytest.mark.parametrize("p", [2, 3, 5])
    def test_scanning_equivalence(self, p):
        for d in range(1, 5):
            for f in all_monic(p, d):
                assert in_C(f) == in_F(scan(f))


def irreducibles_by_trial_division(p, n):
    """Monic degree-n polynomials with no monic divisor of degree 1..n-1."""
    lower = [f for k in range(1, n) for f in all_monic(p, k)]
    return {f for f in all_monic(p, n) if not any((f % g).is_zero for g in lower)}


def mobius_count(p, n):
    def mu(k):
        out, m, q = 1, k, 2
        while q * q <= m:
            if m % q == 0:
                m //= q
                if m % q == 0:
                    return 0
                out = -out
            q += 1
        return -out if m > 1 else out

    return sum(mu(n // k) * p**k for k in range(1, n + 1) if n % k == 0) // n


class TestIrreducibles:
    def test_p2_deg2(self):
        y = Poly.x(GF(2))
        assert set(enumerate_irreducibles(2, 2)) == {y, y + 1, y**2 + y + 1}

    def test_p3_quadratics(self):
        assert sum(1 for f in enumerate_irreducibles(3, 2) if f.degree == 2) == 3

    def test_p2_linear(self):
        y = Poly.x(GF(2))
        assert enumerate_irreducibles(2, 1) == [y, y + 1]

    @pytest.mark.parametrize("p,max_deg", [(2, 6), (3, 4), (5, 3), (7, 2)])
    def test_against_trial_division(self, p, max_deg):
        got = enumerate_irreducibles(p, max_deg)
        for n in range(1, max_deg + 1):
            assert {f for f in got if f.degree == n} == irreducibles_by_trial_division(p, n)

    @pytest.mark.parametrize("p,n", [(2, 8), (3, 6), (5, 5), (7, 4)])
    def test_necklace_counts(self, p, n):
        got = enumerate_irreducibles(p, n)
        assert sum(1 for f in got if f.degree == n) == mobius_count(p, n)

    def test_bounds(self):
        with pytest.raises(BoundsError):
            enumerate_irreducibles(11, 2)
        with pytest.raises(BoundsError):
            enumerate_irreducibles(2, 9)


class TestMultipleRoots:
    def test_visible_double_root(self):
        y = Poly.x(GF(5))
        assert has_mult_root((y - 1) ** 2 * (y - 2), 2)

    def test_double_root_in_extension(self):
        y = Poly.x(GF(2))
        assert has_mult_root((y**2 + y + 1) ** 2, 2)
        assert not has_mult_root((y**2 + y + 1) ** 2, 3)

    def test_nu_one(self):
        y = Poly.x(GF(3))
        assert has_mult_root(y**2 + 1, 1)
        assert not has_mult_root(Poly((1,), GF(3)), 1)

    @pytest.mark.parametrize("p", [2, 3])
    def test_against_all_monic_divisors(self, p):
        for d in range(0, 5):
            for g in all_monic(p, d):
                for nu in (1, 2, 3):
                    brute = any(
                        (g % h**nu).is_zero
                        for k in range(1, d // nu + 1)
                        for h in all_monic(p, k)
                    )
                    assert has_mult_root(g, nu) == brute


class TestInPoly:
    def test_examples(self):
        y2, y3 = Poly.x(GF(2)), Poly.x(GF(3))
        assert in_poly([y2, y2 + 1], FamilySpec(1, 2, 1))
        assert not in_poly([y3**2], FamilySpec(2, 1, 2))
        for f in all_monic(5, 2):
            assert in_poly([f], FamilySpec(3, 1, 2))

    def test_preconditions(self):
        y = Poly.x(GF(3))
        with pytest.raises(ValueError):
            in_poly([y], FamilySpec(1, 2, 1))
        with pytest.raises(ValueError):
            in_poly([y, y**2], FamilySpec(1, 2, 1))
        with pytest.raises(ValueError):
            in_poly([x, x + 1], FamilySpec(1, 2, 1))

    def test_family_validation(self):
        with pytest.raises(ValueError):
            FamilySpec(0, 1, 1)
        with pytest.raises(ValueError):
            FamilySpec(1, 1, -1)

    @pytest.mark.parametrize("p", [2, 3])
    def test_specializations(self, p):
        for d in range(1, 4):
            monics = all_monic(p, d)
            for f, g in itertools.product(monics, repeat=2):
                assert in_poly([f, g], FamilySpec(1, 2, d)) == in_F((f, g))
            for f in monics:
                assert in_poly([f], FamilySpec(2, 1, d)) == in_C(f)
