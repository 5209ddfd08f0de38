"""Exhaustive and randomized verification drivers used by the ``verify`` command."""

from __future__ import annotations

import itertools
import random
from dataclasses import dataclass, field
from typing import Iterable

from .enumeration import GUARD_RAIL, count_points
from .exact import GF, L, Poly, det_exact
from .schemes import FamilySpec, bezout_matrix, in_C, in_F, resultant, scan, scan_coordinates
from .tate import class_poly_family, specialize, stratification_sum


@dataclass
class SuiteResult:
    suite: str
    cases: list[dict] = field(default_factory=list)
    counterexample: dict | None = None

    @property
    def passed(self) -> bool:
        return self.counterexample is None

    def record(self, name: str, checked: int, **extra) -> None:
        self.cases.append({"case": name, "checked": str(checked), **{k: str(v) for k, v in extra.items()}})

    def fail(self, **detail) -> "SuiteResult":
        self.counterexample = {k: str(v) for k, v in detail.items()}
        return self


def monic_polys(p: int, d: int) -> Iterable[Poly]:
    dom = GF(p)
    for lower in itertools.product(range(p), repeat=d):
        yield Poly.monic(lower, dom)


def random_monic(rng: random.Random, d: int, bound: int = 10) -> Poly:
    return Poly.monic([rng.randint(-bound, bound) for _ in range(d)])


def random_poly(rng: random.Random, d: int, bound: int = 10) -> Poly:
    coeffs = [rng.randint(-bound, bound) for _ in range(d)]
    lead = 0
    while lead == 0:
        lead = rng.randint(-bound, bound)
    return Poly(tuple(coeffs) + (lead,))


def scan_formula(a: tuple[int, ...]) -> tuple[int, ...]:
    """(a_0..a_{d-1}) -> (a_0..a_{d-1}, a_0+a_1, a_1+2a_2, ..., a_{d-1}+d)."""
    d = len(a)
    ext = tuple(a) + (1,)
    return tuple(a) + tuple(ext[i] + (i + 1) * ext[i + 1] for i in range(d))


def verify_scan(max_d: int, primes: Iterable[int], trials: int = 200, seed: int = 0) -> SuiteResult:
    res = SuiteResult("scan")
    for p in primes:
        for d in range(1, max_d + 1):
            n = 0
            for f in monic_polys(p, d):
                lhs = in_C(f)
                rhs = in_F(scan(f))
                if lhs != rhs:
                    return res.fail(p=p, d=d, f=f, in_C=lhs, in_F_scan=rhs)
                n += 1
            res.record(f"in_C == in_F o scan, p={p}, d={d}", n)
    rng = random.Random(seed)
    for d in range(1, max(6, max_d) + 1):
        for _ in range(trials):
            f = random_monic(rng, d)
            got = scan_coordinates(f)
            want = scan_formula(f.lower_coeffs())
            if got != want:
                return res.fail(d=d, f=f, got=got, want=want)
        res.record(f"coordinate formula, d={d}", trials)
    return res


def verify_recursion(max_d: int, primes: Iterable[int]) -> SuiteResult:
    res = SuiteResult("recursion")
    primes = list(primes)
    for nu in (1, 2, 3):
        for m in (1, 2):
            for d in range(max_d + 1):
                spec = FamilySpec(nu, m, d)
                cls = class_poly_family(spec)
                if stratification_sum(spec) != L ** (d * m):
                    return res.fail(spec=spec, reason="stratification sum differs from L^dm")
                for p in primes:
                    if p ** (d * m) > GUARD_RAIL:
                        continue
                    brute = count_points(spec, p).count
                    value = specialize(cls, p)
                    if value != brute:
                        return res.fail(spec=spec, p=p, cls=cls, specialized=value, brute=brute)
                    res.record(f"{spec} over F_{p}", 1, cls=cls, count=brute)
    return res


def bezout_sign(f: Poly, g: Poly) -> int | None:
    """e with det(Bezout) = e * Res; 0 when both vanish, None when no sign fits."""
    r = resultant(f, g)
    b = det_exact(bezout_matrix(f, g))
    if r == 0:
        return 0 if b == 0 else None
    if b == r:
        return 1
    if b == -r:
        return -1
    return None


def verify_resultant(trials: int = 1000, primes: Iterable[int] = (2, 3, 5), seed: int = 0) -> SuiteResult:
    res = SuiteResult("resultant")
    rng = random.Random(seed)
    for p in primes:
        dom = GF(p)
        for _ in range(trials):
            f = random_monic(rng, rng.randint(1, 5))
            g = random_monic(rng, rng.randint(1, 5))
            lhs = resultant(f.reduce_to(dom), g.reduce_to(dom))
            rhs = resultant(f, g) % p
            if lhs != rhs:
                return res.fail(check="base change", p=p, f=f, g=g, reduced_first=lhs, reduced_after=rhs)
        res.record(f"base change Z -> F_{p}", trials)

    n_mult = max(1, trials // 2)
    for _ in range(n_mult):
        f = random_monic(rng, rng.randint(1, 4))
        g = random_poly(rng, rng.randint(0, 4))
        h = random_poly(rng, rng.randint(0, 4))
        lhs = resultant(f, g * h)
        rhs = resultant(f, g) * resultant(f, h)
        if lhs != rhs:
            return res.fail(check="multiplicativity", f=f, g=g, h=h, lhs=lhs, rhs=rhs)
    res.record("multiplicativity", n_mult)

    count = 0
    for d in range(1, 4):
        for f in monic_polys(3, d):
            deriv = f.derivative()
            if deriv.is_zero:
                # Res(f, 0) vanishes; f + f' = f shares every root with f
                ok = resultant(f, f + deriv) == 0
            else:
                ok = resultant(f, f + deriv) == resultant(f, deriv)
            if not ok:
                return res.fail(check="root product", f=f)
            count += 1
    res.record("Res(f, f+f') = Res(f, f') over F_3", count)

    for d in range(1, 5):
        signs = set()
        for _ in range(max(1, trials // 2)):
            f = random_monic(rng, d)
            g = random_monic(rng, d)
            e = bezout_sign(f, g)
            if e is None:
                return res.fail(check="bezout", f=f, g=g)
            if e:
                signs.add(e)
        if len(signs) > 1:
            return res.fail(check="bezout sign depends on more than degree", d=d)
        res.record(f"bezout sign, d={d}", max(1, trials // 2), sign=signs.pop() if signs else "undetermined")
    return res

