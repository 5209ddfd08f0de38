"""Coefficient domains: the integers and prime fields F_p."""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache

MAX_PRIME = 2**31


class DomainMismatchError(ValueError):
    pass


@lru_cache(maxsize=None)
def is_prime(n: int) -> bool:
    if n < 2:
        return False
    if n % 2 == 0:
        return n == 2
    k = 3
    while k * k <= n:
        if n % k == 0:
            return False
        k += 2
    return True


@dataclass(frozen=True)
class Domain:
    """Either the integers (``p is None``) or the prime field F_p."""

    p: int | None = None

    def __post_init__(self):
        if self.p is not None:
            if not isinstance(self.p, int) or not (self.p < MAX_PRIME and is_prime(self.p)):
                raise ValueError(f"prime field characteristic must be a prime < 2^31, got {self.p!r}")

    @property
    def is_field(self) -> bool:
        return self.p is not None

    def reduce(self, a: int) -> int:
        return a if self.p is None else a % self.p

    def inverse(self, a: int) -> int:
        if self.p is None:
            if a in (1, -1):
                return a
            raise ZeroDivisionError(f"{a} is not a unit in Z")
        a %= self.p
        if a == 0:
            raise ZeroDivisionError("division by zero in F_%d" % self.p)
        return pow(a, -1, self.p)

    def is_unit(self, a: int) -> bool:
        if self.p is None:
            return a in (1, -1)
        return a % self.p != 0

    def elements(self):
        if self.p is None:
            raise ValueError("Z is infinite")
        return range(self.p)

    def __str__(self):
        return "Z" if self.p is None else f"F_{self.p}"

    __repr__ = __str__


ZZ = Domain()


@lru_cache(maxsize=None)
def GF(p: int) -> Domain:
    return Domain(p)


def common_domain(*domains: Domain) -> Domain:
    first = domains[0]
    for other in domains[1:]:
        if other != first:
            raise DomainMismatchError(f"domain mismatch: {first} vs {other}")
    return first
