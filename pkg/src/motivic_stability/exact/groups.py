"""Finitely generated abelian groups in invariant-factor normal form."""

from __future__ import annotations

from collections import defaultdict
from dataclasses import dataclass
from math import gcd
from typing import Iterable


def _prime_powers(n: int) -> list[tuple[int, int]]:
    out = []
    k = 2
    while k * k <= n:
        if n % k == 0:
            e = 0
            while n % k == 0:
                n //= k
                e += 1
            out.append((k, e))
        k += 1
    if n > 1:
        out.append((n, 1))
    return out


def invariant_factors(orders: Iterable[int]) -> tuple[int, ...]:
    """Normal form of Z/n_1 + ... + Z/n_k as an ascending divisibility chain."""
    by_prime: dict[int, list[int]] = defaultdict(list)
    for n in orders:
        n = int(n)
        if n < 1:
            raise ValueError(f"cyclic order must be positive, got {n}")
        for p, e in _prime_powers(n):
            by_prime[p].append(p**e)
    if not by_prime:
        return ()
    length = max(len(v) for v in by_prime.values())
    factors = [1] * length
    for powers in by_prime.values():
        powers.sort(reverse=True)
        for i, q in enumerate(powers):
            factors[length - 1 - i] *= q
    return tuple(f for f in factors if f > 1)


@dataclass(frozen=True, order=True)
class FgAbelianGroup:
    """Z^free_rank + Z/d_1 + ... + Z/d_k with d_1 | d_2 | ... | d_k, each d_i >= 2."""

    free_rank: int = 0
    torsion: tuple[int, ...] = ()

    def __post_init__(self):
        if self.free_rank < 0:
            raise ValueError("free rank must be nonnegative")
        object.__setattr__(self, "torsion", invariant_factors(self.torsion))

    @classmethod
    def free(cls, rank: int = 1) -> "FgAbelianGroup":
        return cls(rank)

    @classmethod
    def cyclic(cls, n: int) -> "FgAbelianGroup":
        return cls(0, (n,))

    @property
    def is_trivial(self) -> bool:
        return self.free_rank == 0 and not self.torsion

    def __add__(self, other: "FgAbelianGroup") -> "FgAbelianGroup":
        return FgAbelianGroup(self.free_rank + other.free_rank, self.torsion + other.torsion)

    def sort_key(self) -> tuple[int, tuple[int, ...]]:
        return (self.free_rank, self.torsion)

    def __str__(self):
        parts = []
        if self.free_rank:
            parts.append("Z" if self.free_rank == 1 else f"Z^{self.free_rank}")
        parts.extend(f"Z/{d}" for d in self.torsion)
        return " + ".join(parts) if parts else "0"


def direct_sum(groups: Iterable[FgAbelianGroup]) -> FgAbelianGroup:
    out = FgAbelianGroup()
    for g in groups:
        out = out + g
    return out


def group_tensor(a: FgAbelianGroup, b: FgAbelianGroup) -> tuple[FgAbelianGroup, FgAbelianGroup]:
    """Return (A (x) B, Tor(A, B)) from ranks and invariant factors."""
    tensor_torsion = list(a.torsion) * b.free_rank + list(b.torsion) * a.free_rank
    tor_torsion = []
    for d in a.torsion:
        for e in b.torsion:
            g = gcd(d, e)
            tensor_torsion.append(g)
            tor_torsion.append(g)
    return (
        FgAbelianGroup(a.free_rank * b.free_rank, tuple(tensor_torsion)),
        FgAbelianGroup(0, tuple(tor_torsion)),
    )
