"""Split mixed Tate motives: finite direct sums of A(q)[n].

A summand ``A(q)[n]`` carries a finitely generated abelian group A, a Tate
twist q and a homological degree n; its weight is -q. Maps and cones are not
represented, so every object is a direct sum and truncations are selections.
"""

from __future__ import annotations

import enum
import json
from collections import defaultdict
from dataclasses import dataclass
from typing import Callable, Iterable, Mapping, Sequence

from .exact import FgAbelianGroup, LaurentPoly, direct_sum, group_tensor

Graded = dict[int, FgAbelianGroup]


@dataclass(frozen=True)
class SplitSummand:
    group: FgAbelianGroup
    twist: int
    degree: int

    @property
    def weight(self) -> int:
        return -self.twist

    def sort_key(self):
        return (self.degree, self.twist, self.group.sort_key())

    def to_json(self) -> dict:
        return {
            "rank": self.group.free_rank,
            "torsion": list(self.group.torsion),
            "twist": self.twist,
            "degree": self.degree,
        }

    def __str__(self):
        return f"{self.group}({self.twist})[{self.degree}]"


class SplitTateMotive:
    """Finite multiset of summands, kept sorted by (degree, twist, group).

    Two motives compare equal when, for every (degree, twist), the direct sums
    of their groups agree; so Z(0)[0] + Z(0)[0] equals Z^2(0)[0].
    """

    __slots__ = ("summands", "_canon")

    def __init__(self, summands: Iterable[SplitSummand] = ()):
        kept = [s for s in summands if not s.group.is_trivial]
        self.summands: tuple[SplitSummand, ...] = tuple(sorted(kept, key=SplitSummand.sort_key))
        buckets: dict[tuple[int, int], list[FgAbelianGroup]] = defaultdict(list)
        for s in self.summands:
            buckets[(s.degree, s.twist)].append(s.group)
        self._canon = tuple(sorted((k, direct_sum(v)) for k, v in buckets.items()))

    @classmethod
    def of(cls, *triples: tuple) -> "SplitTateMotive":
        """Build from (group, twist, degree) triples; an int group r means Z^r."""
        out = []
        for g, q, n in triples:
            if isinstance(g, int):
                g = FgAbelianGroup(g)
            out.append(SplitSummand(g, q, n))
        return cls(out)

    def canonical(self) -> tuple:
        return self._canon

    def __eq__(self, other):
        if not isinstance(other, SplitTateMotive):
            return NotImplemented
        return self._canon == other._canon

    def __hash__(self):
        return hash(self._canon)

    def __len__(self):
        return len(self.summands)

    def __iter__(self):
        return iter(self.summands)

    @property
    def is_zero(self) -> bool:
        return not self.summands

    def __add__(self, other: "SplitTateMotive") -> "SplitTateMotive":
        return SplitTateMotive(self.summands + other.summands)

    def shift(self, k: int) -> "SplitTateMotive":
        return SplitTateMotive(SplitSummand(s.group, s.twist, s.degree + k) for s in self.summands)

    def twist(self, k: int) -> "SplitTateMotive":
        return SplitTateMotive(SplitSummand(s.group, s.twist + k, s.degree) for s in self.summands)

    def __matmul__(self, other: "SplitTateMotive") -> "SplitTateMotive":
        return tensor(self, other)

    def __repr__(self):
        if not self.summands:
            return "SplitTateMotive(0)"
        return "SplitTateMotive(" + " + ".join(map(str, self.summands)) + ")"

    __str__ = __repr__

    def to_json(self) -> list[dict]:
        return [s.to_json() for s in self.summands]

    @classmethod
    def from_json(cls, data: Sequence[Mapping]) -> "SplitTateMotive":
        if not isinstance(data, (list, tuple)):
            raise ValueError("a motive is a JSON list of summands")
        out = []
        for item in data:
            if not isinstance(item, Mapping):
                raise ValueError(f"summand must be an object, got {item!r}")
            missing = {"rank", "torsion", "twist", "degree"} - set(item)
            if missing:
                raise ValueError(f"summand missing keys {sorted(missing)}")
            rank, torsion = item["rank"], item["torsion"]
            twist, degree = item["twist"], item["degree"]
            if not all(isinstance(v, int) and not isinstance(v, bool) for v in (rank, twist, degree)):
                raise ValueError(f"rank, twist and degree must be integers in {item!r}")
            if not isinstance(torsion, list) or not all(isinstance(t, int) and t >= 1 for t in torsion):
                raise ValueError(f"torsion must be a list of positive integers in {item!r}")
            out.append(SplitSummand(FgAbelianGroup(rank, tuple(torsion)), twist, degree))
        return cls(out)

    def dumps(self) -> str:
        return json.dumps(self.to_json(), sort_keys=True)


ZERO = SplitTateMotive()
UNIT = SplitTateMotive.of((1, 0, 0))


def structural(m: SplitTateMotive, n: SplitTateMotive | None = None, *, op: str, k: int = 0) -> SplitTateMotive:
    if op == "sum":
        return m + (n if n is not None else ZERO)
    if op == "shift":
        return m.shift(k)
    if op == "twist":
        return m.twist(k)
    raise ValueError(f"unknown structural op {op!r}")


def tensor(m: SplitTateMotive, n: SplitTateMotive) -> SplitTateMotive:
    """A(q)[n] (x) A'(q')[n'] = (A (x) A')(q+q')[n+n'] + Tor(A, A')(q+q')[n+n'+1], bilinearly."""
    out = []
    for a in m.summands:
        for b in n.summands:
            tens, tor = group_tensor(a.group, b.group)
            q, deg = a.twist + b.twist, a.degree + b.degree
            out.append(SplitSummand(tens, q, deg))
            out.append(SplitSummand(tor, q, deg + 1))
    return SplitTateMotive(out)


def projective_space(n: int) -> SplitTateMotive:
    """Model of M(P^n) = Z(0) + Z(1)[2] + ... + Z(n)[2n]."""
    return SplitTateMotive.of(*[(1, k, 2 * k) for k in range(n + 1)])


# -- weights and t-structure ----------------------------------------------------

def weight_truncate(m: SplitTateMotive, n: int) -> SplitTateMotive:
    """W_{<=n}: summands of weight at most n."""
    return SplitTateMotive(s for s in m.summands if s.weight <= n)


def weight_graded(m: SplitTateMotive, n: int) -> SplitTateMotive:
    return SplitTateMotive(s for s in m.summands if s.weight == n)


def weight_bounds(m: SplitTateMotive) -> tuple[int, int] | None:
    if m.is_zero:
        return None
    ws = [s.weight for s in m.summands]
    return min(ws), max(ws)


def t_truncate(m: SplitTateMotive, d: int, side: str) -> SplitTateMotive:
    """t_{<d} (side="below") or t_{>=d} (side="geq")."""
    if side == "below":
        return SplitTateMotive(s for s in m.summands if s.degree < d)
    if side == "geq":
        return SplitTateMotive(s for s in m.summands if s.degree >= d)
    raise ValueError(f"side must be 'below' or 'geq', got {side!r}")


# -- realizations -------------------------------------------------------------------

def betti_realize(m: SplitTateMotive) -> Graded:
    """Degree -> homology group; twists are forgotten, zero groups omitted."""
    parts: dict[int, list[FgAbelianGroup]] = defaultdict(list)
    for s in m.summands:
        parts[s.degree].append(s.group)
    return {deg: direct_sum(gs) for deg, gs in sorted(parts.items())}


def derived_tensor_graded(a: Graded, b: Graded) -> Graded:
    """Kuenneth formula for complexes of free-resolvable groups with zero differential."""
    parts: dict[int, list[FgAbelianGroup]] = defaultdict(list)
    for i, ga in a.items():
        for j, gb in b.items():
            tens, tor = group_tensor(ga, gb)
            parts[i + j].append(tens)
            parts[i + j + 1].append(tor)
    out = {}
    for deg, gs in sorted(parts.items()):
        g = direct_sum(gs)
        if not g.is_trivial:
            out[deg] = g
    return out


def euler_class(m: SplitTateMotive) -> LaurentPoly:
    """Sum of (-1)^degree * rank(A) * L^twist; torsion contributes nothing.

    Z(1)[2] decategorifies to L, so M(P^n) maps to 1 + L + ... + L^n.
    """
    out = LaurentPoly()
    for s in m.summands:
        if s.group.free_rank:
            out = out + LaurentPoly.monomial(s.twist, (-1) ** (s.degree % 2) * s.group.free_rank)
    return out


# -- Hom vanishing ---------------------------------------------------------------------

class HomVerdict(enum.Enum):
    KNOWN_ZERO = "KnownZero"
    KNOWN_Z = "KnownZ"
    UNKNOWN = "Unknown"


def hom_rules(i: int, m: int, j: int, n: int) -> list[tuple[str, HomVerdict]]:
    """Every rule that applies to Hom(Z(i)[m], Z(j)[n]), with its verdict."""
    out = []
    if j < i:
        out.append(("twist-decreasing", HomVerdict.KNOWN_ZERO))
    if i == j and m != n:
        out.append(("same-twist-shift", HomVerdict.KNOWN_ZERO))
    if i == j and m == n:
        out.append(("endomorphisms", HomVerdict.KNOWN_Z))
    if i == 0 and m == 0 and ((j >= 0 and n < 0) or (j > 0 and n <= 0)):
        out.append(("beilinson-soule", HomVerdict.KNOWN_ZERO))
    return out


def hom_oracle(i: int, m: int, j: int, n: int) -> HomVerdict:
    verdicts = {v for _, v in hom_rules(i, m, j, n)}
    if len(verdicts) > 1:
        raise AssertionError(f"contradictory Hom verdicts for ({i},{m},{j},{n}): {verdicts}")
    return verdicts.pop() if verdicts else HomVerdict.UNKNOWN


# -- homological stability ----------------------------------------------------------------

def default_slope(d: int) -> int:
    return min(d, d // 2 + 2)


class SlopeFunction:
    """Either the default min(d, floor(d/2) + 2) or an explicit table d -> l(d)."""

    def __init__(self, table: Mapping[int, int] | None = None):
        if table is not None:
            table = {int(d): int(v) for d, v in table.items()}
            keys = sorted(table)
            if not keys:
                raise ValueError("empty slope table")
            values = [table[d] for d in keys]
            if any(v < 0 for v in values):
                raise ValueError("slope values must be natural numbers")
            if any(b < a for a, b in zip(values, values[1:])):
                raise ValueError("slope table must be nondecreasing")
        self.table = table

    @classmethod
    def default(cls) -> "SlopeFunction":
        return cls()

    @classmethod
    def from_callable(cls, fn: Callable[[int], int], domain: Iterable[int]) -> "SlopeFunction":
        return cls({d: fn(d) for d in domain})

    @property
    def is_default(self) -> bool:
        return self.table is None

    def domain_contains(self, d: int) -> bool:
        return self.table is None or d in self.table

    def __call__(self, d: int) -> int:
        if self.table is None:
            return default_slope(d)
        try:
            return self.table[d]
        except KeyError:
            raise KeyError(f"slope table has no value at d={d}") from None

    def __eq__(self, other):
        if not isinstance(other, SlopeFunction):
            return NotImplemented
        return self.table == other.table

    def agrees_with(self, other: "SlopeFunction", domain: Iterable[int]) -> bool:
        return all(self(d) == other(d) for d in domain)

    def __repr__(self):
        return "SlopeFunction(default)" if self.table is None else f"SlopeFunction({self.table})"


def is_stable_sequence(seq: Sequence[SplitTateMotive], slope: SlopeFunction) -> list[bool]:
    """verdict[d]: t_{<l(d)} M_d is isomorphic to t_{<l(d)} M_{d+1}."""
    if len(seq) < 2:
        raise ValueError("need at least two motives")
    out = []
    for d in range(len(seq) - 1):
        cut = slope(d)
        out.append(t_truncate(seq[d], cut, "below") == t_truncate(seq[d + 1], cut, "below"))
    return out


class StabilityTransferError(ValueError):
    def __init__(self, d: int):
        super().__init__(f"comparison is not an isomorphism below the slope at d={d}")
        self.d = d


def stability_transfer(
    verdicts_m: Sequence[bool] | Mapping[int, bool],
    slope_l: SlopeFunction,
    slope_m: SlopeFunction,
    d_range: Iterable[int] | None = None,
) -> SlopeFunction:
    """Slope min(l, m) for the other sequence, as a table on the checked range."""
    if not isinstance(verdicts_m, Mapping):
        verdicts_m = dict(enumerate(verdicts_m))
    ds = sorted(verdicts_m) if d_range is None else list(d_range)
    for d in ds:
        if not verdicts_m.get(d, False):
            raise StabilityTransferError(d)
    if slope_l.is_default and slope_m.is_default:
        return SlopeFunction.default()
    return SlopeFunction({d: min(slope_l(d), slope_m(d)) for d in ds})
