"""Exhaustive point counts of Poly_nu^{d,m} over F_p, with a JSON-lines result cache."""

from __future__ import annotations

import json
import os
import tempfile
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from datetime import datetime, timezone
from pathlib import Path
from typing import Iterator

from filelock import FileLock

from .exact import GF, Poly, is_prime
from .schemes import FamilySpec, in_poly

GUARD_RAIL = 10**8


class GuardRailError(ValueError):
    pass


class CacheIntegrityError(RuntimeError):
    pass


def _now() -> str:
    return datetime.now(timezone.utc).isoformat(timespec="seconds")


@dataclass(frozen=True)
class CountRecord:
    family: FamilySpec
    p: int
    count: int
    method: str = "brute"
    produced_at: str = field(default_factory=_now, compare=False)

    def __post_init__(self):
        if self.method not in ("brute", "formula", "class-specialization"):
            raise ValueError(f"unknown method {self.method!r}")
        bound = self.p ** (self.family.d * self.family.m)
        if not 0 <= self.count <= bound:
            raise ValueError(f"count {self.count} outside [0, {bound}]")

    @property
    def key(self) -> tuple[int, int, int, int]:
        return (self.family.nu, self.family.m, self.family.d, self.p)

    def to_json(self) -> dict:
        return {
            "family": self.family.to_json(),
            "p": self.p,
            "count": str(self.count),
            "method": self.method,
            "produced_at": self.produced_at,
        }

    @classmethod
    def from_json(cls, data: dict) -> "CountRecord":
        fam = data["family"]
        return cls(
            family=FamilySpec(int(fam["nu"]), int(fam["m"]), int(fam["d"])),
            p=int(data["p"]),
            count=int(data["count"]),
            method=data["method"],
            produced_at=data["produced_at"],
        )


def _check(spec: FamilySpec, p: int) -> int:
    if not is_prime(p):
        raise ValueError(f"{p} is not prime")
    total = p ** (spec.d * spec.m)
    if total > GUARD_RAIL:
        raise GuardRailError(f"p^(d*m) = {total} exceeds the guard rail {GUARD_RAIL}")
    return total


def _tuples(p: int, width: int, start: int, stop: int) -> Iterator[list[int]]:
    """Coefficient tuples with indices in [start, stop), lexicographic order,
    first coordinate most significant."""
    if start >= stop:
        return
    digits = [0] * width
    n = start
    for i in range(width - 1, -1, -1):
        n, digits[i] = divmod(n, p)
    for _ in range(stop - start):
        yield digits
        i = width - 1
        while i >= 0:
            digits[i] += 1
            if digits[i] < p:
                break
            digits[i] = 0
            i -= 1


def count_block(spec: FamilySpec, p: int, start: int, stop: int) -> int:
    """Points of Poly_nu^{d,m}(F_p) whose coefficient tuple index lies in [start, stop)."""
    d, m = spec.d, spec.m
    dom = GF(p)
    if d * m == 0:
        one = Poly((1,), dom)
        return int(start <= 0 < stop and in_poly([one] * m, spec))
    hits = 0
    for coords in _tuples(p, d * m, start, stop):
        polys = [Poly.monic(coords[j * d:(j + 1) * d], dom) for j in range(m)]
        if in_poly(polys, spec):
            hits += 1
    return hits


def _blocks(total: int, parts: int) -> list[tuple[int, int]]:
    size, extra = divmod(total, parts)
    out, lo = [], 0
    for k in range(parts):
        hi = lo + size + (1 if k < extra else 0)
        out.append((lo, hi))
        lo = hi
    return out


def count_points(spec: FamilySpec, p: int) -> CountRecord:
    total = _check(spec, p)
    return CountRecord(spec, p, count_block(spec, p, 0, total))


def count_partitioned(spec: FamilySpec, p: int, parts: int, workers: int | None = None) -> CountRecord:
    """Same count as count_points, summed over ``parts`` contiguous lexicographic blocks.

    With ``workers > 1`` the blocks are evaluated in a process pool.
    """
    if parts < 1:
        raise ValueError("parts must be >= 1")
    total = _check(spec, p)
    blocks = _blocks(total, parts)
    if workers and workers > 1:
        with ProcessPoolExecutor(max_workers=workers) as pool:
            counts = list(pool.map(count_block, *zip(*[(spec, p, lo, hi) for lo, hi in blocks])))
    else:
        counts = [count_block(spec, p, lo, hi) for lo, hi in blocks]
    return CountRecord(spec, p, sum(counts))


# -- cache ----------------------------------------------------------------------

def _read_records(path: Path) -> list[CountRecord]:
    if not path.exists():
        return []
    records = []
    with path.open(encoding="utf-8") as fh:
        for line in fh:
            if line.strip():
                records.append(CountRecord.from_json(json.loads(line)))
    return records


def _check_integrity(records: list[CountRecord]) -> None:
    seen: dict[tuple, int] = {}
    for rec in records:
        prev = seen.setdefault(rec.key, rec.count)
        if prev != rec.count:
            raise CacheIntegrityError(
                f"conflicting counts {prev} and {rec.count} for {rec.family} over F_{rec.p}"
            )


def cache_store(record: CountRecord, path: str | os.PathLike) -> None:
    """Append a record; the file is rewritten to a temp file and renamed into place."""
    path = Path(path)
    path.parent.mkdir(parents=True, exist_ok=True)
    with FileLock(str(path) + ".lock"):
        records = _read_records(path)
        _check_integrity(records + [record])
        existing = path.read_bytes() if path.exists() else b""
        if existing and not existing.endswith(b"\n"):
            existing += b"\n"
        line = json.dumps(record.to_json(), sort_keys=True) + "\n"
        fd, tmp = tempfile.mkstemp(dir=path.parent, prefix=path.name + ".", suffix=".tmp")
        try:
            with os.fdopen(fd, "wb") as fh:
                fh.write(existing + line.encode("utf-8"))
                fh.flush()
                os.fsync(fh.fileno())
            os.replace(tmp, path)
        except BaseException:
            if os.path.exists(tmp):
                os.unlink(tmp)
            raise


def cache_lookup(spec: FamilySpec, p: int, path: str | os.PathLike) -> CountRecord | None:
    path = Path(path)
    if not path.exists():
        return None
    with FileLock(str(path) + ".lock"):
        records = _read_records(path)
    matching = [r for r in records if r.family == spec and r.p == p]
    _check_integrity(matching)
    if not matching:
        return None
    # stable max keeps the later line on equal timestamps
    best = matching[0]
    for rec in matching[1:]:
        if rec.produced_at >= best.produced_at:
            best = rec
    return best
