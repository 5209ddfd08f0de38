"""Command-line front end: count, class, verify, stability."""

from __future__ import annotations

import argparse
import csv
import io
import itertools
import json
import os
import sys
import time
from pathlib import Path

from .enumeration import (
    CacheIntegrityError,
    GuardRailError,
    cache_lookup,
    cache_store,
    count_partitioned,
)
from .exact import is_prime
from .motives import SlopeFunction, SplitTateMotive, is_stable_sequence
from .schemes import BoundsError, FamilySpec
from .tate import class_poly_family, specialize
from .verify import verify_recursion, verify_resultant, verify_scan

EXIT_OK = 0
EXIT_FAIL = 1
EXIT_USAGE = 2
EXIT_INTEGRITY = 3

DEFAULT_CACHE = Path.home() / ".cache" / "motivic_stability" / "counts.jsonl"


class UsageError(Exception):
    pass


def _int_list(text: str) -> list[int]:
    try:
        return [int(x) for x in text.split(",") if x.strip()]
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected comma-separated integers, got {text!r}") from None


def _primes(text: str) -> list[int]:
    values = _int_list(text)
    bad = [p for p in values if not is_prime(p)]
    if bad:
        raise argparse.ArgumentTypeError(f"not prime: {bad}")
    return values


def cache_path(arg: str | None) -> Path:
    if arg:
        return Path(arg)
    env = os.environ.get("WORKBENCH_CACHE")
    return Path(env) if env else DEFAULT_CACHE


def _family(nu: int, m: int, d: int) -> FamilySpec:
    try:
        return FamilySpec(nu, m, d)
    except ValueError as exc:
        raise UsageError(str(exc)) from None


# -- output -----------------------------------------------------------------------

def make_report(command: str, argv: list[str], params: dict, results: list[dict], passed: bool, started: float) -> dict:
    return {
        "command": command,
        "argv": list(argv),
        "params": params,
        "results": results,
        "summary": {"passed": passed, "cases": str(len(results))},
        "wall_clock_seconds": f"{time.perf_counter() - started:.3f}",
    }


def _table(rows: list[dict], columns: list[str]) -> str:
    widths = {c: max(len(c), *(len(str(r.get(c, ""))) for r in rows)) if rows else len(c) for c in columns}
    lines = ["  ".join(c.ljust(widths[c]) for c in columns)]
    lines.append("  ".join("-" * widths[c] for c in columns))
    for r in rows:
        lines.append("  ".join(str(r.get(c, "")).ljust(widths[c]) for c in columns))
    return "\n".join(lines)


def emit(report: dict, args, columns: list[str], out) -> None:
    if getattr(args, "json", False):
        out.write(json.dumps(report, sort_keys=True, indent=2) + "\n")
    elif getattr(args, "csv", False):
        buf = io.StringIO()
        writer = csv.DictWriter(buf, fieldnames=columns, extrasaction="ignore", lineterminator="\n")
        writer.writeheader()
        writer.writerows(report["results"])
        out.write(buf.getvalue())
    else:
        out.write(_table(report["results"], columns) + "\n")
        verdict = "PASS" if report["summary"]["passed"] else "FAIL"
        out.write(f"{verdict} ({report['summary']['cases']} cases, {report['wall_clock_seconds']} s)\n")


# -- commands -------------------------------------------------------------------------

COUNT_COLUMNS = ["nu", "m", "d", "p", "count", "method", "produced_at"]


def cmd_count(args, argv, out) -> int:
    started = time.perf_counter()
    path = cache_path(args.cache)
    results = []
    for nu, m, d, p in itertools.product(args.nu, args.m, args.d, args.p):
        spec = _family(nu, m, d)
        try:
            record = cache_lookup(spec, p, path)
            if record is None:
                record = count_partitioned(spec, p, args.parts, workers=args.workers)
                cache_store(record, path)
        except CacheIntegrityError as exc:
            print(f"cache integrity error: {exc}", file=sys.stderr)
            return EXIT_INTEGRITY
        except (GuardRailError, BoundsError) as exc:
            print(f"error: {exc}", file=sys.stderr)
            return EXIT_USAGE
        row = {**{k: str(v) for k, v in spec.to_json().items()}, **record.to_json()}
        del row["family"]
        row["p"] = str(record.p)
        results.append(row)
    params = {
        "nu": [str(v) for v in args.nu],
        "m": [str(v) for v in args.m],
        "d": [str(v) for v in args.d],
        "p": [str(v) for v in args.p],
        "parts": str(args.parts),
        "cache": str(path),
    }
    emit(make_report("count", argv, params, results, True, started), args, COUNT_COLUMNS, out)
    return EXIT_OK


def cmd_class(args, argv, out) -> int:
    started = time.perf_counter()
    spec = _family(args.nu, args.m, args.d)
    cls = class_poly_family(spec)
    row = {"nu": str(spec.nu), "m": str(spec.m), "d": str(spec.d), "class": str(cls), "terms": cls.to_json()}
    if args.at is not None:
        try:
            row["at"] = str(args.at)
            row["value"] = str(specialize(cls, args.at))
        except ZeroDivisionError as exc:
            raise UsageError(str(exc)) from None
    report = make_report("class", argv, {"nu": str(spec.nu), "m": str(spec.m), "d": str(spec.d)}, [row], True, started)
    if args.json:
        emit(report, args, [], out)
    else:
        out.write(f"{row['class']}\n")
        if "value" in row:
            out.write(f"{row['value']}\n")
    return EXIT_OK


def cmd_verify(args, argv, out) -> int:
    started = time.perf_counter()
    primes = args.primes
    if args.suite == "scan":
        res = verify_scan(args.max_d, primes or [2, 3, 5], trials=args.trials or 200, seed=args.seed)
    elif args.suite == "recursion":
        res = verify_recursion(args.max_d, primes or [2, 3])
    else:
        res = verify_resultant(trials=args.trials or 1000, primes=primes or [2, 3, 5], seed=args.seed)
    params = {
        "suite": args.suite,
        "max_d": str(args.max_d),
        "primes": [str(p) for p in (primes or [])],
        "trials": str(args.trials) if args.trials else "default",
        "seed": str(args.seed),
    }
    report = make_report("verify", argv, params, res.cases, res.passed, started)
    if res.counterexample is not None:
        report["counterexample"] = res.counterexample
    emit(report, args, ["case", "checked", "sign", "cls", "count"], out)
    if not res.passed:
        print("counterexample: " + json.dumps(res.counterexample, sort_keys=True), file=sys.stderr)
        if not args.json:
            out.write("counterexample: " + json.dumps(res.counterexample, sort_keys=True) + "\n")
        return EXIT_FAIL
    return EXIT_OK


def load_sequence(path: str) -> list[SplitTateMotive]:
    try:
        data = json.loads(Path(path).read_text(encoding="utf-8"))
    except (OSError, json.JSONDecodeError) as exc:
        raise UsageError(f"cannot read sequence: {exc}") from None
    if isinstance(data, dict):
        data = data.get("sequence")
    if not isinstance(data, list) or len(data) < 2:
        raise UsageError("expected a JSON list of at least two motives")
    try:
        return [SplitTateMotive.from_json(item) for item in data]
    except ValueError as exc:
        raise UsageError(f"malformed motive: {exc}") from None


def load_slope(choice: str) -> SlopeFunction:
    if choice == "default":
        return SlopeFunction.default()
    if choice.startswith("table:"):
        try:
            raw = json.loads(Path(choice[len("table:"):]).read_text(encoding="utf-8"))
            if isinstance(raw, list):
                raw = dict(enumerate(raw))
            return SlopeFunction(raw)
        except (OSError, json.JSONDecodeError, ValueError, TypeError, AttributeError) as exc:
            raise UsageError(f"bad slope table: {exc}") from None
    raise UsageError(f"unknown slope {choice!r}; use 'default' or 'table:<path>'")


def cmd_stability(args, argv, out) -> int:
    started = time.perf_counter()
    seq = load_sequence(args.path)
    slope = load_slope(args.slope)
    for d in range(len(seq) - 1):
        if not slope.domain_contains(d):
            raise UsageError(f"slope table has no value at d={d}")
    verdicts = is_stable_sequence(seq, slope)
    rows = [{"d": str(d), "slope": str(slope(d)), "stable": str(v).lower()} for d, v in enumerate(verdicts)]
    report = make_report("stability", argv, {"path": args.path, "slope": args.slope}, rows, all(verdicts), started)
    emit(report, args, ["d", "slope", "stable"], out)
    return EXIT_OK if all(verdicts) else EXIT_FAIL


# -- parser ------------------------------------------------------------------------------

def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="motivic-stability", description=__doc__)
    sub = parser.add_subparsers(dest="command", required=True)

    count = sub.add_parser("count", help="exhaustive point count of Poly_nu^{d,m}(F_p)")
    count.add_argument("--nu", type=_int_list, required=True)
    count.add_argument("--m", type=_int_list, required=True)
    count.add_argument("--d", type=_int_list, required=True)
    count.add_argument("--p", "--primes", dest="p", type=_primes, required=True)
    count.add_argument("--parts", type=int, default=1)
    count.add_argument("--workers", type=int, default=None)
    count.add_argument("--cache")
    fmt = count.add_mutually_exclusive_group()
    fmt.add_argument("--json", action="store_true")
    fmt.add_argument("--csv", action="store_true")
    count.set_defaults(func=cmd_count)

    klass = sub.add_parser("class", help="Grothendieck class of Poly_nu^{d,m}")
    klass.add_argument("--nu", type=int, required=True)
    klass.add_argument("--m", type=int, required=True)
    klass.add_argument("--d", type=int, required=True)
    klass.add_argument("--at", type=int)
    klass.add_argument("--json", action="store_true")
    klass.set_defaults(func=cmd_class)

    verify = sub.add_parser("verify", help="run an exhaustive property suite")
    verify.add_argument("suite", choices=["scan", "recursion", "resultant"])
    verify.add_argument("--max-d", type=int, default=4)
    verify.add_argument("--primes", "--p", dest="primes", type=_primes)
    verify.add_argument("--trials", type=int)
    verify.add_argument("--seed", type=int, default=0)
    verify.add_argument("--json", action="store_true")
    verify.set_defaults(func=cmd_verify)

    stab = sub.add_parser("stability", help="check homological stability of a split-motive sequence")
    stab.add_argument("path")
    stab.add_argument("--slope", default="default")
    stab.add_argument("--json", action="store_true")
    stab.set_defaults(func=cmd_stability)
    return parser


def main(argv: list[str] | None = None, out=None) -> int:
    argv = list(sys.argv[1:] if argv is None else argv)
    out = out or sys.stdout
    args = build_parser().parse_args(argv)
    if getattr(args, "parts", 1) < 1:
        print("error: --parts must be >= 1", file=sys.stderr)
        return EXIT_USAGE
    try:
        return args.func(args, argv, out)
    except UsageError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
