"""Command line runner for the named checks, with JSON reports and caching."""

from __future__ import annotations

import argparse
import sys
import time
from concurrent.futures import ThreadPoolExecutor

from . import __version__
from .checks import REGISTRY, REGISTRY_BY_ID, ChainCache, derive_seed
from .report import CheckResult, VerificationReport


def _run_one(spec, requested, seed: int, cache: ChainCache) -> CheckResult:
    primes = (
        tuple(p for p in spec.primes if p in requested)
        if requested is not None
        else spec.primes
    )
    if not primes:
        return CheckResult(
            spec.check_id,
            spec.paper_anchor,
            "skip",
            "",
            "",
            0,
            "no requested prime applies to this check",
        )
    t0 = time.monotonic()
    try:
        computed, expected, notes = spec.run(
            primes, derive_seed(seed, spec.check_id), cache
        )
    except Exception as exc:
        elapsed = int((time.monotonic() - t0) * 1000)
        return CheckResult(
            spec.check_id,
            spec.paper_anchor,
            "error",
            "",
            "",
            elapsed,
            f"{type(exc).__name__}: {exc}",
        )
    elapsed = int((time.monotonic() - t0) * 1000)
    status = "pass" if computed == expected else "fail"
    return CheckResult(
        spec.check_id, spec.paper_anchor, status, computed, expected, elapsed, notes
    )


def main(argv=None) -> int:
    parser = argparse.ArgumentParser(
        prog="verify",
        description="Recompute each verified statement exactly and compare "
        "against its expected value.",
    )
    parser.add_argument(
        "checks",
        nargs="+",
        metavar="check-id",
        help="ids from the registry (%s) or 'all'"
        % ", ".join(s.check_id for s in REGISTRY),
    )
    parser.add_argument(
        "--prime",
        action="append",
        type=int,
        metavar="r",
        help="restrict prime sweeps to this prime; repeatable",
    )
    parser.add_argument("--seed", type=int, default=0, metavar="n")
    parser.add_argument("--json", metavar="path", help="write the report as JSON")
    parser.add_argument(
        "--cache",
        metavar="dir",
        default=".verify_cache",
        help="directory for serialized stabilizer chains",
    )
    parser.add_argument(
        "--no-cache", action="store_true", help="recompute everything from scratch"
    )
    args = parser.parse_args(argv)

    unknown = [c for c in args.checks if c != "all" and c not in REGISTRY_BY_ID]
    if unknown:
        parser.print_usage(sys.stderr)
        print(
            f"verify: error: unknown check id(s): {', '.join(unknown)}",
            file=sys.stderr,
        )
        return 2

    if "all" in args.checks:
        selected = list(REGISTRY)
    else:
        wanted = set(args.checks)
        selected = [spec for spec in REGISTRY if spec.check_id in wanted]

    cache = ChainCache(None if args.no_cache else args.cache)
    requested = tuple(args.prime) if args.prime else None

    with ThreadPoolExecutor(max_workers=min(4, len(selected))) as pool:
        futures = [
            pool.submit(_run_one, spec, requested, args.seed, cache)
            for spec in selected
        ]
        results = [f.result() for f in futures]

    report = VerificationReport(__version__, args.seed, results)
    for r in results:
        line = f"{r.status:<5} {r.check_id:<14} {r.paper_anchor:<11} {r.elapsed_ms:>7} ms"
        if r.computed:
            line += f"  {r.computed}"
        print(line)
        if r.status == "fail":
            print(f"      expected: {r.expected}")
        elif r.status in ("error", "skip"):
            print(f"      {r.notes}")
    npass = sum(r.status == "pass" for r in results)
    print(f"{npass}/{len(results)} checks passed")

    if args.json:
        with open(args.json, "w", encoding="utf-8") as fh:
            fh.write(report.to_json())
    return 1 if report.has_failures() else 0


if __name__ == "__main__":
    sys.exit(main())
