#!/usr/bin/env python3
"""Script to build the von Mangoldt table once and save it as an .npz cache."""
import argparse
import sys

from gapbound.config import Config
from gapbound.errors import GapBoundError
from gapbound.sieve_oracle import build_sieve, divisor_identity_check, load_sieve, save_sieve


def main():
    """Build, check and save the sieve cache."""
    parser = argparse.ArgumentParser(description="Build the von Mangoldt sieve cache")
    parser.add_argument(
        "--limit",
        type=int,
        default=Config.SIEVE_MAX,
        help="Largest n in the table (default: GAPBOUND_SIEVE_MAX)"
    )
    parser.add_argument(
        "--out",
        default=Config.SIEVE_CACHE or "sieve_cache.npz",
        help="Cache path (default: GAPBOUND_SIEVE_CACHE or sieve_cache.npz)"
    )
    args = parser.parse_args()

    # Validate configuration
    errors = Config.validate()
    if errors:
        print("Configuration errors:")
        for error in errors:
            print(f"  - {error}")
        sys.exit(1)

    try:
        print(f"Sieving up to {args.limit}...")
        table = build_sieve(args.limit)
        print(f"  Found {len(table.prime_powers)} prime powers")

        report = divisor_identity_check(table, min(table.limit, 100000))
        print(f"  Divisor identity max deviation: {report.max_deviation:.3e}")
        if not report.passed:
            print("  Divisor identity failed; cache not written")
            sys.exit(1)

        path = save_sieve(table, args.out)
        reloaded = load_sieve(path)
        if reloaded.limit != table.limit:
            print("  Reloaded cache has the wrong limit")
            sys.exit(1)
        print(f"Saved {path}")
    except GapBoundError as exc:
        print(f"Error: {exc}")
        sys.exit(1)


if __name__ == "__main__":
    main()
