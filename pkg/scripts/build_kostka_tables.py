#!/usr/bin/env python3
"""Precompute and cache the Kostka tables for n = 1..max-n, with timings.

Run from the repository root, e.g.:

    python scripts/build_kostka_tables.py --max-n 8 --cache-dir .cache
"""

import argparse
import time

from nilcone.cli import cache_load_store


def main() -> None:
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--max-n", type=int, default=8)
    parser.add_argument("--cache-dir", default=".cache")
    args = parser.parse_args()

    for n in range(1, args.max_n + 1):
        started = time.perf_counter()
        table, hit = cache_load_store(n, args.cache_dir)
        elapsed = time.perf_counter() - started
        source = "cache" if hit else "computed"
        print(
            f"n={n}: {len(table.entries)} nonzero entries, "
            f"{source} in {elapsed * 1000:.1f} ms"
        )


if __name__ == "__main__":
    main()
