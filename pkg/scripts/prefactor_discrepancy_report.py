#!/usr/bin/env python3
"""Tabulate the measured discrepancy between the two published prefactor
normalizations of the slice series: the ratio of the printed
y**(2 n_stat(mu)) form to the y**(dim orbit) form, for every mu up to a
bound.  The ratio is always a pure power of y; the table shows its exponent
next to both candidate normalizations so the conventions can be compared at
a glance (2 n_stat(mu) = dim orbit exactly when the exponent is zero).
"""

import argparse

from nilcone.partitions import partitions_of
from nilcone.springer import prefactor_audit


def main() -> None:
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--max-n", type=int, default=6)
    args = parser.parse_args()

    header = f"{'mu':>16} {'ratio exp':>10} {'2*n_stat':>9} {'dim orbit':>10}"
    print(header)
    print("-" * len(header))
    for n in range(1, args.max_n + 1):
        for mu in partitions_of(n):
            audit = prefactor_audit(mu)
            assert audit.is_pure_power_of_y
            print(
                f"{str(mu):>16} {audit.ratio_y_exponent:>10} "
                f"{audit.doubled_n_stat:>9} {audit.orbit_dimension:>10}"
            )


if __name__ == "__main__":
    main()
