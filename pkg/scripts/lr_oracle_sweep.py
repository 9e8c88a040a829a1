#!/usr/bin/env python3
"""Sweep the combinatorial rule against the Schur-basis expansion.

For every pair of partitions up to a total-size budget, the product of
their Schur polynomials is expanded two independent ways: counting
lattice fillings of each skew shape, and peeling leading terms off the
actual polynomial product. The sweep demands exact agreement on every
coefficient, including the zeros, and exits nonzero on the first
disagreement.

Usage: python scripts/lr_oracle_sweep.py [--max-total 7] [--extra-width 1] [-v]
"""

import argparse
import sys
import time
from dataclasses import dataclass

from tableaux import lr_coefficient, partitions_of, schur_expand, schur_polynomial


@dataclass
class SweepConfig:
    max_total: int = 6
    extra_width: int = 0  # widen the ring beyond the minimum that sees every term
    verbose: bool = False


def sweep(config: SweepConfig) -> int:
    mismatches = 0
    grand_pairs = 0
    for total in range(config.max_total + 1):
        started = time.perf_counter()
        width = total + config.extra_width
        pairs = 0
        nonzero = 0
        for a in range(total + 1):
            for lam in partitions_of(a):
                for mu in partitions_of(total - a):
                    product = schur_polynomial(lam, width) * schur_polynomial(mu, width)
                    expansion = schur_expand(product)
                    pairs += 1
                    for nu in partitions_of(total):
                        by_rule = lr_coefficient(lam, mu, nu)
                        by_expansion = expansion.get(nu, 0)
                        if by_rule != by_expansion:
                            mismatches += 1
                            print(
                                f"MISMATCH lambda={lam} mu={mu} nu={nu}: "
                                f"rule={by_rule} expansion={by_expansion}",
                                file=sys.stderr,
                            )
                        elif by_rule and config.verbose:
                            print(f"  {lam} * {mu} -> {nu}: {by_rule}")
                        nonzero += bool(by_rule)
        elapsed = time.perf_counter() - started
        print(
            f"degree {total}: {pairs} pairs, {nonzero} nonzero coefficients, "
            f"width {width}, {elapsed:.2f}s"
        )
        grand_pairs += pairs
    verdict = "all coefficients agree" if mismatches == 0 else f"{mismatches} MISMATCHES"
    print(f"checked {grand_pairs} pairs up to total size {config.max_total}: {verdict}")
    return 0 if mismatches == 0 else 1


def main() -> int:
    parser = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    parser.add_argument("--max-total", type=int, default=SweepConfig.max_total)
    parser.add_argument("--extra-width", type=int, default=SweepConfig.extra_width)
    parser.add_argument("-v", "--verbose", action="store_true")
    args = parser.parse_args()
    config = SweepConfig(
        max_total=args.max_total, extra_width=args.extra_width, verbose=args.verbose
    )
    return sweep(config)


if __name__ == "__main__":
    raise SystemExit(main())
