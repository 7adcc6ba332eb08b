"""Compare the congruence-plus-parity count with brute-force enumeration.

Usage:
    python3 scripts/method_vs_oracle.py --p-max 300

Prints one summary line per prime and a final tally; exits 1 on any mismatch.
"""

from __future__ import annotations

import argparse
import sys
import time
from dataclasses import dataclass

from edwards_count.counting import count_by_enumeration, resolve_exact_count
from edwards_count.field import iter_primes


@dataclass
class SweepConfig:
    p_min: int = 3
    p_max: int = 200
    verbose: bool = False


def run(cfg: SweepConfig) -> int:
    cells = mismatches = 0
    t0 = time.perf_counter()
    for p in iter_primes(cfg.p_min, cfg.p_max):
        bad = []
        for d in range(2, p - 1):
            cells += 1
            if resolve_exact_count(p, d).affine_count != count_by_enumeration(p, d).affine_count:
                bad.append(d)
        mismatches += len(bad)
        if cfg.verbose or bad:
            print(f"p={p:5d} cells={p - 3:5d} mismatches={bad}")
    print(f"{cells} cells, {mismatches} mismatches, {time.perf_counter() - t0:.1f}s")
    return mismatches


def main(argv=None) -> int:
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--p-min", type=int, default=SweepConfig.p_min)
    ap.add_argument("--p-max", type=int, default=SweepConfig.p_max)
    ap.add_argument("-v", "--verbose", action="store_true")
    args = ap.parse_args(argv)
    return 1 if run(SweepConfig(args.p_min, args.p_max, args.verbose)) else 0


if __name__ == "__main__":
    sys.exit(main())
