"""Which sign links the trace T to the criterion sum S?

For every (p, d) in range, T = N - (p - 1 - 2*chi(d)) is computed from an
enumerated count and compared with S and -S mod p. The table shows that
T = (-1)^((p+1)/2) * S (mod p) always holds, while the unsigned T = S fails
for the curves with p = 1 mod 4.
"""

from __future__ import annotations

import argparse
from collections import Counter
from dataclasses import dataclass

from edwards_count.counting import count_by_enumeration, criterion_sum
from edwards_count.field import iter_primes, legendre


@dataclass
class StudyConfig:
    p_min: int = 5
    p_max: int = 150


def run(cfg: StudyConfig) -> Counter:
    tally: Counter = Counter()
    for p in iter_primes(cfg.p_min, cfg.p_max):
        sign = (-1) ** ((p + 1) // 2)
        for d in range(2, p):
            n = count_by_enumeration(p, d).affine_count
            t = n - (p - 1 - 2 * legendre(d, p))
            s = criterion_sum(p, d)
            cls = f"p={p % 4} mod 4"
            tally[cls, "total"] += 1
            tally[cls, "T = S"] += (t - s) % p == 0
            tally[cls, "T = sign*S"] += (t - sign * s) % p == 0
    return tally


def main(argv=None) -> int:
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--p-min", type=int, default=StudyConfig.p_min)
    ap.add_argument("--p-max", type=int, default=StudyConfig.p_max)
    args = ap.parse_args(argv)
    tally = run(StudyConfig(args.p_min, args.p_max))
    print(f"{'class':<12} {'curves':>7} {'T = S':>7} {'T = sign*S':>11}")
    for cls in sorted({k[0] for k in tally}):
        print(f"{cls:<12} {tally[cls, 'total']:>7} {tally[cls, 'T = S']:>7} {tally[cls, 'T = sign*S']:>11}")
    return 0


if __name__ == "__main__":
    raise SystemExit(main())
