"""Sweep the criterion sum at d = 2 and d = 1/2 over primes p = 3 mod 4.

For each prime the script checks S(p, 2) = S(p, 1/2) = 0, that the resulting
supersingular order is p + 1, and that the embedding degree is 2. Use
--csv to write the per-prime rows.
"""

from __future__ import annotations

import argparse
import csv
import sys
from dataclasses import dataclass

from edwards_count.analysis import embedding_degree
from edwards_count.counting import criterion_sum, supersingular_order
from edwards_count.field import iter_primes


@dataclass
class CriterionConfig:
    p_max: int = 2000
    k_cap: int = 12
    csv_path: str | None = None


def run(cfg: CriterionConfig) -> list[dict]:
    rows = []
    for p in iter_primes(3, cfg.p_max):
        if p % 4 != 3:
            continue
        half = pow(2, -1, p)
        s2, s_half = criterion_sum(p, 2), criterion_sum(p, half)
        order = supersingular_order(p, 2)[1] if s2 == 0 else None
        rows.append({
            "p": p,
            "S(2)": s2,
            "S(1/2)": s_half,
            "order": order,
            "embedding_degree": embedding_degree(order, p, cfg.k_cap) if order else None,
        })
    return rows


def main(argv=None) -> int:
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--p-max", type=int, default=CriterionConfig.p_max)
    ap.add_argument("--k-cap", type=int, default=CriterionConfig.k_cap)
    ap.add_argument("--csv", dest="csv_path")
    cfg = CriterionConfig(**vars(ap.parse_args(argv)))
    rows = run(cfg)
    failures = [r for r in rows if r["S(2)"] or r["S(1/2)"] or r["embedding_degree"] != 2]
    if cfg.csv_path:
        with open(cfg.csv_path, "w", newline="") as fh:
            w = csv.DictWriter(fh, fieldnames=list(rows[0]), lineterminator="\n")
            w.writeheader()
            w.writerows(rows)
    print(f"{len(rows)} primes p = 3 mod 4 up to {cfg.p_max}; {len(failures)} failures")
    for r in failures[:10]:
        print("  ", r)
    return 1 if failures else 0


if __name__ == "__main__":
    sys.exit(main())
