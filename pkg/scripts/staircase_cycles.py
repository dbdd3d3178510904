"""Orbit census of promotion on staircase tableaux.

For each k prints the cycle structure, whether the column-filling tableau
has a full orbit, and the distribution of descent-vector periods.

    python3 scripts/staircase_cycles.py --max-k 4
    python3 scripts/staircase_cycles.py --max-k 5 --json   # sc_5 takes ~15 s
"""
from __future__ import annotations

import argparse
import json
import time
from collections import Counter
from dataclasses import asdict, dataclass

from syt.checks import column_filling_staircase
from syt.core import Partition, count_syt, enumerate_syt
from syt.csp import canonical_csp_polynomial, cycle_structure
from syt.descent import extended_descent_staircase


@dataclass
class Config:
    min_k: int = 2
    max_k: int = 4
    json: bool = False


def census(k: int) -> dict:
    start = time.perf_counter()
    shape = Partition.staircase(k)
    cs = cycle_structure(shape, "promote")
    periods = Counter(extended_descent_staircase(t).period() for t in enumerate_syt(shape))
    col = column_filling_staircase(k)
    return {
        "k": k,
        "tableaux": count_syt(shape),
        "N": cs.order,
        "cycles": {c: m for c, m in sorted(cs.multiplicities.items(), reverse=True)},
        "column_filling_orbit": cs.orbit_of[col.rows],
        "vector_periods": dict(sorted(periods.items())),
        "canonical": str(canonical_csp_polynomial(cs)),
        "seconds": round(time.perf_counter() - start, 2),
    }


def main(cfg: Config) -> None:
    rows = [census(k) for k in range(cfg.min_k, cfg.max_k + 1)]
    if cfg.json:
        print(json.dumps({"config": asdict(cfg), "results": rows}, indent=2))
        return
    for r in rows:
        cycles = ", ".join(f"{m} x {c}" for c, m in r["cycles"].items())
        print(f"sc_{r['k']}: {r['tableaux']} tableaux, N={r['N']}, cycles {cycles} ({r['seconds']}s)")
        print(f"  column filling orbit: {r['column_filling_orbit']}")
        print(f"  descent-vector periods: {r['vector_periods']}")
        print(f"  canonical CSP polynomial: {r['canonical']}")


if __name__ == "__main__":
    p = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    p.add_argument("--min-k", type=int, default=Config.min_k)
    p.add_argument("--max-k", type=int, default=Config.max_k)
    p.add_argument("--json", action="store_true")
    main(Config(**vars(p.parse_args())))
