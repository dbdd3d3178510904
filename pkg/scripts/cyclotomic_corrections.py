"""Search for the nearest genuine certificate to a cyclotomic product.

Given a factor list that fails as a CSP polynomial for promotion on SYT(sc_k),
try every single change of one exponent by +-1 (indices 2..N) and print the
lists that pass.  Also reports where the original fails: its value at q=1 and
the orders d of the roots of unity at which it disagrees with the fixed-point
count.

    python3 scripts/cyclotomic_corrections.py --k 3 --factors "2^2,4,6,10,12"
    python3 scripts/cyclotomic_corrections.py --k 4 --factors "2^3,3,4^2,8,10^2,16,20"
"""
from __future__ import annotations

import argparse
from dataclasses import dataclass

from syt.core import Partition
from syt.csp import (
    CycleStructure,
    cycle_structure,
    cyclotomic_product,
    fixed_point_count,
    parse_factors,
    verify_cyclotomic_product,
)
from syt.polynomial import cyclotomic, evaluate, poly_divmod, trim


@dataclass
class Config:
    k: int = 3
    factors: str = "2^2,4,6,10,12"


def format_factors(exps: dict[int, int]) -> str:
    return ",".join(f"{d}^{e}" if e > 1 else str(d) for d, e in sorted(exps.items()) if e)


def failing_orders(poly: list[int], cs: CycleStructure) -> list[int]:
    N = cs.order
    bad = []
    for d in range(1, N + 1):
        if N % d == 0 and trim(poly_divmod(poly, cyclotomic(d))[1]) != [fixed_point_count(cs, N // d)]:
            bad.append(d)
    return bad


def main(cfg: Config) -> None:
    shape = Partition.staircase(cfg.k)
    cs = cycle_structure(shape, "promote")
    N = cs.order
    exps = dict(parse_factors(cfg.factors))
    poly = cyclotomic_product(exps.items())
    print(f"sc_{cfg.k}: N={N}, {cs.size} tableaux")
    print(f"input {cfg.factors}: value at q=1 is {evaluate(poly, 1)}, "
          f"fails at root-of-unity orders {failing_orders(poly, cs) or 'none'}")
    found = 0
    for d in range(2, N + 1):
        for delta in (1, -1):
            trial = dict(exps)
            trial[d] = trial.get(d, 0) + delta
            if trial[d] < 0:
                continue
            if verify_cyclotomic_product(trial.items(), shape, "promote", cs):
                found += 1
                print(f"  {'+' if delta > 0 else '-'}Phi_{d}: {format_factors(trial)}")
    if not found:
        print("  no single-exponent edit gives a certificate")


if __name__ == "__main__":
    p = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    p.add_argument("--k", type=int, default=Config.k)
    p.add_argument("--factors", default=Config.factors)
    main(Config(**vars(p.parse_args())))
