"""Cyclic sieving for promotion on rectangles.

Checks that the q-hook length formula is a CSP polynomial and reports which
shifts q^s make the raw maj and comaj generating functions CSP polynomials.

    python3 scripts/rectangle_csp.py --rectangles 2x2 3x2 3x3 3x4 4x3
"""
from __future__ import annotations

import argparse
from dataclasses import dataclass, field

from syt.core import Partition
from syt.csp import COMAJ, MAJ, b_number, csp_shifts, cycle_structure, is_csp_polynomial, q_hook_length
from syt.csp import statistic_generating_function


@dataclass
class Config:
    # columns x rows
    rectangles: list[tuple[int, int]] = field(default_factory=lambda: [(2, 2), (3, 2), (2, 3), (3, 3), (3, 4)])


def parse_rect(text: str) -> tuple[int, int]:
    c, _, r = text.partition("x")
    return int(c), int(r)


def main(cfg: Config) -> None:
    print(f"{'shape':<6} {'N':>3} {'cycles':<32} qhook  maj shifts   comaj shifts  -b mod N")
    for c, r in cfg.rectangles:
        shape = Partition.rectangle(c, r)
        cs = cycle_structure(shape, "promote")
        N = cs.order
        ok = is_csp_polynomial(q_hook_length(shape, N)[0], cs)
        maj_s = csp_shifts(statistic_generating_function(shape, MAJ, N)[0], cs)
        comaj_s = csp_shifts(statistic_generating_function(shape, COMAJ, N)[0], cs)
        cycles = ",".join(f"{c}:{m}" for c, m in sorted(cs.multiplicities.items(), reverse=True))
        print(f"{c}^{r:<4} {N:>3} {cycles:<32} {'yes' if ok else 'NO ':<6} {str(maj_s):<12} "
              f"{str(comaj_s):<13} {-b_number(shape) % N}")


if __name__ == "__main__":
    p = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    p.add_argument("--rectangles", nargs="+", type=parse_rect, default=Config().rectangles)
    main(Config(**vars(p.parse_args())))
