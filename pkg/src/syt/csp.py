"""Cycle structures, canonical CSP polynomials and tableau statistics.

A polynomial ``X(q)`` is a CSP polynomial for a cyclic action of order ``N``
exactly when it is congruent modulo ``q^N - 1`` to the canonical polynomial
built from the cycle structure.  Everything here works with that
congruence; roots of unity are never evaluated numerically.
"""
from __future__ import annotations

import math
from dataclasses import dataclass, field
from typing import Callable, Iterable

from .core import DEFAULT_ENUMERATION_LIMIT, Partition, Tableau, enumerate_syt
from .descent import descent_set
from .dynamics import apply_operator, promotion_order
from .polynomial import (
    PolynomialModQN,
    cyclotomic,
    exact_div,
    poly_mul,
    poly_pow,
    q_factorial,
    q_integer,
)


@dataclass(frozen=True)
class CycleStructure:
    order: int
    multiplicities: dict[int, int]
    proven: bool = True
    orbit_of: dict[tuple, int] = field(default_factory=dict, compare=False, repr=False)

    def __post_init__(self):
        for c, m in self.multiplicities.items():
            if m > 0 and self.order % c:
                raise ValueError(f"cycle size {c} does not divide the order {self.order}")

    @property
    def size(self) -> int:
        return sum(c * m for c, m in self.multiplicities.items())

    def to_json(self) -> dict:
        cycles = {str(c): m for c, m in sorted(self.multiplicities.items(), reverse=True)}
        out = {"N": self.order, "cycles": cycles}
        if not self.proven:
            out["empirical_order"] = True
        return out

    @classmethod
    def from_json(cls, obj: dict) -> CycleStructure:
        return cls(int(obj["N"]), {int(c): int(m) for c, m in obj["cycles"].items()}, not obj.get("empirical_order", False))


def proven_order(shape: Partition, op: str) -> int | None:
    if op in ("evacuate", "dual-evacuate", "transpose"):
        if op == "transpose" and shape.conjugate() != shape:
            raise ValueError("transpose only acts on SYT of a self-conjugate shape")
        return 2
    if op in ("promote", "dual-promote"):
        return promotion_order(shape)
    raise ValueError(f"unknown operator {op!r}")


def cycle_structure(shape: Partition, op: str, limit: int = DEFAULT_ENUMERATION_LIMIT) -> CycleStructure:
    """Orbit decomposition of ``op`` acting on SYT(shape), by following every orbit.

    ``orbit_of`` maps each tableau's rows to the length of its orbit.
    """
    order = proven_order(shape, op)
    tableaux = enumerate_syt(shape, limit)
    orbit_of: dict[tuple, int] = {}
    mult: dict[int, int] = {}
    for t in tableaux:
        if t.rows in orbit_of:
            continue
        orbit = [t.rows]
        x = apply_operator(t, op)
        while x.rows != t.rows:
            orbit.append(x.rows)
            x = apply_operator(x, op)
        for rows in orbit:
            orbit_of[rows] = len(orbit)
        mult[len(orbit)] = mult.get(len(orbit), 0) + 1
    if order is None:
        return CycleStructure(math.lcm(*mult), mult, proven=False, orbit_of=orbit_of)
    return CycleStructure(order, mult, proven=True, orbit_of=orbit_of)


def canonical_csp_polynomial(cs: CycleStructure) -> PolynomialModQN:
    """``sum_c m_c (1 + q^(N/c) + ... + q^((c-1)N/c))``, degree below N."""
    N = cs.order
    coeffs = [0] * N
    for c, m in cs.multiplicities.items():
        for k in range(c):
            coeffs[k * N // c] += m
    return PolynomialModQN(N, tuple(coeffs))


def fixed_point_count(cs: CycleStructure, k: int) -> int:
    """Number of points fixed by the k-th power of the generator."""
    g = math.gcd(k, cs.order)
    return sum(c * m for c, m in cs.multiplicities.items() if g % c == 0)


def is_csp_polynomial(x: PolynomialModQN, cs: CycleStructure) -> bool:
    if x.modulus_degree != cs.order:
        raise ValueError(f"polynomial is reduced mod q^{x.modulus_degree}-1 but the action has order {cs.order}")
    return x == canonical_csp_polynomial(cs)


def csp_shifts(x: PolynomialModQN, cs: CycleStructure) -> list[int]:
    """Every ``s`` in ``0..N-1`` with ``q^s X(q)`` in the CSP coset."""
    target = canonical_csp_polynomial(cs)
    return [s for s in range(cs.order) if x.shift(s) == target]


@dataclass(frozen=True)
class Statistic:
    name: str
    evaluator: Callable[[Tableau], int]

    def __call__(self, t: Tableau) -> int:
        return self.evaluator(t)


def maj(t: Tableau) -> int:
    return sum(descent_set(t))


def comaj(t: Tableau) -> int:
    n = t.n
    return sum(n - d for d in descent_set(t))


def b_number(shape: Partition) -> int:
    return sum(i * p for i, p in enumerate(shape.parts))


MAJ = Statistic("maj", maj)
COMAJ = Statistic("comaj", comaj)
STATISTICS = {"maj": MAJ, "comaj": COMAJ}


def generating_function(tableaux: Iterable[Tableau], stat: Statistic) -> list[int]:
    coeffs: list[int] = []
    for t in tableaux:
        d = stat(t)
        if d >= len(coeffs):
            coeffs.extend([0] * (d + 1 - len(coeffs)))
        coeffs[d] += 1
    return coeffs or [0]


def statistic_generating_function(
    shape: Partition, stat: Statistic, N: int, limit: int = DEFAULT_ENUMERATION_LIMIT
) -> tuple[PolynomialModQN, list[int]]:
    """``sum_T q^stat(T)`` over SYT(shape): reduced mod q^N-1, and unreduced."""
    raw = generating_function(enumerate_syt(shape, limit), stat)
    return PolynomialModQN.reduce(N, raw), raw


def q_hook_length_poly(shape: Partition) -> list[int]:
    """``[n]_q! / prod over cells [hook]_q`` as an exact integer polynomial."""
    out = q_factorial(shape.n)
    for i, j in shape.cells():
        out = exact_div(out, q_integer(shape.hook(i, j)))
    return out


def q_hook_length(shape: Partition, N: int) -> tuple[PolynomialModQN, list[int]]:
    raw = q_hook_length_poly(shape)
    return PolynomialModQN.reduce(N, raw), raw


def cyclotomic_product(factors: Iterable[tuple[int, int]]) -> list[int]:
    out = [1]
    for d, e in factors:
        out = poly_mul(out, poly_pow(cyclotomic(d), e))
    return out


def parse_factors(text: str) -> list[tuple[int, int]]:
    """``"2,4^2,6"`` -> ``[(2, 1), (4, 2), (6, 1)]``."""
    factors = []
    for tok in text.split(","):
        tok = tok.strip()
        d, _, e = tok.partition("^")
        if not d.isdigit() or (e and not e.isdigit()):
            raise ValueError(f"malformed factor {tok!r}")
        d_i, e_i = int(d), int(e) if e else 1
        if d_i < 1:
            raise ValueError(f"cyclotomic index must be positive in {tok!r}")
        factors.append((d_i, e_i))
    if not factors:
        raise ValueError("empty factor list")
    return factors


def verify_cyclotomic_product(
    factors: Iterable[tuple[int, int]], shape: Partition, op: str, cs: CycleStructure | None = None
) -> bool:
    if cs is None:
        cs = cycle_structure(shape, op)
    return is_csp_polynomial(PolynomialModQN.reduce(cs.order, cyclotomic_product(factors)), cs)
