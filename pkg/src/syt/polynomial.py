"""Exact integer polynomials and their residues modulo ``q^N - 1``.

Plain polynomials are coefficient lists, lowest degree first.  Python ints
are arbitrary precision, so no coefficient can wrap.
"""
from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from typing import Iterable, Sequence

Poly = list[int]


def trim(p: Sequence[int]) -> Poly:
    p = list(p)
    while len(p) > 1 and p[-1] == 0:
        p.pop()
    return p or [0]


def poly_add(a: Sequence[int], b: Sequence[int]) -> Poly:
    out = [0] * max(len(a), len(b))
    for i, c in enumerate(a):
        out[i] += c
    for i, c in enumerate(b):
        out[i] += c
    return trim(out)


def poly_mul(a: Sequence[int], b: Sequence[int]) -> Poly:
    out = [0] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        if x:
            for j, y in enumerate(b):
                out[i + j] += x * y
    return trim(out)


def poly_pow(a: Sequence[int], e: int) -> Poly:
    out: Poly = [1]
    for _ in range(e):
        out = poly_mul(out, a)
    return out


def poly_divmod(a: Sequence[int], b: Sequence[int]) -> tuple[Poly, Poly]:
    """Division by a polynomial with leading coefficient ±1, staying in the integers."""
    b = trim(b)
    lead = b[-1]
    if lead not in (1, -1):
        raise ValueError("divisor must be monic up to sign")
    rem = list(trim(a))
    if len(rem) < len(b):
        return [0], rem
    quot = [0] * (len(rem) - len(b) + 1)
    for shift in range(len(quot) - 1, -1, -1):
        c = rem[shift + len(b) - 1] * lead
        quot[shift] = c
        if c:
            for i, y in enumerate(b):
                rem[shift + i] -= c * y
    return trim(quot), trim(rem[: len(b) - 1] or [0])


def exact_div(a: Sequence[int], b: Sequence[int]) -> Poly:
    quot, rem = poly_divmod(a, b)
    if any(rem):
        raise ArithmeticError(f"division is not exact, remainder {rem}")
    return quot


def evaluate(p: Sequence[int], x: int) -> int:
    acc = 0
    for c in reversed(p):
        acc = acc * x + c
    return acc


@lru_cache(maxsize=None)
def _cyclotomic(d: int) -> tuple[int, ...]:
    num = [-1] + [0] * (d - 1) + [1]
    for e in range(1, d):
        if d % e == 0:
            num = exact_div(num, _cyclotomic(e))
    return tuple(num)


def cyclotomic(d: int) -> Poly:
    """Phi_d by dividing ``q^d - 1`` by Phi_e for every proper divisor ``e``."""
    if d < 1:
        raise ValueError("cyclotomic index must be positive")
    return list(_cyclotomic(d))


def q_integer(m: int) -> Poly:
    """``[m]_q = 1 + q + ... + q^(m-1)``."""
    return [1] * m


def q_factorial(m: int) -> Poly:
    out: Poly = [1]
    for i in range(1, m + 1):
        out = poly_mul(out, q_integer(i))
    return out


def format_poly(p: Sequence[int], var: str = "q") -> str:
    terms = []
    for d, c in enumerate(p):
        if c == 0:
            continue
        mono = "" if d == 0 else (var if d == 1 else f"{var}^{d}")
        if mono and abs(c) == 1:
            coef = "-" if c < 0 else ""
        else:
            coef = str(c) + ("*" if mono else "")
        terms.append(coef + mono)
    if not terms:
        return "0"
    return " + ".join(terms).replace("+ -", "- ")


@dataclass(frozen=True)
class PolynomialModQN:
    """Residue of an integer polynomial in Z[q]/(q^N - 1), kept in reduced form."""

    modulus_degree: int
    coeffs: tuple[int, ...]

    def __post_init__(self):
        N = self.modulus_degree
        if N <= 0:
            raise ValueError("modulus degree must be positive")
        coeffs = tuple(self.coeffs)
        if len(coeffs) != N:
            raise ValueError(f"expected {N} coefficients, got {len(coeffs)}; use reduce()")
        object.__setattr__(self, "coeffs", coeffs)

    @classmethod
    def reduce(cls, N: int, poly: Iterable[int]) -> PolynomialModQN:
        out = [0] * N
        for d, c in enumerate(poly):
            out[d % N] += c
        return cls(N, tuple(out))

    @classmethod
    def monomial(cls, N: int, degree: int, coeff: int = 1) -> PolynomialModQN:
        out = [0] * N
        out[degree % N] = coeff
        return cls(N, tuple(out))

    def _check(self, other: PolynomialModQN) -> None:
        if other.modulus_degree != self.modulus_degree:
            raise ValueError(f"moduli differ: q^{self.modulus_degree}-1 vs q^{other.modulus_degree}-1")

    def __add__(self, other: PolynomialModQN) -> PolynomialModQN:
        self._check(other)
        return PolynomialModQN(self.modulus_degree, tuple(a + b for a, b in zip(self.coeffs, other.coeffs)))

    def __sub__(self, other: PolynomialModQN) -> PolynomialModQN:
        self._check(other)
        return PolynomialModQN(self.modulus_degree, tuple(a - b for a, b in zip(self.coeffs, other.coeffs)))

    def __mul__(self, other: PolynomialModQN) -> PolynomialModQN:
        self._check(other)
        N = self.modulus_degree
        out = [0] * N
        for i, a in enumerate(self.coeffs):
            if a:
                for j, b in enumerate(other.coeffs):
                    out[(i + j) % N] += a * b
        return PolynomialModQN(N, tuple(out))

    def shift(self, s: int) -> PolynomialModQN:
        """Multiply by ``q^s``: a cyclic rotation of the coefficients."""
        N = self.modulus_degree
        s %= N
        return PolynomialModQN(N, self.coeffs[-s:] + self.coeffs[:-s] if s else self.coeffs)

    def at_one(self) -> int:
        return sum(self.coeffs)

    def is_zero(self) -> bool:
        return not any(self.coeffs)

    def __str__(self) -> str:
        return format_poly(self.coeffs)
