"""Descent sets and cyclic descent vectors of rectangular and staircase tableaux."""
from __future__ import annotations

from dataclasses import dataclass

from .core import ShapeError, Tableau
from .dynamics import promote


@dataclass(frozen=True)
class DescentVector:
    """A cyclic 0/1 array; ``dots`` holds the dotted positions in ``1..length``."""

    length: int
    dots: frozenset[int]

    def __post_init__(self):
        object.__setattr__(self, "dots", frozenset(self.dots))
        if self.length <= 0:
            raise ValueError("descent vector length must be positive")
        bad = [d for d in self.dots if not 1 <= d <= self.length]
        if bad:
            raise ValueError(f"positions {sorted(bad)} outside 1..{self.length}")

    @classmethod
    def from_string(cls, text: str) -> DescentVector:
        if not text or set(text) - {"x", "."}:
            raise ValueError(f"descent vector text must be over 'x' and '.': {text!r}")
        return cls(len(text), frozenset(i for i, ch in enumerate(text, 1) if ch == "x"))

    def __str__(self) -> str:
        return "".join("x" if i in self.dots else "." for i in range(1, self.length + 1))

    def _wrap(self, i: int) -> int:
        return (i - 1) % self.length + 1

    def rotate(self, k: int) -> DescentVector:
        """Cyclic shift; positive ``k`` moves box ``i`` to box ``i+k``."""
        return DescentVector(self.length, frozenset(self._wrap(d + k) for d in self.dots))

    def flip_about(self, m: int) -> DescentVector:
        """Box ``i`` of the result is dotted iff box ``(m - i) mod length`` is."""
        return DescentVector(self.length, frozenset(self._wrap(m - d) for d in self.dots))

    def complement(self) -> DescentVector:
        return DescentVector(self.length, frozenset(range(1, self.length + 1)) - self.dots)

    def period(self) -> int:
        for p in range(1, self.length + 1):
            if self.length % p == 0 and self.rotate(p) == self:
                return p
        raise AssertionError("unreachable: rotation by length is the identity")


def descent_set(t: Tableau) -> frozenset[int]:
    """``i`` such that ``i+1`` lies in a strictly lower row than ``i``."""
    row_of = {}
    for r, row in enumerate(t.rows):
        for v in row:
            row_of[v] = r
    return frozenset(i for i in range(1, t.n) if row_of[i + 1] > row_of[i])


def _wraps(t: Tableau) -> bool:
    return 1 in descent_set(promote(t)[0])


def extended_descent_rect(r: Tableau) -> DescentVector:
    if not r.shape.is_rectangle:
        raise ShapeError(f"extended descents need a rectangular shape, got {r.shape}")
    dots = set(descent_set(r))
    if _wraps(r):
        dots.add(r.n)
    return DescentVector(r.n, frozenset(dots))


def extended_descent_staircase(s: Tableau) -> DescentVector:
    if not s.shape.is_staircase:
        raise ShapeError(f"staircase descent vectors need a staircase shape, got {s.shape}")
    n = s.n
    des = descent_set(s)
    dots = {i if i in des else n + i for i in range(1, n)}
    dots.add(2 * n if _wraps(s) else n)
    return DescentVector(2 * n, frozenset(dots))


def extended_descent(t: Tableau) -> DescentVector:
    """Dispatch on shape; a lone cell counts as a rectangle."""
    if t.shape.is_rectangle:
        return extended_descent_rect(t)
    if t.shape.is_staircase:
        return extended_descent_staircase(t)
    raise ShapeError(f"descent vectors are defined for rectangles and staircases, not {t.shape}")
