"""Row-insertion RSK on permutations and the reverse-complement involution.

Gives an independent route to dual-evacuation: if ``w`` inserts to ``P`` then
``sharp(w)`` inserts to the dual-evacuation of ``P``.
"""
from __future__ import annotations

from bisect import bisect_right
from dataclasses import dataclass

from .core import Tableau


@dataclass(frozen=True)
class Permutation:
    images: tuple[int, ...]

    def __post_init__(self):
        images = tuple(self.images)
        object.__setattr__(self, "images", images)
        if sorted(images) != list(range(1, len(images) + 1)):
            raise ValueError(f"{images} is not a permutation of 1..{len(images)}")

    @classmethod
    def parse(cls, text: str) -> Permutation:
        return cls(tuple(int(tok) for tok in text.split()))

    def __len__(self) -> int:
        return len(self.images)

    def __str__(self) -> str:
        return " ".join(map(str, self.images))

    def left_descents(self) -> frozenset[int]:
        """``i`` such that ``i+1`` sits to the left of ``i``."""
        where = {v: k for k, v in enumerate(self.images)}
        return frozenset(i for i in range(1, len(self.images)) if where[i + 1] < where[i])


def rsk(w: Permutation) -> tuple[Tableau, Tableau]:
    """Insertion and recording tableaux ``(P, Q)`` of ``w`` by row insertion."""
    P: list[list[int]] = []
    Q: list[list[int]] = []
    for step, x in enumerate(w.images, start=1):
        r = 0
        while True:
            if r == len(P):
                P.append([x])
                Q.append([step])
                break
            row = P[r]
            k = bisect_right(row, x)
            if k == len(row):
                row.append(x)
                Q[r].append(step)
                break
            row[k], x = x, row[k]
            r += 1
    return Tableau(tuple(map(tuple, P))), Tableau(tuple(map(tuple, Q)))


def sharp(w: Permutation) -> Permutation:
    n = len(w)
    return Permutation(tuple(n + 1 - v for v in reversed(w.images)))


def column_reading_word(t: Tableau) -> Permutation:
    """Columns left to right, each read bottom to top."""
    conj = t.shape.conjugate()
    return Permutation(tuple(t.rows[i][j] for j in range(len(conj.parts)) for i in reversed(range(conj.parts[j]))))


def row_reading_word(t: Tableau) -> Permutation:
    """Rows bottom to top, each read left to right."""
    return Permutation(tuple(v for row in reversed(t.rows) for v in row))


def dual_evacuate_via_rsk(t: Tableau) -> Tableau:
    w = column_reading_word(t)
    P, _ = rsk(sharp(w))
    return P
