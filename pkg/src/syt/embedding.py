"""Embedding of staircase tableaux into rectangular tableaux.

A staircase tableau ``S`` of shape ``(k, k-1, ..., 1)`` is glued to the
rotated complement of its evacuation, giving a standard tableau of shape
``k^(k+1)`` (or ``(k+1)^k`` for the wide variant).  The embedding commutes
with promotion and evacuation.
"""
from __future__ import annotations

from dataclasses import dataclass

from .core import Partition, ShapeError, Tableau
from .dynamics import evacuate


@dataclass(frozen=True)
class EmbeddedPair:
    upper: Tableau
    lower: Tableau
    rect: Tableau

    def to_json(self) -> dict:
        return {"upper": self.upper.to_json(), "lower": self.lower.to_json(), "rect": self.rect.to_json()}


def staircase_size(shape: Partition) -> int:
    if not shape.is_staircase:
        raise ShapeError(f"expected a staircase shape, got {shape}")
    return len(shape)


def embed(s: Tableau) -> Tableau:
    """Tall embedding into ``k^(k+1)``: k columns, k+1 rows."""
    k = staircase_size(s.shape)
    N = (k + 1) * k
    ev = evacuate(s).rows
    rows = []
    for i in range(1, k + 2):
        row = []
        for j in range(1, k + 1):
            if i + j <= k + 1:
                row.append(s.rows[i - 1][j - 1])
            else:
                row.append(N + 1 - ev[k + 1 - i][k - j])
        rows.append(tuple(row))
    return Tableau(tuple(rows))


def embed_wide(s: Tableau) -> Tableau:
    """Wide embedding into ``(k+1)^k``: the lower block sits one row up and one column right."""
    k = staircase_size(s.shape)
    N = (k + 1) * k
    ev = evacuate(s).rows
    rows = []
    for i in range(1, k + 1):
        row = []
        for j in range(1, k + 2):
            if i + j <= k + 1:
                row.append(s.rows[i - 1][j - 1])
            else:
                row.append(N + 1 - ev[k - i][k + 1 - j])
        rows.append(tuple(row))
    return Tableau(tuple(rows))


def project(r: Tableau) -> EmbeddedPair | None:
    """Split ``r`` of shape ``k^(k+1)`` into ``(S, evacuate(S))``.

    Returns None when ``r`` is not in the image of :func:`embed`.
    """
    parts = r.shape.parts
    k = parts[0]
    if len(parts) != k + 1 or not r.shape.is_rectangle:
        raise ShapeError(f"expected shape {k}^{k + 1}, got {r.shape}")
    N = (k + 1) * k
    upper = tuple(tuple(r.rows[i - 1][j - 1] for j in range(1, k + 2 - i)) for i in range(1, k + 1))
    lower = tuple(
        tuple(N + 1 - r.rows[k + 1 - i][k - j] for j in range(1, k + 2 - i)) for i in range(1, k + 1)
    )
    try:
        S = Tableau(upper)
        L = Tableau(lower)
    except ValueError:
        return None
    if evacuate(S) != L:
        return None
    return EmbeddedPair(S, L, r)
