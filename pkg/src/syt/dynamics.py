"""Jeu-de-taquin sliding, promotion, evacuation and their duals.

All operators return fresh tableaux.  Promotion and dual-promotion also
return the path traced by the empty box, as a :class:`CellPath`.
"""
from __future__ import annotations

import enum
from dataclasses import dataclass
from typing import Callable

from .core import Partition, Tableau, transpose

Cell = tuple[int, int]


@dataclass(frozen=True)
class CellPath:
    cells: tuple[Cell, ...]
    shape: Partition

    def __post_init__(self):
        if not self.cells:
            raise ValueError("empty path")
        steps = {(b[0] - a[0], b[1] - a[1]) for a, b in zip(self.cells, self.cells[1:])}
        if not (steps <= {(-1, 0), (0, -1)} or steps <= {(1, 0), (0, 1)}):
            raise ValueError(f"path {self.cells} is not a monotone lattice path")
        if self.cells[0] not in self.shape or self.cells[-1] not in self.shape:
            raise ValueError("path endpoints lie outside the shape")

    def __len__(self) -> int:
        return len(self.cells)

    def __iter__(self):
        return iter(self.cells)

    def reversed(self) -> CellPath:
        return CellPath(self.cells[::-1], self.shape)

    def __str__(self) -> str:
        return " ".join(f"({i},{j})" for i, j in self.cells)


def _slide_northwest(grid: list[list[int | None]], i: int, j: int) -> list[Cell]:
    """Move the hole at 0-based (i, j) northwest until no neighbour remains.

    ``None`` marks the hole and any cells already removed from the working
    shape.  Returns the 0-based cells visited by the hole, hole left in place.
    """
    path = [(i, j)]
    while True:
        up = grid[i - 1][j] if i > 0 else None
        left = grid[i][j - 1] if j > 0 else None
        if up is None and left is None:
            return path
        assert up != left
        if left is None or (up is not None and up > left):
            grid[i][j] = up
            i -= 1
        else:
            grid[i][j] = left
            j -= 1
        grid[i][j] = None
        path.append((i, j))


def _slide_southeast(grid: list[list[int | None]], i: int, j: int) -> list[Cell]:
    path = [(i, j)]
    while True:
        down = grid[i + 1][j] if i + 1 < len(grid) and j < len(grid[i + 1]) else None
        right = grid[i][j + 1] if j + 1 < len(grid[i]) else None
        if down is None and right is None:
            return path
        assert down != right
        if right is None or (down is not None and down < right):
            grid[i][j] = down
            i += 1
        else:
            grid[i][j] = right
            j += 1
        grid[i][j] = None
        path.append((i, j))


def _find(rows, value: int) -> Cell:
    for i, row in enumerate(rows):
        for j, v in enumerate(row):
            if v == value:
                return i, j
    raise KeyError(value)


def _one_based(path: list[Cell]) -> tuple[Cell, ...]:
    return tuple((i + 1, j + 1) for i, j in path)


def promote(t: Tableau) -> tuple[Tableau, CellPath]:
    """Promotion: remove ``n``, slide the hole to ``(1,1)``, insert 0, add one."""
    grid: list[list[int | None]] = [list(r) for r in t.rows]
    i, j = _find(t.rows, t.n)
    grid[i][j] = None
    path = _slide_northwest(grid, i, j)
    fi, fj = path[-1]
    grid[fi][fj] = 0
    rows = tuple(tuple(v + 1 for v in row) for row in grid)
    return Tableau._trusted(rows, t.shape), CellPath(_one_based(path), t.shape)


def dual_promote(t: Tableau) -> tuple[Tableau, CellPath]:
    """Dual-promotion: remove 1, slide the hole to an outside corner, insert ``n+1``, subtract one."""
    grid: list[list[int | None]] = [list(r) for r in t.rows]
    grid[0][0] = None
    path = _slide_southeast(grid, 0, 0)
    fi, fj = path[-1]
    grid[fi][fj] = t.n + 1
    rows = tuple(tuple(v - 1 for v in row) for row in grid)
    return Tableau._trusted(rows, t.shape), CellPath(_one_based(path), t.shape)


def evacuate(t: Tableau) -> Tableau:
    grid: list[list[int | None]] = [list(r) for r in t.rows]
    out = [[0] * len(r) for r in t.rows]
    n = t.n
    for k in range(1, n + 1):
        # The largest remaining entry is n + 1 - k.
        i, j = _find(grid, n + 1 - k)
        grid[i][j] = None
        fi, fj = _slide_northwest(grid, i, j)[-1]
        out[fi][fj] = k
    return Tableau._trusted(tuple(map(tuple, out)), t.shape)


def dual_evacuate(t: Tableau) -> Tableau:
    grid: list[list[int | None]] = [list(r) for r in t.rows]
    out = [[0] * len(r) for r in t.rows]
    n = t.n
    for k in range(1, n + 1):
        i, j = _find(grid, k)
        grid[i][j] = None
        fi, fj = _slide_southeast(grid, i, j)[-1]
        out[fi][fj] = n + 1 - k
    return Tableau._trusted(tuple(map(tuple, out)), t.shape)


def promotion_order(shape: Partition) -> int | None:
    """Proven order of promotion on SYT(shape), or None when no theorem applies."""
    if shape.is_rectangle:
        return shape.n
    if shape.is_staircase:
        return 2 * shape.n
    return None


def apply_power(t: Tableau, op: str, k: int) -> Tableau:
    """Apply ``op`` ("promote" or "dual-promote") ``k`` times; negative ``k`` inverts."""
    if op == "dual-promote":
        k = -k
    elif op != "promote":
        raise ValueError(f"apply_power supports promote and dual-promote, not {op!r}")
    order = promotion_order(t.shape)
    if order is not None:
        k %= order
    step = (lambda x: promote(x)[0]) if k >= 0 else (lambda x: dual_promote(x)[0])
    for _ in range(abs(k)):
        t = step(t)
    return t


OPERATORS: dict[str, Callable[[Tableau], Tableau]] = {
    "promote": lambda t: promote(t)[0],
    "dual-promote": lambda t: dual_promote(t)[0],
    "evacuate": evacuate,
    "dual-evacuate": dual_evacuate,
    "transpose": transpose,
}


def apply_operator(t: Tableau, op: str) -> Tableau:
    try:
        fn = OPERATORS[op]
    except KeyError:
        raise ValueError(f"unknown operator {op!r}; choose from {sorted(OPERATORS)}") from None
    return fn(t)


def corner_of_max(t: Tableau) -> Cell:
    return t.position(t.n)


def ends_with_vertical_move(promotion_path: CellPath) -> bool:
    """True when the last step of a promotion path goes up into (1,1)."""
    cells = promotion_path.cells
    return len(cells) >= 2 and cells[-2] == (2, 1)


def ends_with_horizontal_move(promotion_path: CellPath) -> bool:
    cells = promotion_path.cells
    return len(cells) >= 2 and cells[-2] == (1, 2)


class PathRelation(enum.Flag):
    INCOMPARABLE = 0
    NORTHEAST = enum.auto()
    SOUTHWEST = enum.auto()
    COINCIDENT = NORTHEAST | SOUTHWEST


def compare_paths(p: CellPath, d: CellPath) -> PathRelation:
    """Relative position of a dual-promotion path ``d`` to a promotion path ``p``.

    Both paths are walked from (1,1) at unit speed (``p`` in reverse), so the
    t-th cells of the two walks share an antidiagonal.  ``d`` is weakly
    northeast of ``p`` when it is never strictly south of ``p`` on a shared
    antidiagonal, and weakly southwest when never strictly north.
    """
    if p.shape != d.shape:
        raise ValueError(f"paths come from different shapes {p.shape} and {d.shape}")
    boy = p.cells[::-1]
    girl = d.cells
    if boy[0] != (1, 1) or girl[0] != (1, 1):
        raise ValueError("expected a promotion path ending and a dual path starting at (1,1)")
    rel = PathRelation.COINCIDENT
    for (bi, _), (gi, _) in zip(boy, girl):
        if gi > bi:
            rel &= ~PathRelation.NORTHEAST
        elif gi < bi:
            rel &= ~PathRelation.SOUTHWEST
    return rel
