"""Shapes, standard Young tableaux, enumeration and the text/JSON formats.

Cells are indexed 1-based: ``(i, j)`` is row ``i`` from the top and column
``j`` from the left, with the northwest cell at ``(1, 1)`` (English notation).
"""
from __future__ import annotations

import json
import math
import re
from dataclasses import dataclass, field
from functools import lru_cache
from typing import Iterator, Sequence

DEFAULT_ENUMERATION_LIMIT = 10**7


class ShapeError(ValueError):
    pass


class TableauError(ValueError):
    """Base class for every way a tableau can fail validation."""


class TableauFormatError(TableauError):
    pass


class RaggedShapeError(TableauError):
    pass


class DuplicateEntryError(TableauError):
    pass


class MissingEntryError(TableauError):
    pass


class RowOrderError(TableauError):
    pass


class ColumnOrderError(TableauError):
    pass


class EnumerationLimitError(RuntimeError):
    pass


@dataclass(frozen=True)
class ShapeClass:
    kind: str  # "rectangle", "staircase" or "general"
    params: tuple[int, ...] = ()

    def __str__(self) -> str:
        if self.kind == "rectangle":
            c, r = self.params
            return f"rectangle {c}^{r}"
        if self.kind == "staircase":
            return f"staircase sc_{self.params[0]}"
        return "general"


@dataclass(frozen=True)
class Partition:
    parts: tuple[int, ...]

    def __post_init__(self):
        parts = tuple(self.parts)
        object.__setattr__(self, "parts", parts)
        if not parts:
            raise ShapeError("empty partition")
        for p in parts:
            if not isinstance(p, int) or isinstance(p, bool):
                raise ShapeError(f"part {p!r} is not an integer")
            if p <= 0:
                raise ShapeError(f"parts must be positive, got {p}")
        for a, b in zip(parts, parts[1:]):
            if b > a:
                raise ShapeError(f"parts must be weakly decreasing: {parts}")

    @classmethod
    def rectangle(cls, c: int, r: int) -> Partition:
        """The shape ``c^r``: ``r`` rows of length ``c``."""
        return cls((c,) * r)

    @classmethod
    def staircase(cls, k: int) -> Partition:
        return cls(tuple(range(k, 0, -1)))

    @property
    def n(self) -> int:
        return sum(self.parts)

    def __len__(self) -> int:
        return len(self.parts)

    def __iter__(self) -> Iterator[int]:
        return iter(self.parts)

    def __str__(self) -> str:
        return ",".join(map(str, self.parts))

    def conjugate(self) -> Partition:
        return Partition(tuple(sum(1 for p in self.parts if p > j) for j in range(self.parts[0])))

    def cells(self) -> Iterator[tuple[int, int]]:
        for i, length in enumerate(self.parts, start=1):
            for j in range(1, length + 1):
                yield i, j

    def __contains__(self, cell) -> bool:
        i, j = cell
        return 1 <= i <= len(self.parts) and 1 <= j <= self.parts[i - 1]

    def hook(self, i: int, j: int) -> int:
        arm = self.parts[i - 1] - j
        leg = sum(1 for p in self.parts[i:] if p >= j)
        return arm + leg + 1

    @property
    def is_rectangle(self) -> bool:
        return all(p == self.parts[0] for p in self.parts)

    @property
    def is_staircase(self) -> bool:
        return self.parts == tuple(range(len(self.parts), 0, -1))

    @property
    def shape_class(self) -> ShapeClass:
        # (1) is both 1^1 and sc_1; the rectangle reading wins.
        if self.is_rectangle:
            return ShapeClass("rectangle", (self.parts[0], len(self.parts)))
        if self.is_staircase:
            return ShapeClass("staircase", (len(self.parts),))
        return ShapeClass("general")


_RECT_RE = re.compile(r"^\s*(\d+)\s*\^\s*(\d+)\s*$")
_STAIR_RE = re.compile(r"^\s*sc\s*:\s*(\d+)\s*$")
_LIST_RE = re.compile(r"^\s*-?\d+(\s*,\s*-?\d+)*\s*$")


def parse_shape(text: str) -> Partition:
    """Parse ``"3,2,1"``, ``"3^4"`` (four rows of length 3) or ``"sc:4"``."""
    m = _RECT_RE.match(text)
    if m:
        c, r = int(m.group(1)), int(m.group(2))
        if c <= 0 or r <= 0:
            raise ShapeError(f"rectangle needs positive sizes: {text!r}")
        return Partition.rectangle(c, r)
    m = _STAIR_RE.match(text)
    if m:
        k = int(m.group(1))
        if k <= 0:
            raise ShapeError(f"staircase needs k >= 1: {text!r}")
        return Partition.staircase(k)
    if _LIST_RE.match(text):
        return Partition(tuple(int(p) for p in text.split(",")))
    raise ShapeError(f"malformed shape {text!r}")


@dataclass(frozen=True)
class Tableau:
    rows: tuple[tuple[int, ...], ...]
    shape: Partition = field(init=False, compare=False, repr=False)

    def __post_init__(self):
        rows = tuple(tuple(r) for r in self.rows)
        object.__setattr__(self, "rows", rows)
        if not rows or any(len(r) == 0 for r in rows):
            raise RaggedShapeError("tableau has an empty row")
        lengths = tuple(len(r) for r in rows)
        if any(b > a for a, b in zip(lengths, lengths[1:])):
            raise RaggedShapeError(f"row lengths {lengths} are not weakly decreasing")
        object.__setattr__(self, "shape", Partition(lengths))
        _validate(rows, self.shape.n)

    @classmethod
    def _trusted(cls, rows: tuple[tuple[int, ...], ...], shape: Partition | None = None) -> Tableau:
        # Skips validation; only for rows built by a correctness-preserving operation.
        t = object.__new__(cls)
        object.__setattr__(t, "rows", rows)
        object.__setattr__(t, "shape", shape if shape is not None else Partition(tuple(map(len, rows))))
        return t

    @property
    def n(self) -> int:
        return self.shape.n

    def __getitem__(self, cell: tuple[int, int]) -> int:
        i, j = cell
        if (i, j) not in self.shape:
            raise IndexError(f"cell {cell} outside shape {self.shape}")
        return self.rows[i - 1][j - 1]

    def position(self, value: int) -> tuple[int, int]:
        for i, row in enumerate(self.rows, start=1):
            for j, v in enumerate(row, start=1):
                if v == value:
                    return i, j
        raise KeyError(value)

    def positions(self) -> dict[int, tuple[int, int]]:
        return {v: (i, j) for i, row in enumerate(self.rows, 1) for j, v in enumerate(row, 1)}

    def flat(self) -> tuple[int, ...]:
        return tuple(v for row in self.rows for v in row)

    def to_json(self) -> dict:
        return {"shape": list(self.shape.parts), "rows": [list(r) for r in self.rows]}

    def __str__(self) -> str:
        return serialize_tableau(self)


def _validate(rows: Sequence[Sequence[int]], n: int) -> None:
    seen = set()
    for row in rows:
        for v in row:
            if not isinstance(v, int) or isinstance(v, bool):
                raise TableauFormatError(f"entry {v!r} is not an integer")
            if v in seen:
                raise DuplicateEntryError(f"duplicate entry {v}")
            seen.add(v)
    missing = sorted(set(range(1, n + 1)) - seen)
    if missing:
        raise MissingEntryError(f"entries must be 1..{n}; missing {missing}")
    for i, row in enumerate(rows, start=1):
        for j in range(1, len(row)):
            if row[j - 1] >= row[j]:
                raise RowOrderError(f"row {i} not increasing at column {j + 1}")
    for i in range(1, len(rows)):
        above, row = rows[i - 1], rows[i]
        for j, v in enumerate(row):
            if above[j] >= v:
                raise ColumnOrderError(f"column {j + 1} not increasing at row {i + 1}")


def is_standard(t: Tableau) -> bool:
    """Re-run full validation on ``t``; useful for checking trusted outputs."""
    try:
        Tableau(t.rows)
    except TableauError:
        return False
    return True


def parse_tableau(text: str) -> Tableau:
    """Parse the slash format ``"1 2/3 4"`` or the JSON object format."""
    stripped = text.strip()
    if stripped.startswith("{"):
        return tableau_from_json(json.loads(stripped))
    if not stripped:
        raise TableauFormatError("empty tableau text")
    rows = []
    for chunk in stripped.split("/"):
        tokens = chunk.split(" ")
        if any(not re.fullmatch(r"-?\d+", tok) for tok in tokens):
            raise TableauFormatError(f"malformed row {chunk!r}")
        rows.append(tuple(int(tok) for tok in tokens))
    return Tableau(tuple(rows))


def tableau_from_json(obj: dict) -> Tableau:
    try:
        rows = obj["rows"]
    except (KeyError, TypeError):
        raise TableauFormatError("JSON tableau needs a 'rows' field") from None
    t = Tableau(tuple(tuple(r) for r in rows))
    if "shape" in obj and tuple(obj["shape"]) != t.shape.parts:
        raise RaggedShapeError(f"declared shape {obj['shape']} does not match rows {t.shape.parts}")
    return t


def serialize_tableau(t: Tableau) -> str:
    return "/".join(" ".join(map(str, row)) for row in t.rows)


def transpose(t: Tableau) -> Tableau:
    conj = t.shape.conjugate()
    rows = tuple(tuple(t.rows[i][j] for i in range(conj.parts[j])) for j in range(len(conj.parts)))
    return Tableau._trusted(rows, conj)


def count_syt(shape: Partition) -> int:
    """Number of standard tableaux of ``shape`` by the hook length formula."""
    hooks = math.prod(shape.hook(i, j) for i, j in shape.cells())
    count, rem = divmod(math.factorial(shape.n), hooks)
    assert rem == 0
    return count


def _grow(parts: tuple[int, ...]) -> Iterator[list[list[int]]]:
    n = sum(parts)
    rows: list[list[int]] = [[] for _ in parts]

    def place(v: int):
        if v > n:
            yield rows
            return
        for i, target in enumerate(parts):
            filled = len(rows[i])
            if filled < target and (i == 0 or len(rows[i - 1]) > filled):
                rows[i].append(v)
                yield from place(v + 1)
                rows[i].pop()

    yield from place(1)


def enumerate_syt(shape: Partition, limit: int = DEFAULT_ENUMERATION_LIMIT) -> list[Tableau]:
    """All standard tableaux of ``shape``, sorted by their row-major entry sequence."""
    count = count_syt(shape)
    if count > limit:
        raise EnumerationLimitError(f"SYT({shape}) has {count} tableaux, above the limit {limit}")
    return list(_enumerate_cached(shape.parts))


@lru_cache(maxsize=32)
def _enumerate_cached(parts: tuple[int, ...]) -> tuple[Tableau, ...]:
    shape = Partition(parts)
    rows = [tuple(tuple(r) for r in grid) for grid in _grow(parts)]
    rows.sort(key=lambda rs: tuple(v for r in rs for v in r))
    return tuple(Tableau._trusted(rs, shape) for rs in rows)


def partitions_of(n: int) -> Iterator[Partition]:
    """Partitions of ``n`` in reverse lexicographic order."""

    def rec(remaining: int, largest: int) -> Iterator[tuple[int, ...]]:
        if remaining == 0:
            yield ()
            return
        for p in range(min(remaining, largest), 0, -1):
            for rest in rec(remaining - p, p):
                yield (p,) + rest

    for parts in rec(n, n):
        yield Partition(parts)


def shapes_up_to(max_cells: int) -> Iterator[Partition]:
    for n in range(1, max_cells + 1):
        yield from partitions_of(n)
