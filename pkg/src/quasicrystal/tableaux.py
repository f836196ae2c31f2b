"""Young tableaux, standard Young tableaux and quasi-ribbon tableaux.

Cells are addressed ``(i, j)`` with 1-based row ``i`` (top to bottom) and
1-based column ``j`` (left to right).
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Iterable, Iterator, Sequence

from .errors import ShapeError
from .words import Composition, Partition, Word, descent_composition_from_set, evaluation


def _as_rows(rows: Iterable[Iterable[int]]) -> tuple[tuple[int, ...], ...]:
    return tuple(tuple(int(x) for x in row) for row in rows)


@dataclass(frozen=True, eq=False)
class YoungTableau:
    rows: tuple[tuple[int, ...], ...]

    def __init__(self, rows: Iterable[Iterable[int]]):
        object.__setattr__(self, "rows", _as_rows(rows))
        self._validate()

    # standard tableaux compare equal to the plain tableau with the same rows
    def __eq__(self, other: object) -> bool:
        return isinstance(other, YoungTableau) and self.rows == other.rows

    def __hash__(self) -> int:
        return hash(("YT", self.rows))

    def _validate(self) -> None:
        rows = self.rows
        for r, row in enumerate(rows, start=1):
            if not row:
                raise ShapeError(f"row {r} is empty")
            if any(x < 1 for x in row):
                raise ShapeError("entries must be positive")
            if any(a > b for a, b in zip(row, row[1:])):
                raise ShapeError(f"row {r} is not weakly increasing: {row}")
        for upper, lower in zip(rows, rows[1:]):
            if len(lower) > len(upper):
                raise ShapeError("row lengths must weakly decrease")
            if any(a >= b for a, b in zip(upper, lower)):
                raise ShapeError(f"columns must strictly increase: {upper} over {lower}")

    @property
    def shape(self) -> Partition:
        return Partition(len(row) for row in self.rows)

    @property
    def size(self) -> int:
        return sum(len(row) for row in self.rows)

    def __getitem__(self, cell: tuple[int, int]) -> int:
        i, j = cell
        return self.rows[i - 1][j - 1]

    def cells(self) -> Iterator[tuple[int, int, int]]:
        """Yield ``(i, j, entry)`` row by row."""
        for i, row in enumerate(self.rows, start=1):
            for j, x in enumerate(row, start=1):
                yield i, j, x

    def columns(self) -> list[list[int]]:
        if not self.rows:
            return []
        return [[row[j] for row in self.rows if len(row) > j] for j in range(len(self.rows[0]))]

    def evaluation(self) -> tuple[int, ...]:
        return evaluation(x for row in self.rows for x in row)

    def row_reading(self) -> Word:
        return tuple(x for row in self.rows for x in row)

    def to_json(self) -> dict:
        return {"shape": list(self.shape), "rows": [list(r) for r in self.rows]}

    def render(self) -> str:
        width = max((len(str(x)) for _, _, x in self.cells()), default=1)
        return "\n".join(" ".join(str(x).rjust(width) for x in row) for row in self.rows)

    def __repr__(self) -> str:
        return f"{type(self).__name__}({[list(r) for r in self.rows]})"


class StandardYoungTableau(YoungTableau):
    def _validate(self) -> None:
        super()._validate()
        entries = sorted(x for row in self.rows for x in row)
        if entries != list(range(1, len(entries) + 1)):
            raise ShapeError(f"not a standard filling: {self.rows}")

    def position(self, entry: int) -> tuple[int, int]:
        for i, j, x in self.cells():
            if x == entry:
                return i, j
        raise KeyError(entry)

    def descent_set(self) -> list[int]:
        row_of = {x: i for i, _, x in self.cells()}
        return [k for k in range(1, self.size) if row_of[k + 1] > row_of[k]]


@dataclass(frozen=True)
class QuasiRibbonTableau:
    """Rows of a quasi-ribbon; row ``i+1`` starts under the last cell of row ``i``."""

    rows: tuple[tuple[int, ...], ...]

    def __init__(self, rows: Iterable[Iterable[int]]):
        object.__setattr__(self, "rows", _as_rows(rows))
        self._validate()

    def _validate(self) -> None:
        for r, row in enumerate(self.rows, start=1):
            if not row:
                raise ShapeError(f"row {r} is empty")
            if any(x < 1 for x in row):
                raise ShapeError("entries must be positive")
            if any(a > b for a, b in zip(row, row[1:])):
                raise ShapeError(f"row {r} is not weakly increasing: {row}")
        for upper, lower in zip(self.rows, self.rows[1:]):
            if upper[-1] >= lower[0]:
                raise ShapeError(f"column through {upper[-1]} and {lower[0]} is not strictly increasing")

    @property
    def shape(self) -> Composition:
        return Composition(len(row) for row in self.rows)

    @property
    def size(self) -> int:
        return sum(len(row) for row in self.rows)

    @property
    def offsets(self) -> tuple[int, ...]:
        """0-based column index of the leftmost cell of each row."""
        out, col = [], 0
        for row in self.rows:
            out.append(col)
            col += len(row) - 1
        return tuple(out)

    def cells(self) -> Iterator[tuple[int, int, int]]:
        """Yield ``(i, j, entry)`` in reading order; cell ``k`` lies on diagonal ``k``."""
        for i, (row, off) in enumerate(zip(self.rows, self.offsets), start=1):
            for dj, x in enumerate(row):
                yield i, off + dj + 1, x

    def entries(self) -> tuple[int, ...]:
        return tuple(x for row in self.rows for x in row)

    def evaluation(self) -> tuple[int, ...]:
        return evaluation(self.entries())

    def to_json(self) -> dict:
        return {
            "shape": list(self.shape),
            "rows": [list(r) for r in self.rows],
            "offsets": list(self.offsets),
        }

    def render(self) -> str:
        width = max((len(str(x)) for x in self.entries()), default=1)
        blank = " " * width
        lines = []
        for row, off in zip(self.rows, self.offsets):
            lines.append(" ".join([blank] * off + [str(x).rjust(width) for x in row]))
        return "\n".join(lines)

    def __repr__(self) -> str:
        return f"QuasiRibbonTableau({[list(r) for r in self.rows]})"


def highest_weight_quasi_ribbon(shape: Sequence[int]) -> QuasiRibbonTableau:
    """Row ``i`` filled with ``i``."""
    return QuasiRibbonTableau([[i] * p for i, p in enumerate(shape, start=1)])


def highest_weight_young(shape: Sequence[int]) -> YoungTableau:
    return YoungTableau([[i] * p for i, p in enumerate(shape, start=1)])


def column_reading(t: YoungTableau | QuasiRibbonTableau) -> Word:
    """Columns left to right, each read bottom to top."""
    by_col: dict[int, list[tuple[int, int]]] = {}
    for i, j, x in t.cells():
        by_col.setdefault(j, []).append((i, x))
    out: list[int] = []
    for j in sorted(by_col):
        out.extend(x for _, x in sorted(by_col[j], reverse=True))
    return tuple(out)


def standardize(t: YoungTableau) -> StandardYoungTableau:
    """Relabel copies of each letter left to right with consecutive integers."""
    order = sorted(t.cells(), key=lambda c: (c[2], c[1]))
    rows = [list(r) for r in t.rows]
    for k, (i, j, _) in enumerate(order, start=1):
        rows[i - 1][j - 1] = k
    return StandardYoungTableau(rows)


def descent_composition(s: StandardYoungTableau) -> Composition:
    return descent_composition_from_set(s.descent_set(), s.size)


@dataclass(frozen=True)
class MinimalParsing:
    bands: tuple[frozenset[tuple[int, int]], ...]
    type: Composition = field(init=False)

    def __post_init__(self) -> None:
        object.__setattr__(self, "type", Composition(len(b) for b in self.bands))


def minimal_parsing(t: YoungTableau) -> MinimalParsing:
    """Bands are the blocks of consecutive entries of the standardization
    delimited by its descents."""
    s = standardize(t)
    pos = {x: (i, j) for i, j, x in s.cells()}
    bands, start = [], 1
    for part in descent_composition(s):
        bands.append(frozenset(pos[x] for x in range(start, start + part)))
        start += part
    return MinimalParsing(tuple(bands))


def is_band(t: YoungTableau, cells: Iterable[tuple[int, int]]) -> bool:
    """Check the two band axioms for a set of cells of ``t``."""
    cells = sorted(cells, key=lambda c: c[1])
    cols = [j for _, j in cells]
    if len(set(cols)) != len(cols):
        return False
    for (i, j), (i2, j2) in zip(cells, cells[1:]):
        if not (i >= i2 and t[i, j] <= t[i2, j2]):
            return False
    # pairwise condition follows from the consecutive one by transitivity
    letters = {t[c] for c in cells}
    return all((i, j) in set(cells) for i, j, x in t.cells() if x in letters)


def enumerate_syt(shape: Sequence[int]) -> list[StandardYoungTableau]:
    """All standard Young tableaux of ``shape``, sorted by row reading."""
    shape = Partition(shape)
    size = sum(shape)
    found: list[tuple[int, ...]] = []
    rows: list[list[int]] = [[] for _ in shape]

    def place(k: int) -> None:
        if k > size:
            found.append(tuple(x for r in rows for x in r))
            return
        for r, target in enumerate(shape):
            if len(rows[r]) < target and (r == 0 or len(rows[r - 1]) > len(rows[r])):
                rows[r].append(k)
                place(k + 1)
                rows[r].pop()

    place(1)
    out = []
    for reading in sorted(found):
        it = iter(reading)
        out.append(StandardYoungTableau([[next(it) for _ in range(p)] for p in shape]))
    return out


def enumerate_young(shape: Sequence[int], n: int) -> Iterator[YoungTableau]:
    """All semistandard tableaux of ``shape`` with entries at most ``n``."""
    shape = tuple(shape)
    cells = [(i, j) for i, p in enumerate(shape) for j in range(p)]
    grid = [[0] * p for p in shape]

    def fill(k: int) -> Iterator[YoungTableau]:
        if k == len(cells):
            yield YoungTableau(grid)
            return
        i, j = cells[k]
        lo = 1
        if j > 0:
            lo = grid[i][j - 1]
        if i > 0:
            lo = max(lo, grid[i - 1][j] + 1)
        # leave room for the strictly increasing column below
        depth = sum(1 for p in shape[i + 1:] if p > j)
        for x in range(lo, n - depth + 1):
            grid[i][j] = x
            yield from fill(k + 1)

    yield from fill(0)


def enumerate_quasi_ribbons(shape: Sequence[int], n: int) -> Iterator[QuasiRibbonTableau]:
    """All quasi-ribbon tableaux of ``shape`` with entries at most ``n``."""
    shape = tuple(shape)
    rows_of = Composition(shape).rows()
    m = len(rows_of)
    entries = [0] * m

    def fill(k: int) -> Iterator[QuasiRibbonTableau]:
        if k == m:
            it = iter(entries)
            yield QuasiRibbonTableau([[next(it) for _ in range(p)] for p in shape])
            return
        if k == 0:
            lo = 1
        elif rows_of[k] == rows_of[k - 1]:
            lo = entries[k - 1]
        else:
            lo = entries[k - 1] + 1
        # each later row break needs a strictly larger letter
        remaining_breaks = rows_of[-1] - rows_of[k]
        for x in range(lo, n - remaining_breaks + 1):
            entries[k] = x
            yield from fill(k + 1)

    yield from fill(0)
