"""Quasi-arrays, the maps between them and quasi-ribbon tableaux, and the
diagonal operators.

A quasi-array of size ``m`` is determined by its first row: the entry in cell
``(i, j)`` is ``first_row[i + j - 1] + i - 1``, so every diagonal is a run of
consecutive letters.  Only the first row is stored.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Sequence

from .errors import ShapeError
from .tableaux import QuasiRibbonTableau
from .words import Composition, evaluation


@dataclass(frozen=True)
class QuasiArray:
    first_row: tuple[int, ...]

    def __init__(self, first_row: Iterable[int]):
        row = tuple(int(x) for x in first_row)
        if not row:
            raise ShapeError("a quasi-array has size at least 1")
        if row[0] < 1:
            raise ShapeError("entries must be positive")
        if any(a > b for a, b in zip(row, row[1:])):
            raise ShapeError(f"first row must be weakly increasing: {row}")
        object.__setattr__(self, "first_row", row)

    @property
    def size(self) -> int:
        return len(self.first_row)

    def entry(self, i: int, j: int) -> int:
        """Entry in row ``i``, column ``j`` (both 1-based)."""
        k = i + j - 1
        if not (1 <= i and 1 <= j and k <= self.size):
            raise IndexError((i, j))
        return self.first_row[k - 1] + i - 1

    def rows(self) -> list[list[int]]:
        m = self.size
        return [[self.entry(i, j) for j in range(1, m - i + 2)] for i in range(1, m + 1)]

    def in_rank(self, n: int) -> bool:
        return self.first_row[-1] <= n

    def evaluation(self) -> tuple[int, ...]:
        return evaluation(x for row in self.rows() for x in row)

    def to_json(self) -> dict:
        return {"size": self.size, "first_row": list(self.first_row)}

    def render(self) -> str:
        rows = self.rows()
        width = max(len(str(x)) for row in rows for x in row)
        return "\n".join(" ".join(str(x).rjust(width) for x in row) for row in rows)


def pickqrt(q: QuasiArray, sigma: Sequence[int]) -> QuasiRibbonTableau:
    """The quasi-ribbon of shape ``sigma`` inside ``q`` starting at its top-left cell."""
    sigma = Composition(sigma)
    if sigma.weight != q.size:
        raise ShapeError(f"composition {tuple(sigma)} does not have weight {q.size}")
    entries = [q.first_row[k] + r - 1 for k, r in enumerate(sigma.rows())]
    it = iter(entries)
    return QuasiRibbonTableau([[next(it) for _ in range(p)] for p in sigma])


def genqa(t: QuasiRibbonTableau) -> QuasiArray:
    """The unique quasi-array ``q`` with ``pickqrt(q, shape(t)) == t``."""
    rows_of = t.shape.rows()
    return QuasiArray(x - r + 1 for x, r in zip(t.entries(), rows_of))


def td(q: QuasiArray, k: int) -> QuasiArray | None:
    """Add 1 along the ``k``-th diagonal, if the result is a quasi-array."""
    m, row = q.size, q.first_row
    if k < 1 or k > m:
        return None
    if k < m and not row[k - 1] < row[k]:
        return None
    return QuasiArray(row[: k - 1] + (row[k - 1] + 1,) + row[k:])


def tc(q: QuasiArray, k: int) -> QuasiArray | None:
    """Subtract 1 along the ``k``-th diagonal, if the result is a quasi-array."""
    m, row = q.size, q.first_row
    if k < 1 or k > m:
        return None
    if k == 1:
        if row[0] <= 1:
            return None
    elif not row[k - 1] > row[k - 2]:
        return None
    return QuasiArray(row[: k - 1] + (row[k - 1] - 1,) + row[k:])


def transport_offsets(sigma: Sequence[int], tau: Sequence[int]) -> tuple[int, ...]:
    """Per-diagonal shift taking a ribbon of shape ``sigma`` to one of shape ``tau``."""
    sigma, tau = Composition(sigma), Composition(tau)
    if sigma.weight != tau.weight:
        raise ShapeError(f"{tuple(sigma)} and {tuple(tau)} have different weights")
    return tuple(rt - rs for rs, rt in zip(sigma.rows(), tau.rows()))


def direct_transport(t: QuasiRibbonTableau, tau: Sequence[int]) -> QuasiRibbonTableau:
    """``pickqrt(genqa(t), tau)`` without building the quasi-array.

    Cell ``k`` of a ribbon lies on diagonal ``k``; along a diagonal the entries
    grow by one per row, so only the change of row index matters.
    """
    tau = Composition(tau)
    shift = transport_offsets(t.shape, tau)
    it = iter(x + d for x, d in zip(t.entries(), shift))
    return QuasiRibbonTableau([[next(it) for _ in range(p)] for p in tau])
