"""Schensted and hypoplactic insertion, and the two congruences they define."""

from __future__ import annotations

from bisect import bisect_right
from typing import Sequence

from .tableaux import QuasiRibbonTableau, YoungTableau
from .words import contains_inversion


def schensted_insert(w: Sequence[int]) -> YoungTableau:
    """Row insertion: each letter bumps the leftmost strictly greater entry."""
    rows: list[list[int]] = []
    for a in w:
        x = a
        for row in rows:
            k = bisect_right(row, x)
            if k == len(row):
                row.append(x)
                break
            row[k], x = x, row[k]
        else:
            rows.append([x])
    return YoungTableau(rows)


def hypoplactic_insert(w: Sequence[int]) -> QuasiRibbonTableau:
    """The quasi-ribbon with the evaluation of ``w`` whose consecutive letters
    ``b < c`` are split across rows exactly when ``c`` occurs before ``b`` in ``w``.
    """
    letters = sorted(set(w))
    if not letters:
        return QuasiRibbonTableau([])
    rows: list[list[int]] = [[]]
    for k, a in enumerate(letters):
        if k and _occurs_before(w, a, letters[k - 1]):
            rows.append([])
        rows[-1].extend([a] * w.count(a))
    return QuasiRibbonTableau(rows)


def _occurs_before(w: Sequence[int], c: int, b: int) -> bool:
    if c == b + 1:
        return contains_inversion(w, b)
    seen = False
    for a in w:
        if a == c:
            seen = True
        elif a == b and seen:
            return True
    return False


def plactic_equivalent(u: Sequence[int], v: Sequence[int]) -> bool:
    return schensted_insert(u) == schensted_insert(v)


def hypoplactic_equivalent(u: Sequence[int], v: Sequence[int]) -> bool:
    return hypoplactic_insert(u) == hypoplactic_insert(v)
