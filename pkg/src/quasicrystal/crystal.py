"""Kashiwara and quasi-Kashiwara operators on words.

Operators are partial; an undefined application returns ``None``.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Sequence

from .insertion import hypoplactic_insert, schensted_insert
from .tableaux import QuasiRibbonTableau, YoungTableau, column_reading
from .words import Word, contains_inversion


@dataclass(frozen=True)
class BracketSignature:
    """Survivors of the bracketing rule; positions are 0-based indices into the word."""

    plus_positions: tuple[int, ...]
    minus_positions: tuple[int, ...]

    @property
    def plus_count(self) -> int:
        return len(self.plus_positions)

    @property
    def minus_count(self) -> int:
        return len(self.minus_positions)


def rho(w: Sequence[int], i: int) -> BracketSignature:
    """Mark ``i`` as ``+`` and ``i+1`` as ``-`` and cancel ``-+`` factors.

    The reduced word always has the form ``+^p -^q``, so one left-to-right
    pass suffices: a ``+`` cancels the most recent surviving ``-``.
    """
    plus: list[int] = []
    minus: list[int] = []
    for pos, a in enumerate(w):
        if a == i + 1:
            minus.append(pos)
        elif a == i:
            if minus:
                minus.pop()
            else:
                plus.append(pos)
    return BracketSignature(tuple(plus), tuple(minus))


def _replace(w: Sequence[int], pos: int, letter: int) -> Word:
    return tuple(w[:pos]) + (letter,) + tuple(w[pos + 1:])


def kashiwara_f(w: Sequence[int], i: int) -> Word | None:
    sig = rho(w, i)
    if not sig.plus_positions:
        return None
    return _replace(w, sig.plus_positions[-1], i + 1)


def kashiwara_e(w: Sequence[int], i: int) -> Word | None:
    sig = rho(w, i)
    if not sig.minus_positions:
        return None
    return _replace(w, sig.minus_positions[0], i)


def quasi_kashiwara_f(w: Sequence[int], i: int) -> Word | None:
    if contains_inversion(w, i):
        return None
    for pos in range(len(w) - 1, -1, -1):
        if w[pos] == i:
            return _replace(w, pos, i + 1)
    return None


def quasi_kashiwara_e(w: Sequence[int], i: int) -> Word | None:
    if contains_inversion(w, i):
        return None
    for pos, a in enumerate(w):
        if a == i + 1:
            return _replace(w, pos, i)
    return None


def is_strict_action(w: Sequence[int], i: int) -> bool:
    """True iff the Kashiwara operator acts on ``w`` but the quasi one does not."""
    return kashiwara_f(w, i) is not None and quasi_kashiwara_f(w, i) is None


def operator(kind: str, direction: str):
    """Look up an operator by graph kind (``plac``/``hypo``) and direction (``e``/``f``)."""
    table = {
        ("plac", "e"): kashiwara_e,
        ("plac", "f"): kashiwara_f,
        ("hypo", "e"): quasi_kashiwara_e,
        ("hypo", "f"): quasi_kashiwara_f,
    }
    try:
        return table[kind, direction]
    except KeyError:
        raise ValueError(f"unknown operator {direction} for kind {kind}") from None


def quasi_f_on_tableau(q: QuasiRibbonTableau, i: int) -> QuasiRibbonTableau | None:
    """Apply the quasi-Kashiwara lowering operator through the column reading."""
    v = quasi_kashiwara_f(column_reading(q), i)
    return None if v is None else hypoplactic_insert(v)


def quasi_e_on_tableau(q: QuasiRibbonTableau, i: int) -> QuasiRibbonTableau | None:
    v = quasi_kashiwara_e(column_reading(q), i)
    return None if v is None else hypoplactic_insert(v)


def kashiwara_f_on_tableau(t: YoungTableau, i: int) -> YoungTableau | None:
    v = kashiwara_f(column_reading(t), i)
    return None if v is None else schensted_insert(v)
