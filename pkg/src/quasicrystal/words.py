"""Letters, words, evaluations, compositions and partitions.

Words are plain tuples of positive integers.  The rank of the alphabet is not
part of a word; operations that care about it take ``n`` explicitly.
"""

from __future__ import annotations

from itertools import product
from math import prod
from typing import Iterable, Iterator, Sequence

from .errors import RankError, ShapeError

Word = tuple[int, ...]


def make_word(letters: Iterable[int], rank: int | None = None) -> Word:
    """Validate ``letters`` and return them as a word."""
    w = tuple(int(a) for a in letters)
    for a in w:
        if a < 1:
            raise ShapeError(f"letters must be positive, got {a}")
    if rank is not None:
        check_rank(w, rank)
    return w


def check_rank(w: Sequence[int], n: int) -> None:
    for a in w:
        if a > n:
            raise RankError(f"letter {a} exceeds rank {n}")


def parse_word(text: str) -> Word:
    """Parse ``"12311"`` or ``"10,2,11"``."""
    text = text.strip()
    if not text or text in ("ε", "eps", "-"):
        return ()
    if "," in text:
        return make_word(int(t) for t in text.split(",") if t.strip())
    if not text.isdigit():
        raise ShapeError(f"cannot parse word {text!r}")
    return make_word(int(c) for c in text)


def format_word(w: Sequence[int]) -> str:
    if all(a <= 9 for a in w):
        return "".join(str(a) for a in w)
    return ",".join(str(a) for a in w)


def evaluation(w: Iterable[int]) -> tuple[int, ...]:
    """Count occurrences of each letter; trailing zeros are dropped."""
    counts: list[int] = []
    for a in w:
        if a > len(counts):
            counts.extend([0] * (a - len(counts)))
        counts[a - 1] += 1
    return tuple(counts)


def pad(ev: Sequence[int], n: int) -> tuple[int, ...]:
    """Pad an evaluation with zeros to length ``n``."""
    if len(ev) > n:
        raise RankError(f"evaluation {tuple(ev)} does not fit in rank {n}")
    return tuple(ev) + (0,) * (n - len(ev))


def contains_inversion(w: Sequence[int], i: int) -> bool:
    """True iff some letter ``i+1`` occurs strictly before some letter ``i``."""
    seen = False
    for a in w:
        if a == i + 1:
            seen = True
        elif a == i and seen:
            return True
    return False


def schutzenberger(w: Sequence[int], n: int) -> Word:
    """Reverse ``w`` and complement each letter ``a`` to ``n - a + 1``."""
    check_rank(w, n)
    return tuple(n - a + 1 for a in reversed(w))


def words(n: int, length: int) -> Iterator[Word]:
    """All words of the given length over 1..n, in lexicographic order."""
    return product(range(1, n + 1), repeat=length)


def words_up_to(n: int, max_length: int) -> Iterator[Word]:
    for length in range(max_length + 1):
        yield from words(n, length)


class Composition(tuple):
    """A finite sequence of positive integers."""

    def __new__(cls, parts: Iterable[int] = ()):
        self = super().__new__(cls, (int(p) for p in parts))
        for p in self:
            if p < 1:
                raise ShapeError(f"parts must be positive: {tuple(self)}")
        return self

    @property
    def weight(self) -> int:
        return sum(self)

    @property
    def length(self) -> int:
        return len(self)

    def rows(self) -> list[int]:
        """Row index (1-based) of each cell of the ribbon, in reading order."""
        return [r for r, part in enumerate(self, start=1) for _ in range(part)]

    def __repr__(self) -> str:
        return f"{type(self).__name__}({tuple(self)})"

    def __str__(self) -> str:
        return format_composition(self)


class Partition(Composition):
    """A weakly decreasing composition."""

    def __new__(cls, parts: Iterable[int] = ()):
        self = super().__new__(cls, parts)
        for a, b in zip(self, self[1:]):
            if a < b:
                raise ShapeError(f"partition must be weakly decreasing: {tuple(self)}")
        return self


def parse_composition(text: str) -> Composition:
    text = text.strip().strip("()")
    if not text:
        return Composition()
    return Composition(int(t) for t in text.split(",") if t.strip())


def format_composition(parts: Sequence[int]) -> str:
    return "(" + ",".join(str(p) for p in parts) + ")"


def sort_to_partition(alpha: Sequence[int]) -> Partition:
    return Partition(sorted(alpha, reverse=True))


def conjugate(beta: Sequence[int]) -> Partition:
    """Entry ``j`` counts the parts of ``beta`` that are at least ``j``."""
    if not beta:
        return Partition()
    return Partition(sum(1 for p in beta if p >= j) for j in range(1, max(beta) + 1))


def refinements(alpha: Sequence[int]) -> set[Composition]:
    """All compositions obtained by splitting each part into an ordered sum."""
    per_part = [compositions_of(p) for p in alpha]
    return {Composition(x for piece in choice for x in piece) for choice in product(*per_part)}


def compositions_of(m: int) -> list[Composition]:
    """All compositions of ``m``, ordered lexicographically."""
    if m == 0:
        return [Composition()]
    out = []
    # bit k set = cut after position k+1
    for mask in range(2 ** (m - 1)):
        parts, run = [], 1
        for k in range(m - 1):
            if mask >> k & 1:
                parts.append(run)
                run = 1
            else:
                run += 1
        parts.append(run)
        out.append(Composition(parts))
    return sorted(out)


def partitions_of(m: int, max_part: int | None = None) -> list[Partition]:
    """All partitions of ``m`` in reverse lexicographic order."""
    if max_part is None:
        max_part = m
    if m == 0:
        return [Partition()]
    out = []
    for first in range(min(m, max_part), 0, -1):
        for rest in partitions_of(m - first, first):
            out.append(Partition((first,) + tuple(rest)))
    return out


def descent_composition_from_set(descents: Iterable[int], size: int) -> Composition:
    cuts = sorted(descents)
    parts, prev = [], 0
    for d in cuts:
        parts.append(d - prev)
        prev = d
    if size:
        parts.append(size - prev)
    return Composition(parts)


def refinement_count(alpha: Sequence[int]) -> int:
    return prod(2 ** (p - 1) for p in alpha)
