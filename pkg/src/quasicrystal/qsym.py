"""Fundamental quasi-symmetric functions, Schur functions, Gessel's expansion
and the slide map from quasi-ribbon tableaux to Young tableaux."""

from __future__ import annotations

from collections import Counter
from itertools import combinations
from typing import Iterable, Mapping, Sequence

from .crystal import kashiwara_f_on_tableau, quasi_f_on_tableau
from .errors import ShapeError, TheoremViolation
from .tableaux import (
    QuasiRibbonTableau,
    StandardYoungTableau,
    YoungTableau,
    descent_composition,
    enumerate_quasi_ribbons,
    enumerate_syt,
    enumerate_young,
    highest_weight_quasi_ribbon,
    standardize,
)
from .words import Composition, Partition, pad, refinements, sort_to_partition


class ExactPolynomial:
    """Integer polynomial in ``n`` variables, stored as exponent vector -> coefficient."""

    def __init__(self, n: int, terms: Mapping[tuple[int, ...], int] | None = None):
        self.n = n
        self.terms: dict[tuple[int, ...], int] = {}
        for exp, c in (terms or {}).items():
            if len(exp) != n or any(e < 0 for e in exp):
                raise ShapeError(f"bad exponent vector {exp} for {n} variables")
            if c:
                self.terms[tuple(exp)] = self.terms.get(tuple(exp), 0) + c
        self.terms = {e: c for e, c in self.terms.items() if c}

    @classmethod
    def from_monomials(cls, n: int, exponents: Iterable[tuple[int, ...]]) -> ExactPolynomial:
        return cls(n, Counter(exponents))

    def __add__(self, other: ExactPolynomial) -> ExactPolynomial:
        if self.n != other.n:
            raise ShapeError("polynomials in different numbers of variables")
        out = Counter(self.terms)
        out.update(other.terms)
        return ExactPolynomial(self.n, out)

    def __rmul__(self, c: int) -> ExactPolynomial:
        return ExactPolynomial(self.n, {e: c * v for e, v in self.terms.items()})

    def __eq__(self, other: object) -> bool:
        return isinstance(other, ExactPolynomial) and self.n == other.n and self.terms == other.terms

    def __hash__(self) -> int:
        return hash((self.n, frozenset(self.terms.items())))

    def monomial_count(self) -> int:
        """Sum of coefficients, i.e. the number of monomials counted with multiplicity."""
        return sum(self.terms.values())

    def graded_lex(self) -> list[tuple[tuple[int, ...], int]]:
        return sorted(self.terms.items(), key=lambda t: (-sum(t[0]), tuple(-e for e in t[0])))

    def format(self) -> str:
        if not self.terms:
            return "0"
        parts = []
        for exp, c in self.graded_lex():
            mono = "*".join(
                f"x{k}" if e == 1 else f"x{k}^{e}" for k, e in enumerate(exp, start=1) if e
            )
            if not mono:
                parts.append(str(c))
            elif c == 1:
                parts.append(mono)
            else:
                parts.append(f"{c}*{mono}")
        return " + ".join(parts)

    def __repr__(self) -> str:
        return f"ExactPolynomial({self.n}, {self.format()})"


def monomial_qsym(beta: Sequence[int], n: int) -> ExactPolynomial:
    """Sum of ``x_{i_1}^{b_1} ... x_{i_l}^{b_l}`` over ``i_1 < ... < i_l <= n``."""
    exps = []
    for idx in combinations(range(n), len(beta)):
        e = [0] * n
        for k, b in zip(idx, beta):
            e[k] = b
        exps.append(tuple(e))
    return ExactPolynomial.from_monomials(n, exps)


def fundamental_poly(alpha: Sequence[int], n: int, method: str = "refinements") -> ExactPolynomial:
    """F_alpha in ``n`` variables.

    ``method="refinements"`` sums monomial quasi-symmetric functions over the
    refinements of ``alpha``; ``method="ribbons"`` sums over quasi-ribbon
    tableaux of shape ``alpha``.
    """
    if method == "refinements":
        total = ExactPolynomial(n)
        for beta in sorted(refinements(alpha)):
            total = total + monomial_qsym(beta, n)
        return total
    if method == "ribbons":
        return ExactPolynomial.from_monomials(
            n, (pad(q.evaluation(), n) for q in enumerate_quasi_ribbons(alpha, n))
        )
    raise ValueError(f"unknown method {method!r}")


def schur_poly(shape: Sequence[int], n: int) -> ExactPolynomial:
    return ExactPolynomial.from_monomials(
        n, (pad(t.evaluation(), n) for t in enumerate_young(Partition(shape), n))
    )


def schur_to_fundamental(shape: Sequence[int]) -> Counter:
    """Multiset of descent compositions over the standard tableaux of ``shape``."""
    return Counter(descent_composition(s) for s in enumerate_syt(shape))


def expansion_poly(expansion: Mapping[Composition, int], n: int) -> ExactPolynomial:
    total = ExactPolynomial(n)
    for alpha, c in expansion.items():
        total = total + c * fundamental_poly(alpha, n)
    return total


def xi_map(q: QuasiRibbonTableau) -> YoungTableau:
    """Slide the rows of ``q`` to the left edge, then slide cells up their columns."""
    if not q.rows:
        return YoungTableau([])
    width = max(len(r) for r in q.rows)
    columns = [[r[j] for r in q.rows if len(r) > j] for j in range(width)]
    height = len(columns[0])
    rows = [[col[i] for col in columns if len(col) > i] for i in range(height)]
    try:
        return YoungTableau(rows)
    except ShapeError as exc:
        raise TheoremViolation(f"slide of {q!r} is not a Young tableau: {exc}") from exc


def verify_schur_reorder(alpha: Sequence[int]) -> StandardYoungTableau:
    """Witness that F_alpha occurs in s_lambda, lambda the sorted parts of alpha."""
    alpha = Composition(alpha)
    lam = sort_to_partition(alpha)
    t = xi_map(highest_weight_quasi_ribbon(alpha))
    s = standardize(t)
    if s.shape != lam:
        raise TheoremViolation(f"witness for {tuple(alpha)} has shape {tuple(s.shape)}")
    if descent_composition(s) != alpha:
        raise TheoremViolation(
            f"witness for {tuple(alpha)} has descent composition {tuple(descent_composition(s))}"
        )
    return s


def xi_intertwines(q: QuasiRibbonTableau, i: int) -> bool:
    """Compare the slide of the lowered tableau with the Kashiwara-lowered slide."""
    lowered = quasi_f_on_tableau(q, i)
    if lowered is None:
        raise ValueError(f"quasi-Kashiwara operator {i} is undefined on {q!r}")
    return xi_map(lowered) == kashiwara_f_on_tableau(xi_map(q), i)
