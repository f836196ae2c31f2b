"""Bounded exhaustive checks of every structural invariant, collected into a report.

Operators are looked up through their modules at call time so that a
replaced operator is picked up by every check.
"""

from __future__ import annotations

import time
from dataclasses import dataclass, field
from itertools import permutations
from math import comb, factorial
from typing import Any, Callable, Iterator

from . import crystal, graphs, insertion, qsym, quasi_arrays, skeleton, tableaux
from .errors import ParameterError, QuasiCrystalError
from .words import (
    Composition,
    compositions_of,
    conjugate,
    evaluation,
    pad,
    partitions_of,
    refinement_count,
    refinements,
    schutzenberger,
    words,
    words_up_to,
)

MAX_WEIGHT = 8
MAX_RANK = 6


@dataclass(frozen=True)
class CheckResult:
    name: str
    params: dict
    passed: bool
    counterexample: Any
    elapsed: float


@dataclass
class VerificationReport:
    checks: list[CheckResult] = field(default_factory=list)

    @property
    def passed(self) -> bool:
        return all(c.passed for c in self.checks)

    def failures(self) -> list[CheckResult]:
        return [c for c in self.checks if not c.passed]

    def format(self) -> str:
        lines = []
        for c in self.checks:
            params = ",".join(f"{k}={v}" for k, v in c.params.items())
            status = "PASS" if c.passed else "FAIL"
            line = f"{status} {c.name} [{params}] {c.elapsed:.3f}s"
            if not c.passed:
                line += f" counterexample: {c.counterexample}"
            lines.append(line)
        verdict = "all checks passed" if self.passed else f"{len(self.failures())} check(s) failed"
        lines.append(verdict)
        return "\n".join(lines)


# A check yields counterexamples; the first one fails it.
Check = Callable[..., Iterator[Any]]


# -- words ---------------------------------------------------------------------


def _evaluation_sums(length, n):
    for w in words_up_to(n, length):
        if sum(evaluation(w)) != len(w):
            yield w
    for u in words_up_to(n, length // 2):
        for v in words_up_to(n, length - length // 2):
            a, b = pad(evaluation(u), n), pad(evaluation(v), n)
            if pad(evaluation(u + v), n) != tuple(x + y for x, y in zip(a, b)):
                yield (u, v)


def _schutzenberger_involution(length, n):
    for w in words_up_to(n, length):
        if schutzenberger(schutzenberger(w, n), n) != w:
            yield w


def _conjugate_invariance(weight):
    for m in range(1, weight + 1):
        for alpha in compositions_of(m):
            c = conjugate(alpha)
            for p in set(permutations(alpha)):
                if conjugate(p) != c:
                    yield (alpha, p)


def _refinement_count(weight):
    for m in range(1, weight + 1):
        for alpha in compositions_of(m):
            if len(refinements(alpha)) != refinement_count(alpha):
                yield alpha


# -- tableaux and insertion ----------------------------------------------------


def _young_tableaux(weight, n):
    for m in range(1, weight + 1):
        for lam in partitions_of(m):
            if len(lam) <= n:
                yield from tableaux.enumerate_young(lam, n)


def _quasi_ribbons(weight, n):
    for m in range(1, weight + 1):
        for alpha in compositions_of(m):
            if len(alpha) <= n:
                yield from tableaux.enumerate_quasi_ribbons(alpha, n)


def _minimal_parsing(weight, n):
    for t in _young_tableaux(weight, n):
        mp = tableaux.minimal_parsing(t)
        if mp.type != tableaux.descent_composition(tableaux.standardize(t)):
            yield t
        elif not all(tableaux.is_band(t, b) for b in mp.bands):
            yield t
        elif sorted(c for b in mp.bands for c in b) != sorted((i, j) for i, j, _ in t.cells()):
            yield t


def _hook_count(lam) -> int:
    conj = conjugate(lam)
    hooks = 1
    for i, p in enumerate(lam):
        for j in range(p):
            hooks *= (p - j - 1) + (conj[j] - i - 1) + 1
    return factorial(sum(lam)) // hooks


def _syt_count(weight):
    for m in range(1, weight + 1):
        for lam in partitions_of(m):
            if len(tableaux.enumerate_syt(lam)) != _hook_count(lam):
                yield lam


def _plactic_reading(weight, n):
    for t in _young_tableaux(weight, n):
        if insertion.schensted_insert(tableaux.column_reading(t)) != t:
            yield t


def _hypoplactic_reading(weight, n):
    for q in _quasi_ribbons(weight, n):
        if insertion.hypoplactic_insert(tableaux.column_reading(q)) != q:
            yield q


def _incremental_hypo(w) -> tuple[tuple[int, ...], ...]:
    """Left-to-right insertion: new letter goes after the last entry not exceeding it;
    the entries after it move to a new row."""
    rows: list[list[int]] = []
    for a in w:
        flat = [(r, k) for r, row in enumerate(rows) for k in range(len(row))]
        small = [(r, k) for r, k in flat if rows[r][k] <= a]
        if not small:
            rows.insert(0, [a])
            continue
        r, k = small[-1]
        tail = rows[r][k + 1:]
        rows[r] = rows[r][: k + 1] + [a]
        if tail:
            rows.insert(r + 1, tail)
    return tuple(tuple(r) for r in rows)


def _hypo_insertion_oracle(length, n):
    for w in words_up_to(n, length):
        if insertion.hypoplactic_insert(w).rows != _incremental_hypo(w):
            yield w


def _congruence_evaluation(length, n):
    for k in range(length + 1):
        classes: dict = {}
        for w in words(n, k):
            for key in (("p", insertion.schensted_insert(w)), ("h", insertion.hypoplactic_insert(w))):
                ev = classes.setdefault(key, evaluation(w))
                if ev != evaluation(w):
                    yield (key[0], w)


# -- operators -----------------------------------------------------------------


def _naive_rho(w, i):
    marks = [(p, "+" if a == i else "-") for p, a in enumerate(w) if a in (i, i + 1)]
    changed = True
    while changed:
        changed = False
        for k in range(len(marks) - 1):
            if marks[k][1] == "-" and marks[k + 1][1] == "+":
                del marks[k : k + 2]
                changed = True
                break
    return (tuple(p for p, s in marks if s == "+"), tuple(p for p, s in marks if s == "-"))


def _bracketing(length, n):
    for w in words_up_to(n, length):
        for i in range(1, n):
            sig = crystal.rho(w, i)
            if (sig.plus_positions, sig.minus_positions) != _naive_rho(w, i):
                yield (w, i)


def _quasi_implies_kashiwara(length, n):
    for w in words_up_to(n, length):
        for i in range(1, n):
            qf = crystal.quasi_kashiwara_f(w, i)
            if qf is not None and crystal.kashiwara_f(w, i) != qf:
                yield ("f", w, i)
            qe = crystal.quasi_kashiwara_e(w, i)
            if qe is not None and crystal.kashiwara_e(w, i) != qe:
                yield ("e", w, i)


def _operators_inverse(length, n):
    pairs = (
        ("plac", crystal.kashiwara_f, crystal.kashiwara_e),
        ("hypo", crystal.quasi_kashiwara_f, crystal.quasi_kashiwara_e),
    )
    for w in words_up_to(n, length):
        for i in range(1, n):
            for kind, f, e in pairs:
                v = f(w, i)
                if v is not None and e(v, i) != w:
                    yield (kind, "f", w, i)
                u = e(w, i)
                if u is not None and f(u, i) != w:
                    yield (kind, "e", w, i)


def _evaluation_shift(length, n):
    for w in words_up_to(n, length):
        ev = pad(evaluation(w), n)
        for i in range(1, n):
            for f in (crystal.kashiwara_f, crystal.quasi_kashiwara_f):
                v = f(w, i)
                if v is None:
                    continue
                want = list(ev)
                want[i - 1] -= 1
                want[i] += 1
                if pad(evaluation(v), n) != tuple(want):
                    yield (w, i)


def _parsing_preservation(length, n):
    """Quasi actions keep the minimal parsing of the plactic tableau; strict ones change it."""
    for w in words_up_to(n, length):
        before = tableaux.minimal_parsing(insertion.schensted_insert(w)).bands
        for i in range(1, n):
            v = crystal.kashiwara_f(w, i)
            if v is None:
                continue
            after = tableaux.minimal_parsing(insertion.schensted_insert(v)).bands
            quasi = crystal.quasi_kashiwara_f(w, i) is not None
            if quasi != (before == after):
                yield (w, i)


def _schutzenberger_conjugation(length, n):
    for u in words_up_to(n, length):
        for i in range(1, n):
            v = crystal.quasi_kashiwara_f(u, i)
            if v is None:
                continue
            if crystal.quasi_kashiwara_f(schutzenberger(v, n), n - i) != schutzenberger(u, n):
                yield (u, i)


# -- quasi-arrays --------------------------------------------------------------


def _quasi_arrays(m, n):
    def rec(prefix):
        if len(prefix) == m:
            yield quasi_arrays.QuasiArray(prefix)
            return
        for x in range(prefix[-1] if prefix else 1, n + 1):
            yield from rec(prefix + [x])

    yield from rec([])


def _diagonal_inverse(size, n):
    for m in range(1, size + 1):
        for q in _quasi_arrays(m, n):
            for k in range(1, m + 1):
                d = quasi_arrays.td(q, k)
                if d is not None and quasi_arrays.tc(d, k) != q:
                    yield ("td", q.first_row, k)
                c = quasi_arrays.tc(q, k)
                if c is not None and quasi_arrays.td(c, k) != q:
                    yield ("tc", q.first_row, k)


def _array_monotone(size, n):
    for m in range(1, size + 1):
        for q in _quasi_arrays(m, n):
            rows = q.rows()
            for r in rows:
                if any(a > b for a, b in zip(r, r[1:])):
                    yield q.first_row
            for i in range(len(rows) - 1):
                if any(rows[i][j] >= rows[i + 1][j] for j in range(len(rows[i + 1]))):
                    yield q.first_row


def _diagonal_quasi_kashiwara(size, n):
    """Diagonal operators on a quasi-array match quasi-Kashiwara operators on any ribbon inside it."""
    for m in range(1, size + 1):
        for q in _quasi_arrays(m, n):
            for sigma in compositions_of(m):
                t = quasi_arrays.pickqrt(q, sigma)
                ent = t.entries()
                for k in range(1, m + 1):
                    ell = ent[k - 1]
                    first = ent.index(ell) + 1
                    last = len(ent) - ent[::-1].index(ell)
                    c = quasi_arrays.tc(q, k)
                    e = crystal.quasi_e_on_tableau(t, ell - 1) if ell >= 2 else None
                    if (c is not None) != (e is not None and first == k):
                        yield ("tc", q.first_row, sigma, k)
                    elif c is not None and quasi_arrays.pickqrt(c, sigma) != e:
                        yield ("tc", q.first_row, sigma, k)
                    d = quasi_arrays.td(q, k)
                    f = crystal.quasi_f_on_tableau(t, ell)
                    if (d is not None) != (f is not None and last == k):
                        yield ("td", q.first_row, sigma, k)
                    elif d is not None and quasi_arrays.pickqrt(d, sigma) != f:
                        yield ("td", q.first_row, sigma, k)


def _transport_shortcut(weight, n):
    for q in _quasi_ribbons(weight, n):
        for tau in compositions_of(q.size):
            if quasi_arrays.direct_transport(q, tau) != quasi_arrays.pickqrt(quasi_arrays.genqa(q), tau):
                yield (q, tau)


# -- graphs --------------------------------------------------------------------


def _component_nesting(length, n):
    seen: set = set()
    for w in words_up_to(n, length):
        if w in seen:
            continue
        plac = graphs.build_component(w, "plac", n)
        seen.update(plac.vertices)
        covered: set = set()
        plac_edges = plac.edge_set()
        for v in plac.vertices:
            if v in covered:
                continue
            hypo = graphs.build_component(v, "hypo", n)
            if not set(hypo.vertices) <= set(plac.vertices) or not hypo.edge_set() <= plac_edges:
                yield v
            covered.update(hypo.vertices)


def phi_violations(sigma, n) -> Iterator[Any]:
    """Extraction from Delta(QA_n, m) into the rank n+l-1 component of shape sigma."""
    sigma = Composition(sigma)
    delta = graphs.build_delta(n, sigma.weight)
    gamma = graphs.build_shape_component(sigma, "hypo", n + len(sigma) - 1)
    words_of = {tableaux.column_reading(quasi_arrays.pickqrt(q, sigma)): q for q in delta.vertices}
    if set(words_of) != set(gamma.vertices) or len(words_of) != len(delta):
        yield ("vertices", tuple(sigma), n)
        return
    for w, q in words_of.items():
        if quasi_arrays.genqa(insertion.hypoplactic_insert(w)) != q:
            yield ("genqa", w)
    image = set()
    for s, d, k in delta.edges:
        q = delta.vertices[s]
        t = quasi_arrays.pickqrt(q, sigma)
        ell = t.entries()[k - 1]
        image.add((tableaux.column_reading(t), tableaux.column_reading(quasi_arrays.pickqrt(delta.vertices[d], sigma)), ell))
    if image != gamma.edge_set():
        yield ("edges", tuple(sigma), n)


def _phi_isomorphism(weight, n):
    for m in range(1, weight + 1):
        for sigma in compositions_of(m):
            for r in range(1, n + 1):
                yield from phi_violations(sigma, r)


def psi_target_rank(sigma, tau, n: int) -> int:
    return n - len(sigma) + len(tau)


def psi_violations(sigma, tau, n) -> Iterator[Any]:
    g1 = graphs.build_shape_component(sigma, "hypo", n)
    n2 = psi_target_rank(sigma, tau, n)
    g2 = graphs.build_shape_component(tau, "hypo", n2)
    if graphs.isomorphic(g1, g2, "unlabelled", candidate=graphs.psi_map(g1, g2)) is None:
        yield (tuple(sigma), tuple(tau), n, n2)


def _psi_isomorphism(weight, n):
    """Delta rank d maps to ranks d + l - 1 on both sides."""
    for m in range(1, weight + 1):
        comps = compositions_of(m)
        for sigma in comps:
            for tau in comps:
                for d in range(1, n + 1):
                    yield from psi_violations(sigma, tau, d + len(sigma) - 1)


def hypo_components(n: int, length: int) -> Iterator[graphs.LabeledDigraph]:
    seen: set = set()
    for w in words_up_to(n, length):
        if w in seen:
            continue
        g = graphs.build_component(w, "hypo", n)
        seen.update(g.vertices)
        yield g


def symmetry_map(g: graphs.LabeledDigraph) -> dict | None:
    """Reverse-complement, then transport back to the shape of ``g``."""
    sigma = graphs.component_shape(g)
    by_tableau = {insertion.hypoplactic_insert(w): w for w in g.vertices}
    out = {}
    for w in g.vertices:
        t = insertion.hypoplactic_insert(schutzenberger(w, g.rank))
        image = quasi_arrays.direct_transport(t, sigma)
        if image not in by_tableau:
            return None
        out[w] = by_tableau[image]
    return out


def symmetry_violations(g) -> Iterator[Any]:
    phi = symmetry_map(g)
    if phi is None or len(set(phi.values())) != len(g):
        yield (g.vertices[0], "not a bijection")
        return
    reversed_edges = {(phi[d], phi[s]) for s, d in g.edge_set(labelled=False)}
    if reversed_edges != g.edge_set(labelled=False):
        yield (g.vertices[0], "edges not reversed")
    elif phi[graphs.highest_weight(g)] != graphs.lowest_weight(g):
        yield (g.vertices[0], "extremal vertices not swapped")


def _vertical_symmetry(length, n):
    for g in hypo_components(n, length):
        yield from symmetry_violations(g)


def _isolated_vertices(length, n):
    for w in words_up_to(n, length):
        if len(insertion.hypoplactic_insert(w).rows) != n:
            continue
        for i in range(1, n):
            if crystal.quasi_kashiwara_f(w, i) is not None or crystal.quasi_kashiwara_e(w, i) is not None:
                yield (w, i)


def _row_component_size(weight, n):
    for r in range(1, n + 1):
        for m in range(1, weight + 1):
            if len(graphs.build_shape_component((m,), "hypo", r)) != comb(r + m - 1, m):
                yield (r, m)


# -- quasi-symmetric functions --------------------------------------------------


def _gessel(weight, n):
    for m in range(1, weight + 1):
        for lam in partitions_of(m):
            for r in range(1, n + 1):
                lhs = qsym.schur_poly(lam, r)
                rhs = qsym.expansion_poly(qsym.schur_to_fundamental(lam), r)
                if lhs != rhs:
                    yield (tuple(lam), r)


def _character(weight, n):
    for m in range(1, weight + 1):
        for sigma in compositions_of(m):
            for r in range(1, n + 1):
                g = graphs.build_shape_component(sigma, "hypo", r)
                char = qsym.ExactPolynomial.from_monomials(r, (pad(evaluation(w), r) for w in g.vertices))
                if char != qsym.fundamental_poly(sigma, r):
                    yield (tuple(sigma), r)


def _fundamental_routes(weight, n):
    for m in range(1, weight + 1):
        for alpha in compositions_of(m):
            for r in range(1, n + 1):
                if qsym.fundamental_poly(alpha, r, "refinements") != qsym.fundamental_poly(alpha, r, "ribbons"):
                    yield (tuple(alpha), r)


def _schur_reorder(weight):
    for m in range(1, weight + 1):
        for alpha in compositions_of(m):
            try:
                qsym.verify_schur_reorder(alpha)
            except QuasiCrystalError as exc:
                yield (tuple(alpha), str(exc))
                continue
            if qsym.schur_to_fundamental(sorted(alpha, reverse=True))[alpha] < 1:
                yield tuple(alpha)


def _slide_inside_crystal(weight):
    for m in range(1, weight + 1):
        for alpha in compositions_of(m):
            seed = tableaux.column_reading(qsym.xi_map(tableaux.highest_weight_quasi_ribbon(alpha)))
            hypo = graphs.build_component(seed, "hypo", m)
            plac = graphs.build_component(seed, "plac", m)
            if not set(hypo.vertices) <= set(plac.vertices):
                yield tuple(alpha)
            if insertion.hypoplactic_insert(seed) != tableaux.highest_weight_quasi_ribbon(alpha):
                yield ("reinsert", tuple(alpha))


def _slide_evaluation(weight, n):
    for q in _quasi_ribbons(weight, n):
        try:
            if qsym.xi_map(q).evaluation() != q.evaluation():
                yield q
        except QuasiCrystalError as exc:
            yield (q, str(exc))


def _slide_intertwining(weight, n):
    for q in _quasi_ribbons(weight, n):
        for i in range(1, n):
            if crystal.quasi_f_on_tableau(q, i) is None:
                continue
            try:
                ok = qsym.xi_intertwines(q, i)
            except QuasiCrystalError:
                ok = False
            if not ok:
                yield (q, i)


# -- skeletons -----------------------------------------------------------------


def _even_cycles(weight):
    for m in range(1, weight + 1):
        for lam in partitions_of(m):
            sk = skeleton.skeleton(lam, skeleton.minimal_rank(lam))
            for s in range(1, m + 1):
                if not skeleton.check_even_cycles(sk, s):
                    yield (tuple(lam), s)


def _skeleton_rank_independence(weight):
    for m in range(1, weight + 1):
        for lam in partitions_of(m):
            r = skeleton.minimal_rank(lam)
            if not skeleton.skeleton(lam, r).same_as(skeleton.skeleton(lam, r + 1)):
                yield (tuple(lam), r)


def _skeleton_contraction(weight):
    for m in range(1, weight + 1):
        for lam in partitions_of(m):
            try:
                sk = skeleton.skeleton(lam, skeleton.minimal_rank(lam))
            except QuasiCrystalError as exc:
                yield (tuple(lam), str(exc))
                continue
            if len(sk.vertices) != _hook_count(lam):
                yield tuple(lam)


# -- registry ------------------------------------------------------------------

# (name, check, argument kinds, caps); "w" takes the weight bound, "n" the rank bound.
CHECKS: tuple[tuple[str, Check, tuple[str, ...], tuple[int, ...]], ...] = (
    ("evaluation-additive", _evaluation_sums, ("w", "n"), (8, 4)),
    ("schutzenberger-involution", _schutzenberger_involution, ("w", "n"), (6, 4)),
    ("conjugate-reorder-invariant", _conjugate_invariance, ("w",), (7,)),
    ("refinement-count", _refinement_count, ("w",), (7,)),
    ("minimal-parsing-type", _minimal_parsing, ("w", "n"), (6, 4)),
    ("syt-hook-length", _syt_count, ("w",), (8,)),
    ("plactic-reading-reinserts", _plactic_reading, ("w", "n"), (6, 4)),
    ("hypoplactic-reading-reinserts", _hypoplactic_reading, ("w", "n"), (6, 5)),
    ("hypoplactic-incremental-oracle", _hypo_insertion_oracle, ("w", "n"), (6, 4)),
    ("congruence-keeps-evaluation", _congruence_evaluation, ("w", "n"), (6, 4)),
    ("bracketing-confluence", _bracketing, ("w", "n"), (6, 4)),
    ("quasi-action-is-kashiwara-action", _quasi_implies_kashiwara, ("w", "n"), (6, 4)),
    ("operators-mutually-inverse", _operators_inverse, ("w", "n"), (6, 4)),
    ("operator-evaluation-shift", _evaluation_shift, ("w", "n"), (6, 4)),
    ("quasi-actions-keep-minimal-parsing", _parsing_preservation, ("w", "n"), (5, 4)),
    ("schutzenberger-conjugation", _schutzenberger_conjugation, ("w", "n"), (5, 4)),
    ("diagonal-operators-inverse", _diagonal_inverse, ("w", "n"), (4, 4)),
    ("quasi-array-monotone", _array_monotone, ("w", "n"), (4, 4)),
    ("diagonal-vs-quasi-kashiwara", _diagonal_quasi_kashiwara, ("w", "n"), (4, 4)),
    ("transport-shortcut", _transport_shortcut, ("w", "n"), (5, 5)),
    ("hypo-inside-plac", _component_nesting, ("w", "n"), (5, 3)),
    ("quasi-array-isomorphism", _phi_isomorphism, ("w", "n"), (5, 4)),
    ("shape-transport-isomorphism", _psi_isomorphism, ("w", "n"), (5, 4)),
    ("vertical-symmetry", _vertical_symmetry, ("w", "n"), (5, 4)),
    ("full-height-isolated", _isolated_vertices, ("w", "n"), (5, 3)),
    ("row-component-size", _row_component_size, ("w", "n"), (6, 6)),
    ("gessel-identity", _gessel, ("w", "n"), (7, 5)),
    ("fundamental-character", _character, ("w", "n"), (6, 5)),
    ("fundamental-routes-agree", _fundamental_routes, ("w", "n"), (7, 5)),
    ("schur-reorder", _schur_reorder, ("w",), (8,)),
    ("slide-seed-inside-crystal", _slide_inside_crystal, ("w",), (6,)),
    ("slide-keeps-evaluation", _slide_evaluation, ("w", "n"), (5, 5)),
    ("slide-intertwines", _slide_intertwining, ("w", "n"), (5, 5)),
    ("skeleton-contraction", _skeleton_contraction, ("w",), (7,)),
    ("skeleton-rank-independent", _skeleton_rank_independence, ("w",), (6,)),
    ("skeleton-even-cycles", _even_cycles, ("w",), (7,)),
)


def run_verify(max_weight: int, max_rank: int) -> VerificationReport:
    if not 1 <= max_weight <= MAX_WEIGHT:
        raise ParameterError(f"max weight must lie in 1..{MAX_WEIGHT}, got {max_weight}")
    if not 1 <= max_rank <= MAX_RANK:
        raise ParameterError(f"max rank must lie in 1..{MAX_RANK}, got {max_rank}")
    report = VerificationReport()
    bound = {"w": max_weight, "n": max_rank}
    names = {"w": "weight", "n": "rank"}
    for name, check, kinds, caps in CHECKS:
        args = [min(bound[k], cap) for k, cap in zip(kinds, caps)]
        params = {names[k]: a for k, a in zip(kinds, args)}
        start = time.perf_counter()
        try:
            counterexample = next(iter(check(*args)), None)
        except QuasiCrystalError as exc:
            counterexample = f"{type(exc).__name__}: {exc}"
        elapsed = time.perf_counter() - start
        report.checks.append(CheckResult(name, params, counterexample is None, counterexample, elapsed))
    return report
