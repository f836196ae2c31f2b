"""Acceptance criteria, one test each, every test timed against its limit.

A summary line per criterion is printed at the end of the run by conftest.py.
"""

import time
from contextlib import contextmanager
from math import comb

import networkx as nx

from quasicrystal.crystal import quasi_f_on_tableau, quasi_kashiwara_e, quasi_kashiwara_f
from quasicrystal.graphs import (
    build_component,
    build_shape_component,
    isomorphic,
    lattice_shift,
    polytope_coordinates,
    to_json,
)
from quasicrystal.insertion import hypoplactic_equivalent, hypoplactic_insert, plactic_equivalent, schensted_insert
from quasicrystal.qsym import (
    ExactPolynomial,
    expansion_poly,
    fundamental_poly,
    schur_poly,
    schur_to_fundamental,
    verify_schur_reorder,
    xi_intertwines,
    xi_map,
)
from quasicrystal.quasi_arrays import QuasiArray, direct_transport, genqa, pickqrt, tc, td
from quasicrystal.skeleton import (
    check_even_cycles,
    classify_component,
    components,
    h_subgraph,
    is_union_of_chains,
    minimal_rank,
    parity,
    skeleton,
)
from quasicrystal.tableaux import (
    QuasiRibbonTableau,
    StandardYoungTableau,
    YoungTableau,
    column_reading,
    descent_composition,
    enumerate_quasi_ribbons,
    highest_weight_quasi_ribbon,
    minimal_parsing,
)
from quasicrystal.verify import hypo_components, phi_violations, psi_target_rank, psi_violations, symmetry_violations
from quasicrystal.words import compositions_of, evaluation, pad, partitions_of, sort_to_partition, words_up_to


@contextmanager
def within(seconds):
    start = time.perf_counter()
    yield
    elapsed = time.perf_counter() - start
    assert elapsed < seconds, f"took {elapsed:.2f}s, limit {seconds}s"


def test_criterion_01_figure_reproduction(golden):
    with within(1):
        hypo_211 = build_component((2, 1, 1), "hypo", 3)
        hypo_212 = build_component((2, 1, 2), "hypo", 3)
        plac_211 = build_component((2, 1, 1), "plac", 3)
        assert to_json(hypo_211) == (
            '{"kind":"hypo","rank":3,"vertices":["211","311","312","322"],'
            '"edges":[{"src":0,"dst":1,"label":2},{"src":1,"dst":2,"label":1},{"src":2,"dst":3,"label":1}]}'
        )
        assert to_json(hypo_212) == (
            '{"kind":"hypo","rank":3,"vertices":["212","213","313","323"],'
            '"edges":[{"src":0,"dst":1,"label":2},{"src":1,"dst":2,"label":2},{"src":2,"dst":3,"label":1}]}'
        )
        assert to_json(plac_211) == (golden / "plac_3_211.json").read_text().strip()
        union = {(u, v, k) for g in (hypo_211, hypo_212) for u, v, k in _word_edges(g)}
        extra = {((2, 1, 1), (2, 1, 2), 1), ((3, 2, 2), (3, 2, 3), 2)}
        assert _word_edges(plac_211) == union | extra


def _word_edges(g):
    return {(g.vertices[s], g.vertices[d], k) for s, d, k in g.edges}


def test_criterion_02_worked_examples():
    with within(1):
        # plactic and hypoplactic congruence examples
        assert schensted_insert((2, 1, 1, 3)).rows == schensted_insert((1, 2, 1, 3)).rows == ((1, 1, 3), (2,))
        assert hypoplactic_insert((2, 1, 3, 1)).rows == hypoplactic_insert((1, 2, 1, 3)).rows == ((1, 1), (2, 3))
        assert hypoplactic_insert((1, 2, 1, 3)).offsets == (0, 1)
        assert schensted_insert((2, 1, 3, 1)).rows == ((1, 1), (2, 3))
        assert not plactic_equivalent((2, 1, 3, 1), (1, 2, 1, 3))
        # quasi-Kashiwara operators on 12211
        u = (1, 2, 2, 1, 1)
        assert quasi_kashiwara_f(u, 2) == (1, 2, 3, 1, 1)
        assert quasi_kashiwara_e(u, 1) is None
        assert quasi_kashiwara_f(u, 1) is None
        assert quasi_kashiwara_e(u, 2) is None
        # quasi-array example
        q = QuasiArray([2, 3, 3, 5, 8])
        assert q.rows() == [[2, 3, 3, 5, 8], [4, 4, 6, 9], [5, 7, 10], [8, 11], [12]]
        assert pickqrt(q, (4, 1)) == QuasiRibbonTableau([[2, 3, 3, 5], [9]])
        assert pickqrt(q, (1, 2, 2)) == QuasiRibbonTableau([[2], [4, 4], [7, 10]])
        assert genqa(QuasiRibbonTableau([[2, 3, 3, 5], [9]])) == q
        assert tc(q, 2) == QuasiArray([2, 2, 3, 5, 8])
        assert td(q, 3) == QuasiArray([2, 3, 4, 5, 8])
        assert td(q, 2) is None
        # transport between shapes
        moved = direct_transport(QuasiRibbonTableau([[2], [4, 4, 6, 9]]), (2, 1, 1, 1))
        assert moved.rows == ((2, 3), (4,), (7,), (11,))
        # minimal parsing and descent set
        yt = YoungTableau([[1, 1, 3, 3, 6], [2, 3, 4], [4, 4], [5, 6]])
        assert minimal_parsing(yt).type == (2, 4, 3, 3)
        syt = StandardYoungTableau([[1, 2, 5, 6, 12], [3, 4, 9], [7, 8], [10, 11]])
        assert syt.descent_set() == [2, 6, 9]
        assert descent_composition(syt) == (2, 4, 3, 3)
        # slide example
        slid = xi_map(highest_weight_quasi_ribbon((2, 3, 1, 4, 1)))
        assert slid.rows == ((1, 1, 2, 4), (2, 2, 4), (3, 4), (4,), (5,))


def test_criterion_03_isomorphism_suite():
    with within(30):
        violations = []
        for m in range(1, 6):
            comps = compositions_of(m)
            for sigma in comps:
                for n in range(1, 5):
                    violations.extend(phi_violations(sigma, n))
            for sigma in comps:
                for tau in comps:
                    for d in range(1, 5):
                        n = d + len(sigma) - 1
                        assert psi_target_rank(sigma, tau, n) == d + len(tau) - 1
                        violations.extend(psi_violations(sigma, tau, n))
                    if len(sigma) == len(tau):
                        for n in range(len(sigma), len(sigma) + 4):
                            assert psi_target_rank(sigma, tau, n) == n
                            violations.extend(psi_violations(sigma, tau, n))
        assert violations == []


def test_criterion_04_congruence_iff_isomorphism():
    with within(60):
        ws = list(words_up_to(3, 5))
        for kind, congruent in (("hypo", hypoplactic_equivalent), ("plac", plactic_equivalent)):
            comp = {}
            for w in ws:
                if w not in comp:
                    g = build_component(w, kind, 3)
                    comp.update(dict.fromkeys(g.vertices, g))
            for u in ws:
                gu = comp[u]
                for v in ws:
                    witness = isomorphic(gu, comp[v], "labelled_weighted", root1=u, root2=v)
                    assert (witness is not None) == congruent(u, v), (kind, u, v)


def test_criterion_05_gessel_and_character():
    with within(60):
        for m in range(1, 8):
            for lam in partitions_of(m):
                expansion = schur_to_fundamental(lam)
                for n in range(1, 6):
                    assert schur_poly(lam, n) == expansion_poly(expansion, n), (lam, n)
        for m in range(1, 7):
            for sigma in compositions_of(m):
                for n in range(1, 6):
                    g = build_shape_component(sigma, "hypo", n)
                    character = ExactPolynomial.from_monomials(n, (pad(evaluation(w), n) for w in g.vertices))
                    assert character == fundamental_poly(sigma, n), (sigma, n)


def test_criterion_06_schur_reorder():
    with within(60):
        for m in range(1, 9):
            for alpha in compositions_of(m):
                s = verify_schur_reorder(alpha)
                assert tuple(s.shape) == sort_to_partition(alpha)
                assert descent_composition(s) == alpha
        for m in range(1, 7):
            for alpha in compositions_of(m):
                seed = column_reading(xi_map(highest_weight_quasi_ribbon(alpha)))
                hypo = build_component(seed, "hypo", m)
                plac = build_component(seed, "plac", m)
                assert set(hypo.vertices) <= set(plac.vertices), alpha


def test_criterion_07_slide_intertwining():
    with within(30):
        checked = 0
        for m in range(1, 6):
            for alpha in compositions_of(m):
                for q in enumerate_quasi_ribbons(alpha, 5):
                    for i in range(1, 5):
                        if quasi_f_on_tableau(q, i) is not None:
                            assert xi_intertwines(q, i), (q, i)
                            checked += 1
        assert checked > 0


def test_criterion_08_skeleton_counterexample():
    with within(120):
        n0 = minimal_rank((3, 2, 2))
        sk = skeleton((3, 2, 2), n0)
        assert len(sk.vertices) == 21
        h3, h4, h5 = (h_subgraph(sk, s) for s in (3, 4, 5))
        assert len(h3.vertices) == 3 and [classify_component(h3, p) for p in components(h3)] == ["chain"]
        h5_kinds = sorted((len(p), classify_component(h5, p)) for p in components(h5))
        assert h5_kinds == [(1, "singleton"), (5, "chain")]
        assert len(h4.vertices) == 12
        assert check_even_cycles(sk, 4)
        assert not is_union_of_chains(h4)
        assert skeleton((3, 2, 2), n0 + 1).same_as(sk)


def test_criterion_09_even_cycles():
    with within(120):
        for m in range(1, 7):
            for lam in partitions_of(m):
                sk = skeleton(lam)
                for s in {len(descent_composition(t)) for t in sk.vertices}:
                    h = h_subgraph(sk, s)
                    und = nx.Graph()
                    und.add_nodes_from(range(len(h.vertices)))
                    und.add_edges_from((a, b) for a, b, _ in h.edges)
                    assert nx.is_bipartite(und), (lam, s)
                    par = [parity(t) for t in h.vertices]
                    assert all(par[a] != par[b] for a, b in und.edges), (lam, s)


def test_criterion_10_geometry():
    with within(10):
        for n in range(1, 7):
            for m in range(1, 7):
                assert len(build_shape_component((m,), "hypo", n)) == comb(n + m - 1, m)
        shift = lattice_shift((2, 1))
        assert shift == (0, 0, 1)
        row = build_shape_component((3,), "hypo", 4)
        moved = {tuple(a + b for a, b in zip(p, shift)) for p in polytope_coordinates(row)}
        # at rank 4 the shifted points keep entries up to 4; one more letter holds them all
        assert set(polytope_coordinates(build_shape_component((2, 1), "hypo", 4))) == {p for p in moved if max(p) <= 4}
        assert set(polytope_coordinates(build_shape_component((2, 1), "hypo", 5))) == moved
        for w in row.vertices:
            t = hypoplactic_insert(w)
            offsets = tuple(b - a for a, b in zip(t.entries(), direct_transport(t, (2, 1)).entries()))
            assert offsets == shift


def test_criterion_11_vertical_symmetry():
    with within(60):
        count = 0
        for g in hypo_components(4, 5):
            assert list(symmetry_violations(g)) == [], g.vertices[0]
            count += 1
        assert count > 0
