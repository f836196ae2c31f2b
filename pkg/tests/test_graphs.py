import json
from math import comb

import networkx as nx
import pytest
from conftest import word_strategy
from hypothesis import given, settings

from quasicrystal.errors import RankError
from quasicrystal.graphs import (
    LabeledDigraph,
    build_component,
    build_delta,
    build_shape_component,
    check_unlabelled_map,
    from_json,
    highest_weight,
    isomorphic,
    lattice_shift,
    lowest_weight,
    max_outdegree,
    polytope_coordinates,
    psi_map,
    to_dot,
    to_json,
)
from quasicrystal.insertion import hypoplactic_equivalent, hypoplactic_insert, plactic_equivalent
from quasicrystal.quasi_arrays import direct_transport
from quasicrystal.verify import psi_target_rank
from quasicrystal.words import evaluation, pad, words_up_to


def named_edges(g, name):
    return {(name(g.vertices[s]), name(g.vertices[d]), k) for s, d, k in g.edges}


def word_edges(g):
    return named_edges(g, lambda w: "".join(map(str, w)))


def ribbon_name(w):
    return "/".join("".join(map(str, r)) for r in hypoplactic_insert(w).rows)


def array_name(q):
    return "/".join("".join(map(str, r)) for r in q.rows())


def figure_edges(golden, name):
    out = set()
    for line in (golden / name).read_text().splitlines():
        s, d, k = line.split()
        out.add((s, d, int(k)))
    return out


def to_networkx(g):
    h = nx.DiGraph()
    h.add_nodes_from(range(len(g)))
    h.add_edges_from((s, d) for s, d, _ in g.edges)
    return h


def test_small_figure_components():
    g = build_component((2, 1, 1), "hypo", 3)
    assert g.vertices == ((2, 1, 1), (3, 1, 1), (3, 1, 2), (3, 2, 2))
    assert word_edges(g) == {("211", "311", 2), ("311", "312", 1), ("312", "322", 1)}
    h = build_component((2, 1, 2), "hypo", 3)
    assert word_edges(h) == {("212", "213", 2), ("213", "313", 2), ("313", "323", 1)}
    p = build_component((2, 1, 1), "plac", 3)
    assert set(p.vertices) == set(g.vertices) | set(h.vertices)
    assert word_edges(p) == word_edges(g) | word_edges(h) | {("211", "212", 1), ("322", "323", 2)}


def test_component_rank_checked():
    with pytest.raises(RankError):
        build_component((4, 1), "hypo", 3)


def test_delta_matches_figure(golden):
    g = build_delta(3, 4)
    assert len(g) == comb(6, 4) == 15
    assert named_edges(g, array_name) == figure_edges(golden, "delta_3_4_figure_edges.txt")


def test_delta_degenerate_ranks():
    g = build_delta(1, 5)
    assert len(g) == 1 and g.edges == ()
    path = build_delta(4, 1)
    assert [q.first_row for q in path.vertices] == [(1,), (2,), (3,), (4,)]
    assert path.edges == ((0, 1, 1), (1, 2, 1), (2, 3, 1))
    with pytest.raises(ValueError):
        build_delta(0, 2)


def test_isomorphism_figure_components(golden):
    g1 = build_shape_component((2, 1, 1), "hypo", 5)
    g2 = build_shape_component((3, 1), "hypo", 4)
    assert g1.vertices[0] == (1, 3, 2, 1)
    assert g2.vertices[0] == (1, 1, 2, 1)
    assert named_edges(g1, ribbon_name) == figure_edges(golden, "hypo_5_1321_figure_edges.txt")
    assert named_edges(g2, ribbon_name) == figure_edges(golden, "hypo_4_1121_figure_edges.txt")
    witness = isomorphic(g1, g2, "unlabelled")
    assert witness is not None and not witness.labelled
    assert witness(highest_weight(g1)) == highest_weight(g2)
    assert isomorphic(g1, g2, "labelled") is None


def test_extremal_vertices():
    g = build_component((2, 1, 1), "hypo", 3)
    assert highest_weight(g) == (2, 1, 1) and lowest_weight(g) == (3, 2, 2)
    row = build_shape_component((3,), "hypo", 4)
    assert hypoplactic_insert(highest_weight(row)).rows == ((1, 1, 1),)
    assert hypoplactic_insert(lowest_weight(row)).rows == ((4, 4, 4),)
    single = build_component((2, 1), "hypo", 2)
    assert highest_weight(single) == lowest_weight(single) == (2, 1)


def test_max_outdegree():
    for m in range(1, 6):
        assert max_outdegree(build_delta(m + 1, m)) == m
    delta = build_delta(3, 4)
    assert max_outdegree(delta) == max(d for _, d in to_networkx(delta).out_degree())
    assert max_outdegree(LabeledDigraph("hypo", 2, ((1, 2),), ())) == 0


def test_identity_witness_every_mode():
    g = build_component((2, 1, 2), "plac", 3)
    for mode in ("labelled_weighted", "labelled", "unlabelled"):
        w = isomorphic(g, g, mode, candidate=lambda v: v)
        assert w is not None and all(w(v) == v for v in g.vertices)


def test_unknown_mode():
    g = build_component((1,), "hypo", 2)
    with pytest.raises(ValueError):
        isomorphic(g, g, "loose")


def test_weight_distinguishes_labelled_modes():
    # isolated vertices with different evaluations
    g1 = build_component((2, 1), "hypo", 2)
    g2 = build_component((2, 2, 1, 1), "hypo", 2)
    assert isomorphic(g1, g2, "labelled") is not None
    assert isomorphic(g1, g2, "labelled_weighted") is None


def test_congruence_iff_labelled_weighted_witness_small():
    ws = list(words_up_to(3, 3))
    comps = {w: build_component(w, "hypo", 3) for w in ws}
    pcomps = {w: build_component(w, "plac", 3) for w in ws}
    for u in ws:
        for v in ws:
            wit = isomorphic(comps[u], comps[v], "labelled_weighted", root1=u, root2=v)
            assert (wit is not None) == hypoplactic_equivalent(u, v), (u, v)
            wit = isomorphic(pcomps[u], pcomps[v], "labelled_weighted", root1=u, root2=v)
            assert (wit is not None) == plactic_equivalent(u, v), (u, v)


def test_unlabelled_rejects_bad_maps():
    g = build_component((2, 1, 1), "hypo", 3)
    h = build_component((2, 1, 2), "hypo", 3)
    rev = dict(zip(g.vertices, reversed(h.vertices)))
    assert check_unlabelled_map(g, h, rev) is None
    assert check_unlabelled_map(g, h, {}) is None
    good = dict(zip(g.vertices, h.vertices))
    assert check_unlabelled_map(g, h, good) == good


def test_unlabelled_size_mismatch():
    g = build_shape_component((2,), "hypo", 3)
    h = build_shape_component((1, 1), "hypo", 3)
    assert isomorphic(g, h, "unlabelled") is None


def test_rank_shift_is_signed():
    # (3) at rank 4 has 20 vertices; (2,1) needs one more letter to match
    assert psi_target_rank((3,), (2, 1), 4) == 5
    assert psi_target_rank((2, 1), (3,), 5) == 4
    g1 = build_shape_component((3,), "hypo", 4)
    assert len(g1) == 20
    assert len(build_shape_component((2, 1), "hypo", 5)) == 20
    assert len(build_shape_component((2, 1), "hypo", 3)) != 20
    g2 = build_shape_component((2, 1), "hypo", 5)
    assert isomorphic(g1, g2, "unlabelled", candidate=psi_map(g1, g2)) is not None


def test_polytope_coordinates():
    pts = polytope_coordinates(build_shape_component((3,), "hypo", 4))
    brute = {(a, b, c) for a in range(1, 5) for b in range(a, 5) for c in range(b, 5)}
    assert len(pts) == 20 and set(pts) == brute
    assert sorted(polytope_coordinates(build_shape_component((1,), "hypo", 6))) == [(k,) for k in range(1, 7)]
    with pytest.raises(ValueError):
        polytope_coordinates(build_component((2, 1), "plac", 2))


def test_lattice_shift_matches_transport():
    assert lattice_shift((2, 1)) == (0, 0, 1)
    assert lattice_shift((1, 2)) == (0, 1, 1)
    g = build_shape_component((3,), "hypo", 4)
    for w in g.vertices:
        t = hypoplactic_insert(w)
        moved = direct_transport(t, (2, 1)).entries()
        assert moved == tuple(a + b for a, b in zip(t.entries(), lattice_shift((2, 1))))


def test_hypo_component_inside_plac_component():
    for w in words_up_to(3, 4):
        hypo = build_component(w, "hypo", 3)
        plac = build_component(w, "plac", 3)
        assert set(hypo.vertices) <= set(plac.vertices)
        assert word_edges(hypo) <= word_edges(plac)


def test_row_components_count():
    for n in range(1, 5):
        for m in range(1, 5):
            assert len(build_shape_component((m,), "hypo", n)) == comb(n + m - 1, m)


def test_shape_longer_than_rank_is_empty():
    g = build_shape_component((1, 1, 1), "hypo", 2)
    assert len(g) == 0
    assert json.loads(to_json(g)) == {"kind": "hypo", "rank": 2, "vertices": [], "edges": []}


def test_json_golden(golden):
    g = build_component((2, 1, 1), "plac", 3)
    assert to_json(g) == (golden / "plac_3_211.json").read_text().strip()


def test_dot_golden(golden):
    g = build_component((2, 1, 1), "hypo", 3)
    assert to_dot(g) == (golden / "gamma_hypo_3_211.dot").read_text()


def test_dot_escapes_labels():
    g = build_delta(2, 2)
    assert "\\n" in to_dot(g)


def test_json_roundtrip():
    for g in (build_component((1, 3, 2, 1), "hypo", 4), build_delta(3, 3)):
        h = from_json(to_json(g))
        assert h == g
        assert to_json(h) == to_json(g)


@settings(max_examples=40, deadline=None)
@given(word_strategy(4, 5))
def test_components_connected_and_deterministic(w):
    for kind in ("hypo", "plac"):
        g = build_component(w, kind, 4)
        h = to_networkx(g)
        assert nx.is_weakly_connected(h) and nx.is_directed_acyclic_graph(h)
        assert g.vertices[0] == w
        assert g == build_component(w, kind, 4)
        for s, d, k in g.edges:
            a, b = pad(evaluation(g.vertices[s]), 4), pad(evaluation(g.vertices[d]), 4)
            assert b[k - 1] == a[k - 1] - 1 and b[k] == a[k] + 1
