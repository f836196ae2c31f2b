"""Crystal, quasi-crystal and quasi-array graphs: construction, extremal
vertices, isomorphism checks, lattice coordinates and exports."""

from __future__ import annotations

import json
from collections import deque
from dataclasses import dataclass, field
from functools import cached_property
from typing import Any, Callable, Hashable, Iterable, Mapping, Sequence

from . import crystal
from . import quasi_arrays as qa
from .errors import StructureError
from .insertion import hypoplactic_insert
from .quasi_arrays import QuasiArray
from .tableaux import column_reading, highest_weight_quasi_ribbon, highest_weight_young
from .words import Composition, check_rank, evaluation, format_word, parse_word

KINDS = ("plac", "hypo", "quasi_array")


@dataclass(frozen=True, eq=False)
class LabeledDigraph:
    kind: str
    rank: int
    vertices: tuple[Hashable, ...]
    edges: tuple[tuple[int, int, int], ...]

    @cached_property
    def _index(self) -> dict[Hashable, int]:
        return {v: k for k, v in enumerate(self.vertices)}

    def index(self, v: Hashable) -> int:
        return self._index[v]

    def __contains__(self, v: Hashable) -> bool:
        return v in self._index

    def __len__(self) -> int:
        return len(self.vertices)

    @cached_property
    def out_by_label(self) -> list[dict[int, int]]:
        out: list[dict[int, int]] = [{} for _ in self.vertices]
        for s, d, lab in self.edges:
            out[s][lab] = d
        return out

    @cached_property
    def in_by_label(self) -> list[dict[int, int]]:
        inn: list[dict[int, int]] = [{} for _ in self.vertices]
        for s, d, lab in self.edges:
            inn[d][lab] = s
        return inn

    def out_degree(self, k: int) -> int:
        return len(self.out_by_label[k])

    def in_degree(self, k: int) -> int:
        return len(self.in_by_label[k])

    def edge_set(self, labelled: bool = True) -> set[tuple]:
        if labelled:
            return {(self.vertices[s], self.vertices[d], lab) for s, d, lab in self.edges}
        return {(self.vertices[s], self.vertices[d]) for s, d, _ in self.edges}

    def weight(self, k: int) -> tuple[int, ...]:
        v = self.vertices[k]
        return v.evaluation() if isinstance(v, QuasiArray) else evaluation(v)

    def __eq__(self, other: object) -> bool:
        return (
            isinstance(other, LabeledDigraph)
            and (self.kind, self.rank, self.vertices, self.edges)
            == (other.kind, other.rank, other.vertices, other.edges)
        )

    __hash__ = None  # type: ignore[assignment]


def _closure(
    seeds: Iterable[Hashable],
    forward: Callable[[Hashable, int], Hashable | None],
    backward: Callable[[Hashable, int], Hashable | None],
    labels: Sequence[int],
    admit: Callable[[Hashable], bool],
) -> tuple[list[Hashable], list[tuple[int, int, int]]]:
    """Breadth-first closure; neighbours are visited forward then backward,
    each with ascending labels, so the vertex order is deterministic."""
    order: list[Hashable] = []
    index: dict[Hashable, int] = {}
    queue: deque[Hashable] = deque()
    for s in seeds:
        if s not in index and admit(s):
            index[s] = len(order)
            order.append(s)
            queue.append(s)
    edges: set[tuple[int, int, int]] = set()
    while queue:
        v = queue.popleft()
        for step, outgoing in ((forward, True), (backward, False)):
            for i in labels:
                u = step(v, i)
                if u is None or not admit(u):
                    continue
                if u not in index:
                    index[u] = len(order)
                    order.append(u)
                    queue.append(u)
                edge = (index[v], index[u], i) if outgoing else (index[u], index[v], i)
                edges.add(edge)
    return order, sorted(edges)


def build_component(seed: Sequence[int], kind: str, n: int) -> LabeledDigraph:
    """The connected component of ``seed`` in the rank-``n`` crystal (``plac``)
    or quasi-crystal (``hypo``) graph."""
    seed = tuple(seed)
    check_rank(seed, n)
    f = crystal.operator(kind, "f")
    e = crystal.operator(kind, "e")
    in_rank = lambda w: all(a <= n for a in w)  # noqa: E731
    order, edges = _closure([seed], f, e, range(1, n), in_rank)
    return LabeledDigraph(kind, n, tuple(order), tuple(edges))


def build_shape_component(shape: Sequence[int], kind: str, n: int) -> LabeledDigraph:
    """Component of the column readings of tableaux of ``shape`` with entries at most ``n``.

    For ``hypo`` the shape is a composition, for ``plac`` a partition.  The
    graph is empty when the shape needs more than ``n`` letters.
    """
    shape = Composition(shape)
    if len(shape) > n:
        return LabeledDigraph(kind, n, (), ())
    if kind == "hypo":
        seed = column_reading(highest_weight_quasi_ribbon(shape))
    elif kind == "plac":
        seed = column_reading(highest_weight_young(shape))
    else:
        raise ValueError(f"unknown kind {kind!r}")
    return build_component(seed, kind, n)


def build_delta(n: int, m: int) -> LabeledDigraph:
    """Quasi-arrays of size ``m`` with first row bounded by ``n``, edges ``Q -> td_k(Q)``."""
    if n < 1 or m < 1:
        raise ValueError("rank and size must be positive")
    top = QuasiArray([1] * m)
    in_rank = lambda q: q.in_rank(n)  # noqa: E731
    order, edges = _closure([top], qa.td, qa.tc, range(1, m + 1), in_rank)
    return LabeledDigraph("quasi_array", n, tuple(order), tuple(edges))


def _extremal(g: LabeledDigraph, degree: Callable[[int], int], what: str) -> Hashable:
    found = [g.vertices[k] for k in range(len(g)) if degree(k) == 0]
    if len(found) != 1:
        raise StructureError(f"expected a unique {what} vertex, found {len(found)}")
    return found[0]


def highest_weight(g: LabeledDigraph) -> Hashable:
    return _extremal(g, g.in_degree, "highest weight")


def lowest_weight(g: LabeledDigraph) -> Hashable:
    return _extremal(g, g.out_degree, "lowest weight")


def max_outdegree(g: LabeledDigraph) -> int:
    return max((g.out_degree(k) for k in range(len(g))), default=0)


@dataclass(frozen=True)
class IsoWitness:
    vertex_map: Mapping[Hashable, Hashable] = field(repr=False)
    labelled: bool
    weighted: bool

    def __call__(self, v: Hashable) -> Hashable:
        return self.vertex_map[v]


MODES = ("labelled_weighted", "labelled", "unlabelled")


def isomorphic(
    g1: LabeledDigraph,
    g2: LabeledDigraph,
    mode: str = "labelled_weighted",
    root1: Hashable | None = None,
    root2: Hashable | None = None,
    candidate: Callable[[Hashable], Hashable] | Mapping[Hashable, Hashable] | None = None,
) -> IsoWitness | None:
    """Return a witness isomorphism from ``g1`` to ``g2`` or ``None``.

    Labelled modes walk both graphs in lockstep from the roots (highest weight
    vertices by default); each vertex has at most one edge per label and
    direction, so the map is forced.  Unlabelled mode only verifies a supplied
    or constructed candidate map; ``None`` there means no candidate worked.
    """
    if mode not in MODES:
        raise ValueError(f"unknown mode {mode!r}")
    if len(g1) != len(g2) or len(g1.edges) != len(g2.edges):
        return None
    if not g1.vertices:
        return IsoWitness({}, mode != "unlabelled", mode == "labelled_weighted")
    if mode == "unlabelled":
        return _unlabelled(g1, g2, candidate)

    r1 = highest_weight(g1) if root1 is None else root1
    r2 = highest_weight(g2) if root2 is None else root2
    if r1 not in g1 or r2 not in g2:
        return None
    weighted = mode == "labelled_weighted"
    fwd: dict[int, int] = {g1.index(r1): g2.index(r2)}
    back: dict[int, int] = {g2.index(r2): g1.index(r1)}
    queue = deque([g1.index(r1)])
    while queue:
        a = queue.popleft()
        b = fwd[a]
        if weighted and g1.weight(a) != g2.weight(b):
            return None
        for adj1, adj2 in ((g1.out_by_label, g2.out_by_label), (g1.in_by_label, g2.in_by_label)):
            if adj1[a].keys() != adj2[b].keys():
                return None
            for lab, a2 in adj1[a].items():
                b2 = adj2[b][lab]
                if a2 in fwd:
                    if fwd[a2] != b2:
                        return None
                    continue
                if b2 in back:
                    return None
                fwd[a2], back[b2] = b2, a2
                queue.append(a2)
    if len(fwd) != len(g1):
        return None
    vmap = {g1.vertices[a]: g2.vertices[b] for a, b in fwd.items()}
    return IsoWitness(vmap, True, weighted)


def check_unlabelled_map(
    g1: LabeledDigraph, g2: LabeledDigraph, mapping: Callable[[Hashable], Hashable] | Mapping
) -> dict | None:
    """Return the map as a dict if it is a directed graph isomorphism ignoring labels."""
    f = mapping.__getitem__ if isinstance(mapping, Mapping) else mapping
    try:
        vmap = {v: f(v) for v in g1.vertices}
    except (KeyError, ValueError):
        return None
    images = set(vmap.values())
    if len(images) != len(g1) or not all(w in g2 for w in images):
        return None
    if len(g1) != len(g2):
        return None
    target = g2.edge_set(labelled=False)
    mapped = {(vmap[s], vmap[d]) for s, d in g1.edge_set(labelled=False)}
    if mapped != target:
        return None
    return vmap


def _unlabelled(g1, g2, candidate) -> IsoWitness | None:
    if candidate is None:
        if max_outdegree(g1) != max_outdegree(g2):
            return None
        if sorted(map(g1.out_degree, range(len(g1)))) != sorted(map(g2.out_degree, range(len(g2)))):
            return None
        if g1.kind == "hypo" and g2.kind == "hypo":
            candidate = psi_map(g1, g2)
        if candidate is None:
            return None
    vmap = check_unlabelled_map(g1, g2, candidate)
    return None if vmap is None else IsoWitness(vmap, False, False)


def component_shape(g: LabeledDigraph) -> Composition:
    """Shape of the quasi-ribbon tableaux of a hypo component."""
    return hypoplactic_insert(g.vertices[0]).shape


def psi_map(g1: LabeledDigraph, g2: LabeledDigraph) -> dict | None:
    """Shape transport between two hypo components, as a vertex map.

    Each word goes to the vertex of ``g2`` whose quasi-ribbon is the transport
    of the word's quasi-ribbon to the shape of ``g2``.
    """
    if not g1.vertices or not g2.vertices:
        return None
    tau = component_shape(g2)
    if component_shape(g1).weight != tau.weight:
        return None
    by_tableau = {hypoplactic_insert(w): w for w in g2.vertices}
    out = {}
    for w in g1.vertices:
        image = qa.direct_transport(hypoplactic_insert(w), tau)
        if image not in by_tableau:
            return None
        out[w] = by_tableau[image]
    return out


def polytope_coordinates(g: LabeledDigraph) -> list[tuple[int, ...]]:
    """Entries of each vertex's quasi-ribbon, read row by row, in vertex order."""
    if g.kind != "hypo":
        raise ValueError("coordinates are defined for hypo components")
    return [hypoplactic_insert(w).entries() for w in g.vertices]


def lattice_shift(sigma: Sequence[int]) -> tuple[int, ...]:
    """Translation taking the row-shape lattice to the lattice of shape ``sigma``."""
    sigma = Composition(sigma)
    return qa.transport_offsets((sigma.weight,), sigma)


# -- exports -----------------------------------------------------------------


def payload(v: Hashable) -> Any:
    if isinstance(v, QuasiArray):
        return v.to_json()
    if hasattr(v, "to_json"):
        return v.to_json()
    return format_word(v)


def vertex_label(v: Hashable) -> str:
    if hasattr(v, "render"):
        return v.render()
    return format_word(v)


def to_json(g: LabeledDigraph) -> str:
    data = {
        "kind": g.kind,
        "rank": g.rank,
        "vertices": [payload(v) for v in g.vertices],
        "edges": [{"src": s, "dst": d, "label": lab} for s, d, lab in g.edges],
    }
    return json.dumps(data, separators=(",", ":"))


def from_json(text: str) -> LabeledDigraph:
    data = json.loads(text)
    verts = []
    for p in data["vertices"]:
        if isinstance(p, dict):
            verts.append(QuasiArray(p["first_row"]))
        else:
            verts.append(parse_word(p))
    edges = tuple(sorted((e["src"], e["dst"], e["label"]) for e in data["edges"]))
    return LabeledDigraph(data["kind"], data["rank"], tuple(verts), edges)


def _dot_escape(text: str) -> str:
    return text.replace("\\", "\\\\").replace('"', '\\"').replace("\n", "\\n")


def to_dot(g: LabeledDigraph, name: str = "G") -> str:
    lines = [f"digraph {name} {{"]
    for k, v in enumerate(g.vertices):
        lines.append(f'  v{k} [label="{_dot_escape(vertex_label(v))}"];')
    for s, d, lab in g.edges:
        lines.append(f'  v{s} -> v{d} [label="{lab}"];')
    lines.append("}")
    return "\n".join(lines) + "\n"
