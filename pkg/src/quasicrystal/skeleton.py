"""Skeletons of crystal components and the subgraphs H_s."""

from __future__ import annotations

from collections import deque
import json
from dataclasses import dataclass

from . import crystal
from .errors import ParameterError, StructureError
from .graphs import build_shape_component
from .insertion import schensted_insert
from .tableaux import StandardYoungTableau, descent_composition, enumerate_syt, standardize
from .words import Partition, format_composition, format_word


@dataclass(frozen=True, eq=False)
class SkeletonGraph:
    shape: Partition
    rank_used: int
    vertices: tuple[StandardYoungTableau, ...]
    edges: tuple[tuple[int, int, int], ...]

    def edge_set(self) -> set[tuple]:
        return {(self.vertices[s], self.vertices[d], lab) for s, d, lab in self.edges}

    def same_as(self, other: SkeletonGraph) -> bool:
        """Equal as labelled digraphs on standard tableaux (rank ignored)."""
        return set(self.vertices) == set(other.vertices) and self.edge_set() == other.edge_set()

    def undirected(self) -> dict[int, set[int]]:
        adj: dict[int, set[int]] = {k: set() for k in range(len(self.vertices))}
        for s, d, _ in self.edges:
            if s != d:
                adj[s].add(d)
                adj[d].add(s)
        return adj


def minimal_rank(shape) -> int:
    return max(len(descent_composition(s)) for s in enumerate_syt(shape))


def skeleton(shape, n: int | None = None) -> SkeletonGraph:
    """Contract each quasi-crystal component of the crystal component of
    ``shape`` to its standard tableau, keeping the least label per ordered pair."""
    shape = Partition(shape)
    syts = enumerate_syt(shape)
    need = max(len(descent_composition(s)) for s in syts)
    if n is None:
        n = max(sum(shape), need)
    if n < need:
        raise ParameterError(f"rank {n} is too small for shape {tuple(shape)}; need at least {need}")

    g = build_shape_component(shape, "plac", n)
    comp = _quasi_components(g.vertices, n)

    # every vertex of a quasi-crystal component must give the same standard tableau
    label_of: dict[int, StandardYoungTableau] = {}
    for k, w in enumerate(g.vertices):
        s = standardize(schensted_insert(w))
        c = comp[k]
        if c in label_of and label_of[c] != s:
            raise StructureError(f"quasi-crystal component {c} has two standardizations")
        label_of.setdefault(c, s)
    if len(set(label_of.values())) != len(label_of):
        raise StructureError("two quasi-crystal components share a standard tableau")
    if set(label_of.values()) != set(syts):
        raise StructureError("contracted vertices are not the standard tableaux of the shape")

    index = {s: k for k, s in enumerate(syts)}
    best: dict[tuple[int, int], int] = {}
    for src, dst, lab in g.edges:
        a, b = index[label_of[comp[src]]], index[label_of[comp[dst]]]
        if a != b and lab < best.get((a, b), lab + 1):
            best[a, b] = lab
    edges = tuple(sorted((a, b, lab) for (a, b), lab in best.items()))
    return SkeletonGraph(shape, n, tuple(syts), edges)


def _quasi_components(vertices, n: int) -> list[int]:
    """Component id of each vertex under the quasi-Kashiwara operators."""
    index = {w: k for k, w in enumerate(vertices)}
    comp = [-1] * len(vertices)
    c = 0
    for start in range(len(vertices)):
        if comp[start] >= 0:
            continue
        comp[start] = c
        queue = deque([vertices[start]])
        while queue:
            w = queue.popleft()
            for i in range(1, n):
                for op in (crystal.quasi_kashiwara_f, crystal.quasi_kashiwara_e):
                    u = op(w, i)
                    if u is None:
                        continue
                    k = index.get(u)
                    if k is None:
                        raise StructureError(f"quasi-crystal edge leaves the crystal component at {u}")
                    if comp[k] < 0:
                        comp[k] = c
                        queue.append(u)
        c += 1
    return comp


def h_subgraph(skel: SkeletonGraph, s: int) -> SkeletonGraph:
    """Induced subgraph on tableaux whose descent compositions have ``s`` parts."""
    keep = [k for k, t in enumerate(skel.vertices) if len(descent_composition(t)) == s]
    new = {old: k for k, old in enumerate(keep)}
    edges = tuple(
        sorted((new[a], new[b], lab) for a, b, lab in skel.edges if a in new and b in new)
    )
    return SkeletonGraph(skel.shape, skel.rank_used, tuple(skel.vertices[k] for k in keep), edges)


def parity(t: StandardYoungTableau) -> int:
    """Parity of the sum of the even-indexed parts of the descent composition."""
    return composition_parity(descent_composition(t))


def composition_parity(alpha) -> int:
    return sum(alpha[1::2]) % 2


def check_even_cycles(skel: SkeletonGraph, s: int) -> bool:
    """True iff every undirected edge of H_s joins tableaux of opposite parity."""
    h = h_subgraph(skel, s)
    par = [parity(t) for t in h.vertices]
    return all(par[a] != par[b] for a, b, _ in h.edges)


def components(skel: SkeletonGraph) -> list[list[int]]:
    adj = skel.undirected()
    seen: set[int] = set()
    out = []
    for v in range(len(skel.vertices)):
        if v in seen:
            continue
        part, queue = [], deque([v])
        seen.add(v)
        while queue:
            x = queue.popleft()
            part.append(x)
            for y in sorted(adj[x]):
                if y not in seen:
                    seen.add(y)
                    queue.append(y)
        out.append(sorted(part))
    return out


def classify_component(skel: SkeletonGraph, part: list[int]) -> str:
    """``singleton``, ``chain``, ``cycle-bearing`` or ``tree`` for an undirected component."""
    adj = skel.undirected()
    if len(part) == 1:
        return "singleton"
    n_edges = sum(len(adj[v]) for v in part) // 2
    if n_edges >= len(part):
        return "cycle-bearing"
    degrees = [len(adj[v]) for v in part]
    if max(degrees) <= 2 and degrees.count(1) == 2:
        return "chain"
    return "tree"


def is_union_of_chains(skel: SkeletonGraph) -> bool:
    return all(classify_component(skel, p) in ("singleton", "chain") for p in components(skel))


def report(skel: SkeletonGraph) -> list[dict]:
    """Per ``s``: vertex count, component kinds and the parity verdict."""
    lengths = sorted({len(descent_composition(t)) for t in skel.vertices})
    out = []
    for s in lengths:
        h = h_subgraph(skel, s)
        out.append(
            {
                "s": s,
                "vertices": len(h.vertices),
                "edges": len({frozenset((a, b)) for a, b, _ in h.edges}),
                "components": [classify_component(h, p) for p in components(h)],
                "bipartite_by_parity": check_even_cycles(skel, s),
            }
        )
    return out


def vertex_name(t: StandardYoungTableau) -> str:
    return f"{format_word(t.row_reading())} {format_composition(descent_composition(t))}"


def to_json(skel: SkeletonGraph) -> str:
    data = {
        "kind": "skeleton",
        "shape": list(skel.shape),
        "rank": skel.rank_used,
        "vertices": [
            dict(t.to_json(), descent_composition=list(descent_composition(t))) for t in skel.vertices
        ],
        "edges": [{"src": s, "dst": d, "label": lab} for s, d, lab in skel.edges],
    }
    return json.dumps(data, separators=(",", ":"))


def to_dot(skel: SkeletonGraph, name: str = "Skel") -> str:
    lines = [f"digraph {name} {{"]
    for k, t in enumerate(skel.vertices):
        lines.append(f'  v{k} [label="{vertex_name(t)}"];')
    for s, d, lab in skel.edges:
        lines.append(f'  v{s} -> v{d} [label="{lab}"];')
    lines.append("}")
    return "\n".join(lines) + "\n"


def format_report(skel: SkeletonGraph) -> str:
    lines = [f"shape {format_composition(skel.shape)} rank {skel.rank_used}: {len(skel.vertices)} vertices, {len(skel.edges)} edges"]
    for row in report(skel):
        kinds = ", ".join(row["components"])
        verdict = "bipartite by parity" if row["bipartite_by_parity"] else "NOT bipartite by parity"
        lines.append(f"H_{row['s']}: {row['vertices']} vertices, {row['edges']} edges; components: {kinds}; {verdict}")
    return "\n".join(lines)
