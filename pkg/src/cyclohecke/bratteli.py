"""The m-th power of the Young graph as a Bratteli diagram."""

from __future__ import annotations

import json
from dataclasses import dataclass, field
from math import comb, factorial

from .combinatorics import MPartition, dim_mpartition, hook_dimension, mpartitions, partitions
from .scalar import RatFn, render


@dataclass
class BratteliGraph:
    """Levels of vertices and labeled edges between consecutive levels.

    ``edges[k]`` lists (upper, lower, label) with upper on level k and lower on
    level k+1.
    """

    levels: list
    edges: list
    dims: list = field(default_factory=list)

    @property
    def depth(self) -> int:
        return len(self.levels) - 1

    def vertex_dimension(self, vertex) -> int:
        for lvl, d in zip(self.levels, self.dims):
            if vertex in d:
                return d[vertex]
        raise KeyError(vertex)

    def level_square_sum(self, k: int) -> int:
        return sum(x * x for x in self.dims[k].values())

    def to_json(self) -> str:
        data = {
            "levels": [[_vname(v) for v in lvl] for lvl in self.levels],
            "edges": [[{"from": _vname(a), "to": _vname(b), "label": _label(lab)} for a, b, lab in es]
                      for es in self.edges],
            "dimensions": [{_vname(v): d[v] for v in lvl} for lvl, d in zip(self.levels, self.dims)],
        }
        return json.dumps(data, indent=2)


def _vname(v) -> str:
    return v.to_text() if isinstance(v, MPartition) else str(v)


def _label(lab) -> str:
    return render(lab) if isinstance(lab, RatFn) else str(lab)


def _path_counts(levels, edges) -> list:
    dims = [{v: 1 for v in levels[0]}]
    for k, es in enumerate(edges):
        d: dict = {v: 0 for v in levels[k + 1]}
        for a, b, _ in es:
            d[b] += dims[k][a]
        dims.append(d)
    return dims


def content_label(m: int, node) -> RatFn:
    """vk * q^(2(col - row)) for the added node."""
    return RatFn.v(node.pos, m) * RatFn.q(m, 2 * node.diagonal)


def young_graph_power(m: int, depth: int) -> BratteliGraph:
    """Vertices: m-partitions by size; edges add one node, labeled by its content."""
    if m < 1 or depth < 0:
        raise ValueError("need m >= 1 and depth >= 0")
    levels = [mpartitions(m, k) for k in range(depth + 1)]
    edges = []
    for k in range(depth):
        es = []
        for lam in levels[k]:
            for node in lam.addable():
                es.append((lam, lam.add(node), content_label(m, node)))
        edges.append(es)
    return BratteliGraph(levels, edges, _path_counts(levels, edges))


def young_graph(depth: int) -> BratteliGraph:
    """The Young graph with ordinary partitions (tuples) as vertices."""
    levels = [partitions(k) for k in range(depth + 1)]
    edges = []
    for k in range(depth):
        es = []
        for p in levels[k]:
            lam = MPartition((p,))
            for node in lam.addable():
                es.append((p, lam.add(node).parts[0], node.diagonal))
        edges.append(es)
    return BratteliGraph(levels, edges, _path_counts(levels, edges))


def graph_product(g1: BratteliGraph, g2: BratteliGraph, depth: int) -> BratteliGraph:
    """Product diagram: level c holds pairs (x, y) on levels (a, c - a); an edge moves one coordinate."""
    levels = []
    for c in range(depth + 1):
        lvl = []
        for a in range(c + 1):
            if a <= g1.depth and c - a <= g2.depth:
                lvl.extend((x, y) for x in g1.levels[a] for y in g2.levels[c - a])
        levels.append(lvl)
    edges = []
    for c in range(depth):
        es = []
        for a in range(c + 1):
            b = c - a
            if a < g1.depth and b <= g2.depth:
                for x, x2, lab in g1.edges[a]:
                    es.extend(((x, y), (x2, y), ("L", lab)) for y in g2.levels[b])
            if b < g2.depth and a <= g1.depth:
                for y, y2, lab in g2.edges[b]:
                    es.extend(((x, y), (x, y2), ("R", lab)) for x in g1.levels[a])
        edges.append(es)
    return BratteliGraph(levels, edges, _path_counts(levels, edges))


def check_product_dimension(m: int, n: int) -> bool:
    """Path counts agree with binomial(a+b, b) dim(x) dim(y) and with the hook formula."""
    g = young_graph_power(m, n)
    for lam in g.levels[n]:
        paths = g.dims[n][lam]
        if paths != dim_mpartition(lam):
            return False
        if m >= 2:
            x = lam.parts[0]
            y = MPartition(lam.parts[1:])
            a, b = sum(x), y.size
            if paths != comb(a + b, b) * hook_dimension(x) * dim_mpartition(y):
                return False
    return True


def square_sum_recursion(m: int, n: int) -> int:
    """D_n for the m-th power: sum over a of binomial(n, a)^2 D_a(Young) D_(n-a)(m-1 power)."""
    if m == 1:
        return factorial(n)
    return sum(comb(n, a) ** 2 * factorial(a) * square_sum_recursion(m - 1, n - a) for a in range(n + 1))


def export_dot(g: BratteliGraph) -> str:
    """Graphviz text: one node per vertex, ranked by level, edges labeled with contents."""
    ids: dict = {}
    lines = ["digraph bratteli {", "  rankdir=TB;"]
    for k, lvl in enumerate(g.levels):
        names = []
        for v in lvl:
            ids[v] = f"n{len(ids)}"
            lines.append(f'  {ids[v]} [label="{_vname(v)}"];')
            names.append(ids[v])
        lines.append("  { rank=same; " + " ".join(names) + "; }")
    for es in g.edges:
        for a, b, lab in es:
            lines.append(f'  {ids[a]} -> {ids[b]} [label="{_label(lab)}"];')
    lines.append("}")
    return "\n".join(lines) + "\n"
