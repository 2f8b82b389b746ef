"""Dart-based multigraphs.

Every edge is a pair of darts (2e, 2e+1), twins of each other; ``twin(d) ==
d ^ 1``.  Loops are a dart pair with equal tails, so they occupy two rotation
slots at their vertex.  Edges may be directed (generator edges g -> gs) or
undirected (involution edges, stored once).
"""

from __future__ import annotations

import json
from dataclasses import dataclass, field


def twin(dart: int) -> int:
    return dart ^ 1


@dataclass
class MultiGraph:
    vertex_names: list[str] = field(default_factory=list)
    dart_tail: list[int] = field(default_factory=list)
    edge_label: list[str] = field(default_factory=list)
    edge_directed: list[bool] = field(default_factory=list)
    frontier: set[int] = field(default_factory=set)
    radius: int | str | None = None  # ball radius, "complete", or None

    _name_index: dict[str, int] = field(default_factory=dict, repr=False)

    # -- construction ------------------------------------------------------

    def add_vertex(self, name: str | None = None) -> int:
        idx = len(self.vertex_names)
        if name is None:
            name = f"v{idx}"
        if name in self._name_index:
            raise ValueError(f"duplicate vertex name {name!r}")
        self.vertex_names.append(name)
        self._name_index[name] = idx
        return idx

    def add_edge(self, u: int, v: int, label: str = "", directed: bool = True) -> int:
        eid = len(self.edge_label)
        self.dart_tail.append(u)
        self.dart_tail.append(v)
        self.edge_label.append(label)
        self.edge_directed.append(directed)
        return eid

    # -- basic queries -----------------------------------------------------

    @property
    def n_vertices(self) -> int:
        return len(self.vertex_names)

    @property
    def n_edges(self) -> int:
        return len(self.edge_label)

    @property
    def n_darts(self) -> int:
        return 2 * len(self.edge_label)

    def vertex_index(self, name: str) -> int:
        return self._name_index[name]

    def head(self, dart: int) -> int:
        return self.dart_tail[dart ^ 1]

    def edge_of(self, dart: int) -> int:
        return dart // 2

    def edge_ends(self, eid: int) -> tuple[int, int]:
        return self.dart_tail[2 * eid], self.dart_tail[2 * eid + 1]

    def darts_at(self, v: int) -> list[int]:
        return [d for d in range(self.n_darts) if self.dart_tail[d] == v]

    def incidence(self) -> list[list[int]]:
        """Darts grouped by tail vertex, in dart order."""
        out: list[list[int]] = [[] for _ in range(self.n_vertices)]
        for d in range(self.n_darts):
            out[self.dart_tail[d]].append(d)
        return out

    def degree(self, v: int) -> int:
        return sum(1 for d in range(self.n_darts) if self.dart_tail[d] == v)

    def neighbors(self, v: int) -> set[int]:
        return {self.head(d) for d in range(self.n_darts)
                if self.dart_tail[d] == v and self.head(d) != v}

    def is_connected(self) -> bool:
        if self.n_vertices == 0:
            return True
        seen = {0}
        stack = [0]
        inc = self.incidence()
        while stack:
            v = stack.pop()
            for d in inc[v]:
                w = self.head(d)
                if w not in seen:
                    seen.add(w)
                    stack.append(w)
        return len(seen) == self.n_vertices

    def components(self, vertices: set[int] | None = None) -> list[set[int]]:
        """Connected components of the subgraph induced on ``vertices``."""
        if vertices is None:
            vertices = set(range(self.n_vertices))
        inc = self.incidence()
        seen: set[int] = set()
        comps = []
        for start in sorted(vertices):
            if start in seen:
                continue
            comp = {start}
            stack = [start]
            seen.add(start)
            while stack:
                v = stack.pop()
                for d in inc[v]:
                    w = self.head(d)
                    if w in vertices and w not in seen:
                        seen.add(w)
                        comp.add(w)
                        stack.append(w)
            comps.append(comp)
        return comps

    def simple_adjacency(self) -> dict[int, set[int]]:
        """Loop-free, parallel-collapsed adjacency (for planarity etc.)."""
        adj: dict[int, set[int]] = {v: set() for v in range(self.n_vertices)}
        for e in range(self.n_edges):
            u, v = self.edge_ends(e)
            if u != v:
                adj[u].add(v)
                adj[v].add(u)
        return adj

    # -- serialization -----------------------------------------------------

    def to_json_dict(self) -> dict:
        return {
            "schema": "pcl/1",
            "vertices": [
                {"id": i, "name": n, "frontier": i in self.frontier}
                for i, n in enumerate(self.vertex_names)
            ],
            "edges": [
                {
                    "tail": self.dart_tail[2 * e],
                    "head": self.dart_tail[2 * e + 1],
                    "label": self.edge_label[e],
                    "directed": self.edge_directed[e],
                }
                for e in range(self.n_edges)
            ],
            "radius": self.radius,
        }

    def to_json(self) -> str:
        return json.dumps(self.to_json_dict(), sort_keys=True)

    @classmethod
    def from_json_dict(cls, data: dict) -> "MultiGraph":
        g = cls()
        verts = sorted(data["vertices"], key=lambda v: v["id"])
        for v in verts:
            g.add_vertex(v["name"])
            if v.get("frontier"):
                g.frontier.add(v["id"])
        for e in data["edges"]:
            g.add_edge(e["tail"], e["head"], e.get("label", ""),
                       e.get("directed", True))
        g.radius = data.get("radius")
        return g

    def to_dot(self) -> str:
        lines = ["digraph G {"]
        for i, name in enumerate(self.vertex_names):
            attrs = f'label="{name}"'
            if i in self.frontier:
                attrs += ', style=dashed'
            lines.append(f'  v{i} [{attrs}];')
        for e in range(self.n_edges):
            u, v = self.edge_ends(e)
            label = self.edge_label[e]
            if self.edge_directed[e]:
                lines.append(f'  v{u} -> v{v} [label="{label}"];')
            else:
                lines.append(f'  v{u} -> v{v} [label="{label}", dir=none];')
        lines.append("}")
        return "\n".join(lines) + "\n"


class CayleyGraph(MultiGraph):
    """Labeled Cayley multigraph; vertices are group element names.

    ``out_dart[v][slot]`` maps a local generator slot (see ``local_slots``)
    to the dart with tail v realizing it.  Present for complete graphs and
    balls alike; left-multiplication automorphisms are read off from it.
    """

    def __init__(self) -> None:
        super().__init__()
        self.group = None  # GroupModel for complete graphs, else None
        self.generators: list[str] = []


def graph_from_edges(n: int, edges: list[tuple[int, int]],
                     names: list[str] | None = None) -> MultiGraph:
    """Convenience builder for undirected test graphs."""
    g = MultiGraph()
    for i in range(n):
        g.add_vertex(names[i] if names else None)
    for u, v in edges:
        g.add_edge(u, v, directed=False)
    return g
