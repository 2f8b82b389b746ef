"""GF(2) cycle/cut space algebra and separation checks on plane graphs.

Edge vectors are int bitmasks over edge ids; addition is xor.  Crossing
parity counts how often a cycle crosses a dual path between two faces,
mod 2, which decides whether the cycle separates the faces; a dual
flood-fill serves as the independent oracle.
"""

from __future__ import annotations

from dataclasses import dataclass

from .embedding import Embedding
from .graph import CayleyGraph, MultiGraph


def edge_vector(edges) -> int:
    vec = 0
    for e in edges:
        vec ^= 1 << e
    return vec


def support(vec: int) -> list[int]:
    out = []
    e = 0
    while vec:
        if vec & 1:
            out.append(e)
        vec >>= 1
        e += 1
    return out


def is_single_cycle(g: MultiGraph, vec: int) -> bool:
    """True iff the support induces a connected subgraph with all degrees 2."""
    edges = support(vec)
    if not edges:
        return False
    deg: dict[int, int] = {}
    adj: dict[int, list[int]] = {}
    for e in edges:
        u, v = g.edge_ends(e)
        deg[u] = deg.get(u, 0) + 1
        deg[v] = deg.get(v, 0) + 1
        adj.setdefault(u, []).append(v)
        adj.setdefault(v, []).append(u)
    if any(d != 2 for d in deg.values()):
        return False
    start = next(iter(adj))
    seen = {start}
    stack = [start]
    while stack:
        v = stack.pop()
        for w in adj[v]:
            if w not in seen:
                seen.add(w)
                stack.append(w)
    return len(seen) == len(adj)


def gf2_rank(rows: list[int]) -> int:
    """Rank over GF(2) by Gaussian elimination on int bitmasks."""
    basis: list[int] = []
    for row in rows:
        for b in basis:
            row = min(row, row ^ b)
        if row:
            basis.append(row)
            basis.sort(reverse=True)
    return len(basis)


# -- dual structure --------------------------------------------------------


def face_of_dart(emb: Embedding) -> list[int]:
    """Map each dart to the index of its facial walk."""
    out = [-1] * emb.graph.n_darts
    for fi, f in enumerate(emb.faces):
        for d in f.darts:
            out[d] = fi
    return out


def dual_edges(emb: Embedding) -> list[tuple[int, int]]:
    """Per primal edge, the pair of faces its two darts lie in."""
    fod = face_of_dart(emb)
    return [(fod[2 * e], fod[2 * e + 1]) for e in range(emb.graph.n_edges)]


class NotACycleError(ValueError):
    pass


def crossing_parity(emb: Embedding, cyc: int, f1: int, f2: int) -> int:
    """1 iff the cycle separates faces f1 and f2.

    Counts, mod 2, the cycle edges crossed by an arbitrary dual path from
    f1 to f2; well-defined because cycles cross every dual cycle (a primal
    cut) an even number of times.
    """
    if not is_single_cycle(emb.graph, cyc):
        raise NotACycleError("edge vector is not a single cycle")
    if f1 == f2:
        raise ValueError("faces must be distinct")
    duals = dual_edges(emb)
    nf = len(emb.faces)
    adj: list[list[tuple[int, int]]] = [[] for _ in range(nf)]
    for e, (fa, fb) in enumerate(duals):
        adj[fa].append((fb, e))
        adj[fb].append((fa, e))
    prev: dict[int, tuple[int, int]] = {f1: (-1, -1)}
    queue = [f1]
    qi = 0
    while qi < len(queue):
        f = queue[qi]
        qi += 1
        if f == f2:
            break
        for f_next, e in adj[f]:
            if f_next not in prev:
                prev[f_next] = (f, e)
                queue.append(f_next)
    if f2 not in prev:
        raise ValueError("dual graph disconnected; embedding inconsistent")
    parity = 0
    f = f2
    while f != f1:
        f, e = prev[f]
        if (cyc >> e) & 1:
            parity ^= 1
    return parity


def crossing_parity_floodfill(emb: Embedding, cyc: int, f1: int, f2: int) -> int:
    """Oracle: flood-fill the dual graph without crossing the cycle's
    edges; parity 0 iff f2 is reached from f1."""
    if not is_single_cycle(emb.graph, cyc):
        raise NotACycleError("edge vector is not a single cycle")
    duals = dual_edges(emb)
    nf = len(emb.faces)
    adj: list[list[int]] = [[] for _ in range(nf)]
    for e, (fa, fb) in enumerate(duals):
        if not (cyc >> e) & 1:
            adj[fa].append(fb)
            adj[fb].append(fa)
    seen = {f1}
    stack = [f1]
    while stack:
        f = stack.pop()
        for f_next in adj[f]:
            if f_next not in seen:
                seen.add(f_next)
                stack.append(f_next)
    return 0 if f2 in seen else 1


@dataclass
class SepSumLedger:
    cycle_parities: list[int]
    sum_is_cycle: bool
    sum_parity: int | None
    verdict: str  # "ok" | "not-a-cycle" | "violation"

    def to_json_dict(self) -> dict:
        return {
            "cycle_parities": self.cycle_parities,
            "sum_is_cycle": self.sum_is_cycle,
            "sum_parity": self.sum_parity,
            "verdict": self.verdict,
        }


def sep_sum_check(emb: Embedding, f1: int, f2: int,
                  cycles: list[int]) -> SepSumLedger:
    """Verify that a GF(2) sum of non-separating cycles stays
    non-separating (parities are additive)."""
    parities = [crossing_parity(emb, c, f1, f2) for c in cycles]
    if any(parities):
        raise ValueError("a listed cycle already separates the faces")
    total = 0
    for c in cycles:
        total ^= c
    if not is_single_cycle(emb.graph, total):
        return SepSumLedger(parities, False, None, "not-a-cycle")
    p = crossing_parity(emb, total, f1, f2)
    return SepSumLedger(parities, True, p, "ok" if p == 0 else "violation")


def separating_cycle_between_faces(emb: Embedding, f1: int, f2: int) -> int:
    """A cycle separating two faces of a 2-connected plane graph.

    If a face boundary is already a cycle it separates and is returned;
    otherwise a boundary-to-boundary path P and a detour R avoiding P are
    combined into the separating cycle.
    """
    g = emb.graph
    if f1 == f2:
        raise ValueError("faces must be distinct")
    for f in (f1, f2):
        vec = edge_vector(d // 2 for d in emb.faces[f].darts)
        if is_single_cycle(g, vec):
            return vec
    return _separating_cycle_construction(emb, f1, f2)


def _separating_cycle_construction(emb: Embedding, f1: int, f2: int) -> int:
    g = emb.graph
    bound1 = [g.dart_tail[d] for d in emb.faces[f1].darts]
    bound2 = {g.dart_tail[d] for d in emb.faces[f2].darts}
    # shortest path P from boundary(f1) to boundary(f2)
    prev = {v: -1 for v in bound1}
    queue = list(dict.fromkeys(bound1))
    qi = 0
    hit = None
    inc = g.incidence()
    while qi < len(queue):
        v = queue[qi]
        qi += 1
        if v in bound2:
            hit = v
            break
        for d in inc[v]:
            w = g.head(d)
            if w not in prev:
                prev[w] = v
                queue.append(w)
    if hit is None:
        raise ValueError("graph disconnected")
    path = [hit]
    while prev[path[-1]] != -1:
        path.append(prev[path[-1]])
    path.reverse()  # starts on boundary(f1)
    p = path[0]
    on_path = set(path)
    # the two neighbours of p along the boundary walk of f1
    walk = emb.faces[f1].darts
    nbrs = []
    for i, d in enumerate(walk):
        if g.dart_tail[d] == p:
            nbrs.append(g.head(d))
            nbrs.append(g.dart_tail[walk[(i - 1) % len(walk)]])
    u, v = nbrs[0], nbrs[1]
    # detour R: u-v path avoiding P
    allowed = set(range(g.n_vertices)) - on_path
    allowed.update((u, v))
    prev2 = {u: -1}
    queue = [u]
    qi = 0
    while qi < len(queue):
        w = queue[qi]
        qi += 1
        if w == v:
            break
        for d in inc[w]:
            t = g.head(d)
            if t in allowed and t not in prev2:
                prev2[t] = w
                queue.append(t)
    if v not in prev2:
        raise ValueError("graph is not 2-connected")
    detour = [v]
    while prev2[detour[-1]] != -1:
        detour.append(prev2[detour[-1]])
    cycle_vertices = detour + [p]
    edges = []
    for a, b in zip(cycle_vertices, cycle_vertices[1:] + cycle_vertices[:1]):
        for e in range(g.n_edges):
            x, y = g.edge_ends(e)
            if {x, y} == {a, b}:
                edges.append(e)
                break
    return edge_vector(edges)


def star_cut(g: MultiGraph, v: int) -> int:
    """Edge set incident to v, loops excluded (the vertex-star cut)."""
    vec = 0
    for e in range(g.n_edges):
        u, w = g.edge_ends(e)
        if (u == v) != (w == v):
            vec ^= 1 << e
    return vec


@dataclass
class CutSpaceReport:
    rank: int
    expected: int

    @property
    def ok(self) -> bool:
        return self.rank == self.expected

    def to_json_dict(self) -> dict:
        return {"rank": self.rank, "expected": self.expected, "ok": self.ok}


def star_generation_check(cg: CayleyGraph) -> CutSpaceReport:
    """Rank over GF(2) of the orbit of the identity's star cut.

    For a connected finite Cayley graph the orbit is all vertex stars and
    must generate the whole cut space, of dimension |V| - 1.
    """
    rows = [star_cut(cg, v) for v in range(cg.n_vertices)]
    return CutSpaceReport(gf2_rank(rows), cg.n_vertices - 1)
