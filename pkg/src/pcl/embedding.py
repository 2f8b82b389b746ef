"""Rotation systems, face tracing, planarity, consistent embeddings.

A rotation system lists the darts with tail v in cyclic order, per vertex.
Faces are traced with the successor rule

    next(d) = rotation-successor of twin(d) at the twin's tail,

which recovers the usual face boundaries of an orientable embedding.  Spin
enters only when a rotation is *built* from a shared label order: a vertex
of spin -1 uses the mirrored reference order, after which tracing proceeds
with the same rule.  Genus comes from Euler's formula.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass, field

import networkx as nx

from .graph import CayleyGraph, MultiGraph, twin


class RotationError(ValueError):
    """Rotation system does not cover the graph's darts exactly."""


class SearchBudgetError(RuntimeError):
    """Consistent-embedding search space exceeds the configured budget."""


RotationSystem = list[list[int]]  # per-vertex cyclic dart order


@dataclass
class FacialWalk:
    darts: tuple[int, ...]
    finite: bool = True

    def __len__(self) -> int:
        return len(self.darts)


@dataclass
class Embedding:
    graph: MultiGraph
    rotation: RotationSystem
    faces: list[FacialWalk]
    genus: int

    def face_vector(self) -> dict[int, int]:
        out: dict[int, int] = {}
        for f in self.faces:
            out[len(f)] = out.get(len(f), 0) + 1
        return out

    def mirror(self) -> "Embedding":
        return trace_faces(self.graph, [list(reversed(r)) for r in self.rotation])

    def to_json_dict(self) -> dict:
        return {
            "schema": "pcl/1",
            "rotation": {str(v): list(r) for v, r in enumerate(self.rotation)},
            "faces": [list(f.darts) for f in self.faces],
            "genus": self.genus,
        }


@dataclass
class KuratowskiWitness:
    kind: str  # "K5" or "K3,3"
    branch_vertices: list[int]
    paths: list[list[int]]  # vertex sequences between branch vertices


def trace_faces(g: MultiGraph, rot: RotationSystem) -> Embedding:
    """Trace all facial walks of the rotation system and compute the genus."""
    nd = g.n_darts
    seen = [False] * nd
    count = 0
    succ = [None] * nd  # rotation successor at the dart's tail
    for v, cycle in enumerate(rot):
        for i, d in enumerate(cycle):
            if not 0 <= d < nd:
                raise RotationError(f"unknown dart {d}")
            if g.dart_tail[d] != v:
                raise RotationError(f"dart {d} not incident to vertex {v}")
            if succ[d] is not None:
                raise RotationError(f"dart {d} appears twice")
            succ[d] = cycle[(i + 1) % len(cycle)]
            count += 1
    if count != nd:
        missing = [d for d in range(nd) if succ[d] is None]
        raise RotationError(f"rotation missing darts {missing[:5]}")

    faces: list[FacialWalk] = []
    for start in range(nd):
        if seen[start]:
            continue
        walk = []
        d = start
        while not seen[d]:
            seen[d] = True
            walk.append(d)
            d = succ[twin(d)]
        touches_frontier = any(g.dart_tail[d] in g.frontier
                               or g.head(d) in g.frontier for d in walk)
        faces.append(FacialWalk(tuple(walk), finite=not touches_frontier))

    if not g.is_connected():
        raise ValueError("face tracing requires a connected graph")
    euler = g.n_vertices - g.n_edges + len(faces)
    if (2 - euler) % 2 != 0:
        raise AssertionError("odd Euler defect; rotation inconsistent")
    genus = (2 - euler) // 2
    return Embedding(g, [list(r) for r in rot], faces, genus)


# -- planarity -------------------------------------------------------------


def _nx_graph(g: MultiGraph, edges: set[int] | None = None) -> nx.Graph:
    G = nx.Graph()
    G.add_nodes_from(range(g.n_vertices))
    for e in range(g.n_edges):
        if edges is not None and e not in edges:
            continue
        u, v = g.edge_ends(e)
        if u != v:
            G.add_edge(u, v)
    return G


def planarity_test(g: MultiGraph) -> Embedding | KuratowskiWitness:
    """Genus-0 embedding of g, or a Kuratowski subdivision witness.

    Planarity of the underlying simple graph is decided by the left-right
    algorithm (networkx); the returned multigraph rotation places parallel
    edges in nested slots and loops in their own corners, so the traced
    genus is 0.  Non-planar graphs yield an edge-minimal Kuratowski
    subdivision extracted by pruning, independently re-checkable.
    """
    if not g.is_connected():
        raise ValueError("planarity test requires a connected graph")
    G = _nx_graph(g)
    ok, cert = nx.check_planarity(G, counterexample=True)
    if not ok:
        return _extract_witness(g, cert)
    ok, cert = nx.check_planarity(G)

    order = {v: cert.neighbors_cw_order(v) for v in G.nodes}
    # darts from v to w, grouped
    darts_to: dict[tuple[int, int], list[int]] = {}
    loops_at: dict[int, list[int]] = {}
    for e in range(g.n_edges):
        u, v = g.edge_ends(e)
        if u == v:
            loops_at.setdefault(u, []).append(e)
        else:
            darts_to.setdefault((u, v), []).append(2 * e)
            darts_to.setdefault((v, u), []).append(2 * e + 1)

    rot: RotationSystem = []
    for v in range(g.n_vertices):
        cycle: list[int] = []
        for w in order[v]:
            slot = sorted(darts_to[(v, w)], key=lambda d: d // 2)
            if v > w:
                slot.reverse()
            cycle.extend(slot)
        for e in loops_at.get(v, []):
            cycle.extend((2 * e + 1, 2 * e))
        rot.append(cycle)
    emb = trace_faces(g, rot)
    assert emb.genus == 0, "planar rotation traced to nonzero genus"
    return emb


def _extract_witness(g: MultiGraph, cert: nx.Graph) -> KuratowskiWitness:
    edge_ids: dict[frozenset, list[int]] = {}
    for e in range(g.n_edges):
        u, v = g.edge_ends(e)
        if u != v:
            edge_ids.setdefault(frozenset((u, v)), []).append(e)
    sub = {edge_ids[frozenset((u, v))][0] for u, v in cert.edges}
    # prune to an edge-minimal non-planar subgraph (a Kuratowski subdivision)
    for e in sorted(sub):
        trial = sub - {e}
        ok, _ = nx.check_planarity(_nx_graph(g, trial))
        if not ok:
            sub = trial
    return _classify_witness(g, sub)


def _classify_witness(g: MultiGraph, edges: set[int]) -> KuratowskiWitness:
    adj: dict[int, list[int]] = {}
    for e in edges:
        u, v = g.edge_ends(e)
        adj.setdefault(u, []).append(v)
        adj.setdefault(v, []).append(u)
    branch = sorted(v for v, nbrs in adj.items() if len(nbrs) >= 3)
    paths: list[list[int]] = []
    used: set[tuple[int, int]] = set()
    for b in branch:
        for n0 in adj[b]:
            if (b, n0) in used:
                continue
            path = [b, n0]
            used.add((b, n0))
            prev, cur = b, n0
            while cur not in branch:
                nxt = [w for w in adj[cur] if w != prev]
                assert len(nxt) == 1, "degree-2 chain expected"
                prev, cur = cur, nxt[0]
                path.append(cur)
            used.add((cur, prev))
            paths.append(path)
    # each chain is found once from each end; keep one orientation
    canon = {}
    for p in paths:
        key = tuple(p) if tuple(p) <= tuple(reversed(p)) else tuple(reversed(p))
        canon[key] = list(key)
    paths = sorted(canon.values())
    degrees = sorted(len(adj[b]) for b in branch)
    if degrees == [4] * 5:
        kind = "K5"
    elif degrees == [3] * 6:
        kind = "K3,3"
    else:
        raise AssertionError(f"unexpected branch degrees {degrees}")
    return KuratowskiWitness(kind, branch, paths)


def verify_witness(g: MultiGraph, w: KuratowskiWitness) -> bool:
    """Independent witness check: paths in g, internally disjoint,
    contracting them yields K5 or K3,3 exactly."""
    adj = g.simple_adjacency()
    internal: list[set[int]] = []
    for p in w.paths:
        for a, b in zip(p, p[1:]):
            if b not in adj[a]:
                return False
        if p[0] not in w.branch_vertices or p[-1] not in w.branch_vertices:
            return False
        mid = set(p[1:-1])
        if mid & set(w.branch_vertices):
            return False
        for other in internal:
            if mid & other:
                return False
        internal.append(mid)
    K = nx.Graph()
    K.add_nodes_from(w.branch_vertices)
    for p in w.paths:
        if K.has_edge(p[0], p[-1]):
            return False
        K.add_edge(p[0], p[-1])
    if w.kind == "K5":
        return (K.number_of_nodes() == 5 and K.number_of_edges() == 10)
    deg = sorted(d for _, d in K.degree())
    if deg != [3] * 6:
        return False
    return nx.is_bipartite(K)


# -- consistent (covariant-candidate) embeddings ---------------------------

LabelItem = tuple[str, int]  # (generator label, +1 out / -1 in / 0 undirected)


def local_label_items(cg: CayleyGraph) -> list[LabelItem]:
    """Directed-label slots present at every vertex of a complete graph."""
    items: list[LabelItem] = []
    g = cg.group
    for sym in cg.generators:
        x = g.element(sym)
        if x == g.identity:
            items.append((sym, 1))
            items.append((sym, -1))
        elif g.mul(x, x) == g.identity:
            items.append((sym, 0))
        else:
            items.append((sym, 1))
            items.append((sym, -1))
    return items


def dart_for_item(cg: CayleyGraph, v: int, item: LabelItem) -> int:
    sym, direction = item
    g = cg.group
    if direction >= 0:
        d = cg.out_dart[(v, sym)]
        if direction == 0 and cg.dart_tail[d] != v:
            d = twin(d)
        return d
    x = g.element(sym)
    if x == g.identity:
        return twin(cg.out_dart[(v, sym)])
    w = g.mul(v, g.inv(x))
    return twin(cg.out_dart[(w, sym)])


def rotation_from_labels(cg: CayleyGraph, order: tuple[LabelItem, ...],
                         spins: list[int]) -> RotationSystem:
    rot: RotationSystem = []
    for v in range(cg.n_vertices):
        seq = order if spins[v] > 0 else tuple(reversed(order))
        rot.append([dart_for_item(cg, v, item) for item in seq])
    return rot


def search_consistent_embeddings(
        cg: CayleyGraph, budget: int = 1 << 22,
) -> list[tuple[tuple[LabelItem, ...], list[int], Embedding]]:
    """All genus-0 (label cyclic order, spin) pairs, gauge-reduced.

    Gauge: the reference order's first slot is fixed and the identity
    vertex has spin +1, so candidates are counted once per rotation class
    and once per global mirror flip.
    """
    if cg.group is None or cg.radius != "complete":
        raise ValueError("consistent-embedding search needs a complete Cayley graph")
    items = local_label_items(cg)
    if len(items) > 6:
        raise SearchBudgetError(f"label degree {len(items)} exceeds 6")
    n = cg.n_vertices
    n_orders = 1
    for k in range(2, len(items)):
        n_orders *= k
    if n_orders * (1 << (n - 1)) > budget:
        raise SearchBudgetError("search space exceeds budget")

    results = []
    first, rest = items[0], items[1:]
    for perm in itertools.permutations(rest):
        order = (first,) + perm
        for spin_bits in itertools.product((1, -1), repeat=n - 1):
            spins = [1] + list(spin_bits)
            rot = rotation_from_labels(cg, order, spins)
            emb = trace_faces(cg, rot)
            if emb.genus == 0:
                results.append((order, spins, emb))
    return results


# -- face classification on balls ------------------------------------------


@dataclass
class FaceReport:
    finite_count: int
    frontier_touching_count: int
    max_finite_face_length: int

    def to_json_dict(self) -> dict:
        return {
            "finite_faces": self.finite_count,
            "frontier_touching_faces": self.frontier_touching_count,
            "max_finite_face_length": self.max_finite_face_length,
        }


def classify_faces(ball: MultiGraph, emb: Embedding) -> FaceReport:
    """Count fully interior faces of an embedded ball.

    A facial walk is frontier-touching iff it visits a frontier vertex;
    only fully interior walks are certified finite (face finiteness of the
    infinite graph is approximated through the truncation).
    """
    finite = [f for f in emb.faces if f.finite]
    return FaceReport(
        finite_count=len(finite),
        frontier_touching_count=len(emb.faces) - len(finite),
        max_finite_face_length=max((len(f) for f in finite), default=0),
    )
