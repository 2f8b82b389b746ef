"""Vertex connectivity and ladder augmentation to 3-connectivity.

The augmentation inserts a matched copy of each facial cycle inside its
face.  The infinite construction also handles facial double rays with two
copies; at finite scale only the cycle case arises, and faces of a
truncated ball that touch the frontier are deliberately left untouched.
"""

from __future__ import annotations

import networkx as nx

from .embedding import Embedding, trace_faces
from .graph import MultiGraph, twin


def vertex_connectivity(g: MultiGraph) -> int:
    """Exact vertex connectivity of the underlying simple graph
    (max-flow based); >= 3 certifies 3-connectedness."""
    if g.n_vertices < 2:
        raise ValueError("vertex connectivity needs at least 2 vertices")
    G = nx.Graph()
    G.add_nodes_from(range(g.n_vertices))
    for e in range(g.n_edges):
        u, v = g.edge_ends(e)
        if u != v:
            G.add_edge(u, v)
    return nx.node_connectivity(G)


def ladder_augment(g: MultiGraph, emb: Embedding) -> tuple[MultiGraph, Embedding]:
    """Insert a matched copy of each facial cycle inside its face.

    Skips faces with at most two edges (parallel-edge digons and loop
    faces) and, on truncated balls, faces touching the frontier.  The
    output embedding stays genus 0 and the output graph is 3-connected
    for 2-connected inputs.
    """
    if emb.genus != 0:
        raise ValueError("ladder augmentation needs a genus-0 embedding")

    out = MultiGraph()
    out.radius = g.radius
    out.frontier = set(g.frontier)
    for name in g.vertex_names:
        out.add_vertex(name)
    # copy edges; dart ids coincide for the shared part
    for e in range(g.n_edges):
        u, v = g.edge_ends(e)
        out.add_edge(u, v, g.edge_label[e], g.edge_directed[e])

    rot = [list(r) for r in emb.rotation]
    # corner insertions per vertex: dart m inserted so that
    # successor(twin(d_prev)) = m and successor(m) = d_next
    pending: list[tuple[int, int, int]] = []  # (vertex, after_dart, new_dart)

    for fi, face in enumerate(emb.faces):
        if len(face.darts) <= 2 or not face.finite:
            continue
        k = len(face.darts)
        boundary = [g.dart_tail[d] for d in face.darts]
        copies = [out.add_vertex(f"f{fi}c{i}") for i in range(k)]
        rung = []  # m_i: dart v_i -> u_i
        for i in range(k):
            e = out.add_edge(boundary[i], copies[i], f"rung{fi}", False)
            rung.append(2 * e)
        ring = []  # e_i: dart u_i -> u_{i+1}
        for i in range(k):
            e = out.add_edge(copies[i], copies[(i + 1) % k], f"ring{fi}", False)
            ring.append(2 * e)
        for i in range(k):
            # corner of this face at position i sits after twin(d_{i-1})
            prev_dart = twin(face.darts[(i - 1) % k])
            pending.append((boundary[i], prev_dart, rung[i]))
        for i in range(k):
            rot.append([ring[i], twin(rung[i]), twin(ring[(i - 1) % k])])

    for v, after, new in pending:
        cycle = rot[v]
        cycle.insert(cycle.index(after) + 1, new)

    new_emb = trace_faces(out, rot)
    assert new_emb.genus == 0, "augmentation broke planarity"
    return out, new_emb
