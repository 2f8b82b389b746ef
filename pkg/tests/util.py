"""Shared test helpers: seeded RNG, random plane graphs, brute oracles."""

from __future__ import annotations

import itertools
import os
import random

from pcl.embedding import Embedding, KuratowskiWitness, planarity_test
from pcl.graph import MultiGraph


def make_rng(offset: int = 0) -> random.Random:
    return random.Random(int(os.environ.get("PCL_SEED", "0")) + offset)


def random_plane_graph(rng: random.Random, max_vertices: int = 30,
                       steps: int = 12) -> tuple[MultiGraph, Embedding]:
    """Random 2-connected simple plane graph grown by face operations.

    Starts from a cycle and repeatedly either adds a chord across a face
    or drops a new vertex into a face joined to two of its vertices; both
    operations preserve planarity and 2-connectedness.
    """
    g = MultiGraph()
    k = rng.randrange(3, 6)
    for _ in range(k):
        g.add_vertex()
    for i in range(k):
        g.add_edge(i, (i + 1) % k, "c", False)
    emb = planarity_test(g)
    assert not isinstance(emb, KuratowskiWitness)

    for _ in range(steps):
        face = rng.choice(emb.faces)
        boundary = list(dict.fromkeys(g.dart_tail[d] for d in face.darts))
        if len(boundary) < 3:
            continue
        if rng.random() < 0.5 and g.n_vertices < max_vertices:
            u, v = rng.sample(boundary, 2)
            w = g.add_vertex()
            g.add_edge(u, w, "a", False)
            g.add_edge(w, v, "a", False)
        else:
            adj = g.simple_adjacency()
            pairs = [(u, v) for u, v in itertools.combinations(boundary, 2)
                     if v not in adj[u]]
            if not pairs:
                continue
            u, v = rng.choice(pairs)
            g.add_edge(u, v, "d", False)
        emb = planarity_test(g)
        assert not isinstance(emb, KuratowskiWitness)
    return g, emb


def brute_force_connectivity(g: MultiGraph) -> int:
    """Minimum vertex cut by exhaustion (small graphs only)."""
    n = g.n_vertices
    adj = g.simple_adjacency()
    if all(len(adj[v] - {v}) == n - 1 for v in range(n)):
        return n - 1
    for size in range(n - 1):
        for cut in itertools.combinations(range(n), size):
            rest = [v for v in range(n) if v not in cut]
            if not rest:
                continue
            seen = {rest[0]}
            stack = [rest[0]]
            while stack:
                v = stack.pop()
                for w in adj[v]:
                    if w not in cut and w not in seen:
                        seen.add(w)
                        stack.append(w)
            if len(seen) < len(rest):
                return size
    return n - 1


def check_embedding_bookkeeping(emb: Embedding) -> None:
    """Sum of face lengths = 2|E| and Euler's formula, exactly."""
    g = emb.graph
    total = sum(len(f.darts) for f in emb.faces)
    assert total == 2 * g.n_edges
    assert g.n_vertices - g.n_edges + len(emb.faces) == 2 - 2 * emb.genus
