"""Cayley multigraph construction: complete graphs and truncated balls.

Involutions in the generating set become single undirected edges (one edge
per incident vertex pair); identity generators become loops.  Balls of the
bundled infinite families are exact radius-R balls with frontier flags on
the distance-R shell, vertices named by their normal forms.
"""

from __future__ import annotations

from dataclasses import dataclass, field

from .families import Engine, AmalgamEngine, engine_for
from .graph import CayleyGraph
from .groups import GroupModel


class NonGeneratingError(ValueError):
    """Generating set does not generate; carries the subgroup order reached."""

    def __init__(self, reached: int, order: int):
        super().__init__(
            f"generators span a subgroup of order {reached} < {order}")
        self.subgroup_order = reached


@dataclass
class InfiniteFamilySpec:
    tag: str  # "free" | "free-product" | "amalgam" | "cn-cross-z" | "z" | "z-cross-z" | "z-cross-z3"
    params: dict = field(default_factory=dict)

    def engine(self) -> Engine:
        return engine_for(self.tag, **self.params)


def build_cayley(g: GroupModel, gens: list[str]) -> CayleyGraph:
    """Complete Cayley multigraph of a finite group.

    gens are generator symbols or element names; repeated entries give
    parallel edge classes (a multiset generating set).
    """
    elts = [g.element(s) for s in gens]
    reached = g.closure(elts)
    if len(reached) != g.order:
        raise NonGeneratingError(len(reached), g.order)

    cg = CayleyGraph()
    cg.group = g
    cg.generators = list(gens)
    cg.radius = "complete"
    cg.out_dart = {}
    for name in g.element_names:
        cg.add_vertex(name)
    for sym, x in zip(gens, elts):
        if x == g.identity:
            for v in range(g.order):
                e = cg.add_edge(v, v, sym, directed=True)
                cg.out_dart[(v, sym)] = 2 * e
        elif g.mul(x, x) == g.identity:
            for v in range(g.order):
                w = g.mul(v, x)
                if v < w:
                    e = cg.add_edge(v, w, sym, directed=False)
                    cg.out_dart[(v, sym)] = 2 * e
                    cg.out_dart[(w, sym)] = 2 * e + 1
        else:
            for v in range(g.order):
                w = g.mul(v, x)
                e = cg.add_edge(v, w, sym, directed=True)
                cg.out_dart[(v, sym)] = 2 * e
    return cg


def dart_permutation(cg: CayleyGraph, x: int) -> tuple[list[int], list[int]]:
    """Vertex and dart permutations of left multiplication by element x."""
    g = cg.group
    if g is None:
        raise ValueError("left multiplication needs a complete Cayley graph")
    vperm = [g.mul(x, v) for v in range(g.order)]
    dperm = [0] * cg.n_darts
    for (v, sym), d in cg.out_dart.items():
        img = cg.out_dart[(vperm[v], sym)]
        dperm[d] = img
        dperm[d ^ 1] = img ^ 1
    return vperm, dperm


def left_multiplication_invariant(cg: CayleyGraph) -> bool:
    """Check that left multiplication by every element is a label- and
    direction-preserving automorphism (edge multiset invariance).

    Works for parallel edges sharing a label, where per-dart bookkeeping
    cannot tell the copies apart.
    """
    g = cg.group
    if g is None:
        return False
    from collections import Counter
    edges = Counter()
    for e in range(cg.n_edges):
        u, v = cg.edge_ends(e)
        if cg.edge_directed[e]:
            edges[(u, v, cg.edge_label[e], True)] += 1
        else:
            edges[(min(u, v), max(u, v), cg.edge_label[e], False)] += 1
    for x in range(g.order):
        imaged = Counter()
        for (u, v, lab, directed), c in edges.items():
            iu, iv = g.mul(x, u), g.mul(x, v)
            if not directed:
                iu, iv = min(iu, iv), max(iu, iv)
            imaged[(iu, iv, lab, directed)] += c
        if imaged != edges:
            return False
    return True


def build_ball(spec: InfiniteFamilySpec | Engine, radius: int) -> CayleyGraph:
    """Exact radius-R ball of a bundled infinite Cayley graph.

    The ball is the subgraph induced on vertices at distance <= R from the
    identity; vertices at distance exactly R carry the frontier flag.
    """
    if radius < 0:
        raise ValueError("radius must be >= 0")
    engine = spec.engine() if isinstance(spec, InfiniteFamilySpec) else spec
    gens = engine.gens()

    dist = {engine.identity(): 0}
    order = [engine.identity()]
    qi = 0
    while qi < len(order):
        key = order[qi]
        qi += 1
        d = dist[key]
        if d == radius:
            continue
        for gs in gens:
            signs = (1,) if gs.is_involution else (1, -1)
            for sg in signs:
                nxt = engine.apply(key, gs.label, sg)
                if nxt not in dist:
                    dist[nxt] = d + 1
                    order.append(nxt)

    cg = CayleyGraph()
    cg.radius = radius
    cg.generators = [gs.label for gs in gens]
    cg.out_dart = {}
    index = {}
    for key in order:
        idx = cg.add_vertex(engine.name(key))
        index[key] = idx
        if dist[key] == radius:
            cg.frontier.add(idx)
    for key in order:
        v = index[key]
        for gs in gens:
            w_key = engine.apply(key, gs.label, 1)
            if w_key not in index:
                continue
            w = index[w_key]
            if gs.is_involution:
                if v <= w:
                    e = cg.add_edge(v, w, gs.label, directed=False)
                    cg.out_dart[(v, gs.label)] = 2 * e
                    cg.out_dart[(w, gs.label)] = 2 * e + 1
            else:
                e = cg.add_edge(v, w, gs.label, directed=True)
                cg.out_dart[(v, gs.label)] = 2 * e
    return cg


def build_amalgam_ball(a: GroupModel, b_a: str | int, b: GroupModel,
                       b_b: str | int, gens_a: list[str], gens_b: list[str],
                       radius: int) -> CayleyGraph:
    """Ball of Cay(A *_{b_a=b_b} B, gens_a u gens_b), involutions identified.

    The two amalgamated involutions become a single undirected edge label
    "b".  Interior vertices have degree deg_A + deg_B - 1.
    """
    ia = a.element(b_a) if isinstance(b_a, str) else b_a
    ib = b.element(b_b) if isinstance(b_b, str) else b_b
    for model, x, gens in ((a, ia, gens_a), (b, ib, gens_b)):
        if x not in model.closure([model.element(s) for s in gens]):
            raise ValueError("amalgamation element not generated by the factor's generators")
    engine = AmalgamEngine(a, b, gens_a, gens_b, ia, ib)
    return build_ball(engine, radius)


def interior_degrees(cg: CayleyGraph) -> set[int]:
    """Distinct degrees over non-frontier vertices of a ball."""
    return {cg.degree(v) for v in range(cg.n_vertices) if v not in cg.frontier}
