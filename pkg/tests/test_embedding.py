import pytest

from pcl.cayley import (InfiniteFamilySpec, build_amalgam_ball, build_ball,
                        build_cayley)
from pcl.embedding import (KuratowskiWitness, RotationError, classify_faces,
                           planarity_test, search_consistent_embeddings,
                           trace_faces, verify_witness)
from pcl.graph import MultiGraph, graph_from_edges
from pcl.groups import a4_model, z4xz2_model
from util import check_embedding_bookkeeping


def _k4():
    return graph_from_edges(4, [(i, j) for i in range(4)
                                for j in range(i + 1, 4)])


def test_trace_faces_tetrahedron():
    g = _k4()
    emb = planarity_test(g)
    assert not isinstance(emb, KuratowskiWitness)
    assert emb.genus == 0
    assert emb.face_vector() == {3: 4}
    check_embedding_bookkeeping(emb)


def test_trace_faces_torus_rotation():
    # K4 with a rotation of genus 1 (swap two darts at one vertex)
    g = _k4()
    emb = planarity_test(g)
    rot = [list(r) for r in emb.rotation]
    rot[0][0], rot[0][1] = rot[0][1], rot[0][0]
    emb2 = trace_faces(g, rot)
    assert emb2.genus == 1
    check_embedding_bookkeeping(emb2)


def test_rotation_validation():
    g = _k4()
    with pytest.raises(RotationError):
        trace_faces(g, [[0], [1], [2], [3]])


def test_loops_and_parallel_edges_embed():
    g = MultiGraph()
    v = g.add_vertex()
    w = g.add_vertex()
    g.add_edge(v, v, "l", True)
    g.add_edge(v, w, "p", False)
    g.add_edge(v, w, "p", False)
    emb = planarity_test(g)
    assert not isinstance(emb, KuratowskiWitness)
    assert emb.genus == 0
    check_embedding_bookkeeping(emb)


def test_k5_witness():
    g = graph_from_edges(5, [(i, j) for i in range(5)
                             for j in range(i + 1, 5)])
    w = planarity_test(g)
    assert isinstance(w, KuratowskiWitness)
    assert w.kind == "K5"
    assert verify_witness(g, w)


def test_k33_witness():
    g = graph_from_edges(6, [(i, j + 3) for i in range(3) for j in range(3)])
    w = planarity_test(g)
    assert isinstance(w, KuratowskiWitness)
    assert w.kind == "K3,3"
    assert verify_witness(g, w)


def test_subdivided_k5_witness():
    # subdivide every edge of K5 once: witness must be a K5 subdivision
    edges = [(i, j) for i in range(5) for j in range(i + 1, 5)]
    g = MultiGraph()
    for _ in range(5):
        g.add_vertex()
    for u, v in edges:
        m = g.add_vertex()
        g.add_edge(u, m, "s", False)
        g.add_edge(m, v, "s", False)
    w = planarity_test(g)
    assert isinstance(w, KuratowskiWitness)
    assert w.kind == "K5"
    assert verify_witness(g, w)


def test_k44_cayley_witness():
    cg = build_cayley(z4xz2_model(), ["(1,0)", "(1,1)"])
    w = planarity_test(cg)
    assert isinstance(w, KuratowskiWitness)
    assert w.kind == "K3,3"
    assert verify_witness(cg, w)


def test_search_consistent_a4():
    cg = build_cayley(a4_model(), ["k", "r"])
    results = search_consistent_embeddings(cg)
    assert results, "A4 must admit a consistent planar embedding"
    for _, spins, emb in results:
        assert emb.genus == 0
        assert emb.face_vector() == {3: 4, 6: 4}
        assert spins[0] == 1  # gauge
        check_embedding_bookkeeping(emb)


def test_search_consistent_prism():
    cg = build_cayley(z4xz2_model(), ["(1,0)", "(0,1)"])
    results = search_consistent_embeddings(cg)
    assert results
    for _, _, emb in results:
        assert emb.face_vector() == {4: 6}


def test_classify_faces_on_ball():
    ball = build_ball(InfiniteFamilySpec("z-cross-z"), 3)
    emb = planarity_test(ball)
    assert not isinstance(emb, KuratowskiWitness)
    rep = classify_faces(ball, emb)
    assert rep.finite_count > 0
    assert rep.frontier_touching_count > 0
    assert rep.max_finite_face_length == 4  # grid squares


def test_amalgam_ball_planar():
    a, b = a4_model(), z4xz2_model()
    ball = build_amalgam_ball(a, "k", b, "(0,1)", ["k", "r"],
                              ["(1,0)", "(0,1)"], 3)
    emb = planarity_test(ball)
    assert not isinstance(emb, KuratowskiWitness)
    check_embedding_bookkeeping(emb)


def test_embedding_json_round_trip_stability():
    cg = build_cayley(a4_model(), ["k", "r"])
    e1 = planarity_test(cg)
    e2 = planarity_test(cg)
    assert e1.to_json_dict() == e2.to_json_dict()
