import pytest

from pcl.cayley import (InfiniteFamilySpec, NonGeneratingError,
                        build_amalgam_ball, build_ball, build_cayley,
                        dart_permutation, interior_degrees,
                        left_multiplication_invariant)
from pcl.groups import a4_model, cyclic_group, z4xz2_model


def test_a4_cayley_counts():
    cg = build_cayley(a4_model(), ["k", "r"])
    assert cg.n_vertices == 12
    assert cg.n_edges == 18  # 6 involution edges + 12 directed r-edges
    assert all(cg.degree(v) == 3 for v in range(12))


def test_prism_counts():
    cg = build_cayley(z4xz2_model(), ["(1,0)", "(0,1)"])
    assert cg.n_vertices == 8
    assert cg.n_edges == 12


def test_identity_generator_gives_loops():
    g = cyclic_group(3)
    cg = build_cayley(g, ["a", "e"])
    loops = [e for e in range(cg.n_edges) if len(set(cg.edge_ends(e))) == 1]
    assert len(loops) == 3


def test_non_generating_set_rejected():
    with pytest.raises(NonGeneratingError) as ei:
        build_cayley(a4_model(), ["r"])
    assert ei.value.subgroup_order == 3


def test_left_multiplication_is_automorphism():
    cg = build_cayley(a4_model(), ["k", "r"])
    g = cg.group
    for x in range(g.order):
        vperm, dperm = dart_permutation(cg, x)
        assert sorted(vperm) == list(range(12))
        for d in range(cg.n_darts):
            assert dperm[d ^ 1] == dperm[d] ^ 1
            assert cg.dart_tail[dperm[d]] == vperm[cg.dart_tail[d]]
    assert left_multiplication_invariant(cg)


def test_ball_z():
    ball = build_ball(InfiniteFamilySpec("z"), 3)
    assert ball.n_vertices == 7
    assert len(ball.frontier) == 2
    assert interior_degrees(ball) == {2}


def test_ball_grid():
    ball = build_ball(InfiniteFamilySpec("z-cross-z"), 2)
    assert ball.n_vertices == 13  # |{|m|+|n| <= 2}|
    assert len(ball.frontier) == 8
    assert interior_degrees(ball) == {4}


def test_ball_free_group():
    ball = build_ball(InfiniteFamilySpec("free", {"rank": 2}), 2)
    assert ball.n_vertices == 17
    assert interior_degrees(ball) == {4}
    # a tree: E = V - 1
    assert ball.n_edges == ball.n_vertices - 1


def test_ball_z_cross_z3():
    ball = build_ball(InfiniteFamilySpec("z-cross-z3"), 4)
    assert interior_degrees(ball) == {4}


def test_amalgam_ball_interior_degree():
    a, b = a4_model(), z4xz2_model()
    ball = build_amalgam_ball(a, "k", b, "(0,1)", ["k", "r"],
                              ["(1,0)", "(0,1)"], 3)
    assert ball.n_vertices == 62
    assert interior_degrees(ball) == {5}  # 3 + 3 - 1


def test_ball_deterministic():
    s = InfiniteFamilySpec("free", {"rank": 2})
    a, b = build_ball(s, 3), build_ball(s, 3)
    assert a.to_json() == b.to_json()


def test_negative_radius_rejected():
    with pytest.raises(ValueError):
        build_ball(InfiniteFamilySpec("z"), -1)
