import pytest

from pcl.families import (AmalgamEngine, CnxZEngine, FreeGroupEngine, ZEngine,
                          ZxZEngine, engine_for)
from pcl.groups import a4_model, z4xz2_model


def test_free_group_reduction():
    e = FreeGroupEngine(2)
    k = e.identity()
    k = e.apply(k, "a", 1)
    k = e.apply(k, "b", 1)
    k = e.apply(k, "b", -1)
    assert e.name(k) == "a"
    assert e.apply(k, "a", -1) == e.identity()


def test_free_group_ball_growth():
    # |B_r| in F2 is 1 + 4*(3^r - 1)/2
    e = FreeGroupEngine(2)
    frontier = {e.identity()}
    seen = {e.identity()}
    for r in range(1, 4):
        nxt = set()
        for k in frontier:
            for gs in e.gens():
                for s in (1, -1):
                    w = e.apply(k, gs.label, s)
                    if w not in seen:
                        nxt.add(w)
        seen |= nxt
        frontier = nxt
        assert len(seen) == 1 + 2 * (3 ** r - 1)


def test_z_engine_steps():
    e = ZEngine((1, 2))
    labels = [g.label for g in e.gens()]
    assert labels == ["z", "z2"]
    assert e.apply(0, "z2", -1) == -2


def test_zxz_engine():
    e = ZxZEngine()
    assert e.apply(e.apply((0, 0), "x", 1), "y", -1) == (1, -1)
    assert e.name((2, -1)) == "(2,-1)"


def test_cnxz_involution_flag():
    assert CnxZEngine(2).gens()[1].is_involution
    assert not CnxZEngine(3).gens()[1].is_involution
    e = CnxZEngine(3)
    assert e.apply((0, 2), "r", 1) == (0, 0)


def test_engine_for_tags():
    assert isinstance(engine_for("free", rank=2), FreeGroupEngine)
    assert isinstance(engine_for("z-cross-z"), ZxZEngine)
    assert isinstance(engine_for("z-cross-z3"), CnxZEngine)
    with pytest.raises(ValueError):
        engine_for("nope")


def _amalgam():
    a, b = a4_model(), z4xz2_model()
    return AmalgamEngine(a, b, ["k", "r"], ["(1,0)", "(0,1)"],
                         a.element("k"), b.element("(0,1)"))


def test_amalgam_identity_and_merged_involution():
    e = _amalgam()
    gens = {g.label: g for g in e.gens()}
    assert "b" in gens and gens["b"].is_involution
    k = e.apply(e.identity(), "b", 1)
    assert e.apply(k, "b", 1) == e.identity()


def test_amalgam_normal_form_alternation():
    e = _amalgam()
    # r then (1,0) then r again: three syllables, alternating factors
    k = e.identity()
    for lab in ("r", "(1,0)", "r"):
        k = e.apply(k, lab, 1)
    assert "." in e.name(k)
    # walking back cancels to the identity
    for lab in ("r", "(1,0)", "r"):
        k = e.apply(k, lab, -1)
    assert k == e.identity()


def test_amalgam_rejects_non_involution():
    a, b = a4_model(), z4xz2_model()
    with pytest.raises(ValueError):
        AmalgamEngine(a, b, ["k", "r"], ["(1,0)", "(0,1)"],
                      a.element("r"), b.element("(0,1)"))


def test_amalgam_word_problem_against_free_rewriting():
    # random walks that freely reduce to the empty word must return to e
    import random
    rng = random.Random(1)
    e = _amalgam()
    for _ in range(50):
        moves = []
        for _ in range(rng.randrange(1, 6)):
            moves.append((rng.choice(["b", "r", "(1,0)"]),
                          rng.choice([1, -1])))
        k = e.identity()
        for lab, s in moves:
            k = e.apply(k, lab, s)
        for lab, s in reversed(moves):
            k = e.apply(k, lab, -s)
        assert k == e.identity()
