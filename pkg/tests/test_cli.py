import json

from click.testing import CliRunner

from pcl.cli import grp_resource, main


def run(*args):
    return CliRunner().invoke(main, list(args))


def test_parse_bundled_file(tmp_path):
    f = tmp_path / "a4.grp"
    f.write_text(grp_resource("a4.grp"))
    res = run("parse", str(f))
    assert res.exit_code == 0
    assert "gens: k r;" in res.output


def test_parse_error_is_usage_error(tmp_path):
    f = tmp_path / "bad.grp"
    f.write_text("group G { gens: a; rels: b^2; }")
    res = run("parse", str(f))
    assert res.exit_code == 2


def test_enumerate(tmp_path):
    f = tmp_path / "a4.grp"
    f.write_text(grp_resource("a4.grp"))
    res = run("enumerate", str(f))
    assert res.exit_code == 0
    assert json.loads(res.output)["order"] == 12


def test_build_builtin_prism():
    res = run("build", "z4xz2", "--gens", "(1,0),(0,1)")
    assert res.exit_code == 0
    data = json.loads(res.output)
    assert len(data["vertices"]) == 8
    assert len(data["edges"]) == 12


def test_build_family_ball():
    res = run("build", "--family", "z-cross-z", "--ball", "2")
    assert res.exit_code == 0
    data = json.loads(res.output)
    assert len(data["vertices"]) == 13
    assert data["interior_degrees"] == [4]


def test_build_amalgam_ball():
    res = run("build", "--amalgam", "--ball", "3")
    assert res.exit_code == 0
    assert json.loads(res.output)["interior_degrees"] == [5]


def test_build_renders(tmp_path):
    dot = tmp_path / "g.dot"
    svg = tmp_path / "g.svg"
    res = run("build", "a4", "--dot", str(dot), "--svg", str(svg))
    assert res.exit_code == 0
    assert dot.read_text().startswith("digraph")
    assert svg.read_text().startswith("<svg")


def test_embed_nonplanar_exit_code():
    res = run("embed", "z4xz2", "--gens", "(1,0),(1,1)")
    assert res.exit_code == 1
    data = json.loads(res.output)
    assert data["planar"] is False
    assert data["witness"]["kind"] == "K3,3"


def test_embed_search_consistent():
    res = run("embed", "a4", "--search-consistent")
    assert res.exit_code == 0
    data = json.loads(res.output)
    assert data["consistent_embeddings"] >= 1
    assert all(fv == {"3": 4, "6": 4} for fv in data["face_vectors"])


def test_faces_orient_connectivity_cutspace():
    assert json.loads(run("faces", "a4").output)["face_vector"] == \
        {"3": 4, "6": 4}
    table = json.loads(run("orient", "z4xz2").output)["orientation"]
    assert table["(0,1)"] == "reversing"
    assert json.loads(run("connectivity", "a4").output)["connectivity"] == 3
    assert json.loads(run("cutspace", "a4").output)["rank"] == 11


def test_covariant():
    res = run("covariant", "a4")
    assert res.exit_code == 0
    assert json.loads(res.output)["covariant"] is True


def test_contract():
    res = run("contract", "z4xz2", "--by", "(0,1)")
    assert res.exit_code == 0
    data = json.loads(res.output)
    assert len(data["vertices"]) == 2


def test_augment():
    res = run("augment", "a4")
    assert res.exit_code == 0
    data = json.loads(res.output)
    assert data["connectivity"] >= 3 and data["genus"] == 0


def test_ends():
    res = run("ends", "--family", "z-cross-z3", "-r", "2", "-R", "6")
    assert res.exit_code == 0
    assert json.loads(res.output)["class"] == "2"


def test_corpus_verify_all_and_case():
    res = run("corpus", "verify")
    assert res.exit_code == 0
    assert "FAIL" not in res.output
    res = run("corpus", "verify", "--case", "a4-truncated-tetrahedron")
    assert res.exit_code == 0


def test_corpus_verify_json_deterministic():
    a = run("corpus", "verify", "--json")
    b = run("corpus", "verify", "--json")
    assert a.exit_code == b.exit_code == 0
    assert a.output == b.output


def test_usage_error_exit_2():
    assert run("build").exit_code == 2
    assert run("build", "no-such-group").exit_code == 2
