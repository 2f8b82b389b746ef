"""Command-line front end.

Groups are named either by a builtin registry entry (`a4`, `z4xz2`,
whose elements carry tuple names that the presentation grammar cannot
spell) or by a path to a `.grp` presentation file, which is then coset-
enumerated.  All JSON output is deterministic; the randomized property
suites live in the test suite and honour PCL_SEED.
"""

from __future__ import annotations

import json
import sys
from importlib import resources
from pathlib import Path

import click

from . import corpus as corpus_mod
from .augment import ladder_augment, vertex_connectivity
from .cayley import (InfiniteFamilySpec, build_amalgam_ball, build_ball,
                     build_cayley, interior_degrees)
from .covariance import (NonPlanarError, is_covariant, orientation_table,
                         whitney_unique)
from .cyclecut import star_generation_check
from .embedding import (KuratowskiWitness, classify_faces, planarity_test,
                        search_consistent_embeddings)
from .ends import classify_ends
from .groups import GroupModel, a4_model, coset_enumerate, z4xz2_model
from .layout import to_svg
from .presentation import PresentationError, parse_presentation

BUILTIN_GROUPS = {
    "a4": (a4_model, ["k", "r"]),
    "z4xz2": (z4xz2_model, ["(1,0)", "(0,1)"]),
}


def _echo_json(data: dict) -> None:
    click.echo(json.dumps(data, sort_keys=True, indent=2))


def _load_group(spec: str, max_cosets: int) -> tuple[GroupModel, list[str]]:
    if spec in BUILTIN_GROUPS:
        factory, gens = BUILTIN_GROUPS[spec]
        return factory(), gens
    path = Path(spec)
    if not path.exists():
        raise click.UsageError(
            f"{spec!r} is neither a builtin group ({', '.join(BUILTIN_GROUPS)}) "
            f"nor a presentation file")
    try:
        p = parse_presentation(path.read_text())
    except PresentationError as exc:
        raise click.UsageError(f"{spec}: {exc}")
    return coset_enumerate(p, max_cosets), list(p.generators)


def _split_gens(gens: str | None, default: list[str]) -> list[str]:
    """Split a comma-separated generator list, keeping tuple names like
    (1,0) intact."""
    if gens is None:
        return default
    out, depth, cur = [], 0, []
    for ch in gens:
        if ch == "," and depth == 0:
            out.append("".join(cur).strip())
            cur = []
            continue
        depth += ch == "("
        depth -= ch == ")"
        cur.append(ch)
    out.append("".join(cur).strip())
    return [s for s in out if s]


def _family_spec(family: str, rank: int, steps: str, n: int) -> InfiniteFamilySpec:
    if family == "free":
        return InfiniteFamilySpec("free", {"rank": rank})
    if family == "z":
        return InfiniteFamilySpec(
            "z", {"steps": tuple(int(s) for s in steps.split(","))})
    if family == "cn-cross-z":
        return InfiniteFamilySpec("cn-cross-z", {"n": n})
    if family == "amalgam":
        a, b = a4_model(), z4xz2_model()
        return InfiniteFamilySpec("amalgam", {
            "a": a, "b": b, "gens_a": ["k", "r"],
            "gens_b": ["(1,0)", "(0,1)"],
            "b_a": a.element("k"), "b_b": b.element("(0,1)")})
    return InfiniteFamilySpec(family)


FAMILIES = ["free", "z", "z-cross-z", "z-cross-z3", "cn-cross-z", "amalgam"]


def _write_renders(g, emb, dot: str | None, svg: str | None) -> None:
    if dot:
        Path(dot).write_text(g.to_dot())
    if svg:
        if emb is None:
            raise click.UsageError("SVG rendering needs a planar embedding")
        Path(svg).write_text(to_svg(g, emb))


@click.group()
def main() -> None:
    """Planar Cayley graph toolkit."""


@main.command("parse")
@click.argument("file", type=click.Path(exists=True))
def parse_cmd(file: str) -> None:
    """Parse a .grp presentation and echo its canonical form."""
    try:
        p = parse_presentation(Path(file).read_text())
    except PresentationError as exc:
        raise click.UsageError(f"{file}: {exc}")
    click.echo(p.emit())


@main.command("enumerate")
@click.argument("file", type=click.Path(exists=True))
@click.option("--max-cosets", default=4096, show_default=True)
def enumerate_cmd(file: str, max_cosets: int) -> None:
    """Coset-enumerate a presentation into a finite group model."""
    g, gens = _load_group(file, max_cosets)
    _echo_json({
        "schema": "pcl/1",
        "name": g.name,
        "order": g.order,
        "elements": g.element_names,
        "generators": gens,
    })


@main.command("build")
@click.argument("group", required=False)
@click.option("--gens", help="comma-separated generator symbols")
@click.option("--complete", "mode", flag_value="complete", default=True)
@click.option("--ball", type=int, help="build the radius-R ball instead")
@click.option("--amalgam", is_flag=True,
              help="ball of the bundled A4 *_Z2 Z4xZ2 amalgam")
@click.option("--family", type=click.Choice(FAMILIES),
              help="ball of a bundled infinite family")
@click.option("--rank", default=2, show_default=True, help="free-group rank")
@click.option("--steps", default="1", show_default=True, help="Z step sizes")
@click.option("-n", default=3, show_default=True, help="Cn factor order")
@click.option("--max-cosets", default=4096, show_default=True)
@click.option("--dot", type=click.Path(), help="also write DOT here")
@click.option("--svg", type=click.Path(), help="also write an SVG drawing here")
def build_cmd(group, gens, mode, ball, amalgam, family, rank, steps, n,
              max_cosets, dot, svg) -> None:
    """Build a Cayley multigraph (complete graph or truncated ball)."""
    if amalgam or family:
        if ball is None:
            raise click.UsageError("--amalgam/--family require --ball R")
        if amalgam:
            a, b = a4_model(), z4xz2_model()
            g = build_amalgam_ball(a, "k", b, "(0,1)", ["k", "r"],
                                   ["(1,0)", "(0,1)"], ball)
        else:
            g = build_ball(_family_spec(family, rank, steps, n), ball)
        data = g.to_json_dict()
        data["interior_degrees"] = sorted(interior_degrees(g))
        result = planarity_test(g)
        emb = None if isinstance(result, KuratowskiWitness) else result
        _write_renders(g, emb, dot, svg)
        _echo_json(data)
        return
    if group is None:
        raise click.UsageError("a group name or .grp file is required")
    model, default_gens = _load_group(group, max_cosets)
    cg = build_cayley(model, _split_gens(gens, default_gens))
    if ball is not None:
        raise click.UsageError("--ball applies to --family/--amalgam builds")
    result = planarity_test(cg)
    emb = None if isinstance(result, KuratowskiWitness) else result
    _write_renders(cg, emb, dot, svg)
    _echo_json(cg.to_json_dict())


@main.command("embed")
@click.argument("group")
@click.option("--gens")
@click.option("--search-consistent", is_flag=True,
              help="search covariant label orders and spins")
@click.option("--max-cosets", default=4096, show_default=True)
def embed_cmd(group, gens, search_consistent, max_cosets) -> None:
    """Embed a Cayley graph; report rotation system and faces."""
    model, default_gens = _load_group(group, max_cosets)
    cg = build_cayley(model, _split_gens(gens, default_gens))
    if search_consistent:
        results = search_consistent_embeddings(cg)
        _echo_json({
            "schema": "pcl/1",
            "consistent_embeddings": len(results),
            "face_vectors": [
                {str(k): v for k, v in sorted(emb.face_vector().items())}
                for _, _, emb in results],
        })
        return
    result = planarity_test(cg)
    if isinstance(result, KuratowskiWitness):
        _echo_json({"schema": "pcl/1", "planar": False,
                    "witness": {"kind": result.kind,
                                "branch_vertices": result.branch_vertices,
                                "paths": result.paths}})
        sys.exit(1)
    data = result.to_json_dict()
    data["planar"] = True
    _echo_json(data)


@main.command("faces")
@click.argument("group", required=False)
@click.option("--gens")
@click.option("--family", type=click.Choice(FAMILIES))
@click.option("--amalgam", is_flag=True)
@click.option("--ball", type=int)
@click.option("--rank", default=2, show_default=True)
@click.option("--steps", default="1", show_default=True)
@click.option("-n", default=3, show_default=True)
@click.option("--max-cosets", default=4096, show_default=True)
def faces_cmd(group, gens, family, amalgam, ball, rank, steps, n,
              max_cosets) -> None:
    """Face vector of a complete graph, or face report of a ball."""
    if amalgam or family:
        if ball is None:
            raise click.UsageError("--amalgam/--family require --ball R")
        if amalgam:
            a, b = a4_model(), z4xz2_model()
            g = build_amalgam_ball(a, "k", b, "(0,1)", ["k", "r"],
                                   ["(1,0)", "(0,1)"], ball)
        else:
            g = build_ball(_family_spec(family, rank, steps, n), ball)
        result = planarity_test(g)
        if isinstance(result, KuratowskiWitness):
            _echo_json({"schema": "pcl/1", "planar": False})
            sys.exit(1)
        data = classify_faces(g, result).to_json_dict()
        data["schema"] = "pcl/1"
        _echo_json(data)
        return
    if group is None:
        raise click.UsageError("a group name or .grp file is required")
    model, default_gens = _load_group(group, max_cosets)
    cg = build_cayley(model, _split_gens(gens, default_gens))
    result = planarity_test(cg)
    if isinstance(result, KuratowskiWitness):
        _echo_json({"schema": "pcl/1", "planar": False})
        sys.exit(1)
    _echo_json({
        "schema": "pcl/1",
        "planar": True,
        "face_vector": {str(k): v
                        for k, v in sorted(result.face_vector().items())},
        "genus": result.genus,
    })


@main.command("covariant")
@click.argument("group")
@click.option("--gens")
@click.option("--max-cosets", default=4096, show_default=True)
def covariant_cmd(group, gens, max_cosets) -> None:
    """Check that the canonical embedding is covariant under the action."""
    model, default_gens = _load_group(group, max_cosets)
    cg = build_cayley(model, _split_gens(gens, default_gens))
    try:
        emb = whitney_unique(cg)
    except NonPlanarError as exc:
        _echo_json({"schema": "pcl/1", "covariant": False,
                    "reason": f"non-planar ({exc.witness.kind})"})
        sys.exit(1)
    verdict = is_covariant(cg, emb)
    if verdict is True:
        _echo_json({"schema": "pcl/1", "covariant": True})
    else:
        _echo_json({"schema": "pcl/1", "covariant": False,
                    "generator": verdict.generator,
                    "face_darts": list(verdict.face_darts)})
        sys.exit(1)


@main.command("orient")
@click.argument("group")
@click.option("--gens")
@click.option("--max-cosets", default=4096, show_default=True)
def orient_cmd(group, gens, max_cosets) -> None:
    """Orientation class (preserving/reversing) of every element."""
    model, default_gens = _load_group(group, max_cosets)
    cg = build_cayley(model, _split_gens(gens, default_gens))
    _echo_json({"schema": "pcl/1", "orientation": orientation_table(cg)})


@main.command("contract")
@click.argument("group")
@click.option("--gens")
@click.option("--by", "by", required=True,
              help="element generating the cyclic subgroup to contract by")
@click.option("--max-cosets", default=4096, show_default=True)
def contract_cmd(group, gens, by, max_cosets) -> None:
    """Babai-contract Cay(G,S) by the left action of a cyclic subgroup."""
    from .actions import GraphAction, babai_contract
    from .cayley import dart_permutation
    from .groups import cyclic_group
    model, default_gens = _load_group(group, max_cosets)
    cg = build_cayley(model, _split_gens(gens, default_gens))
    x = model.element(by)
    k = model.element_order(x)
    sub = cyclic_group(k, by)
    vperms, dperms = [], []
    power = model.identity
    for _ in range(k):
        vp, dp = dart_permutation(cg, power)
        vperms.append(vp)
        dperms.append(dp)
        power = model.mul(power, x)
    action = GraphAction(sub, cg, vperms, dperms)
    quotient, dom = babai_contract(action)
    data = quotient.to_json_dict()
    data["derived_generators"] = quotient.generators
    data["fundamental_domain"] = dom.vertices
    _echo_json(data)


@main.command("augment")
@click.argument("group")
@click.option("--gens")
@click.option("--max-cosets", default=4096, show_default=True)
def augment_cmd(group, gens, max_cosets) -> None:
    """Ladder-augment the canonical plane embedding to 3-connectivity."""
    model, default_gens = _load_group(group, max_cosets)
    cg = build_cayley(model, _split_gens(gens, default_gens))
    result = planarity_test(cg)
    if isinstance(result, KuratowskiWitness):
        raise click.UsageError("augmentation needs a planar input graph")
    aug, emb = ladder_augment(cg, result)
    data = aug.to_json_dict()
    data["connectivity"] = vertex_connectivity(aug)
    data["genus"] = emb.genus
    _echo_json(data)


@main.command("connectivity")
@click.argument("group")
@click.option("--gens")
@click.option("--max-cosets", default=4096, show_default=True)
def connectivity_cmd(group, gens, max_cosets) -> None:
    """Exact vertex connectivity of a Cayley graph."""
    model, default_gens = _load_group(group, max_cosets)
    cg = build_cayley(model, _split_gens(gens, default_gens))
    _echo_json({"schema": "pcl/1", "connectivity": vertex_connectivity(cg)})


@main.command("cutspace")
@click.argument("group")
@click.option("--gens")
@click.option("--max-cosets", default=4096, show_default=True)
def cutspace_cmd(group, gens, max_cosets) -> None:
    """GF(2) rank of the orbit of the identity's vertex-star cut."""
    model, default_gens = _load_group(group, max_cosets)
    cg = build_cayley(model, _split_gens(gens, default_gens))
    rep = star_generation_check(cg)
    data = rep.to_json_dict()
    data["schema"] = "pcl/1"
    _echo_json(data)
    if not rep.ok:
        sys.exit(1)


@main.command("ends")
@click.option("--family", type=click.Choice(FAMILIES), required=True)
@click.option("-r", "inner", default=2, show_default=True)
@click.option("-R", "outer", default=5, show_default=True)
@click.option("--rank", default=2, show_default=True)
@click.option("--steps", default="1", show_default=True)
@click.option("-n", default=3, show_default=True)
def ends_cmd(family, inner, outer, rank, steps, n) -> None:
    """Classify the ends of a bundled family from nested balls."""
    spec = _family_spec(family, rank, steps, n)
    report = classify_ends(spec, inner, outer)
    _echo_json(report.to_json_dict())


@main.group("corpus")
def corpus_group() -> None:
    """Bundled verification corpus."""


@corpus_group.command("verify")
@click.option("--case", "case", type=click.Choice(sorted(corpus_mod.CASES)))
@click.option("--json", "as_json", is_flag=True)
def corpus_verify(case, as_json) -> None:
    """Re-verify the bundled worked-example claims; exit 1 on failure."""
    report = corpus_mod.verify(case)
    if as_json:
        _echo_json(report)
    else:
        cases = [report] if case else report["cases"]
        for c in cases:
            status = "PASS" if c["pass"] else "FAIL"
            click.echo(f"{status}  {c['case']}")
            for cl in c["claims"]:
                if not cl["ok"]:
                    click.echo(f"      claim {cl['name']}: expected "
                               f"{cl['expected']}, got {cl['actual']}")
    if not report["pass"]:
        sys.exit(1)


def grp_resource(name: str) -> str:
    """Text of a bundled .grp presentation file."""
    return (resources.files("pcl") / "data" / name).read_text()


if __name__ == "__main__":
    main()
