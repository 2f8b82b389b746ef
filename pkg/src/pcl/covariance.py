"""Covariance of embeddings under the left action, orientation classes,
and Whitney-unique canonical embeddings of 3-connected planar graphs.

Facial-walk equality is cyclic-sequence equality up to rotation and
reversal; reversal is allowed because orientation-reversing automorphisms
reverse face traversal (a reversed facial walk runs through the twin
darts backwards).
"""

from __future__ import annotations

from dataclasses import dataclass

from .augment import vertex_connectivity
from .cayley import dart_permutation
from .embedding import Embedding, KuratowskiWitness, planarity_test, trace_faces
from .graph import CayleyGraph, MultiGraph, twin


class NotThreeConnectedError(ValueError):
    pass


class NonPlanarError(ValueError):
    def __init__(self, witness: KuratowskiWitness):
        super().__init__(f"graph is not planar ({witness.kind} subdivision)")
        self.witness = witness


class TruncatedGraphError(ValueError):
    """Operation defined only for complete (non-truncated) Cayley graphs."""


@dataclass
class CovarianceViolation:
    generator: str
    face_darts: tuple[int, ...]  # a facial walk whose image is not facial


def _face_key(darts: tuple[int, ...]) -> tuple[int, ...]:
    """Canonical form of a facial walk up to rotation and reversal."""
    rev = tuple(twin(d) for d in reversed(darts))
    best = None
    for seq in (darts, rev):
        n = len(seq)
        for i in range(n):
            cand = seq[i:] + seq[:i]
            if best is None or cand < best:
                best = cand
    return best


def is_covariant(cg: CayleyGraph, emb: Embedding) -> bool | CovarianceViolation:
    """True iff every generator's left action maps facial walks onto
    facial walks (as cyclic dart sequences, up to reversal)."""
    if cg.group is None or cg.radius != "complete":
        raise TruncatedGraphError("covariance is ill-defined on truncated balls")
    face_keys = {_face_key(f.darts) for f in emb.faces}
    g = cg.group
    for sym in cg.generators:
        _, dperm = dart_permutation(cg, g.element(sym))
        for f in emb.faces:
            image = tuple(dperm[d] for d in f.darts)
            if _face_key(image) not in face_keys:
                return CovarianceViolation(sym, f.darts)
    return True


def _rotation_encoding(emb: Embedding) -> tuple:
    out = []
    for cycle in emb.rotation:
        n = len(cycle)
        best = min(tuple(cycle[i:] + cycle[:i]) for i in range(n)) if n else ()
        out.append(best)
    return tuple(out)


def whitney_unique(g: MultiGraph) -> Embedding:
    """Canonical embedding of a 3-connected planar graph.

    Unique up to reflection by Whitney's theorem; of the two mirror
    images, the one with the lexicographically least rotation encoding is
    returned.  Raises NotThreeConnectedError / NonPlanarError otherwise.
    """
    if vertex_connectivity(g) < 3:
        raise NotThreeConnectedError("graph is not 3-connected")
    result = planarity_test(g)
    if isinstance(result, KuratowskiWitness):
        raise NonPlanarError(result)
    mirror = result.mirror()
    if _rotation_encoding(mirror) < _rotation_encoding(result):
        return mirror
    return result


def orientation_class(cg: CayleyGraph, x: int | str,
                      emb: Embedding | None = None) -> str:
    """"preserving" or "reversing" for left multiplication by x.

    Defined on finite, planar, 3-connected Cayley graphs, where the
    embedding is Whitney-unique so every automorphism either fixes the
    rotation system or maps it to its mirror.
    """
    if isinstance(x, str):
        x = cg.group.element(x)
    if emb is None:
        emb = whitney_unique(cg)
    vperm, dperm = dart_permutation(cg, x)
    verdicts = set()
    for v in range(cg.n_vertices):
        image = [dperm[d] for d in emb.rotation[v]]
        target = emb.rotation[vperm[v]]
        if _cyclic_equal(image, target):
            verdicts.add("preserving")
        elif _cyclic_equal(list(reversed(image)), target):
            verdicts.add("reversing")
        else:
            raise AssertionError(
                f"element {x} maps a rotation to neither itself nor its mirror")
        if len(verdicts) > 1:
            raise AssertionError(f"element {x} has mixed orientation behaviour")
    return verdicts.pop()


def _cyclic_equal(a: list[int], b: list[int]) -> bool:
    if len(a) != len(b):
        return False
    if not a:
        return True
    n = len(a)
    for i in range(n):
        if a == b[i:] + b[:i]:
            return True
    return False


def orientation_table(cg: CayleyGraph) -> dict[str, str]:
    """Orientation class of every group element, keyed by element name."""
    emb = whitney_unique(cg)
    return {cg.group.element_names[x]: orientation_class(cg, x, emb)
            for x in range(cg.group.order)}
