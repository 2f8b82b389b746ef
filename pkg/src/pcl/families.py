"""Normal-form engines for the bundled infinite group families.

Each engine exposes the identity, the generating multiset (with labels and
involution flags), and right multiplication on canonical normal forms.
Vertex names are the rendered normal forms, so balls are byte-stable
across runs.

Families: free groups (reduced words, shortlex names), finite-cyclic x Z
and Z x Z (pair normal form), and amalgamated products of two finite
groups over a common involution (alternating coset-representative normal
form; trivial amalgamation subgroup gives the free product).
"""

from __future__ import annotations

from dataclasses import dataclass

from .groups import GroupModel


@dataclass(frozen=True)
class GenSpec:
    label: str
    is_involution: bool


class Engine:
    """Interface: identity(), gens() and apply(key, label, sign)."""

    def identity(self):
        raise NotImplementedError

    def gens(self) -> list[GenSpec]:
        raise NotImplementedError

    def apply(self, key, label: str, sign: int):
        raise NotImplementedError

    def name(self, key) -> str:
        raise NotImplementedError


class FreeGroupEngine(Engine):
    """Free group of given rank; keys are freely reduced words.

    Generators are a, b, c, ...; inverse letters render with a trailing "'".
    """

    def __init__(self, rank: int):
        if not 1 <= rank <= 26:
            raise ValueError("rank must be between 1 and 26")
        self.rank = rank
        self.labels = [chr(ord("a") + i) for i in range(rank)]

    def identity(self):
        return ()

    def gens(self) -> list[GenSpec]:
        return [GenSpec(l, False) for l in self.labels]

    def apply(self, key, label, sign):
        if key and key[-1] == (label, -sign):
            return key[:-1]
        return key + ((label, sign),)

    def name(self, key) -> str:
        if not key:
            return "e"
        return "".join(l if s > 0 else l + "'" for l, s in key)


class ZEngine(Engine):
    """The integers with generating set {1} (or {1, 2, ...})."""

    def __init__(self, steps: tuple[int, ...] = (1,)):
        self.steps = steps

    def identity(self):
        return 0

    def gens(self) -> list[GenSpec]:
        return [GenSpec(f"z{s}" if s != 1 else "z", False) for s in self.steps]

    def apply(self, key, label, sign):
        step = 1 if label == "z" else int(label[1:])
        return key + sign * step

    def name(self, key) -> str:
        return str(key)


class ZxZEngine(Engine):
    """Z x Z with the standard two generators (the grid)."""

    def identity(self):
        return (0, 0)

    def gens(self) -> list[GenSpec]:
        return [GenSpec("x", False), GenSpec("y", False)]

    def apply(self, key, label, sign):
        m, n = key
        if label == "x":
            return (m + sign, n)
        return (m, n + sign)

    def name(self, key) -> str:
        return f"({key[0]},{key[1]})"


class CnxZEngine(Engine):
    """Direct product of a finite cyclic group with Z; pair normal form."""

    def __init__(self, n: int):
        if n < 2:
            raise ValueError("cyclic factor must have order >= 2")
        self.n = n

    def identity(self):
        return (0, 0)

    def gens(self) -> list[GenSpec]:
        return [GenSpec("z", False), GenSpec("r", self.n == 2)]

    def apply(self, key, label, sign):
        z, c = key
        if label == "z":
            return (z + sign, c)
        return (z, (c + sign) % self.n)

    def name(self, key) -> str:
        return f"({key[0]},{key[1]})"


class AmalgamEngine(Engine):
    """A *_C B for finite A, B with C trivial or generated by an involution.

    Keys are normal forms c . t_1 . t_2 ... with c in C and the t_i proper
    right-coset representatives of C alternating between the factors (the
    standard normal form for amalgamated products).  Right multiplication
    renormalizes by pushing C-components leftwards through the syllables.
    """

    def __init__(self, a: GroupModel, b: GroupModel,
                 gens_a: list[str], gens_b: list[str],
                 b_a: int | None = None, b_b: int | None = None,
                 amalgam_label: str = "b"):
        if (b_a is None) != (b_b is None):
            raise ValueError("amalgamation element must be given in both factors")
        if b_a is not None:
            if a.mul(b_a, b_a) != 0 or b_a == 0:
                raise ValueError(
                    "amalgamation element must be an involution in the first factor")
            if b.mul(b_b, b_b) != 0 or b_b == 0:
                raise ValueError(
                    "amalgamation element must be an involution in the second factor")
        self.factors = (a, b)
        self.c_elt = (b_a, b_b)  # image of the amalgam involution per factor
        self.amalgam_label = amalgam_label
        self.gen_elts: list[tuple[str, int, int, bool]] = []  # label, factor, elt, invol
        merged = False
        for fi, (model, gens) in enumerate(((a, gens_a), (b, gens_b))):
            for sym in gens:
                x = model.element(sym)
                if b_a is not None and x == self.c_elt[fi]:
                    if not merged:
                        self.gen_elts.append((amalgam_label, 0, b_a, True))
                        merged = True
                    continue
                invol = x != 0 and model.mul(x, x) == 0
                label = sym if fi == 0 else sym
                self.gen_elts.append((label, fi, x, invol))
        labels = [g[0] for g in self.gen_elts]
        if len(set(labels)) != len(labels):
            # disambiguate colliding symbols between the two factors
            self.gen_elts = [
                (f"{lab}@{fi}" if labels.count(lab) > 1 else lab, fi, x, inv)
                for lab, fi, x, inv in self.gen_elts]
        # right-coset representatives: rep(f) = min(f, b*f) by element index
        self.rep: list[list[int]] = []
        self.cpart: list[list[bool]] = []  # True if f = b * rep(f)
        for fi, model in enumerate(self.factors):
            reps, cp = [], []
            for f in range(model.order):
                if b_a is None:
                    reps.append(f)
                    cp.append(False)
                else:
                    other = model.mul(self.c_elt[fi], f)
                    if f <= other:
                        reps.append(f)
                        cp.append(False)
                    else:
                        reps.append(other)
                        cp.append(True)
            self.rep.append(reps)
            self.cpart.append(cp)

    def identity(self):
        return (False, ())

    def gens(self) -> list[GenSpec]:
        return [GenSpec(lab, inv) for lab, _, _, inv in self.gen_elts]

    def _gen(self, label: str) -> tuple[int, int, bool]:
        for lab, fi, x, inv in self.gen_elts:
            if lab == label:
                return fi, x, inv
        raise KeyError(label)

    def _push_left(self, c: bool, syll: list[tuple[int, int]],
                   carry: bool) -> tuple[bool, list[tuple[int, int]]]:
        # multiply the element (c, syll) by the amalgam involution on the right
        if not carry:
            return c, syll
        out = list(syll)
        for i in range(len(out) - 1, -1, -1):
            fi, t = out[i]
            model = self.factors[fi]
            f = model.mul(t, self.c_elt[fi])
            out[i] = (fi, self.rep[fi][f])
            carry = self.cpart[fi][f]
            if not carry:
                return c, out
        return c ^ carry, out

    def apply(self, key, label, sign):
        c, syll = key
        syll = list(syll)
        fi, x, invol = self._gen(label)
        if sign < 0:
            x = self.factors[fi].inv(x)
        if label == self.amalgam_label and self.c_elt[0] is not None:
            c, syll = self._push_left(c, syll, True)
            return (c, tuple(syll))
        model = self.factors[fi]
        if syll and syll[-1][0] == fi:
            _, t = syll.pop()
            u = model.mul(t, x)
        else:
            u = x
        # decompose u = c_u * t_u in its factor
        t_u = self.rep[fi][u]
        c_u = self.cpart[fi][u]
        if t_u == 0:
            c, syll = self._push_left(c, syll, c_u)
        else:
            c, syll = self._push_left(c, syll, c_u)
            syll.append((fi, t_u))
        return (c, tuple(syll))

    def name(self, key) -> str:
        c, syll = key
        parts = []
        if c:
            parts.append(self.amalgam_label)
        for fi, t in syll:
            nm = self.factors[fi].element_names[t]
            parts.append(f"{nm}@{fi}" if self._name_collides(nm) else nm)
        if not parts:
            return "e"
        return ".".join(parts)

    def _name_collides(self, nm: str) -> bool:
        a, b = self.factors
        return nm in a.element_names and nm in b.element_names


def engine_for(tag: str, **params) -> Engine:
    """Factory keyed by family tag (used by the CLI and the ends classifier)."""
    if tag == "free":
        return FreeGroupEngine(params.get("rank", 2))
    if tag == "z":
        return ZEngine(tuple(params.get("steps", (1,))))
    if tag == "z-cross-z":
        return ZxZEngine()
    if tag == "z-cross-z3":
        return CnxZEngine(3)
    if tag == "cn-cross-z":
        return CnxZEngine(params["n"])
    if tag in ("amalgam", "free-product"):
        return AmalgamEngine(**{k: v for k, v in params.items()})
    raise ValueError(f"unsupported family tag {tag!r}")
