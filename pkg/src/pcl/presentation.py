"""Group presentations: grammar, parsing, free reduction.

Grammar (UTF-8, ``#`` line comments, whitespace-insensitive)::

    presentation := "group" [name] "{" "gens:" ident+ ";"
                    "rels:" word { "," word } ";"
                    [ "involutions:" ident+ ";" ] "}"
    word   := factor { "*" factor }
    factor := ( ident | "(" word ")" ) [ "^" signed-int ]

Powers are expanded before storage, so ``(k*r)^3`` is stored as the
six-letter relator k r k r k r.  Repeated generator names in the gens
clause declare a multiset generating set and are renamed ``g#1``, ``g#2``
on parsing (a local convention; such generators cannot appear in relators
by their base name).
"""

from __future__ import annotations

from dataclasses import dataclass, field


class PresentationError(ValueError):
    """Malformed presentation text or inconsistent presentation data."""

    def __init__(self, message: str, line: int | None = None,
                 col: int | None = None):
        if line is not None:
            message = f"{message} (line {line}, column {col})"
        super().__init__(message)
        self.line = line
        self.col = col


Letter = tuple[str, int]  # (generator symbol, sign in {+1, -1})


@dataclass(frozen=True)
class Word:
    letters: tuple[Letter, ...] = ()

    def __iter__(self):
        return iter(self.letters)

    def __len__(self) -> int:
        return len(self.letters)

    def inverse(self) -> "Word":
        return Word(tuple((sym, -sg) for sym, sg in reversed(self.letters)))

    def __mul__(self, other: "Word") -> "Word":
        return Word(self.letters + other.letters)

    def __str__(self) -> str:
        if not self.letters:
            return "1"
        n = len(self.letters)
        # emit powers in factored form: k k -> k^2, k r k r k r -> (k*r)^3
        for p in range(1, n):
            if n % p == 0 and self.letters == self.letters[:p] * (n // p):
                base = Word(self.letters[:p])
                exp = n // p
                if p == 1:
                    sym, sg = self.letters[0]
                    return f"{sym}^{exp if sg > 0 else -exp}"
                return f"({base})^{exp}"
        parts = []
        for sym, sg in self.letters:
            parts.append(sym if sg > 0 else f"{sym}^-1")
        return "*".join(parts)


@dataclass
class Presentation:
    name: str
    generators: list[str]
    relators: list[Word]
    involutions: list[str] = field(default_factory=list)

    def __post_init__(self) -> None:
        seen = set()
        for g in self.generators:
            if g in seen:
                raise PresentationError(f"duplicate generator name {g!r}")
            seen.add(g)
        for inv in self.involutions:
            if inv not in seen:
                raise PresentationError(f"undeclared involution {inv!r}")
        for rel in self.relators:
            for sym, _ in rel:
                if sym not in seen:
                    raise PresentationError(
                        f"undeclared generator {sym!r} in relator")

    def all_relators(self) -> list[Word]:
        """Declared relators plus the squares implied by involutions."""
        rels = list(self.relators)
        present = {tuple(r.letters) for r in rels}
        for g in self.involutions:
            sq = ((g, 1), (g, 1))
            if sq not in present:
                rels.append(Word(sq))
        return rels

    def emit(self) -> str:
        """Canonical text form; re-parsing yields an equal Presentation."""
        parts = ["group"]
        if self.name:
            parts.append(self.name)
        parts.append("{")
        parts.append("gens: " + " ".join(self.generators) + ";")
        parts.append("rels: " + ", ".join(str(r) for r in self.relators) + ";")
        if self.involutions:
            parts.append("involutions: " + " ".join(self.involutions) + ";")
        parts.append("}")
        return " ".join(parts)


def reduce_word(p: Presentation, w: Word) -> Word:
    """Free reduction plus involution sign normalization.

    Cancels adjacent inverse pairs and rewrites x^-1 to x for declared
    involutions.  Not a word-problem solver: relators other than the
    involution squares are ignored.  Idempotent.
    """
    invol = set(p.involutions)
    gens = set(p.generators)
    stack: list[Letter] = []
    for sym, sg in w:
        if sym not in gens:
            raise PresentationError(f"unknown symbol {sym!r}")
        if sym in invol:
            sg = 1
        if stack and stack[-1][0] == sym and (
                sym in invol or stack[-1][1] == -sg):
            stack.pop()
        else:
            stack.append((sym, sg))
    return Word(tuple(stack))


# -- parser ----------------------------------------------------------------

_PUNCT = set("{}();,*^:")


class _Lexer:
    def __init__(self, text: str):
        self.text = text
        self.pos = 0
        self.line = 1
        self.col = 1
        self.tokens: list[tuple[str, str, int, int]] = []
        self._scan()
        self.i = 0

    def _advance(self, n: int) -> None:
        for _ in range(n):
            if self.pos < len(self.text) and self.text[self.pos] == "\n":
                self.line += 1
                self.col = 1
            else:
                self.col += 1
            self.pos += 1

    def _scan(self) -> None:
        text = self.text
        while self.pos < len(text):
            c = text[self.pos]
            if c == "#":
                while self.pos < len(text) and text[self.pos] != "\n":
                    self._advance(1)
            elif c.isspace():
                self._advance(1)
            elif c in _PUNCT:
                self.tokens.append((c, c, self.line, self.col))
                self._advance(1)
            elif c.isdigit() or (c == "-" and self.pos + 1 < len(text)
                                 and text[self.pos + 1].isdigit()):
                start, line, col = self.pos, self.line, self.col
                self._advance(1)
                while self.pos < len(text) and text[self.pos].isdigit():
                    self._advance(1)
                self.tokens.append(("int", text[start:self.pos], line, col))
            elif c.isalnum() or c == "_":
                start, line, col = self.pos, self.line, self.col
                while (self.pos < len(text)
                       and (text[self.pos].isalnum()
                            or text[self.pos] in "_#")):
                    self._advance(1)
                self.tokens.append(("ident", text[start:self.pos], line, col))
            else:
                raise PresentationError(f"unexpected character {c!r}",
                                        self.line, self.col)
        self.tokens.append(("eof", "", self.line, self.col))

    def peek(self) -> tuple[str, str, int, int]:
        return self.tokens[self.i]

    def next(self) -> tuple[str, str, int, int]:
        tok = self.tokens[self.i]
        self.i += 1
        return tok

    def expect(self, kind: str, value: str | None = None) -> str:
        k, v, line, col = self.next()
        if k != kind or (value is not None and v != value):
            want = value if value is not None else kind
            raise PresentationError(f"expected {want!r}, got {v!r}", line, col)
        return v


class _Parser:
    def __init__(self, text: str):
        self.lex = _Lexer(text)

    def parse(self) -> Presentation:
        lex = self.lex
        k, v, line, col = lex.next()
        if (k, v) != ("ident", "group"):
            raise PresentationError("expected 'group'", line, col)
        name = ""
        if lex.peek()[0] == "ident":
            name = lex.next()[1]
        lex.expect("{")
        lex.expect("ident", "gens")
        lex.expect(":")
        gens = self._ident_list()
        gens = _rename_multiset(gens)
        lex.expect(";")
        lex.expect("ident", "rels")
        lex.expect(":")
        relators = [self._word()]
        while lex.peek()[0] == ",":
            lex.next()
            relators.append(self._word())
        lex.expect(";")
        involutions: list[str] = []
        if lex.peek()[:2] == ("ident", "involutions"):
            lex.next()
            lex.expect(":")
            involutions = self._ident_list()
            lex.expect(";")
        lex.expect("}")
        k, v, line, col = lex.next()
        if k != "eof":
            raise PresentationError(f"trailing input {v!r}", line, col)
        return Presentation(name, gens, relators, involutions)

    def _ident_list(self) -> list[str]:
        out = []
        while self.lex.peek()[0] == "ident":
            out.append(self.lex.next()[1])
        if not out:
            k, v, line, col = self.lex.peek()
            raise PresentationError("expected identifier", line, col)
        return out

    def _word(self) -> Word:
        w = self._factor()
        while self.lex.peek()[0] == "*":
            self.lex.next()
            w = w * self._factor()
        return w

    def _factor(self) -> Word:
        k, v, line, col = self.lex.next()
        if k == "ident":
            base = Word(((v, 1),))
        elif k == "(":
            base = self._word()
            self.lex.expect(")")
        else:
            raise PresentationError(f"expected generator or '(', got {v!r}",
                                    line, col)
        if self.lex.peek()[0] == "^":
            self.lex.next()
            k, v, line, col = self.lex.next()
            if k != "int":
                raise PresentationError("expected integer exponent", line, col)
            exp = int(v)
            if exp < 0:
                base = base.inverse()
                exp = -exp
            base = Word(base.letters * exp)
        return base


def _rename_multiset(gens: list[str]) -> list[str]:
    from collections import Counter
    counts = Counter(gens)
    if all(c == 1 for c in counts.values()):
        return gens
    seen: dict[str, int] = {}
    out = []
    for g in gens:
        if counts[g] == 1:
            out.append(g)
        else:
            seen[g] = seen.get(g, 0) + 1
            out.append(f"{g}#{seen[g]}")
    return out


def parse_presentation(text: str) -> Presentation:
    """Parse presentation text; raises PresentationError with line/column."""
    return _Parser(text).parse()
