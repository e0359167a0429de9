"""Presentation DSL: ``<a,b | a^4=1, b^2=a^2, b^-1*a*b=a^-1>``.

Words are tuples of ``(generator index, exponent)`` factors, normalized so
that adjacent factors never share a generator and no exponent is zero.
Multiplication reads left to right.
"""

from __future__ import annotations

import re
from dataclasses import dataclass

Word = tuple[tuple[int, int], ...]

IDENTITY: Word = ()


class PresentationError(ValueError):
    """Malformed presentation or word text."""

    def __init__(self, message: str, text: str = "", pos: int | None = None):
        self.text = text
        self.pos = pos
        if pos is not None:
            line = text.count("\n", 0, pos) + 1
            col = pos - (text.rfind("\n", 0, pos) + 1) + 1
            self.line, self.column = line, col
            message = f"{message} (line {line}, column {col})"
        else:
            self.line = self.column = None
        super().__init__(message)


@dataclass(frozen=True)
class Presentation:
    generators: tuple[str, ...]
    relators: tuple[Word, ...]

    def __post_init__(self):
        if not self.generators:
            raise PresentationError("presentation needs at least one generator")
        if len(set(self.generators)) != len(self.generators):
            raise PresentationError("duplicate generator names")
        for rel in self.relators:
            for g, e in rel:
                if not 0 <= g < len(self.generators) or e == 0:
                    raise PresentationError(f"relator factor {(g, e)} out of range")

    def __str__(self) -> str:
        rels = ", ".join(format_word(r, self.generators) for r in self.relators)
        return f"<{','.join(self.generators)} | {rels}>"


def normalize(factors) -> Word:
    """Free reduction: merge adjacent equal generators, drop zero exponents."""
    out: list[list[int]] = []
    for g, e in factors:
        if e == 0:
            continue
        if out and out[-1][0] == g:
            out[-1][1] += e
            if out[-1][1] == 0:
                out.pop()
        else:
            out.append([g, e])
    return tuple((g, e) for g, e in out)


def inverse(w: Word) -> Word:
    return tuple((g, -e) for g, e in reversed(w))


def concat(*words: Word) -> Word:
    return normalize(f for w in words for f in w)


def power(w: Word, k: int) -> Word:
    if k < 0:
        w, k = inverse(w), -k
    return normalize(f for _ in range(k) for f in w)


_TOKEN = re.compile(r"\s*(?:(?P<ident>[A-Za-z]+)|(?P<int>-?\d+)|(?P<op>[<>|,=*^()]))")


def _tokenize(text: str) -> list[tuple[str, str, int]]:
    tokens = []
    pos = 0
    n = len(text)
    while pos < n:
        if text[pos].isspace():
            pos += 1
            continue
        m = _TOKEN.match(text, pos)
        if not m:
            raise PresentationError(f"unexpected character {text[pos]!r}", text, pos)
        kind = m.lastgroup
        start = m.start(kind)
        tokens.append((kind, m.group(kind), start))
        pos = m.end()
    tokens.append(("end", "", n))
    return tokens


class _Parser:
    def __init__(self, text: str, gens: tuple[str, ...] | None = None):
        self.text = text
        self.tokens = _tokenize(text)
        self.i = 0
        self.gens: tuple[str, ...] = gens or ()

    @property
    def index(self) -> dict[str, int]:
        return {name: i for i, name in enumerate(self.gens)}

    def peek(self):
        return self.tokens[self.i]

    def take(self, kind: str | None = None, value: str | None = None):
        tok = self.tokens[self.i]
        if (kind and tok[0] != kind) or (value and tok[1] != value):
            want = value or kind
            got = tok[1] or "end of input"
            raise PresentationError(f"expected {want!r}, got {got!r}", self.text, tok[2])
        self.i += 1
        return tok

    def presentation(self) -> Presentation:
        self.take("op", "<")
        names = [self.take("ident")]
        while self.peek()[1] == ",":
            self.take()
            names.append(self.take("ident"))
        seen = set()
        for _, name, pos in names:
            if name in seen:
                raise PresentationError(f"duplicate generator {name!r}", self.text, pos)
            seen.add(name)
        self.gens = tuple(n for _, n, _ in names)
        self.take("op", "|")
        relators = self.relation()
        while self.peek()[1] == ",":
            self.take()
            relators.extend(self.relation())
        self.take("op", ">")
        self.take("end")
        return Presentation(self.gens, tuple(relators))

    def relation(self) -> list[Word]:
        # chains "u = v = w" become u*v^-1, v*w^-1
        sides = [self.word()]
        while self.peek()[1] == "=":
            self.take()
            sides.append(self.word())
        if len(sides) == 1:
            return [sides[0]]
        return [concat(u, inverse(v)) for u, v in zip(sides, sides[1:])]

    def word(self) -> Word:
        factors = list(self.term())
        while True:
            tok = self.peek()
            if tok[1] == "*":
                self.take()
                factors.extend(self.term())
            elif tok[0] == "ident" or tok[1] == "(":
                factors.extend(self.term())
            else:
                break
        return normalize(factors)

    def _exponent(self) -> int:
        if self.peek()[1] != "^":
            return 1
        self.take()
        tok = self.take("int")
        e = int(tok[1])
        if e == 0:
            raise PresentationError("zero exponent", self.text, tok[2])
        return e

    def term(self) -> list[tuple[int, int]]:
        tok = self.peek()
        if tok[1] == "(":
            self.take()
            inner = self.word()
            self.take("op", ")")
            return list(power(inner, self._exponent()))
        if tok[0] == "int" and tok[1] == "1":
            self.take()
            self._exponent()
            return []
        _, name, pos = self.take("ident")
        index = self.index
        if name in index:
            parts = [index[name]]
        elif all(len(g) == 1 for g in self.gens) and all(c in index for c in name):
            # juxtaposed single-letter generators: "ab" = "a*b"
            parts = [index[c] for c in name]
        else:
            raise PresentationError(f"unknown generator {name!r}", self.text, pos)
        e = self._exponent()
        return [(g, 1) for g in parts[:-1]] + [(parts[-1], e)]


def parse_presentation(text: str) -> Presentation:
    """Parse ``<gens | relations>``; ``u = v`` is stored as the relator ``u*v^-1``."""
    return _Parser(text).presentation()


def parse_word(text: str, gens) -> Word:
    gens = tuple(gens)
    if not gens:
        raise PresentationError("no generators to parse against")
    p = _Parser(text, gens)
    w = p.word()
    p.take("end")
    return w


def parse_word_list(text: str, gens) -> list[Word]:
    """Comma-separated words, e.g. ``"a^2, a*b"``."""
    gens = tuple(gens)
    p = _Parser(text, gens)
    words = [p.word()]
    while p.peek()[1] == ",":
        p.take()
        words.append(p.word())
    p.take("end")
    return words


def format_word(w: Word, gens) -> str:
    if not w:
        return "1"
    parts = []
    for g, e in w:
        parts.append(gens[g] if e == 1 else f"{gens[g]}^{e}")
    return "*".join(parts)
