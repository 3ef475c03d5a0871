"""Finite presentations, their text syntax, and the exponent-sum matrix.

Syntax::

    presentation := '<' genlist '|' relist '>'
    genlist      := ident (',' ident)*
    relist       := <empty> | word (',' word)*
    word         := term+            (terms separated by whitespace or '*')
    term         := ident ('^' sint)? | '1'

Example: ``< x, y | x^4 y x y >``.  Relators are freely reduced; one that
reduces to the identity is rejected.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from pathlib import Path
from typing import List, Optional, Sequence, Tuple, Union

from .freegroup import FreeWord, GeneratorSet, reduce_word
from .intlinalg import IntMatrix

PARSE_KINDS = ("unknown-generator", "duplicate-generator", "syntax", "empty-relator")


class ParseError(ValueError):
    """Parse diagnostic; ``position`` is a byte offset into the UTF-8 input."""

    def __init__(self, kind: str, position: int, message: str):
        assert kind in PARSE_KINDS
        self.kind = kind
        self.position = position
        self.message = message
        super().__init__(f"{kind} at byte {position}: {message}")


@dataclass(frozen=True)
class Presentation:
    generators: GeneratorSet
    relators: Tuple[FreeWord, ...] = ()

    def __post_init__(self):
        object.__setattr__(self, "relators", tuple(self.relators))
        for r in self.relators:
            if r.generators != self.generators:
                raise ValueError(f"relator {r} uses a different generator set")
            if r.is_identity:
                raise ValueError("identity relator")

    @classmethod
    def build(cls, names: Sequence[str], relators: Sequence[Union[str, FreeWord]]) -> Presentation:
        gens = GeneratorSet(tuple(names))
        words = [gens.word(r) if isinstance(r, str) else r for r in relators]
        return cls(gens, tuple(words))

    @property
    def n(self) -> int:
        return len(self.generators)

    @property
    def m(self) -> int:
        return len(self.relators)

    def __str__(self) -> str:
        return format_presentation(self)


_TOKEN_RE = re.compile(
    r"(?P<ws>\s+)|(?P<ident>[A-Za-z][A-Za-z0-9_]*)|(?P<int>-?[0-9]+)|(?P<punct>[<>|,^*])"
)


class _Parser:
    def __init__(self, text: str):
        self.text = text
        self.pos = 0
        self.tokens: List[Tuple[str, str, int]] = []
        while self.pos < len(text):
            mt = _TOKEN_RE.match(text, self.pos)
            if mt is None:
                self._fail("syntax", self.pos, f"unexpected character {text[self.pos]!r}")
            kind = mt.lastgroup
            if kind != "ws":
                value = mt.group()
                self.tokens.append((kind if kind != "punct" else value, value, self.pos))
            self.pos = mt.end()
        self.i = 0

    def _fail(self, kind, char_pos, message):
        raise ParseError(kind, len(self.text[:char_pos].encode("utf-8")), message)

    def peek(self):
        if self.i < len(self.tokens):
            return self.tokens[self.i]
        return ("eof", "", len(self.text))

    def take(self, kind):
        tok = self.peek()
        if tok[0] != kind:
            what = "end of input" if tok[0] == "eof" else repr(tok[1])
            self._fail("syntax", tok[2], f"expected {kind!r}, found {what}")
        self.i += 1
        return tok

    def presentation(self) -> Presentation:
        self.take("<")
        names, seen = [], set()
        while True:
            _, name, at = self.take("ident")
            if name in seen:
                self._fail("duplicate-generator", at, f"generator {name!r} declared twice")
            seen.add(name)
            names.append(name)
            if self.peek()[0] != ",":
                break
            self.take(",")
        self.take("|")
        gens = GeneratorSet(tuple(names))
        relators = []
        if self.peek()[0] != ">":
            while True:
                at = self.peek()[2]
                w = self.word(gens)
                if w.is_identity:
                    self._fail("empty-relator", at, "relator reduces to the identity")
                relators.append(w)
                if self.peek()[0] != ",":
                    break
                self.take(",")
        self.take(">")
        tok = self.peek()
        if tok[0] != "eof":
            self._fail("syntax", tok[2], f"trailing content {tok[1]!r}")
        return Presentation(gens, tuple(relators))

    def word(self, gens: GeneratorSet) -> FreeWord:
        raw = []
        n_terms = 0
        while True:
            kind, value, at = self.peek()
            if kind == "*" and n_terms:
                self.i += 1
                kind, value, at = self.peek()
                if kind not in ("ident", "int"):
                    self._fail("syntax", at, "expected a term after '*'")
            if kind == "ident":
                self.i += 1
                if value not in gens.names:
                    self._fail("unknown-generator", at, f"generator {value!r} is not declared")
                e = 1
                if self.peek()[0] == "^":
                    self.i += 1
                    e = int(self.take("int")[1])
                raw.append((gens.index(value), e))
            elif kind == "int" and value == "1":
                self.i += 1
            elif kind == "int":
                self._fail("syntax", at, f"unexpected number {value!r}; only '1' may stand alone")
            else:
                break
            n_terms += 1
        if not n_terms:
            kind, value, at = self.peek()
            what = "end of input" if kind == "eof" else repr(value)
            self._fail("syntax", at, f"expected a word, found {what}")
        return reduce_word(gens, raw)


def parse_presentation(text: str) -> Presentation:
    """Parse ``text``; raises :class:`ParseError` on the first problem."""
    return _Parser(text).presentation()


def parse_word(gens: GeneratorSet, text: str) -> FreeWord:
    p = _Parser(text)
    w = p.word(gens)
    tok = p.peek()
    if tok[0] != "eof":
        p._fail("syntax", tok[2], f"trailing content {tok[1]!r}")
    return w


def format_presentation(p: Presentation) -> str:
    gens = ", ".join(p.generators.names)
    rels = ", ".join(str(r) for r in p.relators)
    return f"< {gens} | {rels} >" if rels else f"< {gens} | >"


def read_presentation_file(path: Union[str, Path]) -> Presentation:
    """Load a presentation file: '#' comments, one presentation line, nothing after."""
    text = Path(path).read_text(encoding="utf-8")
    return parse_presentation_document(text)


def parse_presentation_document(text: str) -> Presentation:
    found: Optional[Tuple[int, str]] = None
    offset = 0
    for line in text.splitlines(keepends=True):
        stripped = line.strip()
        if stripped and not stripped.startswith("#"):
            if found is not None:
                raise ParseError("syntax", offset, "trailing content after the presentation line")
            found = (offset, line.rstrip("\r\n"))
        offset += len(line.encode("utf-8"))
    if found is None:
        raise ParseError("syntax", 0, "no presentation found")
    start, line = found
    try:
        return parse_presentation(line)
    except ParseError as err:
        raise ParseError(err.kind, start + err.position, err.message) from None


def exponent_matrix(p: Presentation) -> IntMatrix:
    """m x n matrix of exponent sums of generator j in relator i."""
    entries = [r.exponent_sum(j) for r in p.relators for j in range(p.n)]
    return IntMatrix(p.m, p.n, tuple(entries))
