"""Reduced words in a free group on a finite, ordered set of named generators.

Words are stored in syllable (run-length) form: a tuple of
``(generator_index, exponent)`` pairs with nonzero exponents and no two
adjacent pairs on the same generator.  Generator indices are 0-based
positions in the owning :class:`GeneratorSet`.

>>> G = GeneratorSet(("x", "y"))
>>> w = G.word("x^4 y x y")
>>> w.exponent_sum("x"), w.exponent_sum("y")
(5, 2)
>>> str(w * G.word("y^-1 x^-1"))
'x^4 y'
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from typing import Iterable, Iterator, Mapping, Sequence, Tuple, Union

Syllable = Tuple[int, int]
GeneratorRef = Union[int, str]

IDENT_RE = re.compile(r"[A-Za-z][A-Za-z0-9_]*\Z")


@dataclass(frozen=True)
class GeneratorSet:
    """Ordered, duplicate-free generator names.  Order fixes matrix columns."""

    names: Tuple[str, ...]

    def __post_init__(self):
        object.__setattr__(self, "names", tuple(self.names))
        seen = set()
        for name in self.names:
            if not isinstance(name, str) or not IDENT_RE.match(name):
                raise ValueError(f"invalid generator name {name!r}")
            if name in seen:
                raise ValueError(f"duplicate generator name {name!r}")
            seen.add(name)

    def __len__(self) -> int:
        return len(self.names)

    def __iter__(self) -> Iterator[str]:
        return iter(self.names)

    def index(self, g: GeneratorRef) -> int:
        """Resolve a generator name or 0-based index to an index."""
        if isinstance(g, str):
            try:
                return self.names.index(g)
            except ValueError:
                raise KeyError(f"unknown generator {g!r}") from None
        if isinstance(g, bool) or not isinstance(g, int):
            raise TypeError(f"generator must be a name or index, got {g!r}")
        if not 0 <= g < len(self.names):
            raise IndexError(f"generator index {g} out of range for {len(self.names)} generators")
        return g

    def identity(self) -> FreeWord:
        return FreeWord(self, ())

    def gen(self, g: GeneratorRef) -> FreeWord:
        return FreeWord(self, ((self.index(g), 1),))

    def word(self, text: str) -> FreeWord:
        """Build a word from the same term syntax used in presentations."""
        from .presentation import parse_word

        return parse_word(self, text)


def reduce_word(gens: GeneratorSet, raw: Iterable[Tuple[GeneratorRef, int]]) -> FreeWord:
    """Freely reduce a sequence of ``(generator, exponent)`` pairs.

    Single stack pass: merging onto the top of the stack and popping
    syllables whose exponent cancels reaches the fixed point directly.
    """
    stack: list = []
    for g, e in raw:
        i = gens.index(g)
        e = int(e)
        if e == 0:
            continue
        if stack and stack[-1][0] == i:
            total = stack[-1][1] + e
            if total:
                stack[-1] = (i, total)
            else:
                stack.pop()
        else:
            stack.append((i, e))
    return FreeWord(gens, tuple(stack))


def _normalize_signs(gens: GeneratorSet, signs) -> Tuple[int, ...]:
    """Accept a CoefficientSystem, a name->sign mapping or a per-index sequence."""
    if hasattr(signs, "signs") and hasattr(signs, "generators"):
        if signs.generators != gens:
            raise ValueError("sign assignment is over a different generator set")
        signs = signs.signs
    if isinstance(signs, Mapping):
        missing = [name for name in gens.names if name not in signs]
        if missing:
            raise KeyError(f"missing sign for generator(s) {', '.join(missing)}")
        extra = set(signs) - set(gens.names)
        if extra:
            raise KeyError(f"sign given for unknown generator(s) {', '.join(sorted(extra))}")
        signs = [signs[name] for name in gens.names]
    out = tuple(int(s) for s in signs)
    if len(out) != len(gens):
        raise ValueError(f"expected {len(gens)} signs, got {len(out)}")
    if any(s not in (1, -1) for s in out):
        raise ValueError(f"signs must be +1 or -1, got {out}")
    return out


@dataclass(frozen=True)
class FreeWord:
    generators: GeneratorSet
    syllables: Tuple[Syllable, ...]

    def __post_init__(self):
        prev = None
        for i, e in self.syllables:
            if not 0 <= i < len(self.generators):
                raise IndexError(f"generator index {i} out of range")
            if e == 0:
                raise ValueError("zero exponent in reduced word")
            if i == prev:
                raise ValueError("adjacent syllables share a generator; use reduce_word")
            prev = i

    def _check(self, other: FreeWord):
        if not isinstance(other, FreeWord):
            return NotImplemented
        if other.generators != self.generators:
            raise ValueError("words are over different generator sets")
        return None

    @property
    def is_identity(self) -> bool:
        return not self.syllables

    def __len__(self) -> int:
        """Letter length of the reduced word."""
        return sum(abs(e) for _, e in self.syllables)

    def letters(self) -> Iterator[Syllable]:
        """Expand into single letters ``(index, +1 or -1)``."""
        for i, e in self.syllables:
            step = 1 if e > 0 else -1
            for _ in range(abs(e)):
                yield i, step

    def __mul__(self, other: FreeWord) -> FreeWord:
        if self._check(other) is NotImplemented:
            return NotImplemented
        return reduce_word(self.generators, self.syllables + other.syllables)

    def inverse(self) -> FreeWord:
        return FreeWord(self.generators, tuple((i, -e) for i, e in reversed(self.syllables)))

    def __pow__(self, e: int) -> FreeWord:
        if e < 0:
            return self.inverse() ** (-e)
        result = self.generators.identity()
        base = self
        while e:
            if e & 1:
                result = result * base
            base = base * base
            e >>= 1
        return result

    def exponent_sum(self, g: GeneratorRef) -> int:
        i = self.generators.index(g)
        return sum(e for j, e in self.syllables if j == i)

    def sign_eval(self, signs) -> int:
        """Evaluate the sign character given by ``signs`` on this word."""
        eps = _normalize_signs(self.generators, signs)
        odd = sum(e for i, e in self.syllables if eps[i] == -1) % 2
        return -1 if odd else 1

    def __str__(self) -> str:
        if not self.syllables:
            return "1"
        names = self.generators.names
        return " ".join(names[i] if e == 1 else f"{names[i]}^{e}" for i, e in self.syllables)

    def __repr__(self) -> str:
        return f"FreeWord({str(self)!r})"


def multiply(u: FreeWord, v: FreeWord) -> FreeWord:
    return u * v


def invert(w: FreeWord) -> FreeWord:
    return w.inverse()


def power(w: FreeWord, e: int) -> FreeWord:
    return w ** e


def exponent_sum(w: FreeWord, g: GeneratorRef) -> int:
    return w.exponent_sum(g)


def sign_eval(w: FreeWord, signs: Union[Sequence[int], Mapping[str, int]]) -> int:
    return w.sign_eval(signs)
