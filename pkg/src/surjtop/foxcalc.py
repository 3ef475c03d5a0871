"""Integral group ring of a free group, Fox derivatives and sign augmentation."""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Dict, Iterable, Tuple

from .freegroup import FreeWord, GeneratorRef, GeneratorSet, reduce_word
from .intlinalg import IntMatrix
from .presentation import Presentation


@dataclass(frozen=True)
class GroupRingElement:
    """Finite integer combination of reduced words; no zero coefficients stored."""

    generators: GeneratorSet
    terms: Tuple[Tuple[FreeWord, int], ...] = field(default=())

    @classmethod
    def from_terms(cls, gens: GeneratorSet, terms: Iterable[Tuple[FreeWord, int]]) -> GroupRingElement:
        acc: Dict[FreeWord, int] = {}
        for w, c in terms:
            if w.generators != gens:
                raise ValueError("word over a different generator set")
            acc[w] = acc.get(w, 0) + c
        # canonical order keeps equality and hashing independent of insertion order
        items = sorted(((w, c) for w, c in acc.items() if c), key=lambda t: (len(t[0].syllables), t[0].syllables))
        return cls(gens, tuple(items))

    @classmethod
    def zero(cls, gens: GeneratorSet) -> GroupRingElement:
        return cls(gens, ())

    @classmethod
    def word(cls, w: FreeWord, coeff: int = 1) -> GroupRingElement:
        return cls.from_terms(w.generators, [(w, coeff)])

    def as_dict(self) -> Dict[FreeWord, int]:
        return dict(self.terms)

    def is_zero(self) -> bool:
        return not self.terms

    def _same(self, other: GroupRingElement):
        if other.generators != self.generators:
            raise ValueError("group ring elements over different generator sets")

    def __add__(self, other: GroupRingElement) -> GroupRingElement:
        self._same(other)
        return GroupRingElement.from_terms(self.generators, self.terms + other.terms)

    def __neg__(self) -> GroupRingElement:
        return GroupRingElement(self.generators, tuple((w, -c) for w, c in self.terms))

    def __sub__(self, other: GroupRingElement) -> GroupRingElement:
        return self + (-other)

    def left_multiply(self, w: FreeWord) -> GroupRingElement:
        """The product w * self."""
        if w.generators != self.generators:
            raise ValueError("word over a different generator set")
        return GroupRingElement.from_terms(self.generators, ((w * u, c) for u, c in self.terms))

    def __str__(self) -> str:
        if not self.terms:
            return "0"
        parts = []
        for w, c in self.terms:
            mono = str(w)
            if c == 1:
                parts.append(mono)
            elif c == -1:
                parts.append(f"-{mono}")
            else:
                parts.append(f"{c}*{mono}" if not w.is_identity else str(c))
        return " + ".join(parts).replace("+ -", "- ")


def gre_add(a: GroupRingElement, b: GroupRingElement) -> GroupRingElement:
    return a + b


def gre_scale_word(w: FreeWord, a: GroupRingElement) -> GroupRingElement:
    return a.left_multiply(w)


def fox_derivative(w: FreeWord, g: GeneratorRef) -> GroupRingElement:
    """Fox derivative of ``w`` with respect to generator ``g``.

    One pass over the letters of ``w``: an occurrence of g contributes
    +prefix-before-it, an occurrence of g^-1 contributes -prefix-through-it.
    """
    gens = w.generators
    gi = gens.index(g)
    terms = []
    done: Tuple = ()
    for i, e in w.syllables:
        if i == gi:
            step = 1 if e > 0 else -1
            for t in range(abs(e)):
                if step > 0:
                    prefix = done + ((i, t),) if t else done
                    terms.append((reduce_word(gens, prefix), 1))
                else:
                    prefix = done + ((i, -(t + 1)),)
                    terms.append((reduce_word(gens, prefix), -1))
        done = done + ((i, e),)
    return GroupRingElement.from_terms(gens, terms)


def augment(a: GroupRingElement, signs) -> int:
    """Apply the sign augmentation: sum of coefficient * sign(word)."""
    return sum(c * w.sign_eval(signs) for w, c in a.terms)


def twisted_matrix(p: Presentation, system) -> IntMatrix:
    """Matrix of augmented Fox derivatives of each relator by each generator.

    ``system`` is a CoefficientSystem or any raw sign assignment; it must
    evaluate to +1 on every relator.
    """
    for r in p.relators:
        if r.sign_eval(system) != 1:
            raise ValueError(f"sign assignment does not kill relator {r}")
    entries = [augment(fox_derivative(r, j), system) for r in p.relators for j in range(p.n)]
    return IntMatrix(p.m, p.n, tuple(entries))
