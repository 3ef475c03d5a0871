"""Sign coefficient systems (homomorphisms to Z_2) over a presentation complex.

A system assigns +1 or -1 to each generator and must evaluate to +1 on every
relator.  Valid systems are the mod-2 nullspace of the exponent matrix,
written multiplicatively.

For two generators ``x, y`` the nontrivial systems carry fixed labels::

    beta1: x -> -1, y -> +1
    beta2: x -> +1, y -> -1
    beta3: x -> -1, y -> -1
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from typing import FrozenSet, List, Optional, Tuple

from .freegroup import GeneratorSet, _normalize_signs
from .intlinalg import nullspace_mod2, rank_mod2
from .presentation import Presentation, exponent_matrix

TRIVIAL = "trivial"
TWO_GENERATOR_LABELS = {
    (1, 1): TRIVIAL,
    (-1, 1): "beta1",
    (1, -1): "beta2",
    (-1, -1): "beta3",
}
BRUTE_FORCE_LIMIT = 12


@dataclass(frozen=True)
class CoefficientSystem:
    generators: GeneratorSet
    signs: Tuple[int, ...]
    label: Optional[str] = None

    def __post_init__(self):
        object.__setattr__(self, "signs", _normalize_signs(self.generators, self.signs))

    @classmethod
    def trivial(cls, gens: GeneratorSet) -> CoefficientSystem:
        return cls(gens, (1,) * len(gens), TRIVIAL)

    @classmethod
    def labelled(cls, gens: GeneratorSet, signs) -> CoefficientSystem:
        signs = _normalize_signs(gens, signs)
        return cls(gens, signs, default_label(signs))

    @property
    def is_trivial(self) -> bool:
        return all(s == 1 for s in self.signs)

    def as_dict(self) -> dict:
        return dict(zip(self.generators.names, self.signs))

    @property
    def name(self) -> str:
        if self.label:
            return self.label
        return ",".join(f"{g}={s:+d}" for g, s in zip(self.generators.names, self.signs))

    def __str__(self) -> str:
        return self.name


def default_label(signs: Tuple[int, ...]) -> Optional[str]:
    if len(signs) == 2:
        return TWO_GENERATOR_LABELS[tuple(signs)]
    if all(s == 1 for s in signs):
        return TRIVIAL
    return None


def is_valid_system(p: Presentation, signs) -> bool:
    return all(r.sign_eval(signs) == 1 for r in p.relators)


def _sort_key(signs: Tuple[int, ...]):
    # +1 sorts before -1; the trivial system is therefore first
    return tuple(s == -1 for s in signs)


def enumerate_systems(p: Presentation) -> List[CoefficientSystem]:
    """All valid systems, trivial first, then lexicographic with +1 < -1."""
    basis = nullspace_mod2(exponent_matrix(p))
    vectors = set()
    for coeffs in itertools.product((0, 1), repeat=len(basis)):
        e = [0] * p.n
        for c, b in zip(coeffs, basis):
            if c:
                e = [x ^ y for x, y in zip(e, b)]
        vectors.add(tuple(-1 if x else 1 for x in e))
    return [CoefficientSystem.labelled(p.generators, s) for s in sorted(vectors, key=_sort_key)]


def enumerate_systems_brute(p: Presentation) -> List[CoefficientSystem]:
    """Test every one of the 2^n assignments; only for n <= 12."""
    if p.n > BRUTE_FORCE_LIMIT:
        raise ValueError(f"brute-force enumeration limited to {BRUTE_FORCE_LIMIT} generators")
    found = [s for s in itertools.product((1, -1), repeat=p.n) if is_valid_system(p, s)]
    return [CoefficientSystem.labelled(p.generators, s) for s in sorted(found, key=_sort_key)]


def system_count(p: Presentation) -> int:
    return 2 ** (p.n - rank_mod2(exponent_matrix(p)))


def feasible_homs_2_1(a: int, b: int) -> FrozenSet[str]:
    """Labels of the systems admitted by a relator with exponent sums (a, b)."""
    if a % 2 == 0 and b % 2 == 1:
        return frozenset({TRIVIAL, "beta1"})
    if a % 2 == 1 and b % 2 == 0:
        return frozenset({TRIVIAL, "beta2"})
    if a % 2 == 1 and b % 2 == 1:
        return frozenset({TRIVIAL, "beta3"})
    return frozenset({TRIVIAL, "beta1", "beta2", "beta3"})


def system_by_label(gens: GeneratorSet, label: str) -> CoefficientSystem:
    if label == TRIVIAL:
        return CoefficientSystem.trivial(gens)
    if len(gens) != 2:
        raise ValueError(f"label {label!r} only applies to two-generator presentations")
    for signs, name in TWO_GENERATOR_LABELS.items():
        if name == label:
            return CoefficientSystem(gens, signs, name)
    raise ValueError(f"unknown system label {label!r}")


_SIGN_WORDS = {"+1": 1, "+": 1, "1": 1, "-1": -1, "-": -1}


def parse_signs(gens: GeneratorSet, text: Optional[str]) -> CoefficientSystem:
    """Parse ``x=-1,y=+`` style text.  Omitted generators default to +1.

    A bare label (``beta2``, ``trivial``) is also accepted.
    """
    text = (text or "").strip()
    if text and "=" not in text:
        return system_by_label(gens, text)
    signs = dict.fromkeys(gens.names, 1)
    seen = set()
    for item in filter(None, (s.strip() for s in text.split(","))):
        name, sep, value = (part.strip() for part in item.partition("="))
        if not sep:
            raise ValueError(f"expected gen=sign, got {item!r}")
        if name not in signs:
            raise ValueError(f"unknown generator {name!r} in sign assignment")
        if name in seen:
            raise ValueError(f"generator {name!r} assigned twice")
        if value not in _SIGN_WORDS:
            raise ValueError(f"sign for {name!r} must be +1, -1, + or -, got {value!r}")
        seen.add(name)
        signs[name] = _SIGN_WORDS[value]
    return CoefficientSystem.labelled(gens, signs)

