"""Two-generator, one-relator families with prescribed twisted cohomology order.

Every family lives on generators ``x, y`` and has untwisted H^2 = 0.  The
nontrivial system and the predicted order of H^2 under it:

=============  ===========================  =======  ===========
family         relator                      system   order
=============  ===========================  =======  ===========
example-k1     x^(k+1) y x y                beta2    k
example-k2     x^(k+2+l) y^2 x^-l           beta2    k + 2
case1          x^(p+2) y x^(p+1) y^(2q+1)   beta2    2j + 1
               followed by B^j
case2          case1 with x and y swapped   beta1    2j + 1
case3          x^(p+2) y^2 x^(p+1)          beta3    2n - 1
               y^(2q+1) B^n
=============  ===========================  =======  ===========

where ``B = y^-1 x^-1 y^-1 x y^2``.  Appending ``B`` to a relator keeps its
exponent sums and shifts the augmented x-derivative by +2 (beta2) or -2
(beta3, with +2 on the y-derivative).
"""

from __future__ import annotations

from dataclasses import dataclass, field
from math import gcd
from typing import Dict, Tuple

from .coeffsys import CoefficientSystem, system_by_label
from .foxcalc import twisted_matrix
from .freegroup import FreeWord, GeneratorSet, reduce_word
from .intlinalg import cokernel
from .presentation import Presentation

XY = GeneratorSet(("x", "y"))
X, Y = 0, 1
SHIFT_BLOCK = reduce_word(XY, [(Y, -1), (X, -1), (Y, -1), (X, 1), (Y, 2)])

FAMILIES = ("example-k1", "example-k2", "case1", "case2", "case3")


def _need(cond: bool, message: str):
    if not cond:
        raise ValueError(message)


def _one_relator(w: FreeWord) -> Presentation:
    return Presentation(XY, (w,))


def _swap_xy(w: FreeWord) -> FreeWord:
    return FreeWord(XY, tuple((1 - i, e) for i, e in w.syllables))


def example_k1(k: int) -> Presentation:
    _need(k >= 1 and k % 2 == 1, f"k must be odd and >= 1, got {k}")
    return _one_relator(reduce_word(XY, [(X, k + 1), (Y, 1), (X, 1), (Y, 1)]))


def example_k2(k: int, l: int) -> Presentation:
    _need(k >= 1 and k % 2 == 1, f"k must be odd and >= 1, got {k}")
    _need(l >= 0, f"l must be >= 0, got {l}")
    return _one_relator(reduce_word(XY, [(X, k + 2 + l), (Y, 2), (X, -l)]))


def case1_base(p: int, q: int) -> FreeWord:
    _need(p >= 0 and q >= 0, f"p and q must be >= 0, got p={p}, q={q}")
    return reduce_word(XY, [(X, p + 2), (Y, 1), (X, p + 1), (Y, 2 * q + 1)])


def case3_base(p: int, q: int) -> FreeWord:
    _need(p >= 0 and q >= 0, f"p and q must be >= 0, got p={p}, q={q}")
    return reduce_word(XY, [(X, p + 2), (Y, 2), (X, p + 1), (Y, 2 * q + 1)])


def case1_word(p: int, q: int, j: int) -> Presentation:
    """Exponent sums (2p+3, 2q+2); order 2j+1 under beta2."""
    _need(j >= 0, f"j must be >= 0, got {j}")
    return _one_relator(case1_base(p, q) * SHIFT_BLOCK ** j)


def case2_word(p: int, q: int, j: int) -> Presentation:
    """Exponent sums (2q+2, 2p+3); order 2j+1 under beta1."""
    return _one_relator(_swap_xy(case1_word(p, q, j).relators[0]))


def case3_word(p: int, q: int, n: int) -> Presentation:
    """Exponent sums (2p+3, 2q+3); order 2n-1 under beta3."""
    _need(n >= 1, f"n must be >= 1, got {n}")
    return _one_relator(case3_base(p, q) * SHIFT_BLOCK ** n)


_BUILDERS = {
    "example-k1": (example_k1, ("k",), "beta2", lambda k: k),
    "example-k2": (example_k2, ("k", "l"), "beta2", lambda k, l: k + 2),
    "case1": (case1_word, ("p", "q", "j"), "beta2", lambda p, q, j: 2 * j + 1),
    "case2": (case2_word, ("p", "q", "j"), "beta1", lambda p, q, j: 2 * j + 1),
    "case3": (case3_word, ("p", "q", "n"), "beta3", lambda p, q, n: 2 * n - 1),
}


@dataclass(frozen=True)
class FamilySpec:
    family: str
    params: Dict[str, int] = field(default_factory=dict)

    def __post_init__(self):
        if self.family not in _BUILDERS:
            raise ValueError(f"unknown family {self.family!r}; choose from {', '.join(FAMILIES)}")
        wanted = _BUILDERS[self.family][1]
        missing = [k for k in wanted if k not in self.params]
        if missing:
            raise ValueError(f"family {self.family} needs parameter(s) {', '.join(missing)}")
        extra = sorted(set(self.params) - set(wanted))
        if extra:
            raise ValueError(f"family {self.family} does not take parameter(s) {', '.join(extra)}")

    @staticmethod
    def param_names(family: str) -> Tuple[str, ...]:
        return _BUILDERS[family][1]

    def _args(self):
        return [self.params[k] for k in _BUILDERS[self.family][1]]

    def build(self) -> Presentation:
        return _BUILDERS[self.family][0](*self._args())

    def system(self) -> CoefficientSystem:
        return system_by_label(XY, _BUILDERS[self.family][2])

    def predicted_order(self) -> int:
        return _BUILDERS[self.family][3](*self._args())


def twisted_order(p: Presentation, system: CoefficientSystem):
    """Order of H^2 under ``system``; None when infinite."""
    return cokernel(twisted_matrix(p, system)).order


def realize_spec(a: int, b: int, c: int) -> FamilySpec:
    """Pick the family and parameters for ``realize_order`` without building."""
    _need(a >= 2 and b >= 2, f"a and b must be >= 2, got a={a}, b={b}")
    _need(gcd(a, b) == 1, f"a and b must be coprime, got gcd({a}, {b}) = {gcd(a, b)}")
    _need(c >= 1 and c % 2 == 1, f"c must be odd and >= 1, got {c}")
    if a % 2 == 1 and b % 2 == 0:
        return FamilySpec("case1", {"p": (a - 3) // 2, "q": (b - 2) // 2, "j": (c - 1) // 2})
    if a % 2 == 0:
        return FamilySpec("case2", {"p": (b - 3) // 2, "q": (a - 2) // 2, "j": (c - 1) // 2})
    return FamilySpec("case3", {"p": (a - 3) // 2, "q": (b - 3) // 2, "n": (c + 1) // 2})


def realize_order(a: int, b: int, c: int) -> Tuple[Presentation, CoefficientSystem]:
    """A one-relator presentation with exponent sums (a, b) whose twisted H^2
    under the nontrivial feasible system is cyclic of order ``c``.

    The result is recomputed before returning; a mismatch raises
    RuntimeError.
    """
    spec = realize_spec(a, b, c)
    pres = spec.build()
    system = spec.system()
    r = pres.relators[0]
    got = (r.exponent_sum(X), r.exponent_sum(Y), twisted_order(pres, system))
    if got != (a, b, c):
        raise RuntimeError(f"realization check failed: wanted {(a, b, c)}, got {got}")
    return pres, system
