"""Count homotopy classes of maps from a presentation complex to RP^2.

Valid only when the untwisted second cohomology is finite of odd order.
Then every twisted group H^2(K; alpha Z) is finite of odd order N, based
classes inducing alpha correspond to its elements, free classes to the
orbits of negation (``(N + 1) // 2``), and every free class except the zero
class consists of strongly surjective maps.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from typing import List, Optional, Tuple

from .coeffsys import CoefficientSystem, enumerate_systems, is_valid_system
from .foxcalc import twisted_matrix
from .intlinalg import AbelianGroup, IntMatrix, cokernel
from .presentation import Presentation, exponent_matrix, format_presentation

NON_SURJECTIVE_WITNESS = "zero cohomology class"


class HypothesisError(ValueError):
    """The untwisted H^2 is infinite or of even order."""

    def __init__(self, h2: AbelianGroup, reason: str):
        self.h2 = h2
        self.reason = reason
        super().__init__(reason)


@dataclass(frozen=True)
class HypothesisCheck:
    ok: bool
    h2: AbelianGroup
    reason: Optional[str] = None


@dataclass(frozen=True)
class AlphaReport:
    system: CoefficientSystem
    delta_alpha: IntMatrix
    h2: AbelianGroup
    c_star: int
    c_free: int
    strongly_surjective: int
    non_surjective_witness: str = NON_SURJECTIVE_WITNESS

    def to_dict(self) -> dict:
        return {
            "signs": self.system.as_dict(),
            "label": self.system.label,
            "delta_alpha": self.delta_alpha.tolist(),
            "h2": self.h2.to_dict(),
            "c_star": self.c_star,
            "c_free": self.c_free,
            "strongly_surjective": self.strongly_surjective,
        }


@dataclass(frozen=True)
class ClassificationReport:
    presentation: Presentation
    hypothesis_ok: bool
    h2_untwisted: AbelianGroup
    reports: Tuple[AlphaReport, ...]
    reason: Optional[str] = None

    @property
    def free_classes(self) -> int:
        return sum(r.c_free for r in self.reports)

    @property
    def strongly_surjective(self) -> int:
        return sum(r.strongly_surjective for r in self.reports)

    def to_dict(self) -> dict:
        return {
            "presentation": format_presentation(self.presentation),
            "hypothesis_ok": self.hypothesis_ok,
            "h2_untwisted": self.h2_untwisted.to_dict(),
            "alphas": [r.to_dict() for r in self.reports],
            "totals": {
                "free_classes": self.free_classes,
                "strongly_surjective": self.strongly_surjective,
            },
        }

    def to_json(self) -> str:
        return json.dumps(self.to_dict(), indent=2, ensure_ascii=False)


def describe_failure(h2: AbelianGroup) -> str:
    if h2.free_rank:
        return f"H^2 = {h2} has free rank {h2.free_rank}"
    return f"H^2 = {h2} has even order {h2.order}"


def check_hypothesis(p: Presentation) -> HypothesisCheck:
    """Test that the untwisted H^2 is finite of odd order.

    Checking the trivial system suffices: odd finiteness transfers to every
    other system because all twisted matrices agree mod 2.
    """
    h2 = cokernel(exponent_matrix(p))
    if h2.is_finite_odd:
        return HypothesisCheck(True, h2)
    return HypothesisCheck(False, h2, describe_failure(h2))


def classify_alpha(p: Presentation, system: CoefficientSystem, check: bool = True) -> AlphaReport:
    if check:
        hyp = check_hypothesis(p)
        if not hyp.ok:
            raise HypothesisError(hyp.h2, hyp.reason)
    if not is_valid_system(p, system):
        raise ValueError(f"{system} does not define a coefficient system for {format_presentation(p)}")
    delta = twisted_matrix(p, system)
    h2 = cokernel(delta)
    if not h2.is_finite_odd:
        raise HypothesisError(h2, f"twisted {describe_failure(h2)} under {system}")
    c_star = h2.order
    c_free = (c_star + 1) // 2
    return AlphaReport(system, delta, h2, c_star, c_free, c_free - 1)


def classify_presentation(p: Presentation, paranoid: bool = False) -> ClassificationReport:
    """Full classification; failures are recorded in the report, not raised.

    Twisted groups are always checked for odd finiteness as they are built.
    With ``paranoid`` the failure branch is audited too: no system may have
    an odd finite twisted group when the trivial one does not.  Either
    disagreement raises RuntimeError.
    """
    hyp = check_hypothesis(p)
    if not hyp.ok:
        if paranoid:
            for system in enumerate_systems(p):
                if cokernel(twisted_matrix(p, system)).is_finite_odd:
                    raise RuntimeError(f"internal error: {system} has odd finite H^2 but the trivial system does not")
        return ClassificationReport(p, False, hyp.h2, (), hyp.reason)
    reports: List[AlphaReport] = []
    for system in enumerate_systems(p):
        try:
            reports.append(classify_alpha(p, system, check=False))
        except HypothesisError as err:
            raise RuntimeError(f"internal error: {err}") from err
    return ClassificationReport(p, True, hyp.h2, tuple(reports))
