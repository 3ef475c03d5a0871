"""Twisted second cohomology of presentation complexes and maps to RP^2."""

from .classify import (
    AlphaReport,
    ClassificationReport,
    HypothesisError,
    check_hypothesis,
    classify_alpha,
    classify_presentation,
)
from .coeffsys import CoefficientSystem, enumerate_systems, feasible_homs_2_1, is_valid_system, parse_signs
from .families import case1_word, case2_word, case3_word, example_k1, example_k2, realize_order
from .foxcalc import GroupRingElement, augment, fox_derivative, twisted_matrix
from .freegroup import FreeWord, GeneratorSet, reduce_word
from .intlinalg import AbelianGroup, IntMatrix, SmithForm, cokernel, smith_normal_form
from .presentation import ParseError, Presentation, exponent_matrix, format_presentation, parse_presentation

__version__ = "0.1.0"

__all__ = [
    "AbelianGroup",
    "AlphaReport",
    "ClassificationReport",
    "CoefficientSystem",
    "FreeWord",
    "GeneratorSet",
    "GroupRingElement",
    "HypothesisError",
    "IntMatrix",
    "ParseError",
    "Presentation",
    "SmithForm",
    "augment",
    "case1_word",
    "case2_word",
    "case3_word",
    "check_hypothesis",
    "classify_alpha",
    "classify_presentation",
    "cokernel",
    "enumerate_systems",
    "example_k1",
    "example_k2",
    "exponent_matrix",
    "feasible_homs_2_1",
    "format_presentation",
    "fox_derivative",
    "is_valid_system",
    "parse_presentation",
    "parse_signs",
    "realize_order",
    "reduce_word",
    "smith_normal_form",
    "twisted_matrix",
]
