from math import gcd

import pytest
from hypothesis import given, strategies as st

from surjtop.classify import check_hypothesis
from surjtop.coeffsys import system_by_label
from surjtop.families import (
    XY,
    FamilySpec,
    case1_word,
    case2_word,
    case3_word,
    example_k1,
    example_k2,
    realize_order,
    twisted_order,
)
from surjtop.foxcalc import augment, fox_derivative
from surjtop.presentation import format_presentation

from oracles import expand, stack_reduce, to_syllables

BETA1, BETA2, BETA3 = (system_by_label(XY, f"beta{i}") for i in (1, 2, 3))
BLOCK = [(1, -1), (0, -1), (1, -1), (0, 1), (1, 2)]


def sums(p):
    r = p.relators[0]
    return r.exponent_sum("x"), r.exponent_sum("y")


class TestExamples:
    def test_k1(self):
        assert format_presentation(example_k1(1)) == "< x, y | x^2 y x y >"
        assert format_presentation(example_k1(3)) == "< x, y | x^4 y x y >"
        with pytest.raises(ValueError):
            example_k1(2)

    def test_k2(self):
        assert format_presentation(example_k2(1, 0)) == "< x, y | x^3 y^2 >"
        assert format_presentation(example_k2(1, 2)) == "< x, y | x^5 y^2 x^-2 >"
        assert format_presentation(example_k2(3, 1)) == "< x, y | x^6 y^2 x^-1 >"
        with pytest.raises(ValueError):
            example_k2(1, -1)

    @pytest.mark.parametrize("k", [1, 3, 5, 7, 9, 11, 21])
    def test_k1_order(self, k):
        assert check_hypothesis(example_k1(k)).ok
        assert twisted_order(example_k1(k), BETA2) == k

    @given(st.sampled_from([1, 3, 5, 7]), st.integers(0, 8))
    def test_k2_order_independent_of_l(self, k, l):
        p = example_k2(k, l)
        assert check_hypothesis(p).ok
        assert sums(p) == (k + 2, 2)
        assert twisted_order(p, BETA2) == k + 2


class TestCases:
    def test_case1_base(self):
        p = case1_word(0, 0, 0)
        assert format_presentation(p) == "< x, y | x^2 y x y >"
        assert sums(p) == (3, 2)
        assert p == example_k1(1)

    def test_case1_one_block(self):
        raw = [(0, 2), (1, 1), (0, 1), (1, 1)] + BLOCK
        assert case1_word(0, 0, 1).relators[0].syllables == to_syllables(stack_reduce(expand(raw)))

    @given(st.integers(0, 3), st.integers(0, 3), st.integers(0, 4))
    def test_case1_order(self, p, q, j):
        pres = case1_word(p, q, j)
        assert sums(pres) == (2 * p + 3, 2 * q + 2)
        assert check_hypothesis(pres).ok
        assert twisted_order(pres, BETA2) == 2 * j + 1

    def test_case2(self):
        assert format_presentation(case2_word(0, 0, 0)) == "< x, y | y^2 x y x >"
        assert sums(case2_word(1, 2, 0)) == (6, 5)
        assert twisted_order(case2_word(0, 0, 2), BETA1) == 5

    @given(st.integers(0, 3), st.integers(0, 3), st.integers(0, 4))
    def test_case2_mirrors_case1(self, p, q, j):
        pres = case2_word(p, q, j)
        assert sums(pres) == (2 * q + 2, 2 * p + 3)
        assert twisted_order(pres, BETA1) == twisted_order(case1_word(p, q, j), BETA2)

    @pytest.mark.parametrize("n,order", [(1, 1), (2, 3), (3, 5), (6, 11)])
    def test_case3_order(self, n, order):
        assert twisted_order(case3_word(0, 0, n), BETA3) == order

    def test_case3_entries(self):
        # derivative entries run (1 - 2n, 2n - 1)
        r = case3_word(0, 0, 2).relators[0]
        assert augment(fox_derivative(r, "x"), BETA3) == -3
        assert augment(fox_derivative(r, "y"), BETA3) == 3

    def test_case3_range(self):
        with pytest.raises(ValueError):
            case3_word(0, 0, 0)
        with pytest.raises(ValueError):
            case1_word(-1, 0, 0)


class TestRealize:
    def test_odd_even(self):
        p, system = realize_order(3, 2, 5)
        assert p == case1_word(0, 0, 2) and system.label == "beta2"

    def test_odd_odd(self):
        p, system = realize_order(3, 5, 7)
        assert p == case3_word(0, 1, 4) and system.label == "beta3"

    def test_equal_odd_sums_not_coprime(self):
        # the case3 word still has twisted order 7, but (3, 3) is refused
        assert twisted_order(case3_word(0, 0, 4), BETA3) == 7
        with pytest.raises(ValueError):
            realize_order(3, 3, 7)

    def test_even_odd(self):
        p, system = realize_order(4, 5, 3)
        assert sums(p) == (4, 5) and system.label == "beta1"
        assert twisted_order(p, system) == 3

    @pytest.mark.parametrize("a,b,c", [(2, 4, 3), (1, 2, 3), (3, 2, 4), (3, 2, -1), (6, 9, 1)])
    def test_errors(self, a, b, c):
        with pytest.raises(ValueError):
            realize_order(a, b, c)

    @given(st.integers(2, 15), st.integers(2, 15), st.integers(0, 8))
    def test_round_trip(self, a, b, half):
        if gcd(a, b) != 1:
            return
        c = 2 * half + 1
        p, system = realize_order(a, b, c)
        assert sums(p) == (a, b)
        assert twisted_order(p, system) == c
        assert check_hypothesis(p).ok


class TestFamilySpec:
    def test_predicted(self):
        spec = FamilySpec("case3", {"p": 1, "q": 0, "n": 3})
        assert spec.predicted_order() == 5
        assert twisted_order(spec.build(), spec.system()) == 5

    def test_bad_params(self):
        with pytest.raises(ValueError):
            FamilySpec("case1", {"p": 0, "q": 0})
        with pytest.raises(ValueError):
            FamilySpec("example-k1", {"k": 1, "l": 0})
        with pytest.raises(ValueError):
            FamilySpec("nope", {})
