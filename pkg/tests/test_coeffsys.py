import pytest
from hypothesis import given

from surjtop.coeffsys import (
    CoefficientSystem,
    enumerate_systems,
    enumerate_systems_brute,
    feasible_homs_2_1,
    is_valid_system,
    parse_signs,
    system_count,
)
from surjtop.presentation import Presentation, parse_presentation

from strategies import presentations, words


def labels(p):
    return [s.label for s in enumerate_systems(p)]


class TestValidity:
    def test_odd_x_exponent_blocks_x_twist(self):
        p = parse_presentation("<x,y|x^4 y x y>")
        assert not is_valid_system(p, {"x": -1, "y": 1})
        assert is_valid_system(p, {"x": 1, "y": -1})
        assert is_valid_system(p, (1, 1))

    def test_missing_generator(self):
        with pytest.raises(KeyError):
            is_valid_system(parse_presentation("<x,y|x^2>"), {"x": 1})


class TestEnumerate:
    def test_odd_even(self):
        assert labels(parse_presentation("<x,y|x^4 y x y>")) == ["trivial", "beta2"]

    def test_odd_odd(self):
        assert labels(parse_presentation("<x,y|x y>")) == ["trivial", "beta3"]

    def test_projective_plane(self):
        systems = enumerate_systems(parse_presentation("<x|x^2>"))
        assert [s.signs for s in systems] == [(1,), (-1,)]
        assert systems[0].label == "trivial" and systems[1].label is None

    def test_free_group_order(self):
        systems = enumerate_systems(parse_presentation("<x,y|>"))
        assert [s.label for s in systems] == ["trivial", "beta2", "beta1", "beta3"]
        assert [s.signs for s in systems] == [(1, 1), (1, -1), (-1, 1), (-1, -1)]

    def test_three_generators(self):
        p = parse_presentation("<x,y,z|x y z, x^2 y^2>")
        assert [s.signs for s in enumerate_systems(p)] == [(1, 1, 1), (1, -1, -1), (-1, 1, -1), (-1, -1, 1)]

    @given(presentations())
    def test_matches_brute_force(self, p):
        fast = enumerate_systems(p)
        assert fast == enumerate_systems_brute(p)
        assert len(fast) == system_count(p)
        assert fast[0].is_trivial

    @given(words(2, 10))
    def test_two_one_parity_table(self, r):
        if r.is_identity:
            return
        p = Presentation(r.generators, (r,))
        got = {s.label for s in enumerate_systems(p)}
        assert got == feasible_homs_2_1(r.exponent_sum(0), r.exponent_sum(1))


class TestFeasible:
    @pytest.mark.parametrize("a,b,expected", [
        (5, 2, {"trivial", "beta2"}),
        (3, 3, {"trivial", "beta3"}),
        (2, 2, {"trivial", "beta1", "beta2", "beta3"}),
        (4, 7, {"trivial", "beta1"}),
        (-3, 0, {"trivial", "beta2"}),
    ])
    def test_table(self, a, b, expected):
        assert feasible_homs_2_1(a, b) == expected


class TestParseSigns:
    def setup_method(self):
        self.gens = parse_presentation("<x,y|x^2>").generators

    @pytest.mark.parametrize("text,signs", [
        ("x=-1", (-1, 1)),
        ("x=-,y=+", (-1, 1)),
        ("y=-1 , x=+1", (1, -1)),
        ("", (1, 1)),
        (None, (1, 1)),
        ("beta3", (-1, -1)),
    ])
    def test_ok(self, text, signs):
        assert parse_signs(self.gens, text).signs == signs

    @pytest.mark.parametrize("text", ["z=-1", "x=2", "x", "x=-1,x=+1", "beta9"])
    def test_bad(self, text):
        with pytest.raises(ValueError):
            parse_signs(self.gens, text)


def test_system_dict_and_name():
    gens = parse_presentation("<a,b,c|a^2>").generators
    s = CoefficientSystem.labelled(gens, {"a": -1, "b": 1, "c": 1})
    assert s.label is None
    assert s.name == "a=-1,b=+1,c=+1"
    assert s.as_dict() == {"a": -1, "b": 1, "c": 1}
