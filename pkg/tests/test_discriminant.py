from fractions import Fraction

import pytest

from discriminant import (
    expected_autoequivalences,
    horn_pullback,
    normalize,
    ray_points,
    render_rational,
    wall_intersection_length,
)
from discriminant.expected import INAPPLICABLE_NOTE
from discriminant.horn import positive_form, render_form
from gkz import build_fan, group_rays
from gkz.corpus import cy_corpus
from lattice import LatticeVector as V
from stratification import fixed_subquotient, wall_crossing

from conftest import CHAMBER_I, CHAMBER_IV, WALL_1, WALL_2, WALL_3, load_golden


class TestHorn:
    @pytest.mark.parametrize("case", load_golden("horn.json")["pullbacks"], ids=lambda c: str(c["lambda"]))
    def test_golden_strings(self, k3_fan, case):
        value = normalize(k3_fan, horn_pullback(k3_fan, V(*case["lambda"])))
        assert render_rational(value) == case["rendered"]

    def test_factored_form(self, k3_fan):
        raw = horn_pullback(k3_fan, V(1, 0))
        # x: -3, p: +2, q: +1 before merging the antiparallel u factors
        assert raw.factors == ((0, -3), (2, 2), (3, 1))
        assert raw.coefficient == Fraction(4)
        assert raw.degree() == 0

    def test_product_adds_exponents(self, k3_fan):
        a = horn_pullback(k3_fan, V(1, 0))
        b = horn_pullback(k3_fan, V(0, 1))
        both = horn_pullback(k3_fan, V(1, 1))
        assert a.times(b) == both

    def test_positive_forms(self):
        assert positive_form(V(-1, -3)) == (V(1, 3), -1)
        assert positive_form(V(0, -1)) == (V(0, 1), -1)
        assert render_form(V(2, -1)) == "(2u-v)"
        assert render_form(V(0, 1)) == "v"


class TestIntersection:
    def test_ray_points_merge_antiparallel(self, k3_fan):
        points = {p.form: p for p in ray_points(k3_fan)}
        assert set(points) == {V(1, 0), V(0, 1), V(1, 3)}
        assert points[V(1, 0)].ray_groups == (0, 2)
        # -(3*(1,0)) - 2*(-1,0)
        assert points[V(1, 0)].functional == V(-1, 0)
        assert points[V(1, 3)].functional == V(1, 3)

    def test_w3_single_point(self, k3_fan):
        result = wall_intersection_length(k3_fan, WALL_3)
        assert result.applicable
        assert result.total == 1 == result.d_formula
        assert [p.form for p in result.support()] == [V(1, 3)]
        assert render_form(result.support()[0].form) == "(u+3v)"
        assert result.charts_agree()

    def test_w1_length_three(self, k3_fan):
        result = wall_intersection_length(k3_fan, WALL_1)
        assert result.applicable
        assert result.total == 3 == result.d_formula
        assert [p.form for p in result.support()] == [V(0, 1)]
        assert result.charts == (CHAMBER_IV, CHAMBER_I)
        assert result.charts_agree()

    def test_w2_inapplicable(self, k3_fan):
        result = wall_intersection_length(k3_fan, WALL_2)
        assert not result.applicable
        assert result.d_formula is None
        assert result.total == 1
        assert [p.form for p in result.support()] == [V(1, 0)]

    def test_oracle_agrees_on_example(self, k3_fan):
        for index in (WALL_1, WALL_3):
            assert wall_intersection_length(k3_fan, index, oracle=True).total == (
                wall_intersection_length(k3_fan, index).total
            )


class TestExpected:
    def _expected(self, w, fan, index):
        report = wall_crossing(w, fan, index)
        return expected_autoequivalences(fan, index, fixed_subquotient(fan, report.flipped_plus, index))

    def test_w1_three_twists(self, k3_w, k3_fan):
        result = self._expected(k3_w, k3_fan, WALL_1)
        assert (result.discriminant_length, result.collection_length, result.agree) == (3, 3, True)

    def test_w3_single_twist(self, k3_w, k3_fan):
        result = self._expected(k3_w, k3_fan, WALL_3)
        assert (result.discriminant_length, result.collection_length, result.agree) == (1, 1, True)

    def test_w2_inapplicable(self, k3_w, k3_fan):
        result = self._expected(k3_w, k3_fan, WALL_2)
        assert result.agree is None
        assert result.note == INAPPLICABLE_NOTE


class TestLengthProperty:
    def test_corpus_lengths(self):
        for w in cy_corpus():
            fan = build_fan(group_rays(w))
            for index, wall in enumerate(fan.walls):
                result = wall_intersection_length(fan, index)
                if not result.applicable:
                    continue
                source = fan.ray_groups[wall.source_group]
                assert result.total == result.d_formula == source.total
                assert result.charts_agree()
                assert [p.form for p in result.support()] == [positive_form(source.chi)[0]]
                assert wall_intersection_length(fan, index, oracle=True).total == result.total
