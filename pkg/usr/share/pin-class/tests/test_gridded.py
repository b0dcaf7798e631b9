#!/usr/bin/env python3
# -*- coding: utf-8 -*-
#
# tests/test_gridded.py - Gridded permutations, pin construction and box sums
#

from itertools import permutations, product

import pytest
from hypothesis import given, strategies as st

from core.enumeration import class_patterns
from core.errors import InvalidSpecError, NotIndecomposableError
from core.gridded import (
    EMPTY,
    GriddedPermutation,
    all_griddings,
    box_decompose,
    box_sum,
    box_sum_all,
    build_pin_permutation,
    commute,
    contains,
    is_box_indecomposable,
    pin_path,
    pin_points,
    render_svg,
)
from core.pinwords import PIN_ALPHABET, PinWord, parse_pin_spec, parse_pin_tokens
from core.words import factors
from strategies import pin_words

LONG_MEMORY = "u_r l_u u_l r_u d_r r_d d_r l_d u_l l_u d_l r_d u_r r_u d_r"

Q1 = GriddedPermutation((1,), 0, 0)
Q2 = GriddedPermutation((1,), 1, 0)
Q3 = GriddedPermutation((1,), 1, 1)
Q4 = GriddedPermutation((1,), 0, 1)


def pin(text):
    return PinWord(parse_pin_tokens(text))


def gp(text):
    return GriddedPermutation.parse(text)


def accepted_words(size):
    words = [(item,) for item in sorted(PIN_ALPHABET, key=str)]
    for _ in range(size - 1):
        words = [w + (item,) for w in words for item in sorted(PIN_ALPHABET, key=str) if item.memory == w[-1].direction]
    return [PinWord(w) for w in words]


def small_indecomposables(max_size):
    found = []
    for n in range(1, max_size + 1):
        for values in permutations(range(1, n + 1)):
            for perm in all_griddings(values):
                if is_box_indecomposable(perm):
                    found.append(perm)
    return found


class TestText:
    def test_round_trip(self):
        assert str(gp("4731526|x=2,y=0")) == "4731526|x=2,y=0"

    def test_long_permutations_use_commas(self):
        perm = gp("12,2,5,13,8,11,9,6,10,4,7,15,3,1,14|x=6,y=7")
        assert perm.values[0] == 12
        assert str(perm) == "12,2,5,13,8,11,9,6,10,4,7,15,3,1,14|x=6,y=7"

    @pytest.mark.parametrize("text", ["4731526", "112|x=0,y=0", "12|x=3,y=0", "ab|x=0,y=0"])
    def test_invalid(self, text):
        with pytest.raises(InvalidSpecError):
            gp(text)

    def test_quadrants(self):
        assert gp("4731526|x=2,y=0").occupied_quadrants() == {1, 2}
        assert [p.quadrants() for p in (Q1, Q2, Q3, Q4)] == [(1,), (2,), (3,), (4,)]


class TestPinConstruction:
    def test_oscillation(self):
        assert str(build_pin_permutation(pin("r_u u_r r_u u_r l_u u_l r_u"))) == "4731526|x=2,y=0"

    def test_fifteen_pin_word(self):
        perm = build_pin_permutation(pin(LONG_MEMORY))
        assert perm.values == (12, 2, 5, 13, 8, 11, 9, 6, 10, 4, 7, 15, 3, 1, 14)
        assert (perm.cut_x, perm.cut_y) == (6, 7)

    def test_single_pin(self):
        assert build_pin_permutation(pin("r_u")) == Q1

    def test_four_pin_oscillation(self):
        assert str(build_pin_permutation(pin("ru ur ru ur"))) == "3142|x=0,y=0"

    def test_path_visits_every_point_once(self):
        path = pin_path(pin(LONG_MEMORY))
        perm = build_pin_permutation(pin(LONG_MEMORY))
        assert sorted(path) == [(i, v) for i, v in enumerate(perm.values, start=1)]


@given(pin_words(max_size=8))
def test_prefixes_are_patterns(word):
    perm = build_pin_permutation(word)
    assert len(perm) == len(word)
    for k in range(1, len(word)):
        assert contains(perm, build_pin_permutation(word[:k]))


class TestContainment:
    def test_contains_itself(self):
        perm = gp("4731526|x=2,y=0")
        assert contains(perm, perm)

    def test_oscillation_contains_a_descent(self):
        assert contains(build_pin_permutation(pin("ru ur ru ur")), gp("21|x=0,y=0"))

    def test_quadrant_is_part_of_the_pattern(self):
        perm = build_pin_permutation(pin("ru ur ru ur ru ur"))
        assert not contains(perm, Q2)
        assert contains(perm, Q1)

    def test_longer_pattern_is_never_contained(self):
        assert not contains(Q1, gp("21|x=0,y=0"))


class TestBoxSum:
    def test_adjacent_singletons(self):
        assert str(box_sum(Q1, Q2)) == "21|x=1,y=0"
        assert str(box_sum(Q2, Q1)) == "12|x=1,y=0"

    def test_opposite_quadrants_commute(self):
        descent = gp("21|x=0,y=0")
        assert box_sum(descent, Q3) == box_sum(Q3, descent) == gp("132|x=1,y=1")

    def test_empty_is_neutral(self):
        perm = gp("4731526|x=2,y=0")
        assert box_sum(perm, EMPTY) == perm
        assert box_sum(EMPTY, perm) == perm

    def test_cuts_add_up(self):
        inner, outer = gp("4731526|x=2,y=0"), gp("132|x=1,y=1")
        total = box_sum(inner, outer)
        assert len(total) == 10
        assert (total.cut_x, total.cut_y) == (3, 1)


class TestDecomposition:
    def test_singletons_are_indecomposable(self):
        assert all(is_box_indecomposable(p) for p in (Q1, Q2, Q3, Q4))

    def test_increasing_pair_splits(self):
        assert not is_box_indecomposable(gp("12|x=0,y=0"))
        assert box_decompose(gp("12|x=0,y=0")) == [Q1, Q1]

    def test_two_quadrant_pin_factor_is_indecomposable(self):
        assert is_box_indecomposable(build_pin_permutation(pin("r_u u_r l_u")))

    def test_canonical_order(self):
        assert box_decompose(gp("132|x=1,y=1")) == [gp("21|x=0,y=0"), Q3]

    def test_indecomposable_is_its_own_decomposition(self):
        perm = build_pin_permutation(pin("r_u u_r l_u"))
        assert box_decompose(perm) == [perm]

    def test_decomposable_pin_permutation(self):
        perm = build_pin_permutation(pin("ur lu dl ld dl ld dl"))
        assert str(perm) == "3152647|x=6,y=5"
        assert not is_box_indecomposable(perm)
        parts = box_decompose(perm)
        assert parts == [gp("315264|x=6,y=5"), Q1]
        assert box_sum_all(parts) == perm

    def test_three_singletons(self):
        perm = build_pin_permutation(pin("ur lu dl"))
        assert str(perm) == "213|x=2,y=1"
        assert box_decompose(perm) == [Q3, Q2, Q1]

    def test_recompose_three_factors(self):
        spec = parse_pin_spec("pin:per:;ru,ur")
        pieces = [build_pin_permutation(PinWord(f)) for f in sorted(factors(spec, 3))[:1]]
        pieces += [Q3, gp("21|x=0,y=0")]
        total = box_sum_all(pieces)
        parts = box_decompose(total)
        assert sorted(map(str, parts)) == sorted(map(str, pieces))
        assert box_sum_all(parts) == total


@given(pin_words(max_size=8))
def test_decomposition_recomposes(word):
    perm = build_pin_permutation(word)
    parts = box_decompose(perm)
    assert all(len(part) > 0 and is_box_indecomposable(part) for part in parts)
    assert sum(len(part) for part in parts) == len(perm)
    assert box_sum_all(parts) == perm


class TestCommute:
    def test_opposite_quadrants(self):
        assert commute(Q1, Q3)
        assert commute(Q2, Q4)

    def test_adjacent_quadrants(self):
        assert not commute(Q1, Q2)

    def test_equal(self):
        assert commute(gp("21|x=0,y=0"), gp("21|x=0,y=0"))

    def test_decomposable_argument(self):
        with pytest.raises(NotIndecomposableError):
            commute(gp("12|x=0,y=0"), Q1)

    def test_matches_box_sums_on_small_cases(self):
        small = small_indecomposables(3)
        for first, second in product(small, repeat=2):
            assert commute(first, second) == (box_sum(first, second) == box_sum(second, first))


class TestGriddings:
    @pytest.mark.parametrize("values, expected", [((), 1), ((1,), 4), ((2, 3, 1), 16), ((2, 4, 1, 3), 25)])
    def test_count(self, values, expected):
        griddings = all_griddings(values)
        assert len(griddings) == expected
        assert all(g.values == values for g in griddings)


@given(st.integers(0, 6).flatmap(lambda n: st.permutations(range(1, n + 1))))
def test_gridding_count_has_no_duplicates(values):
    griddings = list(all_griddings(tuple(values)))
    assert len(set(griddings)) == len(griddings) == (len(values) + 1) ** 2


class TestFactorBijection:
    @pytest.mark.parametrize("base", ["per:;01", "per:;011", "per:;0011"])
    def test_long_factors_give_distinct_indecomposables(self, base):
        spec = parse_pin_spec(f"phi({base})")
        for n in range(4, 9):
            built = {build_pin_permutation(PinWord(f)) for f in factors(spec, n)}
            assert len(built) == len(factors(spec, n))
            assert all(is_box_indecomposable(p) for p in built)


def test_svg_plot():
    word = pin("r_u u_r r_u u_r l_u u_l r_u")
    perm = build_pin_permutation(word)
    svg = render_svg(perm, pin_path(word))
    assert svg.startswith("<svg")
    assert svg.count("<circle") == 7
    assert "<polyline" in svg
    assert svg.rstrip().endswith("</svg>")
    assert "<polyline" not in render_svg(perm)


class TestPinDeletion:
    @pytest.mark.parametrize("size", range(4, 9))
    def test_deleting_an_interior_pin_splits_the_word(self, size):
        words = accepted_words(size)
        assert len(words) == 8 * 2 ** (size - 1)
        for word in words:
            points = pin_points(word)
            for i in range(1, size - 1):
                remaining = GriddedPermutation.from_points(points[:i] + points[i + 1:])
                split = box_sum(build_pin_permutation(word[:i]), build_pin_permutation(word[i + 1:]))
                assert remaining == split, (str(word), i + 1)


class TestIndecomposablesAreFactors:
    @pytest.mark.parametrize("base", ["per:;01", "per:;011", "per:;0011", "per:;0111"])
    def test_every_indecomposable_pattern_is_a_factor(self, base):
        spec = parse_pin_spec(f"phi({base})")
        patterns = class_patterns(spec, 7)
        for m in range(1, 8):
            from_factors = {build_pin_permutation(PinWord(f)) for f in factors(spec, m)}
            indecomposable = {p for p in patterns[m] if is_box_indecomposable(p)}
            assert indecomposable
            assert indecomposable <= from_factors
