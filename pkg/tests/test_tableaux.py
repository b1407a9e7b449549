import json
from collections import Counter

import pytest
from hypothesis import given, settings

from conftest import brute_tableaux, shape_words
from dfgamma.polyring import ONE, ZERO, poly_sum, x, xb, y, yb, z, zb
from dfgamma.recurrences import gamma
from dfgamma.tableaux import (
    DOWN, EMPTY, LEFT, AltTableau, ExtAltTableau, ShapeWord, StatVector, conjugate,
    count_tableaux, decorations, enumerate_extended, enumerate_tableaux, ext_profile,
    ext_weight, extended_weight_total, free_cols, free_rows, gamma_by_tableaux, is_alternative,
    stats,
)

ONE_CELL = ShapeWord("DE")


def test_shape_geometry():
    s = ShapeWord.staircase(3)
    assert s.word == "DEDEDE"
    assert s.row_lengths == (1, 2, 3)
    assert s.col_heights == (3, 2, 1)
    assert s.corners() == [(1, 1), (2, 2), (3, 3)]
    assert s.is_staircase()
    assert ShapeWord.parse("BBA").word == "DDE"


def test_zero_size_rows_and_columns():
    s = ShapeWord("EDDE")
    assert s.row_lengths == (0, 2)
    assert s.n_cells() == 2


def test_transpose_is_involution():
    s = ShapeWord("DDEDE")
    assert s.transpose().transpose() == s
    assert s.transpose().row_lengths == tuple(reversed(s.col_heights))


def test_cell_free_shape_has_one_tableau():
    assert count_tableaux(ShapeWord("E")) == 1
    assert count_tableaux(ShapeWord("")) == 1


def test_one_cell_fillings():
    fills = sorted(t.get(1, 1) for t in enumerate_tableaux(ONE_CELL))
    assert fills == sorted([EMPTY, LEFT, DOWN])


@pytest.mark.parametrize("n", range(0, 4))
def test_staircase_counts_against_brute_force(n):
    shape = ShapeWord.staircase(n)
    assert set(enumerate_tableaux(shape)) == set(brute_tableaux(shape))


@pytest.mark.parametrize("n", range(0, 6))
def test_staircase_counts_equal_gamma_at_ones(n):
    assert count_tableaux(ShapeWord.staircase(n)) == gamma(n + 1).evaluate([1] * 6)


@settings(max_examples=40, deadline=None)
@given(shape_words)
def test_any_shape_against_brute_force(word):
    shape = ShapeWord(word)
    found = list(enumerate_tableaux(shape))
    assert len(found) == len(set(found))
    assert set(found) == set(brute_tableaux(shape))


def test_worked_example_statistics():
    t = AltTableau.from_cells(ShapeWord.staircase(5), {
        (2, 1): LEFT, (3, 2): LEFT, (4, 1): LEFT, (3, 3): DOWN, (4, 4): DOWN,
    })
    assert is_alternative(t)
    assert tuple(stats(t)) == (2, 2, 2, 0, 1, 0)


def test_single_cell_stats():
    down = AltTableau.from_cells(ONE_CELL, {(1, 1): DOWN})
    assert tuple(stats(down)) == (0, 0, 1, 1, 0, 0)
    left = AltTableau.from_cells(ONE_CELL, {(1, 1): LEFT})
    assert tuple(stats(left)) == (0, 1, 0, 0, 0, 1)


@pytest.mark.parametrize("n", range(0, 6))
def test_empty_staircase_stats(n):
    t = AltTableau.from_cells(ShapeWord.staircase(n), {})
    assert stats(t) == StatVector(n, 0, 0, 0, n, 0)


def test_clear_view_violations_are_rejected():
    s = ShapeWord.staircase(2)
    # an arrow to the left of a left-arrow blocks it
    assert not is_alternative(AltTableau.from_cells(s, {(2, 1): DOWN, (2, 2): LEFT}))
    # a down-arrow above a filled cell
    assert not is_alternative(AltTableau.from_cells(s, {(1, 1): DOWN, (2, 1): LEFT}))
    assert is_alternative(AltTableau.from_cells(s, {(1, 1): LEFT, (2, 1): DOWN}))


def test_from_cells_rejects_outside_cell():
    with pytest.raises(ValueError):
        AltTableau.from_cells(ONE_CELL, {(1, 2): LEFT})


@pytest.mark.parametrize("n", range(1, 5))
def test_free_row_decomposition(n):
    for t in enumerate_tableaux(ShapeWord.staircase(n)):
        rows_without_left = sum(1 for row in t.rows if LEFT not in row)
        cols_without_down = sum(1 for c in range(1, n + 1) if DOWN not in t.column(c))
        assert free_rows(t) == rows_without_left
        assert free_cols(t) == cols_without_down


def test_gamma_by_tableaux_small():
    assert gamma_by_tableaux(1) == ONE
    assert gamma_by_tableaux(2) == x * yb + xb * z + y * zb
    assert gamma_by_tableaux(5).evaluate([1] * 6) == 2073


@pytest.mark.parametrize("n", range(1, 7))
def test_gamma_by_tableaux_matches_recurrence(n):
    assert gamma_by_tableaux(n) == gamma(n)


def test_conjugate_single_cell():
    t = AltTableau.from_cells(ONE_CELL, {(1, 1): LEFT})
    assert conjugate(t) == AltTableau.from_cells(ONE_CELL, {(1, 1): DOWN})


@pytest.mark.parametrize("word", ["DDEDE", "DEDDEE", "DDDEE", "DEDEDE"])
def test_conjugation_is_bijection_onto_transpose(word):
    shape = ShapeWord(word)
    images = [conjugate(t) for t in enumerate_tableaux(shape)]
    assert set(images) == set(enumerate_tableaux(shape.transpose()))
    assert len(set(images)) == len(images)
    for t in enumerate_tableaux(shape):
        assert conjugate(conjugate(t)) == t


@pytest.mark.parametrize("n", range(0, 5))
def test_conjugation_statistic_swap(n):
    for t in enumerate_tableaux(ShapeWord.staircase(n)):
        s, c = stats(t), stats(conjugate(t))
        assert tuple(c) == (s.emc, s.fnr, s.lco, s.fnc, s.emr, s.dco)


def test_json_roundtrip():
    for t in enumerate_tableaux(ShapeWord.staircase(3)):
        assert AltTableau.from_json_obj(json.loads(t.to_json())) == t


def test_extended_counts():
    assert sum(1 for _ in enumerate_extended(0)) == 1
    bases = Counter(u.base.get(1, 1) for u in enumerate_extended(1))
    assert bases == {EMPTY: 4, LEFT: 1, DOWN: 1}


def test_extended_weights_single_cell():
    empty = AltTableau.from_cells(ONE_CELL, {})
    assert ext_weight(ExtAltTableau(empty)) == y * xb
    full = ExtAltTableau(empty, frozenset({1}), frozenset({1}))
    assert ext_weight(full) == (x - xb) * (yb - y)
    assert poly_sum(ext_weight(u) for u in enumerate_extended(1)) == gamma(2)


def test_only_empty_lines_may_be_dashed():
    t = AltTableau.from_cells(ONE_CELL, {(1, 1): LEFT})
    with pytest.raises(ValueError):
        ExtAltTableau(t, frozenset({1}), frozenset())


@pytest.mark.parametrize("n", range(0, 5))
def test_extended_sum_gives_gamma(n):
    assert extended_weight_total(n) == gamma(n + 1)


def test_decorations_count():
    t = AltTableau.from_cells(ShapeWord.staircase(3), {})
    assert sum(1 for _ in decorations(t)) == 2 ** 6


def test_worked_example_profiles():
    s = ShapeWord.staircase(5)
    first = AltTableau.from_cells(s, {(2, 1): LEFT, (4, 1): LEFT, (4, 3): DOWN, (4, 4): DOWN})
    second = AltTableau.from_cells(s, {(2, 2): LEFT, (4, 3): LEFT, (5, 2): DOWN, (5, 5): DOWN})
    assert is_alternative(first) and is_alternative(second)
    u1 = ExtAltTableau(first, frozenset({5}), frozenset({2, 5}))
    u2 = ExtAltTableau(second, frozenset({3}), frozenset({1}))
    assert ext_profile(u1) == (1, 5, 1, 4, 6)
    assert ext_profile(u2) == (5, 2, 3, 1, 4)


@pytest.mark.parametrize("n", range(0, 5))
def test_empty_staircase_profile(n):
    t = AltTableau.from_cells(ShapeWord.staircase(n), {})
    assert ext_profile(ExtAltTableau(t)) == (1,) * n


def test_profile_requires_staircase():
    t = AltTableau.from_cells(ShapeWord("DDE"), {})
    with pytest.raises(ValueError):
        ext_profile(ExtAltTableau(t))


def test_zero_weight_polys_not_confused():
    # the weights of the two dashed one-cell tableaux cancel against the plain one
    empty = AltTableau.from_cells(ONE_CELL, {})
    ws = [ext_weight(u) for u in decorations(empty)]
    assert poly_sum(ws) == x * yb
    assert ZERO not in ws
