import pytest

from dfgamma.cfrac import (
    MotzkinPath, b_coeff, cfrac_series, enumerate_motzkin_paths, gamma_by_cfrac,
    gamma_by_motzkin, jcoeffs, lambda_coeff, motzkin_numbers, motzkin_sum, path_weight,
)
from dfgamma.polyring import ONE, ZERO, MultiPoly, x, xb, y, yb, z, zb
from dfgamma.recurrences import gamma

ONES = [1] * 6


def test_coefficients():
    assert b_coeff(0) == x * yb + y * zb + z * xb
    assert [b_coeff(i).evaluate(ONES) for i in range(4)] == [3, 10, 21, 36]
    lam1 = lambda_coeff(1)
    assert lam1 == (xb + y) * (yb + z) * (zb + x)
    assert len(lam1) == 8 and lam1.evaluate(ONES) == 8
    assert lambda_coeff(3) == 3 * (xb + y + 2) * (yb + z + 2) * (zb + x + 2)
    assert jcoeffs(0).lam is None


def test_coefficient_domain():
    with pytest.raises(ValueError):
        b_coeff(-1)
    with pytest.raises(ValueError):
        lambda_coeff(0)


def test_motzkin_numbers():
    assert motzkin_numbers(8) == [1, 1, 2, 4, 9, 21, 51, 127, 323]


def test_dp_matches_listing_with_unit_weights():
    ones = lambda h: ONE  # noqa: E731
    assert [motzkin_sum(k, ones, ones).constant_term() for k in range(9)] == motzkin_numbers(8)


def test_paths_are_validated():
    with pytest.raises(ValueError):
        MotzkinPath("D")
    with pytest.raises(ValueError):
        MotzkinPath("UL")
    assert MotzkinPath("ULD").heights() == [0, 1, 1, 0]
    assert {p.steps for p in enumerate_motzkin_paths(3)} == {"LLL", "ULD", "UDL", "LUD"}


def test_path_weight():
    assert path_weight(MotzkinPath("ULD")) == lambda_coeff(1) * b_coeff(1)


def test_small_gamma():
    assert gamma_by_motzkin(1) == ONE
    assert gamma_by_motzkin(2) == b_coeff(0)
    assert gamma_by_motzkin(3) == b_coeff(0) ** 2 + lambda_coeff(1)
    assert gamma_by_motzkin(3) == gamma(3)


@pytest.mark.parametrize("n", range(1, 11))
def test_motzkin_matches_recurrence(n):
    assert gamma_by_motzkin(n) == gamma(n)


@pytest.mark.parametrize("n", range(1, 8))
def test_explicit_paths_match_dp(n):
    assert gamma_by_motzkin(n, explicit=True) == gamma_by_motzkin(n)


def test_cfrac_coefficients():
    coeffs = gamma_by_cfrac(10)
    assert coeffs[0] == ZERO
    assert coeffs[1] == ONE and coeffs[2] == b_coeff(0)
    assert coeffs[1:] == [gamma(n) for n in range(1, 11)]


def test_cfrac_depth_is_enough():
    assert gamma_by_cfrac(8) == gamma_by_cfrac(8, depth=8)
    # one level too shallow misses the deepest path
    assert gamma_by_cfrac(8, depth=4)[8] == gamma(8)
    assert gamma_by_cfrac(8, depth=3)[8] != gamma(8)


def test_cfrac_series_single_level():
    s = cfrac_series(3, 1)
    b0 = b_coeff(0)
    assert list(s.coeffs) == [ONE, b0, b0**2, b0**3]


def test_cfrac_errors():
    with pytest.raises(ValueError):
        gamma_by_cfrac(0)
    with pytest.raises(ValueError):
        cfrac_series(3, 0)
    assert isinstance(gamma_by_cfrac(1)[1], MultiPoly)
