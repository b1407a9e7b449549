import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from dfgamma.ansatz import (
    PolyMatrix, TruncationError, braket_string, braket_word, gamma_by_M, gamma_by_N, make_A,
    make_B, make_D, make_E, make_I, make_M, make_Mi, make_N, make_Ni, profile_braket,
)
from dfgamma.cfrac import b_coeff, lambda_coeff
from dfgamma.escaliers import count_surjective
from dfgamma.polyring import ONE, ZERO, MultiPoly, poly_sum, x, xb, y, yb, z, zb
from dfgamma.recurrences import gamma
from dfgamma.tableaux import ShapeWord, ansatz_weight_sum


def test_generator_entries():
    D, E, B, A = make_D(4), make_E(4), make_B(4), make_A(4)
    assert D[0, 0] == y and D[0, 1] == ONE and D[2, 3] == MultiPoly(3)
    assert E[0, 0] == xb and E[1, 0] == y + xb and E[0, 1] == ZERO
    assert B[0, 0] == ZERO and B[0, 1] == ONE and B[1, 1] == ONE
    assert A[1, 0] == ONE and A[0, 0] == ZERO


def test_m_and_n_first_entries():
    M, N = make_M(4), make_N(4)
    assert M[0, 0] == x * yb + y * zb + z * xb
    assert (M[0, 1] * M[1, 0]) == (xb + y) * (yb + z) * (zb + x)
    assert N[0, 1] == z + yb
    assert N[1, 0] == (x + zb) * (y + xb)


@pytest.mark.parametrize("dim", range(2, 13))
def test_commutation_relations(dim):
    D, E, B, A, I = make_D(dim), make_E(dim), make_B(dim), make_A(dim), make_I(dim)
    k = dim - 1  # the last row and column see the truncation
    assert (D @ E - E @ D).block(k) == (D + E).block(k)
    assert (B @ A - A @ B).block(k) == (A + I).block(k)


def test_tridiagonal_with_jfraction_entries():
    dim = 12
    for M in (make_M(dim), make_N(dim)):
        assert M.block(dim - 1).bandwidth() == 1
        for i in range(10):
            assert M[i, i] == b_coeff(i)
            assert M[i, i + 1] * M[i + 1, i] == lambda_coeff(i + 1)


def test_sums_of_pieces():
    dim = 6
    assert poly_sum_matrix([make_Mi(i, dim) for i in range(1, 7)]) == make_M(dim)
    assert poly_sum_matrix([make_Ni(i, dim) for i in range(1, 7)]) == make_N(dim)


def poly_sum_matrix(mats):
    total = mats[0]
    for m in mats[1:]:
        total = total + m
    return total


def test_piece_index_errors():
    with pytest.raises(ValueError):
        make_Mi(0, 3)
    with pytest.raises(ValueError):
        make_Ni(7, 3)


def test_brakets():
    assert braket_string("DE") == xb * y + y + xb
    assert braket_word([make_I(3)]) == ONE
    assert braket_string("BA") == ONE
    assert braket_string("") == ONE


def test_truncation_error():
    with pytest.raises(TruncationError):
        braket_word([make_D(2)] * 2)
    with pytest.raises(ValueError):
        braket_word([make_D(3), make_E(4)])


def test_matrix_shape_checks():
    with pytest.raises(ValueError):
        PolyMatrix([[1, 2]])
    with pytest.raises(ValueError):
        make_D(2) + make_D(3)


@settings(max_examples=30, deadline=None)
@given(st.text(alphabet="DE", max_size=7), st.integers(0, 3))
def test_braket_stable_under_larger_truncation(word, extra):
    assert braket_string(word) == braket_string(word, len(word) + 1 + extra)


@settings(max_examples=30, deadline=None)
@given(st.text(alphabet="DE", max_size=7))
def test_alternative_ansatz(word):
    assert braket_string(word) == ansatz_weight_sum(ShapeWord(word))


@settings(max_examples=30, deadline=None)
@given(st.text(alphabet="BA", max_size=8))
def test_surjective_ansatz(word):
    shape = ShapeWord.parse(word) if word else ShapeWord("")
    assert braket_string(word) == MultiPoly(count_surjective(shape))


def test_gamma_small():
    assert gamma_by_M(0) == ONE and gamma_by_N(0) == ONE
    assert gamma_by_M(1) == b_coeff(0) == gamma_by_N(1)


@pytest.mark.parametrize("n", range(0, 8))
def test_gamma_routes_match_recurrence(n):
    assert gamma_by_M(n) == gamma(n + 1)
    assert gamma_by_N(n) == gamma(n + 1)


@pytest.mark.parametrize("n", range(0, 6))
def test_gamma_independent_of_truncation(n):
    assert gamma_by_M(n, n + 4) == gamma_by_M(n)
    assert gamma_by_N(n, n + 4) == gamma_by_N(n)


def test_profile_braket_empty_and_sum():
    assert profile_braket("M", ()) == ONE
    total = poly_sum(profile_braket("M", (i, j)) for i in range(1, 7) for j in range(1, 7))
    assert total == gamma(3)
