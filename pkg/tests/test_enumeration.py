import pytest

from patiencesort.enumeration import (
    bell, convolved_fib, convolved_fib_compositions, f_alternate, f_sequence, f_table, f_via_matrix,
    fib, identity_matrix, involution_count, mat_mul, matrix_A, neumann_inverse, series_inverse_one_minus_x_minus_x2,
    series_mul, vector_F,
)
from patiencesort.patience import _set_partitions
from patiencesort.patterns import avoidance_set

F_SEQ = [1, 1, 2, 4, 9, 23, 66, 209, 718, 2645, 10373, 43090, 188803, 869191, 4189511]

A_ROWS = [[1], [1, 1], [2, 2, 1], [3, 5, 3, 1], [5, 10, 9, 4, 1], [8, 20, 22, 14, 5, 1]]
INV_ROW = [21, 16, 10, 4, 1, 0, 1]


def test_bell_examples():
    assert bell(0) == 1 and bell(3) == 5 and bell(5) == 52 and bell(9) == 21147
    with pytest.raises(ValueError):
        bell(31)


@pytest.mark.parametrize("n", range(9))
def test_bell_counts_set_partitions(n):
    assert bell(n) == sum(1 for _ in _set_partitions(n))


def test_fib():
    assert [fib(n) for n in range(6)] == [1, 1, 2, 3, 5, 8]
    with pytest.raises(ValueError):
        fib(-1)


def test_convolved_fib_examples():
    assert convolved_fib(2, 0) == 1 and convolved_fib(4, 0) == 2
    assert convolved_fib(5, 1) == 5 and convolved_fib(7, 2) == 22
    assert convolved_fib(3, 5) == 0
    assert convolved_fib(10, 0) == fib(8) == 34


def test_convolved_fib_matrix_rows():
    for i, row in enumerate(A_ROWS):
        n = i + 2
        assert [convolved_fib(n, k) for k in range(n - 1)] == row


@pytest.mark.parametrize("m", range(6))
def test_convolved_column_generating_function(m):
    # x^{m+2} / (1 - x - x^2)^{m+1} by plain truncated series products
    terms = 20
    base = series_inverse_one_minus_x_minus_x2(terms)
    acc = [1] + [0] * (terms - 1)
    for _ in range(m + 1):
        acc = series_mul(acc, base, terms)
    coeffs = [0] * (m + 2) + acc[: terms - m - 2]
    assert coeffs == [convolved_fib(n, m) for n in range(terms)]


@pytest.mark.parametrize("n", range(16))
def test_convolved_fib_composition_form(n):
    for k in range(n + 1):
        assert convolved_fib(n, k) == convolved_fib_compositions(n, k)


def test_f_table_sequence():
    assert f_sequence(14) == F_SEQ


def test_f_table_boundary_equations():
    t = f_table(20)
    assert t[(0, 0)] == 1
    for n in range(1, 21):
        assert t[(n, 0)] == 0
        assert t[(n, 1)] == t[(n, n)] == t.f(n - 1)
        if n >= 3:
            assert t[(n, 2)] == 0
        for k in range(3, n):
            assert t[(n, k)] == t[(n, k - 1)] + t[(n - 1, k - 1)] + t[(n - 2, k - 2)]
    with pytest.raises(ValueError):
        f_table(65)


@pytest.mark.parametrize("n", range(8))
def test_f_rows_count_by_first_letter(n):
    av = avoidance_set(n, ["3-~1-42", "3-~1-24"])
    t = f_table(n)
    for k in range(n + 1):
        assert t[(n, k)] == sum(1 for p in av if p and p[0] == k) + (n == 0 and k == 0)


def test_matrix_A_structure():
    A = matrix_A(10)
    for n in range(10):
        for k in range(10):
            if k >= n - 1:
                assert A[n][k] == 0


def test_inverse_matrix_display():
    inv = neumann_inverse(matrix_A(8))
    assert inv[6][:7] == INV_ROW
    assert all(v >= 0 for row in inv for v in row)
    I = identity_matrix(8)
    A = matrix_A(8)
    IA = [[I[i][j] - A[i][j] for j in range(8)] for i in range(8)]
    assert mat_mul(IA, inv) == I


def test_vector_F():
    assert vector_F(6) == [1, 1, 1, 2, 3, 5]


@pytest.mark.parametrize("N", [0, 1, 5, 14, 30])
def test_matrix_form_matches_recurrence(N):
    assert f_via_matrix(N) == f_sequence(N)


def test_alternate_recurrence():
    t = f_table(20)
    for n in range(2, 21):
        for k in range(2, n + 1):
            assert f_alternate(n, k, t) == t[(n, k)]


def test_alternate_recurrence_needs_shifted_coefficient():
    # with a(k, m) in place of a(k - 1, m) the k = 4 row is already off
    t = f_table(5)
    k, n = 4, 5
    wrong = sum(convolved_fib(k, m) * t.f(n - k + m) for m in range(k - 2))
    assert wrong != t[(n, k)] == f_alternate(n, k, t) == 3


def test_involution_count():
    assert [involution_count(n) for n in range(8)] == [1, 1, 2, 4, 10, 26, 76, 232]


def test_exact_big_integers():
    assert f_via_matrix(64)[-1] == f_sequence(64)[-1]
    assert isinstance(f_sequence(64)[-1], int) and f_sequence(64)[-1] > 2 ** 64
