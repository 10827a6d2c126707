from math import comb

import pytest

from conftest import random_riordan
from riordanembed.errors import InvariantViolation, OrderExceeded
from riordanembed.riordan import (RiordanArray, column_series, entry, fit_columns, identity,
                                  inverse, multiply, triangle)
from riordanembed.series import Series
from riordanembed.triangle import Triangle, matmul

R = RiordanArray.from_strings


def pascal(order=16):
    return R("1/(1-x)", "x/(1-x)", order)


def catalan_array(order=16):
    return R("c", "x*c", order)


def brute_matmul(a, b):
    n = len(a)
    return [[sum(a[i][m] * b[m][j] for m in range(n)) for j in range(n)] for i in range(n)]


def test_entries():
    assert entry(pascal(), 4, 2) == 6
    assert entry(catalan_array(), 5, 2) == 28
    assert entry(pascal(), 3, 5) == 0
    for n in range(10):
        assert entry(catalan_array(), n, n) == 1


def test_entry_order_exceeded():
    with pytest.raises(OrderExceeded):
        entry(pascal(8), 8, 0)


def test_pascal_triangle():
    t = triangle(pascal(), 6)
    assert t.rows == tuple(tuple(comb(n, k) for k in range(n + 1)) for n in range(6))


def test_catalan_triangle():
    t = triangle(catalan_array(), 6)
    assert [list(r) for r in t.rows] == [
        [1], [1, 1], [2, 2, 1], [5, 5, 3, 1], [14, 14, 9, 4, 1], [42, 42, 28, 14, 5, 1]]


def test_identity_triangle():
    assert triangle(identity(8), 5) == Triangle.identity(5)


def test_triangle_needs_order():
    with pytest.raises(OrderExceeded):
        triangle(pascal(5), 6)


def test_invariants_checked():
    with pytest.raises(InvariantViolation):
        R("2/(1-x)", "x", 8)
    with pytest.raises(InvariantViolation):
        R("1", "1+x", 8)
    with pytest.raises(InvariantViolation):
        R("1", "2*x", 8)


def test_multiply_gives_b_from_shift():
    P = catalan_array(12)
    A = R("c", "x*c^2", 12)
    shift = RiordanArray(P.f.divx(), Series.x(11))
    B = R("c^2", "x*c^2", 11)
    assert multiply(shift, A.truncate(11)) == B


def test_pascal_squared():
    sq = triangle(multiply(pascal(), pascal()), 8)
    # oracle: entries 2^(n-k) C(n,k)
    assert sq.tolist() == [[2 ** (n - k) * comb(n, k) for k in range(n + 1)] for n in range(8)]
    p = triangle(pascal(), 8).tolist(square=True)
    assert sq.tolist(square=True) == brute_matmul(p, p)


def test_inverse_examples():
    assert inverse(catalan_array()) == R("1-x", "x*(1-x)", 16)
    assert inverse(R("c", "x*c^2", 16)) == R("1/(1+x)", "x/(1+x)^2", 16)
    assert inverse(identity(10)) == identity(10)


def test_inverse_triangle_is_matrix_inverse(rng):
    for _ in range(10):
        A = random_riordan(rng)
        m = A.order
        assert matmul(triangle(A, m), triangle(inverse(A), m)) == Triangle.identity(m)


def test_column_generating_functions(rng):
    A = random_riordan(rng)
    t = triangle(A, A.order)
    for k in range(A.order):
        assert list(t.column(k)) == column_series(A, k).as_integers()[k:]


def test_group_axioms(rng):
    for _ in range(15):
        a, b, c = (random_riordan(rng) for _ in range(3))
        assert multiply(multiply(a, b), c) == multiply(a, multiply(b, c))
        assert multiply(a, identity(a.order)) == a
        assert multiply(identity(a.order), a) == a
        assert multiply(a, inverse(a)) == identity(a.order)
        assert multiply(inverse(a), a) == identity(a.order)


def test_matrix_homomorphism(rng):
    for _ in range(15):
        a, b = random_riordan(rng), random_riordan(rng)
        m = 10
        assert triangle(multiply(a, b), m) == matmul(triangle(a, m), triangle(b, m))


def test_fit_columns_recovers_array(rng):
    A = random_riordan(rng)
    assert fit_columns(triangle(A, A.order)) == A


def test_matmul_operator():
    assert pascal() @ identity(16) == pascal()
