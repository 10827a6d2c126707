from fractions import Fraction
from math import comb

import pytest

from conftest import random_riordan
from riordanembed.errors import NotUnitTriangular, ShapeMismatch, SizeExceeded
from riordanembed.gfparse import evaluate
from riordanembed.prodmat import (BidiagonalSpec, ProductionMatrix, bidiagonal_construction,
                                  bidiagonal_matrix, generate, is_riordan_production,
                                  production_of, riordan_violation, tridiagonal)
from riordanembed.riordan import RiordanArray, fit_columns, triangle
from riordanembed.sequences import EventuallyPeriodic
from riordanembed.series import Series
from riordanembed.triangle import Triangle, inverse

P23_R = [[1], [2, 1], [10, 5, 1], [62, 31, 7, 1], [430, 215, 51, 10, 1],
        [3194, 1597, 389, 87, 12, 1]]
P23_LINV = [[1], [2, 1], [6, 3, 1], [12, 6, 2, 1], [36, 18, 6, 3, 1], [72, 36, 12, 6, 2, 1]]
P235_A = [[1], [2, 1], [10, 10, 1], [80, 100, 15, 1], [760, 1030, 190, 22, 1],
        [7700, 10900, 2310, 350, 30, 1]]
P235_B = [[1], [5, 1], [40, 12, 1], [380, 130, 20, 1], [3850, 1410, 300, 25, 1],
        [40400, 15520, 4060, 440, 32, 1]]
P235_R = [[1], [2, 1], [10, 5, 1], [80, 40, 10, 1], [760, 380, 100, 12, 1],
        [7700, 3850, 1030, 130, 15, 1]]
P34_P = [[3, 1], [12, 4, 1], [36, 12, 3, 1], [144, 48, 12, 4, 1], [432, 144, 36, 12, 3, 1],
        [1728, 576, 144, 48, 12, 4, 1]]

PASCAL = RiordanArray.from_strings("1/(1-x)", "x/(1-x)", 12)


def banded_rows(P, n):
    return [[P[i, j] for j in range(i + 2)] for i in range(n)]


def test_tridiagonal_235_moments():
    P = tridiagonal(EventuallyPeriodic([8, 5, 7], [2]), [6, 10, 15], 8)
    assert banded_rows(P, 4) == [[2, 1], [6, 8, 1], [0, 10, 5, 1], [0, 0, 15, 7, 1]]
    assert generate(P, 6).tolist() == P235_A


def test_generate_pascal():
    P = tridiagonal([1], [0], 10)
    assert generate(P, 8) == triangle(PASCAL, 8)


def test_generate_shift_is_identity():
    assert generate(ProductionMatrix.shift(6), 7) == Triangle.identity(7)


def test_generate_needs_size():
    with pytest.raises(SizeExceeded):
        generate(ProductionMatrix.shift(3), 6)


def test_generate_by_matrix_multiplication_oracle():
    # oracle: rows by explicit vector-matrix products on a dense square matrix
    P = tridiagonal(EventuallyPeriodic([8, 5, 7], [2]), [6, 10, 15], 6)
    dense = [[P[i, j] for j in range(7)] for i in range(6)]
    row = [1, 0, 0, 0, 0, 0, 0]
    rows = [row]
    for _ in range(5):
        row = [sum(row[t] * dense[t][j] for t in range(6)) for j in range(7)]
        rows.append(row)
    assert [r[:n + 1] for n, r in enumerate(rows)] == P235_A


def test_production_of_235_moment_matrices():
    P = production_of(Triangle(P235_A))
    assert banded_rows(P, 5) == [[2, 1], [6, 8, 1], [0, 10, 5, 1], [0, 0, 15, 7, 1],
                                 [0, 0, 0, 6, 8, 1]]
    Q = production_of(Triangle(P235_B))
    assert [Q[i, i] for i in range(5)] == [5, 7, 8, 5, 7]
    assert [Q[i + 1, i] for i in range(4)] == [15, 6, 10, 15]


def test_production_of_identity():
    assert production_of(Triangle.identity(6)) == ProductionMatrix.shift(5)


def test_production_of_rejects_non_unit_diagonal():
    with pytest.raises(NotUnitTriangular):
        production_of(Triangle([[1], [3, 2]]))


def test_hessenberg_shape_enforced():
    with pytest.raises(ShapeMismatch):
        ProductionMatrix([[1, 1, 5]])


def test_riordan_criterion_examples():
    assert is_riordan_production(production_of(triangle(PASCAL, 10)))
    P3, _ = bidiagonal_construction(BidiagonalSpec.periodic([2, 3]), 8)
    assert not is_riordan_production(P3)
    P7, _ = bidiagonal_construction(BidiagonalSpec.periodic([3, 4]), 8)
    assert not is_riordan_production(P7)
    assert riordan_violation(P7) is not None


def test_riordan_criterion_random(rng):
    for _ in range(10):
        A = random_riordan(rng)
        assert is_riordan_production(production_of(triangle(A, A.order)))


def test_bidiagonal_period_23():
    P, T = bidiagonal_construction(BidiagonalSpec.periodic([2, 3]), 6)
    assert T.tolist() == P23_R
    assert inverse(bidiagonal_matrix(BidiagonalSpec.periodic([2, 3]), 6)).tolist() == P23_LINV


def test_bidiagonal_period_235():
    _, T = bidiagonal_construction(BidiagonalSpec.periodic([2, 3, 5]), 6)
    assert T.tolist() == P235_R


def test_bidiagonal_period_34_production_matrix():
    P, _ = bidiagonal_construction(BidiagonalSpec.periodic([3, 4]), 7)
    assert P.tolist() == P34_P


def test_bidiagonal_period_one_is_catalan_triangle():
    P, T = bidiagonal_construction(BidiagonalSpec.periodic([1]), 8)
    # oracle: L^{-1} of the all-ones bidiagonal is the all-ones lower triangle
    assert all(v == 1 for row in P.rows for v in row)
    assert T == triangle(RiordanArray.from_strings("c", "x*c", 8), 8)


def test_period_23_column_generating_functions():
    Linv = inverse(bidiagonal_matrix(BidiagonalSpec.periodic([2, 3]), 12))
    even = Series([1, 2, 6, 12, 36, 72, 216, 432, 1296, 2592, 7776, 15552], 12)
    odd = Series([1, 3, 6, 18, 36, 108, 216, 648, 1296, 3888, 7776], 11)
    assert even == evaluate("(1+2*x)/(1-6*x^2)", 12)
    assert odd == evaluate("(1+3*x)/(1-6*x^2)", 11)
    for k in range(12):
        want = (even if k % 2 == 0 else odd).coeffs
        assert list(Linv.column(k)) == list(want[:12 - k])


def test_period_23_is_not_riordan():
    _, T = bidiagonal_construction(BidiagonalSpec.periodic([2, 3]), 8)
    fitted = triangle(fit_columns(T), 8, integral=False)
    assert fitted != T
    assert [fitted[n, 2] for n in range(2, 4)] != [T[n, 2] for n in range(2, 4)]


def test_roundtrip_generate_then_extract(rng):
    for _ in range(20):
        P = ProductionMatrix.from_function(
            lambda i, j: 1 if j == i + 1 else rng.randint(-4, 4), 7)
        assert production_of(generate(P, 8)) == P


def test_roundtrip_extract_then_generate(rng):
    for _ in range(20):
        M = Triangle([[rng.randint(-9, 9) for _ in range(n)] + [1] for n in range(8)])
        assert generate(production_of(M), 8) == M


def test_production_of_rational():
    M = Triangle([[1], [Fraction(1, 2), 1], [0, 3, 1]])
    assert generate(production_of(M), 3) == M


def test_spec_round_trip():
    spec = BidiagonalSpec.periodic([2, 3], pre=[7])
    assert spec.spec() == "bidiag pre=[7] period=[2,3]"
    assert BidiagonalSpec.parse(spec.spec()) == spec
    with pytest.raises(ValueError):
        BidiagonalSpec.periodic([2, 0])


def test_pascal_production_entries():
    P = production_of(triangle(PASCAL, 8))
    assert banded_rows(P, 3) == [[1, 1], [0, 1, 1], [0, 0, 1, 1]]
    assert generate(P, 8).tolist() == [[comb(n, k) for k in range(n + 1)] for n in range(8)]
