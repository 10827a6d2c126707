"""
Named reproduction checks for every worked example: each check recomputes a
displayed matrix, sequence or identity and compares it with the printed values.

``run_all()`` returns one :class:`CheckResult` per check; the CLI command
``verify-paper`` is a thin wrapper around it.
"""

import random
from dataclasses import dataclass
from math import comb

from . import series as fps
from .cfrac import (JFraction, SFraction, contract_even, contract_odd, j_to_series,
                    jfraction_to_tridiagonal, s_to_series)
from .embedding import cascade, decompose, embed, interleave, second_level_closed_forms, split
from .gfparse import evaluate
from .orthopoly import (InterleavedFamily, Recurrence, interleaved_moment_matrix, moment_matrix,
                        polynomials)
from .prodmat import (BidiagonalSpec, bidiagonal_construction, bidiagonal_matrix, generate,
                      is_riordan_production, production_of)
from .riordan import RiordanArray, inverse, triangle
from .sequences import EventuallyPeriodic
from .triangle import inverse as tri_inverse

ORDER = 32

CHECKS = []


def check(name, criterion):
    def register(fn):
        CHECKS.append((name, criterion, fn))
        return fn
    return register


@dataclass
class CheckResult:
    name: str
    criterion: int
    passed: bool
    expected: str
    actual: str

    def asdict(self):
        return {"name": self.name, "criterion": self.criterion, "passed": self.passed,
                "expected": self.expected, "actual": self.actual}


def R(g, f, order=ORDER):
    return RiordanArray.from_strings(g, f, order)


def rows(t):
    return t.tolist()


def ints(s, n=None):
    coeffs = s.coeffs if n is None else s.coeffs[:n]
    return [int(c) if c.denominator == 1 else c for c in coeffs]


PASCAL = ("1/(1-x)", "x/(1-x)")
CATALAN = ("c", "x*c")


# criterion 1: binomial matrix --------------------------------------------------

@check("pascal.triangle", 1)
def _():
    expected = [[1], [1, 1], [1, 2, 1], [1, 3, 3, 1], [1, 4, 6, 4, 1], [1, 5, 10, 10, 5, 1]]
    return expected, rows(triangle(R(*PASCAL), 6))


@check("pascal.A_general_term", 1)
def _():
    A = decompose(R(*PASCAL)).A
    expected = [[comb(n + k, 2 * k) for k in range(n + 1)] for n in range(10)]
    return expected, rows(triangle(A, 10))


@check("pascal.B_general_term", 1)
def _():
    B = decompose(R(*PASCAL)).B
    expected = [[comb(n + k + 1, 2 * k + 1) for k in range(n + 1)] for n in range(10)]
    return expected, rows(triangle(B, 10))


@check("pascal.A_series", 1)
def _():
    A = decompose(R(*PASCAL)).A
    want = R("1/(1-x)", "x/(1-x)^2")
    return True, A.agrees(want)


@check("pascal.B_series", 1)
def _():
    B = decompose(R(*PASCAL)).B
    want = R("1/(1-x)^2", "x/(1-x)^2")
    return True, B.agrees(want)


# criterion 2: Catalan array ----------------------------------------------------

@check("catalan.triangle", 2)
def _():
    expected = [[1], [1, 1], [2, 2, 1], [5, 5, 3, 1], [14, 14, 9, 4, 1], [42, 42, 28, 14, 5, 1]]
    return expected, rows(triangle(R(*CATALAN), 6))


@check("catalan.decompose", 2)
def _():
    A, B = decompose(R(*CATALAN, order=16))
    ok = (A.agrees(R("c", "x*c^2", 16), 16)
          and B.truncate(15).agrees(R("c^2", "x*c^2", 16), 15))
    return True, ok


@check("catalan.inverse", 2)
def _():
    return True, inverse(R(*CATALAN)).agrees(R("1-x", "x*(1-x)"))


@check("catalan.inverse_display", 2)
def _():
    expected = [[1], [-1, 1], [0, -2, 1], [0, 1, -3, 1], [0, 0, 3, -4, 1], [0, 0, -1, 6, -5, 1]]
    return expected, rows(triangle(inverse(R(*CATALAN)), 6))


@check("catalan.A_inverse", 2)
def _():
    return True, inverse(R("c", "x*c^2")).agrees(R("1/(1+x)", "x/(1+x)^2"))


@check("catalan.P_recurrence", 2)
def _():
    # P_n = (x-2)P_{n-1} - P_{n-2}, P_1 = x-1: coefficient array of A
    return rows(triangle(R("1/(1+x)", "x/(1+x)^2"), 8)), rows(polynomials(Recurrence(2, 1, -1), 8))


@check("catalan.Q_recurrence", 2)
def _():
    return rows(triangle(R("1/(1+x)^2", "x/(1+x)^2"), 8)), rows(polynomials(Recurrence(2, 1, -2), 8))


# criterion 3: the non-Riordan example -----------------------------------------------

COUNTER = BidiagonalSpec.periodic([2, 3])


@check("counter.generated_triangle", 3)
def _():
    expected = [[1], [2, 1], [10, 5, 1], [62, 31, 7, 1], [430, 215, 51, 10, 1],
                [3194, 1597, 389, 87, 12, 1]]
    return expected, rows(bidiagonal_construction(COUNTER, 6)[1])


@check("counter.inverse_bidiagonal", 3)
def _():
    expected = [[1], [2, 1], [6, 3, 1], [12, 6, 2, 1], [36, 18, 6, 3, 1], [72, 36, 12, 6, 2, 1]]
    return expected, rows(tri_inverse(bidiagonal_matrix(COUNTER, 6)))


@check("counter.column_gfs", 3)
def _():
    Linv = tri_inverse(bidiagonal_matrix(COUNTER, 12))
    even = evaluate("(1+2*x)/(1-6*x^2)", 12)
    odd = evaluate("(1+3*x)/(1-6*x^2)", 12)
    actual = all(Linv.column(k) == ints(even if k % 2 == 0 else odd, 12 - k) for k in range(12))
    return True, actual


@check("counter.not_riordan_production", 3)
def _():
    P, _ = bidiagonal_construction(COUNTER, 8)
    return False, is_riordan_production(P)


@check("counter.sfraction_moments", 3)
def _():
    return [1, 2, 10, 62, 430, 3194], ints(s_to_series(SFraction.periodic([2, 3]), 6))


@check("counter.embedded_A", 3)
def _():
    T = bidiagonal_construction(COUNTER, 12)[1]
    A, _ = split(T)
    return rows(A), rows(triangle(inverse(R("1/(1+2*x)", "x/(1+5*x+6*x^2)")), A.nrows))


@check("counter.embedded_B", 3)
def _():
    T = bidiagonal_construction(COUNTER, 12)[1]
    _, B = split(T)
    return rows(B), rows(triangle(inverse(R("1/(1+5*x+6*x^2)", "x/(1+5*x+6*x^2)")), B.nrows))


@check("counter.factorization", 3)
def _():
    return [1, 5, 6], ints(evaluate("(1+2*x)*(1+3*x)", 3))


# criterion 4: embedding a given array -------------------------------------------------

@check("embed.central_binomial", 4)
def _():
    # f = x/sqrt(1-4x) has the central binomial coefficients; compare literally
    # as well, since both sides would share a faulty sqrt
    Rr = embed(R("1/sqrt(1-4*x)", "x/(1-4*x)"))
    same = Rr.agrees(R("1/sqrt(1-4*x)", "x/sqrt(1-4*x)"))
    return [True, [0, 1, 2, 6, 20, 70, 252]], [same, ints(Rr.f)[:7]]


@check("embed.A_display", 4)
def _():
    expected = [[1], [2, 1], [6, 6, 1], [20, 30, 10, 1], [70, 140, 70, 14, 1],
                [252, 630, 420, 126, 18, 1]]
    return expected, rows(triangle(R("1/sqrt(1-4*x)", "x/(1-4*x)"), 6))


@check("embed.R_display", 4)
def _():
    expected = [[1], [2, 1], [6, 4, 1], [20, 16, 6, 1], [70, 64, 30, 8, 1],
                [252, 256, 140, 48, 10, 1]]
    return expected, rows(triangle(embed(R("1/sqrt(1-4*x)", "x/(1-4*x)")), 6))


@check("embed.pascal_backwards", 4)
def _():
    return True, embed(R("1/(1-x)", "x/(1-x)^2")).agrees(R(*PASCAL))


@check("cascade.closed_forms", 4)
def _():
    root = R(*PASCAL)
    tree = cascade(root, 2)
    AA, BA = second_level_closed_forms(root)
    return True, tree.find("AA").array.agrees(AA) and tree.find("AB").array.agrees(BA)


# criteria 5 and 6: the periodic S-fraction ---------------------------------------------

S235 = SFraction.periodic([2, 3, 5])
A6 = [[1], [2, 1], [10, 10, 1], [80, 100, 15, 1], [760, 1030, 190, 22, 1],
      [7700, 10900, 2310, 350, 30, 1]]
B6 = [[1], [5, 1], [40, 12, 1], [380, 130, 20, 1], [3850, 1410, 300, 25, 1],
      [40400, 15520, 4060, 440, 32, 1]]
R6 = [[1], [2, 1], [10, 5, 1], [80, 40, 10, 1], [760, 380, 100, 12, 1],
      [7700, 3850, 1030, 130, 15, 1]]


@check("cf235.s_equals_j", 5)
def _():
    return ints(s_to_series(S235, 20)), ints(j_to_series(contract_even(S235), 20))


@check("cf235.even_parameters", 5)
def _():
    j = contract_even(S235)
    return ([2, 8, 5, 7, 8, 5, 7], [6, 10, 15, 6, 10, 15]), (j.b.take(7), j.c.take(6))


@check("cf235.odd_parameters", 5)
def _():
    j = contract_odd(S235)
    return ([5, 7, 8, 5, 7, 8], [15, 6, 10, 15, 6, 10]), (j.b.take(6), j.c.take(6))


@check("cf235.A_production_display", 5)
def _():
    expected = [[2, 1], [6, 8, 1], [0, 10, 5, 1], [0, 0, 15, 7, 1], [0, 0, 0, 6, 8, 1]]
    return expected, jfraction_to_tridiagonal(contract_even(S235), 5).tolist()


@check("cf235.A_moment_matrix", 5)
def _():
    return A6, rows(generate(jfraction_to_tridiagonal(contract_even(S235), 5), 6))


@check("cf235.B_moment_matrix", 5)
def _():
    return B6, rows(generate(jfraction_to_tridiagonal(contract_odd(S235), 5), 6))


@check("cf235.B_production_display", 5)
def _():
    expected = [[5, 1], [15, 7, 1], [0, 6, 8, 1], [0, 0, 10, 5, 1], [0, 0, 0, 15, 7, 1]]
    M = generate(jfraction_to_tridiagonal(contract_odd(S235), 6), 7)
    return expected, production_of(M).truncate(5).tolist()


@check("cf235.R_bidiagonal", 5)
def _():
    return R6, rows(bidiagonal_construction(BidiagonalSpec.periodic([2, 3, 5]), 6)[1])


@check("cf235.interleave", 5)
def _():
    A = generate(jfraction_to_tridiagonal(contract_even(S235), 8), 9)
    B = generate(jfraction_to_tridiagonal(contract_odd(S235), 8), 9)
    return rows(bidiagonal_construction(BidiagonalSpec.periodic([2, 3, 5]), 9)[1]), rows(interleave(A, B))


@check("cf235.interleaved_family", 5)
def _():
    e, o = contract_even(S235), contract_odd(S235)
    fam = InterleavedFamily(Recurrence(e.b, e.c), Recurrence(o.b, o.c))
    return R6, rows(interleaved_moment_matrix(fam, 6))


@check("cf_general.patterns", 6)
def _():
    rng = random.Random(20100)
    expected, actual = [], []
    for _ in range(5):
        al, be, ga = (rng.randint(1, 9) for _ in range(3))
        s = SFraction.periodic([al, be, ga])
        je, jo = contract_even(s), contract_odd(s)
        expected.append((
            [al, be + ga, al + be, al + ga, be + ga, al + be, al + ga],
            [al * be, al * ga, be * ga, al * be, al * ga, be * ga],
            [al + be, al + ga, be + ga, al + be, al + ga, be + ga],
            [be * ga, al * be, al * ga, be * ga, al * be, al * ga],
            True,
        ))
        actual.append((je.b.take(7), je.c.take(6), jo.b.take(6), jo.c.take(6),
                       j_to_series(je, 16) == s_to_series(s, 16)))
    return expected, actual


# criterion 7: the (x-7), 12 families ----------------------------------------------------

A7 = [[1], [3, 1], [21, 10, 1], [183, 103, 17, 1], [1785, 1108, 234, 24, 1],
      [18651, 12349, 3034, 414, 31, 1]]
B7 = [[1], [7, 1], [61, 14, 1], [595, 171, 21, 1], [6217, 2044, 330, 28, 1],
      [68047, 24485, 4690, 538, 35, 1]]
A7b = [[1], [4, 1], [28, 11, 1], [244, 117, 18, 1], [2380, 1279, 255, 25, 1],
       [24868, 14393, 3364, 442, 32, 1]]
R7 = [[1], [3, 1], [21, 7, 1], [183, 61, 10, 1], [1785, 595, 103, 14, 1],
      [18651, 6217, 1108, 171, 17, 1]]
R7b = [[1], [4, 1], [28, 7, 1], [244, 61, 11, 1], [2380, 595, 117, 14, 1],
       [24868, 6217, 1279, 171, 18, 1]]


@check("rec7.A_moments", 7)
def _():
    return A7, rows(moment_matrix(Recurrence(7, 12, -3), 6))


@check("rec7.B_moments", 7)
def _():
    return B7, rows(moment_matrix(Recurrence(7, 12, -7), 6))


@check("rec7.A_variant_moments", 7)
def _():
    return A7b, rows(moment_matrix(Recurrence(7, 12, -4), 6))


@check("rec7.A_riordan", 7)
def _():
    return rows(triangle(inverse(R("1/(1+3*x)", "x/(1+7*x+12*x^2)")), 8)), \
        rows(moment_matrix(Recurrence(7, 12, -3), 8))


@check("rec7.B_riordan", 7)
def _():
    return rows(triangle(inverse(R("1/(1+7*x+12*x^2)", "x/(1+7*x+12*x^2)")), 8)), \
        rows(moment_matrix(Recurrence(7, 12, -7), 8))


@check("rec7.factorization", 7)
def _():
    return [1, 7, 12], ints(evaluate("(1+3*x)*(1+4*x)", 3))


@check("rec7.R_interleaved", 7)
def _():
    fam = InterleavedFamily(Recurrence(7, 12, -3), Recurrence(7, 12, -7))
    return R7, rows(interleaved_moment_matrix(fam, 6))


@check("rec7.R_variant_interleaved", 7)
def _():
    fam = InterleavedFamily(Recurrence(7, 12, -4), Recurrence(7, 12, -7))
    return R7b, rows(interleaved_moment_matrix(fam, 6))


@check("rec7.R_is_interleave", 7)
def _():
    fam = InterleavedFamily(Recurrence(7, 12, -3), Recurrence(7, 12, -7))
    A = moment_matrix(fam.p, 10)
    B = moment_matrix(fam.q, 10)
    return rows(interleaved_moment_matrix(fam, 10)), rows(interleave(A, B))


@check("rec7.R_production_display", 7)
def _():
    expected = [[3, 1], [12, 4, 1], [36, 12, 3, 1], [144, 48, 12, 4, 1],
                [432, 144, 36, 12, 3, 1], [1728, 576, 144, 48, 12, 4, 1]]
    fam = InterleavedFamily(Recurrence(7, 12, -3), Recurrence(7, 12, -7))
    return expected, production_of(interleaved_moment_matrix(fam, 7)).tolist()


@check("rec7.R_production_is_bidiagonal", 7)
def _():
    fam = InterleavedFamily(Recurrence(7, 12, -3), Recurrence(7, 12, -7))
    P, _ = bidiagonal_construction(BidiagonalSpec.periodic([3, 4]), 12)
    return P.tolist(), production_of(interleaved_moment_matrix(fam, 12)).tolist()


@check("rec7.R_production_column_gfs", 7)
def _():
    # from column 1 on, columns start at the superdiagonal 1 and alternate
    # between (1+4x)/(1-12x^2) and (1+3x)/(1-12x^2); column 0 is 3 (1+4x)/(1-12x^2)
    P, _ = bidiagonal_construction(BidiagonalSpec.periodic([3, 4]), 14)
    four = ints(evaluate("(1+4*x)/(1-12*x^2)", 14))
    three = ints(evaluate("(1+3*x)/(1-12*x^2)", 14))
    expected = [[3 * v for v in four][:13]]
    actual = [P.column(0)]
    for j in range(1, 10):
        col = P.column(j)
        expected.append((four if j % 2 else three)[:len(col)])
        actual.append(col)
    return expected, actual


@check("rec7.R_variant_production_is_bidiagonal", 7)
def _():
    fam = InterleavedFamily(Recurrence(7, 12, -4), Recurrence(7, 12, -7))
    P, _ = bidiagonal_construction(BidiagonalSpec.periodic([4, 3]), 12)
    return P.tolist(), production_of(interleaved_moment_matrix(fam, 12)).tolist()


@check("rec7.R_not_riordan", 7)
def _():
    fam = InterleavedFamily(Recurrence(7, 12, -3), Recurrence(7, 12, -7))
    return False, is_riordan_production(production_of(interleaved_moment_matrix(fam, 8)))


@check("rec7.variant_cfracs", 7)
def _():
    s = ints(s_to_series(SFraction.periodic([4, 3]), 6))
    j = ints(j_to_series(JFraction(EventuallyPeriodic([7], [4]), 12), 6))
    return [[1, 4, 28, 244, 2380, 24868]] * 2, [s, j]


# criterion 8: the reversion identity ----------------------------------------------------

@check("reversion.sequence", 8)
def _():
    g = fps.reversion(evaluate("x*(1-4*x)/(1-x)", 8)).divx()
    return [1, 3, 21, 183, 1785, 18651, 204141], ints(g)


@check("reversion.matches_moments", 8)
def _():
    g = fps.reversion(evaluate("x*(1-4*x)/(1-x)", 17)).divx()
    mom = moment_matrix(Recurrence(7, 12, -3), 16).column(0)
    sf = ints(s_to_series(SFraction.periodic([3, 4]), 16))
    return (ints(g), ints(g)), (mom, sf)


# running ----------------------------------------------------------------------------------

def _show(v):
    return repr(v)


def run_one(name, criterion, fn):
    try:
        expected, actual = fn()
    except Exception as exc:  # a crashing check is a failing check
        return CheckResult(name, criterion, False, "no exception", "%s: %s" % (type(exc).__name__, exc))
    return CheckResult(name, criterion, expected == actual, _show(expected), _show(actual))


def run_all(select=None):
    out = []
    for name, criterion, fn in CHECKS:
        if select is not None and not select(name, criterion):
            continue
        out.append(run_one(name, criterion, fn))
    return out
