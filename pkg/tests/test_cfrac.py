import random
from fractions import Fraction
from itertools import product

import pytest

from riordanembed import series as fps
from riordanembed.cfrac import (JFraction, SFraction, contract_even, contract_odd, j_to_series,
                                jfraction_to_tridiagonal, s_to_series)
from riordanembed.prodmat import generate
from riordanembed.sequences import EventuallyPeriodic
from riordanembed.series import Series


def ints(s):
    return s.as_integers()


def test_s_fraction_examples():
    assert ints(s_to_series(SFraction.periodic([2, 3]), 6)) == [1, 2, 10, 62, 430, 3194]
    assert ints(s_to_series(SFraction.periodic([2, 3, 5]), 6)) == [1, 2, 10, 80, 760, 7700]
    assert ints(s_to_series(SFraction.periodic([0]), 6)) == [1, 0, 0, 0, 0, 0]
    assert ints(s_to_series(SFraction.periodic([4, 3]), 5)) == [1, 4, 28, 244, 2380]


def test_j_fraction_examples():
    j = JFraction(EventuallyPeriodic([8, 5, 7], [2]), [6, 10, 15])
    assert ints(j_to_series(j, 6)) == [1, 2, 10, 80, 760, 7700]
    j = JFraction([5, 7, 8], [15, 6, 10])
    assert ints(j_to_series(j, 6)) == [1, 5, 40, 380, 3850, 40400]
    j = JFraction(EventuallyPeriodic([7], [4]), [12])
    assert ints(j_to_series(j, 4)) == [1, 4, 28, 244]


def test_s_fraction_gives_catalan():
    assert s_to_series(SFraction.periodic([1]), 12) == fps.catalan(12)


def test_contract_even_235():
    j = contract_even(SFraction.periodic([2, 3, 5]))
    assert j.same_as(JFraction(EventuallyPeriodic([8, 5, 7], [2]), [6, 10, 15]))
    assert [j.b_at(n) for n in range(6)] == [2, 8, 5, 7, 8, 5]
    assert [j.c_at(n) for n in range(1, 5)] == [6, 10, 15, 6]


def test_contract_odd_235():
    j = contract_odd(SFraction.periodic([2, 3, 5]))
    assert [j.b_at(n) for n in range(4)] == [5, 7, 8, 5]
    assert [j.c_at(n) for n in range(1, 4)] == [15, 6, 10]


@pytest.mark.parametrize("abc", [(2, 3, 5), (1, 4, 9), (-2, 7, 3), (6, 1, 1)])
def test_contraction_patterns(abc):
    al, be, ga = abc
    s = SFraction.periodic([al, be, ga])
    je, jo = contract_even(s), contract_odd(s)
    assert [je.b_at(n) for n in range(4)] == [al, be + ga, al + be, al + ga]
    assert [je.c_at(n) for n in range(1, 4)] == [al * be, al * ga, be * ga]
    assert [jo.b_at(n) for n in range(3)] == [al + be, al + ga, be + ga]
    assert [jo.c_at(n) for n in range(1, 4)] == [be * ga, al * be, al * ga]


@pytest.mark.parametrize("k", [1, 2, 3])
def test_constant_sequence_contractions(k):
    s = SFraction.periodic([k])
    je, jo = contract_even(s), contract_odd(s)
    assert [je.b_at(n) for n in range(3)] == [k, 2 * k, 2 * k]
    assert [je.c_at(n) for n in range(1, 3)] == [k * k, k * k]
    assert [jo.b_at(n) for n in range(3)] == [2 * k] * 3
    assert j_to_series(je, 12) == s_to_series(s, 12)
    S = s_to_series(s, 13)
    assert j_to_series(jo, 12) == fps.scale((S - 1).divx(), Fraction(1, k))


def random_sfraction(rng):
    pre = [Fraction(rng.randint(-6, 6), rng.randint(1, 3)) for _ in range(rng.randint(0, 3))]
    period = [Fraction(rng.randint(-6, 6) or 1, rng.randint(1, 3)) for _ in range(rng.randint(1, 4))]
    return SFraction.periodic(period, pre)


def test_contraction_soundness_random():
    rng = random.Random(5)
    for _ in range(10):
        s = random_sfraction(rng)
        assert j_to_series(contract_even(s), 16) == s_to_series(s, 16)
        S = s_to_series(s, 17)
        a1 = s.coefficient(1)
        if a1:
            assert j_to_series(contract_odd(s), 16) == fps.scale((S - 1).divx(), Fraction(1, a1))


def test_tridiagonal_consistency():
    rng = random.Random(9)
    for _ in range(20):
        j = JFraction([rng.randint(-5, 5) for _ in range(3)], [rng.randint(-5, 5) or 1])
        P = jfraction_to_tridiagonal(j, 12)
        assert list(generate(P, 12).column(0)) == ints(j_to_series(j, 12))


def count_paths(n, down_weight=1):
    # oracle: Motzkin paths with zero level steps are Dyck paths
    total = 0
    for steps in product((1, -1), repeat=n):
        h = 0
        ok = True
        for s in steps:
            h += s
            if h < 0:
                ok = False
                break
        if ok and h == 0:
            total += down_weight ** steps.count(-1)
    return total


def test_zero_level_tridiagonal_gives_aerated_catalan():
    P = jfraction_to_tridiagonal(JFraction([0], [1]), 12)
    assert list(generate(P, 12).column(0)) == [count_paths(n) for n in range(12)]
    assert [count_paths(n) for n in range(7)] == [1, 0, 1, 0, 2, 0, 5]


def test_tridiagonal_235_moments_displays():
    P = jfraction_to_tridiagonal(contract_even(SFraction.periodic([2, 3, 5])), 5)
    assert [list(r) for r in P.rows[:4]] == [[2, 1], [6, 8, 1], [0, 10, 5, 1], [0, 0, 15, 7, 1]]
    Q = jfraction_to_tridiagonal(contract_odd(SFraction.periodic([2, 3, 5])), 5)
    assert [list(r) for r in Q.rows[:4]] == [[5, 1], [15, 7, 1], [0, 6, 8, 1], [0, 0, 10, 5, 1]]


def test_depth_stability():
    rng = random.Random(13)
    for _ in range(10):
        s = random_sfraction(rng)
        for d in range(1, 10):
            a = s_to_series(s, 12, depth=d)
            b = s_to_series(s, 12, depth=d + 1)
            assert a.agrees(b, d)


def test_text_forms_round_trip():
    s = SFraction.periodic([2, 3, 5])
    assert SFraction.parse(s.spec()) == s
    assert SFraction.parse("2,3,5") == s
    j = contract_even(s)
    assert j.spec() == "j: b=[2]/[8,5,7] c=[]/[6,10,15]"
    assert JFraction.parse(j.spec()).same_as(j)
    with pytest.raises(ValueError):
        JFraction.parse("b=[1]")


def test_series_orders():
    assert s_to_series(SFraction.periodic([1]), 7).order == 7
    assert isinstance(j_to_series(JFraction([1], [1]), 5), Series)
