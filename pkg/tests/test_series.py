import random
from fractions import Fraction

import pytest

from hilbfock.partitions import partitions_of
from hilbfock.series import (CoeffPoly, FactorFamily, IndexOutOfRange,
                             OrderMismatch, QTSeries, UnknownVariable,
                             product_expand)


def rand_poly(rng, nvars=1, max_deg=3):
    terms = {}
    for _ in range(rng.randint(0, 4)):
        exps = tuple(rng.randint(0, max_deg) for _ in range(nvars))
        terms[exps] = Fraction(rng.randint(-4, 4), rng.randint(1, 3))
    return CoeffPoly(terms, nvars)


def rand_series(rng, order, nvars=1):
    return QTSeries(order, [rand_poly(rng, nvars) for _ in range(order + 1)],
                    nvars)


def test_coeffpoly_basic():
    p = CoeffPoly({(2,): 3, (0,): 1})
    q = CoeffPoly({(2,): -3})
    assert (p + q) == CoeffPoly({(0,): 1})
    assert str(p) == "1 + 3t^2"
    assert p.coefficient((2,)) == 3
    assert not CoeffPoly({(1,): 0})
    assert p * 0 == CoeffPoly.zero()


def test_coeffpoly_rendering():
    assert str(CoeffPoly.zero()) == "0"
    assert str(CoeffPoly({(0,): -1, (1,): 1})) == "-1 + t"
    assert str(CoeffPoly({(1,): Fraction(1, 2)})) == "(1/2)t"
    assert str(CoeffPoly({(0, 0): 1, (1, 1): 2, (3, 0): 1}, nvars=2)) == \
        "1 + 2xy + x^3"
    assert str(CoeffPoly({(2,): -2})) == "-2t^2"


def test_ring_axioms_random():
    rng = random.Random(11)
    for _ in range(25):
        a, b, c = (rand_poly(rng) for _ in range(3))
        assert (a + b) + c == a + (b + c)
        assert a + b == b + a
        assert (a * b) * c == a * (b * c)
        assert a * (b + c) == a * b + a * c
        assert a * CoeffPoly.one() == a
    for _ in range(15):
        a, b, c = (rand_series(rng, 4) for _ in range(3))
        assert (a + b) + c == a + (b + c)
        assert (a * b) * c == a * (b * c)
        assert a * (b + c) == a * b + a * c
        assert a * QTSeries.one(4) == a


def test_series_mul_example():
    # (1 - q) * sum p(n) q^n has coefficients p(n) - p(n-1)
    N = 12
    ps = product_expand([FactorFamily(-1, 1, ((0, 0),))], N)
    prod = QTSeries(N, [1, -1]) * ps
    counts = [len(partitions_of(n)) for n in range(N + 1)]
    for n in range(N + 1):
        expect = counts[n] - (counts[n - 1] if n else 0)
        assert prod.coeff(n).constant_value() == expect


def test_series_order_and_index_errors():
    a = QTSeries.one(3)
    b = QTSeries.one(4)
    with pytest.raises(OrderMismatch):
        a * b
    with pytest.raises(OrderMismatch):
        a + b
    with pytest.raises(IndexOutOfRange):
        a.coeff(4)
    with pytest.raises(IndexOutOfRange):
        a.coeff(-1)
    with pytest.raises(ValueError):
        QTSeries(2, [1, 1, 1, 1])
    with pytest.raises(OrderMismatch):
        a.truncate(7)


def test_partition_family_matches_enumeration():
    fam = FactorFamily(-1, 1, ((0, 0),))
    s = product_expand([fam], 20)
    for n in range(21):
        assert s.coeff(n).constant_value() == len(partitions_of(n))


def test_empty_product_is_one():
    s = product_expand([], 5)
    assert s == QTSeries.one(5)


def test_k3_weight_family():
    # (1-q)^-24 (1-q^2)^-24 ... : q^2 coefficient is C(25,2) + 24
    fam = FactorFamily(-1, 24, ((0, 0),))
    s = product_expand([fam], 2)
    assert s.coeff(2).constant_value() == 324


def test_truncation_consistency():
    fams = [FactorFamily(-1, 2, ((2, -2),)), FactorFamily(1, 3, ((2, -1),))]
    big = product_expand(fams, 9)
    for smaller in range(10):
        assert big.truncate(smaller) == product_expand(fams, smaller)


def test_factor_family_validation():
    with pytest.raises(ValueError):
        FactorFamily(0, 1, ((0, 0),))
    with pytest.raises(ValueError):
        FactorFamily(1, -1, ((0, 0),))
    with pytest.raises(ValueError):
        FactorFamily(1, 1, ((0, -1),))     # exponent -1 at every m
    with pytest.raises(ValueError):
        FactorFamily(1, 1, ((-1, 0),))     # exponent negative for large m
    FactorFamily(1, 1, ((2, -2),))         # 2m-2 >= 0 is fine


def test_specialize_values():
    fam = FactorFamily(-1, 1, ((2, -2),))
    s = product_expand([fam], 6)
    total = s.specialize({"t": 1})
    for n in range(7):
        assert total.coeff(n).constant_value() == len(partitions_of(n))
    with pytest.raises(UnknownVariable):
        s.specialize({"x": 1})


def test_specialize_two_variables():
    p = CoeffPoly({(1, 1): 2, (2, 0): 1}, nvars=2)
    assert p.specialize({"x": "t", "y": "t"}) == CoeffPoly({(2,): 3})
    assert p.specialize({"x": 1, "y": -1}) == CoeffPoly({(0,): -1})
    assert p.specialize({"x": Fraction(1, 2), "y": 2}) == \
        CoeffPoly({(0,): Fraction(9, 4)})
    with pytest.raises(UnknownVariable):
        p.specialize({"x": "t"})


def test_coefficients_stay_exact():
    # an integer-heavy product has exact integer coefficients
    fam = FactorFamily(-1, 24, ((0, 0),))
    s = product_expand([fam], 10)
    assert s.coeff(10).constant_value() == 639249300


def test_two_variable_family_collapses_to_one_variable():
    # prod (1 - (xy)^(m-1) q^m)^-1 at x=y=t equals prod (1 - t^(2m-2) q^m)^-1
    fam2 = FactorFamily(-1, 1, ((1, -1), (1, -1)))
    fam1 = FactorFamily(-1, 1, ((2, -2),))
    s2 = product_expand([fam2], 7)
    assert s2.nvars == 2
    assert s2.specialize({"x": "t", "y": "t"}) == product_expand([fam1], 7)
