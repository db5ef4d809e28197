import random
from fractions import Fraction

import pytest

from gforge.errors import DegreeCapExceeded, UnsupportedField
from gforge.factorization import factor, is_irreducible, is_separable
from gforge.fields import GF, FieldElem, rationals
from gforge.quaternions import quaternion_algebra
from gforge.unipoly import UniPoly

Q = rationals()


def as_strs(parts):
    return [(str(g), m) for g, m in parts]


def rand_poly(spec, rng, maxdeg):
    d = rng.randrange(1, maxdeg + 1)
    cs = [FieldElem(spec, rng.randrange(spec.q)) for _ in range(d)] \
        if spec.is_finite else [spec.random_element(rng) for _ in range(d)]
    return UniPoly(spec, cs + [spec.one])


def test_difference_of_squares_gf5():
    f = UniPoly(GF(5), [-1, 0, 1])
    assert as_strs(factor(f)) == [("Y + 1", 1), ("Y + 4", 1)]


def test_y4_plus_1_irreducible_over_q():
    f = UniPoly(Q, [1, 0, 0, 0, 1])
    parts = factor(f)
    assert parts == [(f, 1)]
    # undetermined-coefficients oracle: a factorization into monic
    # quadratics (Y^2+aY+b)(Y^2+cY+d) forces c = -a, then either a = 0
    # (so d = -b, b*d = -b^2 = 1, impossible) or d = b (so b^2 = 1 and
    # a^2 = 2b, but neither 2 nor -2 is a rational square).
    for b in (Fraction(1), Fraction(-1)):
        a_sq = 2 * b
        num, den = a_sq.numerator, a_sq.denominator
        if num >= 0:
            import math
            assert math.isqrt(num) ** 2 != num or math.isqrt(den) ** 2 != den


def test_y4_plus_1_over_gf2():
    f = UniPoly(GF(2), [1, 0, 0, 0, 1])
    assert as_strs(factor(f)) == [("Y + 1", 4)]


def test_frobenius_power_squarefree_descent_gf9():
    # (Y^3 - g)^3 has vanishing derivative; descent must recover it
    F9 = GF(9)
    g = F9.generator
    base = UniPoly(F9, [-g, F9.zero, F9.zero, F9.one])
    f = base ** 3
    parts = factor(f)
    prod = UniPoly.one(F9)
    for h, m in parts:
        assert is_irreducible(h)
        prod = prod * h ** m
    assert prod == f


def test_rational_factor_with_denominators():
    # (Y - 1/2)(Y + 2/3)(Y^2 + 1), non-monic input
    f = UniPoly(Q, [Fraction(-1, 2), 1]) * UniPoly(Q, [Fraction(2, 3), 1]) \
        * UniPoly(Q, [1, 0, 1]) * 6
    parts = factor(f)
    assert as_strs(parts) == [("Y - 1/2", 1), ("Y + 2/3", 1),
                              ("Y^2 + 1", 1)]
    prod = UniPoly(Q, [6])
    for g, m in parts:
        prod = prod * g ** m
    assert prod == f


def test_multiplicities_over_q():
    f = UniPoly(Q, [1, 1]) ** 3 * UniPoly(Q, [2, 0, 1]) ** 2
    parts = factor(f)
    assert as_strs(parts) == [("Y + 1", 3), ("Y^2 + 2", 2)]


def test_round_trip_random():
    rng = random.Random(23)
    for spec in (GF(5), GF(4), GF(9)):
        for _ in range(60):
            f = rand_poly(spec, rng, 6)
            parts = factor(f)
            prod = UniPoly.constant(f.leading())
            for g, m in parts:
                assert g.is_monic() and is_irreducible(g)
                prod = prod * g ** m
            assert prod == f


def test_round_trip_random_rationals():
    rng = random.Random(29)
    for _ in range(40):
        f = rand_poly(Q, rng, 6)
        parts = factor(f)
        prod = UniPoly.constant(f.leading())
        for g, m in parts:
            assert g.is_monic()
            prod = prod * g ** m
        assert prod == f


def test_separable_implies_squarefree_multiplicities():
    rng = random.Random(31)
    for spec in (Q, GF(5), GF(9)):
        for _ in range(60):
            f = rand_poly(spec, rng, 5)
            if is_separable(f):
                assert all(m == 1 for _, m in factor(f))


def test_deterministic_output():
    rng = random.Random(37)
    for _ in range(20):
        f = rand_poly(GF(9), rng, 6)
        assert factor(f) == factor(f)


def test_large_integer_root():
    # root far beyond the trial-division bound still found via lifting
    big = 10 ** 9 + 7
    f = UniPoly(Q, [-big, 1]) * UniPoly(Q, [1, 1, 1])
    parts = factor(f)
    assert (UniPoly(Q, [-big, 1]), 1) in parts
    assert (UniPoly(Q, [1, 1, 1]), 1) in parts


def test_swinnerton_dyer_like_quartic():
    # minimal polynomial of sqrt(2) + sqrt(3): irreducible but splits mod
    # every prime, forcing genuine recombination
    f = UniPoly(Q, [1, 0, -10, 0, 1])
    assert factor(f) == [(f, 1)]


def test_errors():
    with pytest.raises(ValueError):
        factor(UniPoly.zero(Q))
    with pytest.raises(DegreeCapExceeded):
        factor(UniPoly.monomial(Q, 1, 65))
    alg = quaternion_algebra()
    qpoly = UniPoly(alg, [alg.one, alg.one])
    with pytest.raises(UnsupportedField):
        factor(qpoly)


def test_constants_factor_to_nothing():
    assert factor(UniPoly(Q, [5])) == []


def test_is_irreducible():
    assert is_irreducible(UniPoly(Q, [-2, 0, 1]))
    assert not is_irreducible(UniPoly(Q, [-1, 0, 1]))
    assert not is_irreducible(UniPoly(Q, [2]))
