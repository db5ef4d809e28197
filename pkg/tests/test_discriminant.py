"""Discriminant and resultant behavior, anchored on closed forms.

Oracle for cubics: disc(Y^3 + pY + q) = -4p^3 - 27q^2; for quadratics:
disc(Y^2 + bY + c) = b^2 - 4c.  Both are classical expansions computed
independently of the Sylvester/Bareiss path under test.
"""

import random

import pytest

from gforge.errors import ConstantPolynomial
from gforge.factorization import is_separable
from gforge.fields import GF, FieldElem, rationals
from gforge.parampoly import ParamPoly, discriminant_y
from gforge.resultants import discriminant, resultant
from gforge.unipoly import UniPoly

Q = rationals()


def test_quadratic_closed_form():
    rng = random.Random(3)
    for _ in range(50):
        b = Q.random_element(rng)
        c = Q.random_element(rng)
        f = UniPoly(Q, [c, b, 1])
        assert discriminant(f) == b * b - 4 * c


def test_cubic_closed_form():
    rng = random.Random(5)
    for spec in (Q, GF(5), GF(7)):
        for _ in range(50):
            p = spec.random_element(rng)
            q = spec.random_element(rng)
            f = UniPoly(spec, [q, p, spec.zero, spec.one])
            assert discriminant(f) == -4 * p ** 3 - 27 * q ** 2


def test_trinomial_family_discriminant():
    # disc_Y(Y^3 + (T-x)Y + (T-x)) = -(T-x)^2 (4(T-x) + 27)
    rng = random.Random(7)
    for spec in (Q, GF(5)):
        for _ in range(25):
            x = spec.random_element(rng)
            shifted = UniPoly(spec, [-x, spec.one])
            A = ParamPoly(spec, [shifted, shifted, UniPoly.zero(spec),
                                 UniPoly.one(spec)])
            expected = -(shifted ** 2) * (4 * shifted + 27)
            assert discriminant_y(A) == expected


def test_interpolation_example_discriminant():
    # quadratic family: disc = b(T)^2 - 4c(T)
    from fractions import Fraction
    b = UniPoly(Q, [0, -2, 1])
    c = UniPoly(Q, [Fraction(-2), Fraction(9, 2), Fraction(-5, 2)])
    A = ParamPoly(Q, [c, b, UniPoly.one(Q)])
    assert discriminant_y(A) == b * b - 4 * c


def test_degenerate_derivative_gives_zero():
    F5 = GF(5)
    f = UniPoly(F5, [4, 0, 0, 0, 0, 1])  # Y^5 - 1, derivative vanishes
    assert discriminant(f).is_zero()
    assert not is_separable(f)


def test_constant_polynomial_rejected():
    with pytest.raises(ConstantPolynomial):
        discriminant(UniPoly(Q, [3]))
    with pytest.raises(ConstantPolynomial):
        discriminant_y(UniPoly(Q, [3]))


def test_linear_discriminant_is_one():
    assert discriminant(UniPoly(Q, [7, 1])) == Q.one


def test_separable_iff_nonzero_discriminant():
    rng = random.Random(11)
    for spec in (Q, GF(5), GF(9)):
        for _ in range(150):
            deg = rng.randrange(1, 6)
            coeffs = [spec.random_element(rng) for _ in range(deg)]
            f = UniPoly(spec, coeffs + [spec.one])
            assert is_separable(f) == (not discriminant(f).is_zero())


def test_resultant_multiplicativity():
    rng = random.Random(13)
    for _ in range(40):
        f = UniPoly(Q, [Q.random_element(rng) for _ in range(3)] + [1])
        g = UniPoly(Q, [Q.random_element(rng) for _ in range(2)] + [1])
        h = UniPoly(Q, [Q.random_element(rng) for _ in range(2)] + [1])
        assert resultant(f, g * h) == resultant(f, g) * resultant(f, h)


def test_resultant_detects_common_root():
    f = UniPoly.from_roots(Q, [1, 2])
    g = UniPoly.from_roots(Q, [2, 5])
    assert resultant(f, g).is_zero()
    h = UniPoly.from_roots(Q, [3, 5])
    assert not resultant(f, h).is_zero()
