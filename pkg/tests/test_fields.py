import random
from fractions import Fraction

import pytest

from gforge.errors import CoefficientBlowup, FieldMismatch
from gforge.fields import GF, FieldElem, field_from_string, rationals


def test_interning():
    assert rationals() is rationals()
    assert GF(9) is GF(9)
    assert GF(5) is not GF(25)


def test_canonical_moduli():
    # lexicographically smallest monic irreducibles
    assert GF(4).modulus == (1, 1, 1)      # x^2 + x + 1
    assert GF(9).modulus == (1, 0, 1)      # x^2 + 1
    assert GF(8).modulus == (1, 1, 0, 1)   # x^3 + x + 1
    assert GF(27).modulus == (1, 2, 0, 1)  # x^3 + 2x + 1


def test_gf_rejects_non_prime_powers():
    with pytest.raises(ValueError):
        GF(6)
    with pytest.raises(ValueError):
        GF(12)
    with pytest.raises(ValueError):
        GF(1)


def test_field_from_string():
    assert field_from_string("Q") is rationals()
    assert field_from_string("GF(5)") is GF(5)
    assert field_from_string(" GF(9) ") is GF(9)


def test_rational_arithmetic():
    Q = rationals()
    a = Q.elem(Fraction(3, 4))
    b = Q.elem(Fraction(-1, 6))
    assert (a + b).value == Fraction(7, 12)
    assert (a * b).value == Fraction(-1, 8)
    assert (a / b).value == Fraction(-9, 2)
    assert (-a).value == Fraction(-3, 4)
    assert (a ** 3).value == Fraction(27, 64)
    assert a + 1 == Q.elem(Fraction(7, 4))
    assert 2 * a == Q.elem(Fraction(3, 2))


def test_extension_field_structure():
    F4 = GF(4)
    w = F4.generator
    assert w ** 3 == F4.one          # omega^3 = 1
    assert w * w == w + 1            # modulus relation x^2 = x + 1
    F9 = GF(9)
    g = F9.generator
    assert g ** 8 == F9.one
    assert g ** 4 == F9.elem(-1)     # -1 is the unique element of order 2
    orders = {e.value for e in F9.elements() if not e.is_zero()
              if all((e ** k) != F9.one for k in range(1, 8))}
    assert g.value in orders


def test_frobenius():
    F9 = GF(9)
    for e in F9.elements():
        assert FieldElem(F9, F9.frobenius(e.value)) == e ** 3


def _ring_axiom_sweep(spec, rng, n):
    for _ in range(n):
        a = spec.random_element(rng)
        b = spec.random_element(rng)
        c = spec.random_element(rng)
        assert (a + b) + c == a + (b + c)
        assert (a * b) * c == a * (b * c)
        assert a * (b + c) == a * b + a * c
        assert a + (-a) == spec.zero
        if not b.is_zero():
            assert b * b.inverse() == spec.one
            assert (a / b) * b == a


def test_ring_axioms_randomized():
    rng = random.Random(7)
    for spec in (rationals(), GF(5), GF(4), GF(9), GF(25)):
        _ring_axiom_sweep(spec, rng, 400)


def test_field_mismatch():
    with pytest.raises(FieldMismatch):
        GF(5).elem(1) + GF(7).elem(1)
    with pytest.raises(FieldMismatch):
        rationals().elem(1) * GF(5).elem(1)


def test_division_by_zero():
    with pytest.raises(ZeroDivisionError):
        GF(5).elem(1) / GF(5).elem(0)
    with pytest.raises(ZeroDivisionError):
        rationals().zero.inverse()


def test_coefficient_blowup_guard():
    Q = rationals()
    big = Fraction(1 << 3_400_000)  # > 10^6 decimal digits
    with pytest.raises(CoefficientBlowup):
        Q.elem(big)
    ok = Q.elem(Fraction(1 << 1000))
    assert ok.value == 1 << 1000


def test_element_enumeration_and_sort():
    F4 = GF(4)
    elems = list(F4.elements())
    assert len(elems) == 4
    assert sorted(elems) == elems
    with pytest.raises(ValueError):
        list(rationals().elements())
