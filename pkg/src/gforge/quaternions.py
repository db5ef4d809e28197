"""Rational quaternions: the division algebra with i^2 = j^2 = -1, ij = k.

Components are exact Python numbers (int or Fraction); integer inputs stay
integers under ring operations, inversion introduces Fractions.
"""

from __future__ import annotations

from fractions import Fraction


class Quaternion:
    __slots__ = ("w", "x", "y", "z")

    def __init__(self, w=0, x=0, y=0, z=0):
        self.w, self.x, self.y, self.z = w, x, y, z

    def _coerce(self, other):
        if isinstance(other, Quaternion):
            return other
        if isinstance(other, (int, Fraction)) and not isinstance(other, bool):
            return Quaternion(other)
        return None

    def __add__(self, other):
        if isinstance(other, Quaternion):
            return Quaternion(self.w + other.w, self.x + other.x,
                              self.y + other.y, self.z + other.z)
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return Quaternion(self.w + o.w, self.x + o.x, self.y + o.y,
                          self.z + o.z)

    __radd__ = __add__

    def __neg__(self):
        return Quaternion(-self.w, -self.x, -self.y, -self.z)

    def __sub__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return self + (-o)

    def __rsub__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return o + (-self)

    def __mul__(self, other):
        if isinstance(other, Quaternion):
            a, b, c, d = self.w, self.x, self.y, self.z
            e, f, g, h = other.w, other.x, other.y, other.z
            return Quaternion(
                a * e - b * f - c * g - d * h,
                a * f + b * e + c * h - d * g,
                a * g - b * h + c * e + d * f,
                a * h + b * g - c * f + d * e,
            )
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return self * o

    def __rmul__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return o * self

    def conjugate(self) -> "Quaternion":
        return Quaternion(self.w, -self.x, -self.y, -self.z)

    def norm(self):
        return (self.w * self.w + self.x * self.x + self.y * self.y
                + self.z * self.z)

    def inverse(self) -> "Quaternion":
        n = self.norm()
        if n == 0:
            raise ZeroDivisionError("zero quaternion has no inverse")
        c = self.conjugate()
        return Quaternion(Fraction(c.w, n), Fraction(c.x, n),
                          Fraction(c.y, n), Fraction(c.z, n))

    def __truediv__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return self * o.inverse()

    def __pow__(self, e: int):
        if e < 0:
            return self.inverse() ** (-e)
        result, base = Quaternion(1), self
        while e:
            if e & 1:
                result = result * base
            e >>= 1
            if e:
                base = base * base
        return result

    def __eq__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return (self.w == o.w and self.x == o.x and self.y == o.y
                and self.z == o.z)

    def __hash__(self):
        return hash((self.w, self.x, self.y, self.z))

    def __bool__(self):
        return bool(self.w or self.x or self.y or self.z)

    def is_zero(self) -> bool:
        return not self

    def is_scalar(self) -> bool:
        return self.x == 0 and self.y == 0 and self.z == 0

    def components(self):
        return (self.w, self.x, self.y, self.z)

    def sort_key(self):
        return tuple(Fraction(c) for c in self.components())

    def __str__(self):
        from .grammar import print_quaternion
        return print_quaternion(self)

    def __repr__(self):
        return f"Quaternion({self})"


QUAT_ONE = Quaternion(1)
QUAT_I = Quaternion(0, 1)
QUAT_J = Quaternion(0, 0, 1)
QUAT_K = Quaternion(0, 0, 0, 1)


class QuaternionAlgebra:
    """Descriptor for the rational quaternion algebra; interned singleton."""

    characteristic = 0
    kind = "H"

    def elem(self, x) -> Quaternion:
        if isinstance(x, Quaternion):
            return x
        if isinstance(x, (int, Fraction)) and not isinstance(x, bool):
            return Quaternion(x)
        raise TypeError(f"cannot coerce {type(x).__name__} into quaternions")

    @property
    def zero(self) -> Quaternion:
        return Quaternion(0)

    @property
    def one(self) -> Quaternion:
        return QUAT_ONE

    def generators(self):
        return (QUAT_I, QUAT_J)

    def random_element(self, rng) -> Quaternion:
        return Quaternion(*(rng.randrange(-5, 6) for _ in range(4)))

    def describe(self) -> str:
        return "H(-1,-1/Q)"

    def __repr__(self):
        return self.describe()


_QUAT = QuaternionAlgebra()


def quaternion_algebra() -> QuaternionAlgebra:
    return _QUAT
