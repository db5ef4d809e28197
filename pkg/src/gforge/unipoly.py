"""Univariate polynomials over a FieldSpec, exact coefficient arithmetic.

Coefficients are stored ascending by degree with no trailing zeros; the zero
polynomial has an empty coefficient tuple and degree -1.  Values are
immutable, so polynomials are safe to share, hash, and sort.
"""

from __future__ import annotations

from fractions import Fraction

from .errors import FieldMismatch
from .fields import FieldElem, FieldSpec


class UniPoly:
    __slots__ = ("spec", "coeffs")

    def __init__(self, spec: FieldSpec, coeffs=()):
        elems = [spec.elem(c) for c in coeffs]
        while elems and elems[-1].is_zero():
            elems.pop()
        self.spec = spec
        self.coeffs = tuple(elems)

    # -- constructors --------------------------------------------------------

    @classmethod
    def zero(cls, spec) -> "UniPoly":
        return cls(spec, ())

    @classmethod
    def one(cls, spec) -> "UniPoly":
        return cls(spec, (1,))

    @classmethod
    def constant(cls, c: FieldElem) -> "UniPoly":
        return cls(c.spec, (c,))

    @classmethod
    def gen(cls, spec) -> "UniPoly":
        """The variable itself."""
        return cls(spec, (0, 1))

    @classmethod
    def monomial(cls, spec, c, degree: int) -> "UniPoly":
        return cls(spec, (0,) * degree + (c,))

    @classmethod
    def from_roots(cls, spec, roots) -> "UniPoly":
        """Monic product of (X - r) over the given roots."""
        out = cls.one(spec)
        for r in roots:
            out = out * cls(spec, (-spec.elem(r), spec.one))
        return out

    # -- basic queries ---------------------------------------------------------

    @property
    def degree(self) -> int:
        return len(self.coeffs) - 1

    def is_zero(self) -> bool:
        return not self.coeffs

    def is_monic(self) -> bool:
        return bool(self.coeffs) and self.coeffs[-1] == self.spec.one

    def is_constant(self) -> bool:
        return len(self.coeffs) <= 1

    def leading(self) -> FieldElem:
        if not self.coeffs:
            raise ValueError("zero polynomial has no leading coefficient")
        return self.coeffs[-1]

    def coeff(self, i: int) -> FieldElem:
        return self.coeffs[i] if 0 <= i < len(self.coeffs) else self.spec.zero

    def evaluate(self, x) -> FieldElem:
        x = self.spec.elem(x)
        acc = self.spec.zero
        for c in reversed(self.coeffs):
            acc = acc * x + c
        return acc

    # -- ring operations --------------------------------------------------------

    def _check(self, other) -> "UniPoly":
        if isinstance(other, UniPoly):
            if other.spec is not self.spec:
                raise FieldMismatch("polynomials over different fields")
            return other
        if isinstance(other, (int, Fraction, FieldElem)):
            return UniPoly(self.spec, (other,))
        return None

    def __add__(self, other):
        o = self._check(other)
        if o is None:
            return NotImplemented
        a, b = self.coeffs, o.coeffs
        if len(a) < len(b):
            a, b = b, a
        out = list(a)
        for i, c in enumerate(b):
            out[i] = out[i] + c
        return UniPoly(self.spec, out)

    __radd__ = __add__

    def __neg__(self):
        return UniPoly(self.spec, [-c for c in self.coeffs])

    def __sub__(self, other):
        o = self._check(other)
        if o is None:
            return NotImplemented
        return self + (-o)

    def __rsub__(self, other):
        o = self._check(other)
        if o is None:
            return NotImplemented
        return o + (-self)

    def __mul__(self, other):
        o = self._check(other)
        if o is None:
            return NotImplemented
        a, b = self.coeffs, o.coeffs
        if not a or not b:
            return UniPoly.zero(self.spec)
        spec = self.spec
        out = [spec.zero] * (len(a) + len(b) - 1)
        for i, ai in enumerate(a):
            if ai.is_zero():
                continue
            for j, bj in enumerate(b):
                out[i + j] = out[i + j] + ai * bj
        return UniPoly(spec, out)

    __rmul__ = __mul__

    def __pow__(self, e: int):
        if e < 0:
            raise ValueError("negative polynomial power")
        result, base = UniPoly.one(self.spec), self
        while e:
            if e & 1:
                result = result * base
            e >>= 1
            if e:
                base = base * base
        return result

    def __divmod__(self, other):
        o = self._check(other)
        if o is None:
            return NotImplemented
        if o.is_zero():
            raise ZeroDivisionError("polynomial division by zero")
        spec = self.spec
        rem = list(self.coeffs)
        quo = [spec.zero] * max(0, len(rem) - len(o.coeffs) + 1)
        inv_lead = o.leading().inverse()
        db = o.degree
        while len(rem) - 1 >= db:
            c = rem[-1] * inv_lead
            off = len(rem) - 1 - db
            quo[off] = c
            for j, bj in enumerate(o.coeffs):
                rem[off + j] = rem[off + j] - c * bj
            rem.pop()
            while rem and rem[-1].is_zero():
                rem.pop()
            if not rem:
                break
        return UniPoly(spec, quo), UniPoly(spec, rem)

    def __floordiv__(self, other):
        return divmod(self, other)[0]

    def __mod__(self, other):
        return divmod(self, other)[1]

    def divides(self, other: "UniPoly") -> bool:
        if self.is_zero():
            return other.is_zero()
        return (other % self).is_zero()

    def monic(self) -> "UniPoly":
        if self.is_zero() or self.is_monic():
            return self
        inv = self.leading().inverse()
        return UniPoly(self.spec, [c * inv for c in self.coeffs])

    def gcd(self, other: "UniPoly") -> "UniPoly":
        """Monic greatest common divisor."""
        a, b = self, self._check(other)
        while not b.is_zero():
            a, b = b, a % b
        return a.monic()

    def derivative(self) -> "UniPoly":
        return UniPoly(self.spec,
                       [c * i for i, c in enumerate(self.coeffs)][1:])

    def pow_mod(self, e: int, mod: "UniPoly") -> "UniPoly":
        result = UniPoly.one(self.spec)
        base = self % mod
        while e:
            if e & 1:
                result = (result * base) % mod
            e >>= 1
            if e:
                base = (base * base) % mod
        return result

    def scale_arg(self, c) -> "UniPoly":
        """f(c*X) for a field constant c."""
        c = self.spec.elem(c)
        out, power = [], self.spec.one
        for a in self.coeffs:
            out.append(a * power)
            power = power * c
        return UniPoly(self.spec, out)

    def compose(self, inner: "UniPoly") -> "UniPoly":
        acc = UniPoly.zero(self.spec)
        for c in reversed(self.coeffs):
            acc = acc * inner + c
        return acc

    # -- identity ---------------------------------------------------------------

    def __eq__(self, other):
        if isinstance(other, UniPoly):
            return self.spec is other.spec and self.coeffs == other.coeffs
        if isinstance(other, (int, Fraction, FieldElem)):
            return self == UniPoly(self.spec, (other,))
        return NotImplemented

    def __hash__(self):
        return hash((id(self.spec), tuple(c.value for c in self.coeffs)))

    def sort_key(self):
        """Orders first by degree, then lexicographically by coefficients
        from the leading one down."""
        return (self.degree,
                tuple(c.sort_key() for c in reversed(self.coeffs)))

    def to_str(self, var: str = "Y") -> str:
        from .grammar import print_unipoly
        return print_unipoly(self, var)

    def __str__(self):
        return self.to_str()

    def __repr__(self):
        return f"UniPoly[{self.spec}]({self})"
