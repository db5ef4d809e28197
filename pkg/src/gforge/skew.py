"""Twisted polynomial rings over finite fields and rational quaternions.

Multiplication extends T*a = sigma(a)*T, so (a T^i)(b T^j) = a sigma^i(b)
T^(i+j).  Coefficient rings: any finite field with a Frobenius-power
automorphism, or the rational quaternions with conjugation by a unit.
Automorphism descriptors are validated on a generating set at ring
construction, never trusted.
"""

from __future__ import annotations

from fractions import Fraction

from .errors import RingMismatch, ZeroInput
from .fields import FieldElem, FieldSpec
from .quaternions import Quaternion, QuaternionAlgebra, quaternion_algebra

_ORDER_CAP = 64


class SkewRing:
    """Coefficient ring plus automorphism plus its order."""

    __slots__ = ("coeff_ring", "sigma_kind", "sigma_param", "order_n",
                 "_frob_tables", "_conj_mats")

    def __init__(self, coeff_ring, sigma_kind, sigma_param):
        self.coeff_ring = coeff_ring
        self.sigma_kind = sigma_kind    # "id" | "frob" | "conj"
        self.sigma_param = sigma_param  # None | power j | unit u
        self._frob_tables = None
        self._conj_mats = None
        self._prepare()
        self._validate()

    # -- constructors -------------------------------------------------------

    @classmethod
    def identity(cls, coeff_ring) -> "SkewRing":
        return cls(coeff_ring, "id", None)

    @classmethod
    def frobenius(cls, spec: FieldSpec, power: int = 1) -> "SkewRing":
        """x -> x^(p^power) on a finite field."""
        if not isinstance(spec, FieldSpec) or not spec.is_finite:
            raise RingMismatch("Frobenius needs a finite field")
        if power % spec.k == 0:
            return cls(spec, "id", None)
        return cls(spec, "frob", power % spec.k)

    @classmethod
    def conjugation(cls, u: Quaternion) -> "SkewRing":
        """x -> u x u^-1 on the rational quaternions."""
        if u.is_zero():
            raise ZeroInput("conjugating unit must be nonzero")
        if u.is_scalar():
            return cls(quaternion_algebra(), "id", None)
        return cls(quaternion_algebra(), "conj", u)

    # -- coefficient plumbing -------------------------------------------------

    @property
    def zero_c(self):
        return self.coeff_ring.zero

    @property
    def one_c(self):
        return self.coeff_ring.one

    def coerce(self, x):
        if isinstance(x, FieldElem) or isinstance(x, Quaternion):
            self._check_elem(x)
            return x
        return self.coeff_ring.elem(x)

    def _check_elem(self, x):
        if isinstance(self.coeff_ring, QuaternionAlgebra):
            if not isinstance(x, Quaternion):
                raise RingMismatch("expected a quaternion coefficient")
        else:
            if not isinstance(x, FieldElem) or x.spec is not self.coeff_ring:
                raise RingMismatch(
                    f"coefficient not in {self.coeff_ring.describe()}")

    def inv_c(self, x):
        if isinstance(x, Quaternion):
            return x.inverse()
        return x.inverse()

    def is_zero_c(self, x) -> bool:
        return x.is_zero()

    def generators(self):
        if isinstance(self.coeff_ring, QuaternionAlgebra):
            return self.coeff_ring.generators()
        spec = self.coeff_ring
        if spec.kind == "Fq":
            return (spec.generator,)
        return (spec.elem(1),)

    def random_coeff(self, rng):
        return self.coeff_ring.random_element(rng)

    # -- the automorphism -----------------------------------------------------

    def _prepare(self):
        if self.sigma_kind == "id":
            self.order_n = 1
            return
        if self.sigma_kind == "frob":
            spec = self.coeff_ring
            j = self.sigma_param
            base = [spec.frobenius(v) for v in range(spec.q)]
            table = list(range(spec.q))
            for _ in range(j):
                table = [base[v] for v in table]
            tables = [list(range(spec.q))]
            cur = table
            while cur != tables[0]:
                tables.append(cur)
                cur = [table[v] for v in cur]
                if len(tables) > _ORDER_CAP:
                    raise ValueError("automorphism order exceeds cap")
            self._frob_tables = tables
            self.order_n = len(tables)
            return
        # conjugation: precompute the exact linear action on 1, i, j, k
        u = self.sigma_param
        ui = u.inverse()

        def normalize(rows):
            # integral entries stay int, keeping coefficient arithmetic fast
            return tuple(
                tuple(int(c) if isinstance(c, Fraction)
                      and c.denominator == 1 else c for c in row)
                for row in rows)

        basis = (Quaternion(1), Quaternion(0, 1), Quaternion(0, 0, 1),
                 Quaternion(0, 0, 0, 1))
        mats = [normalize(tuple(b.components() for b in basis))]
        cur = normalize(tuple((u * b * ui).components() for b in basis))
        while cur != mats[0]:
            mats.append(cur)
            cur = normalize(tuple(self._apply_mat(cur, row)
                                  for row in mats[1]))
            if len(mats) > _ORDER_CAP:
                raise ValueError("automorphism order exceeds cap")
        self._conj_mats = mats
        self.order_n = len(mats)

    @staticmethod
    def _apply_mat(mat, comps):
        w, x, y, z = comps
        out = [0, 0, 0, 0]
        for c, row in zip((w, x, y, z), mat):
            if c:
                out = [o + c * r for o, r in zip(out, row)]
        return tuple(out)

    def sigma(self, a):
        return self.sigma_pow(1, a)

    def sigma_pow(self, m: int, a):
        m %= self.order_n
        if m == 0:
            return a
        if self.sigma_kind == "frob":
            return FieldElem(self.coeff_ring, self._frob_tables[m][a.value])
        return Quaternion(*self._apply_mat(self._conj_mats[m], a.components()))

    def _validate(self):
        """Homomorphism, unit, and order checks on a generating set."""
        gens = list(self.generators())
        samples = gens + [self.one_c, self.one_c + self.one_c]
        if isinstance(self.coeff_ring, QuaternionAlgebra):
            samples.append(Quaternion(1, 2, 3, 4))
        else:
            spec = self.coeff_ring
            samples.extend(FieldElem(spec, v % spec.q)
                           for v in (2, 3, spec.q - 1))
        if self.sigma(self.one_c) != self.one_c:
            raise ValueError("sigma does not fix 1")
        for a in samples:
            for b in samples:
                if self.sigma(a + b) != self.sigma(a) + self.sigma(b):
                    raise ValueError("sigma is not additive")
                if self.sigma(a * b) != self.sigma(a) * self.sigma(b):
                    raise ValueError("sigma is not multiplicative")
        for g in gens:
            if self.sigma_pow(self.order_n, g) != g:
                raise ValueError("sigma^n != id on generators")
        if self.order_n > 1:
            fixes_all = all(self.sigma(g) == g for g in gens)
            if fixes_all:
                raise ValueError("order_n is not minimal")

    # -- identity --------------------------------------------------------------

    def describe(self) -> str:
        left = self.coeff_ring.describe()
        if self.sigma_kind == "id":
            return f"{left};id"
        if self.sigma_kind == "frob":
            j = self.sigma_param
            return f"{left};frob" if j == 1 else f"{left};frob^{j}"
        from .grammar import print_quaternion
        return f"{left};conj({print_quaternion(self.sigma_param)})"

    def __repr__(self):
        return f"SkewRing({self.describe()}, order={self.order_n})"


class SkewPoly:
    """Element of a twisted polynomial ring; coefficients ascending in T."""

    __slots__ = ("ring", "coeffs")

    def __init__(self, ring: SkewRing, coeffs=()):
        cs = [ring.coerce(c) for c in coeffs]
        while cs and cs[-1].is_zero():
            cs.pop()
        self.ring = ring
        self.coeffs = tuple(cs)

    @classmethod
    def _raw(cls, ring, cs):
        # internal: coefficients already validated
        while cs and cs[-1].is_zero():
            cs.pop()
        obj = cls.__new__(cls)
        obj.ring = ring
        obj.coeffs = tuple(cs)
        return obj

    @classmethod
    def zero(cls, ring) -> "SkewPoly":
        return cls(ring, ())

    @classmethod
    def one(cls, ring) -> "SkewPoly":
        return cls(ring, (ring.one_c,))

    @classmethod
    def gen(cls, ring) -> "SkewPoly":
        return cls(ring, (ring.zero_c, ring.one_c))

    @classmethod
    def monomial(cls, ring, c, degree: int) -> "SkewPoly":
        return cls(ring, (ring.zero_c,) * degree + (ring.coerce(c),))

    @property
    def degree(self) -> int:
        return len(self.coeffs) - 1

    def is_zero(self) -> bool:
        return not self.coeffs

    def coeff(self, i: int):
        return (self.coeffs[i] if 0 <= i < len(self.coeffs)
                else self.ring.zero_c)

    def leading(self):
        if not self.coeffs:
            raise ValueError("zero polynomial has no leading coefficient")
        return self.coeffs[-1]

    def _check(self, other) -> "SkewPoly":
        if isinstance(other, SkewPoly):
            if other.ring is not self.ring:
                raise RingMismatch("skew polynomials from different rings")
            return other
        if isinstance(other, (int, FieldElem, Quaternion, Fraction)):
            return SkewPoly(self.ring, (other,))
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
        return SkewPoly._raw(self.ring, out)

    __radd__ = __add__

    def __neg__(self):
        return SkewPoly._raw(self.ring, [-c for c in self.coeffs])

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
            return SkewPoly.zero(self.ring)
        ring = self.ring
        out = [ring.zero_c] * (len(a) + len(b) - 1)
        twisted = list(b)
        for i, ai in enumerate(a):
            if i > 0:
                twisted = [ring.sigma(c) for c in twisted]
            if ai.is_zero():
                continue
            for j, bj in enumerate(twisted):
                if not bj.is_zero():
                    out[i + j] = out[i + j] + ai * bj
        return SkewPoly._raw(self.ring, out)

    def __rmul__(self, other):
        o = self._check(other)
        if o is None:
            return NotImplemented
        return o * self

    def __pow__(self, e: int):
        if e < 0:
            raise ValueError("negative skew power")
        result, base = SkewPoly.one(self.ring), self
        while e:
            if e & 1:
                result = result * base
            e >>= 1
            if e:
                base = base * base
        return result

    def __eq__(self, other):
        if isinstance(other, SkewPoly):
            if other.ring is not self.ring:
                return False
            return self.coeffs == other.coeffs
        o = self._check(other)
        if o is None:
            return NotImplemented
        return self.coeffs == o.coeffs

    def __hash__(self):
        return hash((id(self.ring), self.coeffs))

    def __str__(self):
        from .grammar import print_skew
        return print_skew(self)

    def __repr__(self):
        return f"SkewPoly[{self.ring.describe()}]({self})"


def skew_mul(f: SkewPoly, g: SkewPoly) -> SkewPoly:
    """The twisted product; degree adds for nonzero operands."""
    if not isinstance(g, SkewPoly) or f.ring is not g.ring:
        raise RingMismatch("skew polynomials from different rings")
    return f * g


def right_divide(a: SkewPoly, b: SkewPoly):
    """Unique (q, r) with a = q*b + r and deg r < deg b."""
    if not isinstance(b, SkewPoly) or a.ring is not b.ring:
        raise RingMismatch("skew polynomials from different rings")
    if b.is_zero():
        raise ZeroDivisionError("skew division by zero")
    ring = a.ring
    q = SkewPoly.zero(ring)
    r = a
    db = b.degree
    bl = b.leading()
    while not r.is_zero() and r.degree >= db:
        m = r.degree - db
        c = r.leading() * ring.inv_c(ring.sigma_pow(m, bl))
        term = SkewPoly.monomial(ring, c, m)
        q = q + term
        r = r - term * b
    return q, r


def left_divide(a: SkewPoly, b: SkewPoly):
    """Unique (q, r) with a = b*q + r and deg r < deg b."""
    if not isinstance(b, SkewPoly) or a.ring is not b.ring:
        raise RingMismatch("skew polynomials from different rings")
    if b.is_zero():
        raise ZeroDivisionError("skew division by zero")
    ring = a.ring
    q = SkewPoly.zero(ring)
    r = a
    db = b.degree
    bl_inv = ring.inv_c(b.leading())
    while not r.is_zero() and r.degree >= db:
        m = r.degree - db
        c = ring.sigma_pow(-db, bl_inv * r.leading())
        term = SkewPoly.monomial(ring, c, m)
        q = q + term
        r = r - b * term
    return q, r


def ore_witness(x: SkewPoly, y: SkewPoly):
    """Nonzero common right multiple: (r, s) with x*r = y*s != 0.

    Computed by the extended Euclidean algorithm with left division, which
    produces the minimal-degree element of xR intersect yR; the returned
    identity is re-verified by independent multiplication.
    """
    if not isinstance(y, SkewPoly) or x.ring is not y.ring:
        raise RingMismatch("skew polynomials from different rings")
    if x.is_zero() or y.is_zero():
        raise ZeroInput("Ore witnesses need nonzero inputs")
    ring = x.ring
    r0, r1 = x, y
    u0, v0 = SkewPoly.one(ring), SkewPoly.zero(ring)
    u1, v1 = SkewPoly.zero(ring), SkewPoly.one(ring)
    while not r1.is_zero():
        quo, rem = left_divide(r0, r1)
        r0, r1 = r1, rem
        u0, u1 = u1, u0 - u1 * quo
        v0, v1 = v1, v0 - v1 * quo
    r, s = u1, -v1
    lhs, rhs = x * r, y * s
    if lhs != rhs or lhs.is_zero():
        raise AssertionError("Ore witness failed re-verification")
    return r, s


def center_test(f: SkewPoly) -> bool:
    """True iff f commutes with T and with the coefficient generators."""
    ring = f.ring
    t = SkewPoly.gen(ring)
    if f * t != t * f:
        return False
    for g in ring.generators():
        gg = SkewPoly(ring, (g,))
        if f * gg != gg * f:
            return False
    return True
