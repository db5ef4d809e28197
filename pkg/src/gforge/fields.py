"""Exact base fields: Q, GF(p), and GF(p^k).

Field elements are immutable values tied to an interned FieldSpec.  Rational
values use fractions.Fraction (always lowest terms, positive denominator).
Finite-field values are integers in [0, q): for GF(p) the residue itself, for
GF(p^k) the base-p encoding of the coefficient vector of the element written
against the root of the field's modulus (little-endian: value = sum c_i p^i).

The modulus of GF(p^k) is the lexicographically smallest monic irreducible of
degree k over GF(p), comparing coefficient tuples from degree k-1 down to 0.
Element printing uses discrete logs against the smallest multiplicative
generator, so nonzero elements round-trip as "g^k" through the text grammar.
"""

from __future__ import annotations

import math
from fractions import Fraction

from .errors import CoefficientBlowup, FieldMismatch

# 10**6 decimal digits, expressed in bits.
_MAX_BITS = 3_321_929

# Full lookup tables are built for extension fields up to this size.
_TABLE_CAP = 128


def _q_guard(x: Fraction) -> Fraction:
    if x.numerator.bit_length() > _MAX_BITS or x.denominator.bit_length() > _MAX_BITS:
        raise CoefficientBlowup("rational coefficient exceeds 10^6 decimal digits")
    return x


def is_prime(n: int) -> bool:
    if n < 2:
        return False
    if n < 4:
        return True
    if n % 2 == 0 or n % 3 == 0:
        return False
    f = 5
    while f * f <= n:
        if n % f == 0 or n % (f + 2) == 0:
            return False
        f += 6
    return True


def primes_up_to(bound: int):
    """Ascending primes p <= bound."""
    n = 2
    while n <= bound:
        if is_prime(n):
            yield n
        n += 1


# ---------------------------------------------------------------------------
# raw GF(p)[x] helpers shared with modulus selection (coefficient lists of
# ints mod p, little-endian, no trailing zeros)

def _zp_trim(a):
    while a and a[-1] == 0:
        a.pop()
    return a


def _zp_mul(a, b, p):
    if not a or not b:
        return []
    out = [0] * (len(a) + len(b) - 1)
    for i, ai in enumerate(a):
        if ai:
            for j, bj in enumerate(b):
                out[i + j] = (out[i + j] + ai * bj) % p
    return _zp_trim(out)


def _zp_rem(a, b, p):
    a = list(a)
    inv_lead = pow(b[-1], p - 2, p)
    while len(a) >= len(b):
        c = a[-1] * inv_lead % p
        if c:
            off = len(a) - len(b)
            for j, bj in enumerate(b):
                a[off + j] = (a[off + j] - c * bj) % p
        a.pop()
        _zp_trim(a)
        if not a:
            break
    return a


def _zp_gcd(a, b, p):
    a, b = list(a), list(b)
    while b:
        a, b = b, _zp_rem(a, b, p)
    if a:
        inv = pow(a[-1], p - 2, p)
        a = [c * inv % p for c in a]
    return a


def _zp_powmod(a, e, mod, p):
    result = [1]
    base = _zp_rem(a, mod, p) if len(a) >= len(mod) else list(a)
    while e:
        if e & 1:
            result = _zp_rem(_zp_mul(result, base, p), mod, p)
        e >>= 1
        if e:
            base = _zp_rem(_zp_mul(base, base, p), mod, p)
    return result


def _zp_irreducible(m, p) -> bool:
    """Irreducibility of monic m over GF(p) via x^(p^d) fixed-point tests."""
    k = len(m) - 1
    if k < 1:
        return False
    if k == 1:
        return True
    # x^(p^k) == x (mod m) and gcd(x^(p^(k/l)) - x, m) == 1 for prime l | k
    x = [0, 1]
    xq = _zp_powmod(x, p ** k, m, p)
    if _zp_trim([(a - b) % p for a, b in
                 zip(xq + [0] * len(x), x + [0] * len(xq))]):
        return False
    for l in range(2, k + 1):
        if k % l == 0 and is_prime(l):
            xd = _zp_powmod(x, p ** (k // l), m, p)
            diff = [(a - b) % p for a, b in
                    zip(xd + [0] * len(x), x + [0] * len(xd))]
            if len(_zp_gcd(_zp_trim(diff), m, p)) != 1:
                return False
    return True


def _smallest_modulus(p: int, k: int):
    """Lexicographically smallest monic irreducible of degree k over GF(p)."""
    for c in range(p ** k):
        lower, n = [], c
        for _ in range(k):
            lower.append(n % p)
            n //= p
        m = lower + [1]
        if _zp_irreducible(m, p):
            return tuple(m)
    raise AssertionError("no irreducible modulus found")  # unreachable


# ---------------------------------------------------------------------------

class FieldSpec:
    """Descriptor of a base field; interned (one instance per field)."""

    __slots__ = (
        "kind", "p", "k", "q", "modulus", "characteristic",
        "_add_t", "_mul_t", "_neg_t", "_inv_t", "_frob_t",
        "_gen", "_exp", "_log", "_zero", "_one",
    )

    def __init__(self, kind, p=0, k=1, modulus=None):
        self.kind = kind  # "Q" | "Fp" | "Fq"
        self.p = p
        self.k = k
        self.q = p ** k if p else 0
        self.modulus = modulus  # tuple of ints, monic, little-endian (Fq only)
        self.characteristic = p
        self._add_t = self._mul_t = self._neg_t = self._inv_t = self._frob_t = None
        self._gen = self._exp = self._log = None
        if kind == "Fq" and self.q <= _TABLE_CAP:
            self._build_tables()
        self._zero = FieldElem(self, self._raw_from_int(0))
        self._one = FieldElem(self, self._raw_from_int(1))

    # -- raw vector arithmetic for Fq ------------------------------------

    def _decode(self, v: int):
        out, n = [], v
        for _ in range(self.k):
            out.append(n % self.p)
            n //= self.p
        return out

    def _encode(self, vec) -> int:
        v = 0
        for c in reversed(vec):
            v = v * self.p + c
        return v

    def _vec_mul(self, a: int, b: int) -> int:
        p, k, m = self.p, self.k, self.modulus
        av, bv = self._decode(a), self._decode(b)
        prod = [0] * (2 * k - 1)
        for i, ai in enumerate(av):
            if ai:
                for j, bj in enumerate(bv):
                    prod[i + j] = (prod[i + j] + ai * bj) % p
        # reduce mod modulus: x^k == -(lower part of m)
        for d in range(2 * k - 2, k - 1, -1):
            c = prod[d]
            if c:
                prod[d] = 0
                for j in range(k):
                    prod[d - k + j] = (prod[d - k + j] - c * m[j]) % p
        return self._encode(prod[:k])

    def _vec_add(self, a: int, b: int) -> int:
        av, bv = self._decode(a), self._decode(b)
        return self._encode([(x + y) % self.p for x, y in zip(av, bv)])

    def _vec_neg(self, a: int) -> int:
        return self._encode([(-x) % self.p for x in self._decode(a)])

    def _build_tables(self):
        q = self.q
        self._add_t = [[self._vec_add(a, b) for b in range(q)] for a in range(q)]
        self._mul_t = [[self._vec_mul(a, b) for b in range(q)] for a in range(q)]
        self._neg_t = [self._vec_neg(a) for a in range(q)]
        inv = [0] * q
        for a in range(1, q):
            if inv[a]:
                continue
            for b in range(1, q):
                if self._mul_t[a][b] == 1:
                    inv[a], inv[b] = b, a
                    break
        self._inv_t = inv
        self._frob_t = [self.pow_raw(a, self.p) for a in range(q)]

    # -- raw value operations ---------------------------------------------

    def _raw_from_int(self, n: int):
        if self.kind == "Q":
            return Fraction(n)
        return n % self.p if self.kind == "Fp" else self._encode(
            [(n % self.p)] + [0] * (self.k - 1))

    def add(self, a, b):
        if self.kind == "Q":
            return _q_guard(a + b)
        if self.kind == "Fp":
            return (a + b) % self.p
        return self._add_t[a][b] if self._add_t else self._vec_add(a, b)

    def sub(self, a, b):
        return self.add(a, self.neg(b))

    def neg(self, a):
        if self.kind == "Q":
            return -a
        if self.kind == "Fp":
            return (-a) % self.p
        return self._neg_t[a] if self._neg_t else self._vec_neg(a)

    def mul(self, a, b):
        if self.kind == "Q":
            return _q_guard(a * b)
        if self.kind == "Fp":
            return (a * b) % self.p
        return self._mul_t[a][b] if self._mul_t else self._vec_mul(a, b)

    def inv(self, a):
        if self.kind == "Q":
            if a == 0:
                raise ZeroDivisionError("division by zero field element")
            return 1 / a
        if a == 0:
            raise ZeroDivisionError("division by zero field element")
        if self.kind == "Fp":
            return pow(a, self.p - 2, self.p)
        return self._inv_t[a] if self._inv_t else self.pow_raw(a, self.q - 2)

    def pow_raw(self, a, e: int):
        if e < 0:
            a, e = self.inv(a), -e
        if self.kind == "Q":
            return _q_guard(a ** e)
        if self.kind == "Fp":
            return pow(a, e, self.p)
        result, base = self._raw_from_int(1), a
        while e:
            if e & 1:
                result = self.mul(result, base)
            e >>= 1
            if e:
                base = self.mul(base, base)
        return result

    def frobenius(self, a):
        """x -> x^p (identity on Q and GF(p))."""
        if self.kind == "Q" or self.kind == "Fp":
            return a
        return self._frob_t[a] if self._frob_t else self.pow_raw(a, self.p)

    # -- public surface ----------------------------------------------------

    @property
    def zero(self) -> "FieldElem":
        return self._zero

    @property
    def one(self) -> "FieldElem":
        return self._one

    @property
    def is_finite(self) -> bool:
        return self.kind != "Q"

    def elem(self, x) -> "FieldElem":
        """Coerce an int, Fraction, or FieldElem into this field."""
        if isinstance(x, FieldElem):
            if x.spec is not self:
                raise FieldMismatch(f"element of {x.spec} used in {self}")
            return x
        if isinstance(x, bool):
            raise TypeError("bool is not a field element")
        if isinstance(x, int):
            if self.kind == "Q":
                return FieldElem(self, _q_guard(Fraction(x)))
            return FieldElem(self, self._raw_from_int(x))
        if isinstance(x, Fraction):
            if self.kind == "Q":
                return FieldElem(self, _q_guard(x))
            num = self._raw_from_int(x.numerator)
            den = self._raw_from_int(x.denominator)
            return FieldElem(self, self.mul(num, self.inv(den)))
        raise TypeError(f"cannot coerce {type(x).__name__} into {self}")

    def elements(self):
        """All elements (finite fields only), in encoding order."""
        if not self.is_finite:
            raise ValueError("cannot enumerate an infinite field")
        for v in range(self.q):
            yield FieldElem(self, v)

    def random_element(self, rng) -> "FieldElem":
        if self.is_finite:
            return FieldElem(self, rng.randrange(self.q))
        return FieldElem(self, Fraction(rng.randrange(-50, 51),
                                        rng.randrange(1, 25)))

    # -- printing generator (extension fields) ------------------------------

    def _ensure_gen(self):
        if self._gen is not None:
            return
        q = self.q
        factors = set()
        n = q - 1
        d = 2
        while d * d <= n:
            while n % d == 0:
                factors.add(d)
                n //= d
            d += 1
        if n > 1:
            factors.add(n)
        for g in range(2, q):
            if all(self.pow_raw(g, (q - 1) // f) != 1 for f in factors):
                self._gen = g
                break
        exp = [1]
        for _ in range(q - 2):
            exp.append(self.mul(exp[-1], self._gen))
        self._exp = exp
        self._log = {v: i for i, v in enumerate(exp)}

    @property
    def generator(self) -> "FieldElem":
        """Smallest multiplicative generator (extension fields)."""
        if self.kind != "Fq":
            raise ValueError("generator is defined for extension fields only")
        self._ensure_gen()
        return FieldElem(self, self._gen)

    def dlog(self, raw: int) -> int:
        self._ensure_gen()
        return self._log[raw]

    def describe(self) -> str:
        if self.kind == "Q":
            return "Q"
        return f"GF({self.q})" if self.kind == "Fq" else f"GF({self.p})"

    def __repr__(self):
        return self.describe()


class FieldElem:
    """Immutable element of a FieldSpec; full exact arithmetic."""

    __slots__ = ("spec", "value")

    def __init__(self, spec: FieldSpec, value):
        self.spec = spec
        self.value = value

    def _coerce(self, other):
        if isinstance(other, FieldElem):
            if other.spec is not self.spec:
                raise FieldMismatch(
                    f"cannot mix {self.spec} and {other.spec} elements")
            return other
        if isinstance(other, (int, Fraction)) and not isinstance(other, bool):
            return self.spec.elem(other)
        return None

    def __add__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return FieldElem(self.spec, self.spec.add(self.value, o.value))

    __radd__ = __add__

    def __sub__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return FieldElem(self.spec, self.spec.sub(self.value, o.value))

    def __rsub__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return FieldElem(self.spec, self.spec.sub(o.value, self.value))

    def __mul__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return FieldElem(self.spec, self.spec.mul(self.value, o.value))

    __rmul__ = __mul__

    def __truediv__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return FieldElem(self.spec, self.spec.mul(self.value,
                                                  self.spec.inv(o.value)))

    def __rtruediv__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return FieldElem(self.spec, self.spec.mul(o.value,
                                                  self.spec.inv(self.value)))

    def __neg__(self):
        return FieldElem(self.spec, self.spec.neg(self.value))

    def __pow__(self, e: int):
        return FieldElem(self.spec, self.spec.pow_raw(self.value, e))

    def inverse(self) -> "FieldElem":
        return FieldElem(self.spec, self.spec.inv(self.value))

    def __eq__(self, other):
        if isinstance(other, FieldElem):
            return self.spec is other.spec and self.value == other.value
        if isinstance(other, (int, Fraction)) and not isinstance(other, bool):
            return self.value == self.spec.elem(other).value
        return NotImplemented

    def __hash__(self):
        return hash((id(self.spec), self.value))

    def __bool__(self):
        return self.value != 0

    def __lt__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return self.sort_key() < o.sort_key()

    def sort_key(self):
        """Deterministic total order within one field."""
        return self.value

    def is_zero(self) -> bool:
        return self.value == 0

    def as_fraction(self) -> Fraction:
        if self.spec.kind != "Q":
            raise ValueError("as_fraction is defined over Q only")
        return self.value

    def __str__(self):
        from .grammar import print_elem
        return print_elem(self)

    def __repr__(self):
        return f"{self.spec}:{self}"


# ---------------------------------------------------------------------------
# interned constructors

_CACHE: dict = {}


def rationals() -> FieldSpec:
    spec = _CACHE.get("Q")
    if spec is None:
        spec = _CACHE["Q"] = FieldSpec("Q")
    return spec


def GF(q: int) -> FieldSpec:
    """The finite field with q = p^k elements (modulus chosen canonically)."""
    spec = _CACHE.get(q)
    if spec is not None:
        return spec
    if q < 2:
        raise ValueError(f"field size must be >= 2, got {q}")
    p, n = 0, q
    for d in range(2, q + 1):
        if n % d == 0:
            p = d
            break
    k = 0
    while n > 1:
        if n % p:
            raise ValueError(f"{q} is not a prime power")
        n //= p
        k += 1
    if not is_prime(p):
        raise ValueError(f"{q} is not a prime power")
    if k == 1:
        spec = FieldSpec("Fp", p=p)
    else:
        spec = FieldSpec("Fq", p=p, k=k, modulus=_smallest_modulus(p, k))
    _CACHE[q] = spec
    return spec


def field_from_string(s: str) -> FieldSpec:
    """Parse a field descriptor: "Q" or "GF(q)"."""
    from .errors import ParseError
    t = s.strip()
    if t == "Q":
        return rationals()
    if t.startswith("GF(") and t.endswith(")"):
        body = t[3:-1].strip()
        if body.isdigit():
            try:
                return GF(int(body))
            except ValueError as e:
                raise ParseError(str(e)) from None
    raise ParseError(f"unknown field descriptor {s!r}")
