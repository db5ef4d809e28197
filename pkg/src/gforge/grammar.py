"""Text grammar for polynomials, elements, and ring descriptors.

Printing is canonical (descending powers, explicit '*', parenthesized
compound coefficients) and parsing accepts everything printing emits, so
round-trips are exact.  Rational literals are "p/q"; extension-field
elements print as powers "g^k" of the field's multiplicative generator;
quaternions use the units i, j, k.

Field descriptors: "Q", "GF(5)", "GF(9)".  Skew ring descriptors:
"GF(4);frob", "GF(9);frob^2", "GF(5);id", "H(-1,-1/Q);conj(i)".
"""

from __future__ import annotations

from fractions import Fraction

from .errors import ParseError
from .fields import FieldElem, FieldSpec, field_from_string
from .parampoly import ParamPoly
from .quaternions import (QUAT_I, QUAT_J, QUAT_K, Quaternion,
                          QuaternionAlgebra, quaternion_algebra)
from .unipoly import UniPoly

# ---------------------------------------------------------------------------
# printing


def _frac_str(v: Fraction) -> str:
    return str(v)  # Fraction prints p/q in lowest terms, integers bare


def print_elem(e: FieldElem) -> str:
    spec = e.spec
    if spec.kind == "Q":
        return _frac_str(e.value)
    if spec.kind == "Fp":
        return str(e.value)
    if e.value == 0:
        return "0"
    k = spec.dlog(e.value)
    if k == 0:
        return "1"
    return "g" if k == 1 else f"g^{k}"


def print_quaternion(x: Quaternion) -> str:
    parts = []
    for comp, unit in zip(x.components(), ("", "i", "j", "k")):
        if comp == 0:
            continue
        mag = comp if comp > 0 else -comp
        if unit and mag == 1:
            body = unit
        elif unit:
            body = f"{_frac_str(Fraction(mag))}*{unit}"
        else:
            body = _frac_str(Fraction(mag))
        parts.append(("-" if comp < 0 else "+", body))
    if not parts:
        return "0"
    sign, body = parts[0]
    out = ("-" if sign == "-" else "") + body
    for sign, body in parts[1:]:
        out += f" {sign} {body}"
    return out


def _term_str(coeff_str: str, negative: bool, var: str, power: int,
              first: bool) -> str:
    if power == 0:
        body = coeff_str
    else:
        v = var if power == 1 else f"{var}^{power}"
        body = v if coeff_str == "1" else f"{coeff_str}*{v}"
    if first:
        return ("-" if negative else "") + body
    return (" - " if negative else " + ") + body


def print_unipoly(f: UniPoly, var: str = "Y") -> str:
    if f.is_zero():
        return "0"
    spec = f.spec
    out = []
    first = True
    for j in range(f.degree, -1, -1):
        c = f.coeff(j)
        if c.is_zero():
            continue
        if spec.kind == "Q" and c.value < 0:
            out.append(_term_str(_frac_str(-c.value), True, var, j, first))
        else:
            out.append(_term_str(print_elem(c), False, var, j, first))
        first = False
    return "".join(out)


def print_parampoly(pp: ParamPoly) -> str:
    spec = pp.spec
    out = []
    first = True
    for j in range(pp.degree_y, -1, -1):
        c = pp.coeff(j)
        if c.is_zero():
            continue
        terms = sum(1 for e in c.coeffs if not e.is_zero())
        if c.is_constant():
            e = c.coeff(0)
            if spec.kind == "Q" and e.value < 0:
                out.append(_term_str(_frac_str(-e.value), True, "Y", j, first))
            else:
                out.append(_term_str(print_elem(e), False, "Y", j, first))
        elif terms == 1:
            # bare monomial coefficient: "T*Y", "2*T^2*Y", "- 3*T*Y"
            lead = c.leading()
            if spec.kind == "Q" and lead.value < 0:
                body = print_unipoly(-c, "T")
                out.append(_term_str(body, True, "Y", j, first))
            else:
                out.append(_term_str(print_unipoly(c, "T"), False, "Y", j,
                                     first))
        else:
            body = f"({print_unipoly(c, 'T')})"
            out.append(_term_str(body, False, "Y", j, first))
        first = False
    return "".join(out)


def print_skew(sp) -> str:
    """Skew polynomials print with coefficients left of the T-powers."""
    ring = sp.ring
    if sp.is_zero():
        return "0"
    out = []
    first = True
    for j in range(sp.degree, -1, -1):
        c = sp.coeff(j)
        if _skew_is_zero(c):
            continue
        if isinstance(c, Quaternion):
            if c.is_scalar() and isinstance(ring.coeff_ring, QuaternionAlgebra):
                v = Fraction(c.w)
                if v < 0:
                    out.append(_term_str(_frac_str(-v), True, "T", j, first))
                else:
                    out.append(_term_str(_frac_str(v), False, "T", j, first))
            else:
                body = print_quaternion(c)
                if " " in body or body.startswith("-"):
                    body = f"({body})"
                out.append(_term_str(body, False, "T", j, first))
        else:
            spec = c.spec
            if spec.kind == "Q" and c.value < 0:
                out.append(_term_str(_frac_str(-c.value), True, "T", j, first))
            else:
                out.append(_term_str(print_elem(c), False, "T", j, first))
        first = False
    return "".join(out)


def _skew_is_zero(c) -> bool:
    return c.is_zero() if hasattr(c, "is_zero") else not c


# ---------------------------------------------------------------------------
# tokenizer / parser


class _Tok:
    __slots__ = ("kind", "text", "col")

    def __init__(self, kind, text, col):
        self.kind, self.text, self.col = kind, text, col


def _tokenize(s: str):
    toks = []
    i = 0
    while i < len(s):
        ch = s[i]
        if ch.isspace():
            i += 1
            continue
        col = i + 1
        if ch.isdigit():
            j = i
            while j < len(s) and s[j].isdigit():
                j += 1
            toks.append(_Tok("int", s[i:j], col))
            i = j
        elif ch.isalpha():
            toks.append(_Tok("name", ch, col))
            i += 1
        elif ch in "+-*^()/":
            toks.append(_Tok(ch, ch, col))
            i += 1
        else:
            raise ParseError(f"unexpected character {ch!r}", column=col)
    toks.append(_Tok("end", "", len(s) + 1))
    return toks


class _Parser:
    """Shared expression parser; `ctx` supplies the target algebra."""

    def __init__(self, s: str, ctx):
        self.toks = _tokenize(s)
        self.pos = 0
        self.ctx = ctx

    def peek(self):
        return self.toks[self.pos]

    def take(self):
        t = self.toks[self.pos]
        self.pos += 1
        return t

    def expect(self, kind):
        t = self.take()
        if t.kind != kind:
            raise ParseError(f"expected {kind!r}, found {t.text!r}",
                             column=t.col)
        return t

    def parse(self):
        v = self.expr()
        t = self.peek()
        if t.kind != "end":
            raise ParseError(f"unexpected trailing {t.text!r}", column=t.col)
        return v

    def expr(self):
        t = self.peek()
        negate = False
        if t.kind in ("+", "-"):
            self.take()
            negate = t.kind == "-"
        v = self.term()
        if negate:
            v = self.ctx.neg(v)
        while self.peek().kind in ("+", "-"):
            op = self.take()
            rhs = self.term()
            v = self.ctx.sub(v, rhs) if op.kind == "-" else self.ctx.add(v, rhs)
        return v

    def term(self):
        v = self.power()
        while True:
            t = self.peek()
            if t.kind in ("*", "/"):
                self.take()
                rhs = self.power()
                if t.kind == "/":
                    v = self.ctx.div(v, rhs, t.col)
                else:
                    v = self.ctx.mul(v, rhs)
            elif t.kind in ("int", "name", "("):
                # implicit multiplication: "2Y", "(T-1)Y"
                v = self.ctx.mul(v, self.power())
            else:
                return v

    def power(self):
        t = self.peek()
        if t.kind == "-":
            self.take()
            return self.ctx.neg(self.power())
        v = self.atom()
        if self.peek().kind == "^":
            self.take()
            e = self.expect("int")
            v = self.ctx.pow(v, int(e.text))
        return v

    def atom(self):
        t = self.take()
        if t.kind == "int":
            return self.ctx.from_int(int(t.text))
        if t.kind == "name":
            return self.ctx.name(t.text, t.col)
        if t.kind == "(":
            v = self.expr()
            self.expect(")")
            return v
        raise ParseError(f"unexpected {t.text!r}", column=t.col)


# ---------------------------------------------------------------------------
# evaluation contexts


class _BiPolyCtx:
    """Sparse commutative polynomials in T and Y over a field; values are
    dicts mapping (deg_t, deg_y) -> FieldElem."""

    def __init__(self, spec: FieldSpec, allowed):
        self.spec = spec
        self.allowed = allowed

    def from_int(self, n):
        c = self.spec.elem(n)
        return {} if c.is_zero() else {(0, 0): c}

    def name(self, nm, col):
        if nm in self.allowed:
            key = (1, 0) if nm == "T" else (0, 1)
            return {key: self.spec.one}
        if nm == "g" and self.spec.kind == "Fq":
            return {(0, 0): self.spec.generator}
        raise ParseError(f"unknown symbol {nm!r} over {self.spec}", column=col)

    def add(self, a, b):
        out = dict(a)
        for k, v in b.items():
            s = out.get(k, self.spec.zero) + v
            if s.is_zero():
                out.pop(k, None)
            else:
                out[k] = s
        return out

    def neg(self, a):
        return {k: -v for k, v in a.items()}

    def sub(self, a, b):
        return self.add(a, self.neg(b))

    def mul(self, a, b):
        out = {}
        for (i1, j1), v1 in a.items():
            for (i2, j2), v2 in b.items():
                k = (i1 + i2, j1 + j2)
                s = out.get(k, self.spec.zero) + v1 * v2
                if s.is_zero():
                    out.pop(k, None)
                else:
                    out[k] = s
        return out

    def pow(self, a, e):
        out = self.from_int(1)
        for _ in range(e):
            out = self.mul(out, a)
        return out

    def div(self, a, b, col):
        if list(b.keys()) not in ([], [(0, 0)]):
            raise ParseError("division only by nonzero constants", column=col)
        if not b:
            raise ParseError("division by zero", column=col)
        inv = b[(0, 0)].inverse()
        return {k: v * inv for k, v in a.items()}


def _parse_bipoly(s: str, spec: FieldSpec, allowed) -> dict:
    return _Parser(s, _BiPolyCtx(spec, allowed)).parse()


def parse_elem(s: str, spec: FieldSpec) -> FieldElem:
    d = _parse_bipoly(s, spec, allowed=())
    if not d:
        return spec.zero
    return d[(0, 0)]


def parse_unipoly(s: str, spec: FieldSpec, var: str = "Y") -> UniPoly:
    d = _parse_bipoly(s, spec, allowed=(var,))
    if not d:
        return UniPoly.zero(spec)
    deg = max(i + j for i, j in d)
    coeffs = [spec.zero] * (deg + 1)
    for (i, j), v in d.items():
        coeffs[i + j] = v
    return UniPoly(spec, coeffs)


def parse_parampoly(s: str, spec: FieldSpec) -> ParamPoly:
    d = _parse_bipoly(s, spec, allowed=("T", "Y"))
    if not d:
        raise ParseError("empty polynomial")
    deg_y = max(j for _, j in d)
    deg_t = max(i for i, _ in d)
    cols = []
    for j in range(deg_y + 1):
        coeffs = [spec.zero] * (deg_t + 1)
        for (i, jj), v in d.items():
            if jj == j:
                coeffs[i] = v
        cols.append(UniPoly(spec, coeffs))
    return ParamPoly(spec, cols)


class _QuatCtx:
    def __init__(self):
        self.alg = quaternion_algebra()

    def from_int(self, n):
        return Quaternion(n)

    def name(self, nm, col):
        units = {"i": QUAT_I, "j": QUAT_J, "k": QUAT_K}
        if nm in units:
            return units[nm]
        raise ParseError(f"unknown symbol {nm!r} in quaternions", column=col)

    def add(self, a, b):
        return a + b

    def sub(self, a, b):
        return a - b

    def neg(self, a):
        return -a

    def mul(self, a, b):
        return a * b

    def pow(self, a, e):
        return a ** e

    def div(self, a, b, col):
        if b.is_zero():
            raise ParseError("division by zero", column=col)
        return a * b.inverse()


def parse_quaternion(s: str) -> Quaternion:
    return _Parser(s, _QuatCtx()).parse()


class _SkewCtx:
    """Evaluates expressions directly in a skew ring, so products respect
    the twisted multiplication (e.g. "T*g" normalizes the twist)."""

    def __init__(self, ring):
        self.ring = ring

    def from_int(self, n):
        from .skew import SkewPoly
        return SkewPoly(self.ring, (self.ring.coerce(n),))

    def name(self, nm, col):
        from .skew import SkewPoly
        if nm == "T":
            return SkewPoly(self.ring, (self.ring.zero_c, self.ring.one_c))
        ring = self.ring.coeff_ring
        if isinstance(ring, QuaternionAlgebra):
            units = {"i": QUAT_I, "j": QUAT_J, "k": QUAT_K}
            if nm in units:
                return SkewPoly(self.ring, (units[nm],))
        elif nm == "g" and ring.kind == "Fq":
            return SkewPoly(self.ring, (ring.generator,))
        raise ParseError(f"unknown symbol {nm!r} in {self.ring}", column=col)

    def add(self, a, b):
        return a + b

    def sub(self, a, b):
        return a - b

    def neg(self, a):
        return -a

    def mul(self, a, b):
        return a * b

    def pow(self, a, e):
        return a ** e

    def div(self, a, b, col):
        if b.degree > 0:
            raise ParseError("division only by nonzero constants", column=col)
        if b.is_zero():
            raise ParseError("division by zero", column=col)
        inv = self.ring.inv_c(b.coeff(0))
        from .skew import SkewPoly
        return a * SkewPoly(self.ring, (inv,))


def parse_skew(s: str, ring) -> "SkewPoly":  # noqa: F821
    return _Parser(s, _SkewCtx(ring)).parse()


def parse_skew_ring(s: str):
    """Parse "<coefficients>;<automorphism>" into a SkewRing."""
    from .skew import SkewRing
    if ";" not in s:
        raise ParseError("ring descriptor needs '<ring>;<automorphism>'")
    left, right = s.split(";", 1)
    left, right = left.strip(), right.strip()
    if left == "H(-1,-1/Q)":
        ring = quaternion_algebra()
    else:
        ring = field_from_string(left)
    if right == "id":
        return SkewRing.identity(ring)
    if right == "frob" or right.startswith("frob^"):
        if isinstance(ring, QuaternionAlgebra):
            raise ParseError("frob automorphisms need a finite field")
        j = 1
        if right.startswith("frob^"):
            body = right[5:]
            if not body.isdigit():
                raise ParseError(f"bad Frobenius power {body!r}")
            j = int(body)
        return SkewRing.frobenius(ring, j)
    if right.startswith("conj(") and right.endswith(")"):
        if not isinstance(ring, QuaternionAlgebra):
            raise ParseError("conj automorphisms need the quaternion algebra")
        u = parse_quaternion(right[5:-1])
        return SkewRing.conjugation(u)
    raise ParseError(f"unknown automorphism descriptor {right!r}")
