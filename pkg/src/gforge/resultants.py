"""Resultants and discriminants via Sylvester determinants.

Determinants are computed by fraction-free Bareiss elimination, which stays
inside the coefficient ring as long as exact division is available.  Two
rings are used: field elements (entries of a scalar Sylvester matrix) and
polynomials in T over a field (entries for parametric discriminants).

The discriminant follows the universal formula
    disc(f) = (-1)^(n(n-1)/2) * det Syl(f, f'; n, n-1) / lc(f)
with f' padded to formal degree n-1, which stays correct when the derivative
degenerates in characteristic p (vanishing f' gives determinant zero).
"""

from __future__ import annotations

from .errors import ConstantPolynomial
from .unipoly import UniPoly


class _FieldOps:
    def __init__(self, spec):
        self.spec = spec
        self.zero = spec.zero
        self.one = spec.one

    def is_zero(self, a):
        return a.is_zero()

    def sub(self, a, b):
        return a - b

    def mul(self, a, b):
        return a * b

    def exact_div(self, a, b):
        return a / b


class _PolyOps:
    def __init__(self, spec):
        self.spec = spec
        self.zero = UniPoly.zero(spec)
        self.one = UniPoly.one(spec)

    def is_zero(self, a):
        return a.is_zero()

    def sub(self, a, b):
        return a - b

    def mul(self, a, b):
        return a * b

    def exact_div(self, a, b):
        q, r = divmod(a, b)
        if not r.is_zero():
            raise ArithmeticError("Bareiss division was not exact")
        return q


def bareiss_determinant(rows, ops):
    """Determinant of a square matrix over an integral domain.

    `rows` is a list of lists of ring elements; `ops` supplies the ring
    operations including exact division of the intermediate minors.
    """
    n = len(rows)
    if n == 0:
        return ops.one
    m = [list(r) for r in rows]
    sign = 1
    prev = ops.one
    for k in range(n - 1):
        if ops.is_zero(m[k][k]):
            pivot = next((i for i in range(k + 1, n)
                          if not ops.is_zero(m[i][k])), None)
            if pivot is None:
                return ops.zero
            m[k], m[pivot] = m[pivot], m[k]
            sign = -sign
        for i in range(k + 1, n):
            for j in range(k + 1, n):
                num = ops.sub(ops.mul(m[i][j], m[k][k]),
                              ops.mul(m[i][k], m[k][j]))
                m[i][j] = ops.exact_div(num, prev)
            m[i][k] = ops.zero
        prev = m[k][k]
    det = m[n - 1][n - 1]
    return ops.sub(ops.zero, det) if sign < 0 else det


def _sylvester(f_coeffs, deg_f, g_coeffs, deg_g, zero):
    """Sylvester matrix for formal degrees (deg_f, deg_g), coefficient lists
    ascending; lists may be shorter than the formal degree (zero padding)."""
    n = deg_f + deg_g
    fc = list(f_coeffs) + [zero] * (deg_f + 1 - len(f_coeffs))
    gc = list(g_coeffs) + [zero] * (deg_g + 1 - len(g_coeffs))
    rows = []
    for i in range(deg_g):
        row = [zero] * n
        for j, c in enumerate(reversed(fc)):
            row[i + j] = c
        rows.append(row)
    for i in range(deg_f):
        row = [zero] * n
        for j, c in enumerate(reversed(gc)):
            row[i + j] = c
        rows.append(row)
    return rows


def resultant(f: UniPoly, g: UniPoly):
    """Resultant of two nonzero univariate polynomials (a field element)."""
    if f.is_zero() or g.is_zero():
        raise ValueError("resultant of the zero polynomial")
    ops = _FieldOps(f.spec)
    if f.degree == 0:
        return f.coeffs[0] ** g.degree
    if g.degree == 0:
        return g.coeffs[0] ** f.degree
    rows = _sylvester(f.coeffs, f.degree, g.coeffs, g.degree, ops.zero)
    return bareiss_determinant(rows, ops)


def _disc_sign(n: int) -> int:
    return -1 if (n * (n - 1) // 2) % 2 else 1


def discriminant(f: UniPoly):
    """Discriminant of f with respect to its variable (a field element)."""
    n = f.degree
    if n <= 0:
        raise ConstantPolynomial("discriminant needs a nonconstant polynomial")
    if n == 1:
        return f.spec.one
    ops = _FieldOps(f.spec)
    d = f.derivative()
    rows = _sylvester(f.coeffs, n, d.coeffs, n - 1, ops.zero)
    det = bareiss_determinant(rows, ops)
    det = det / f.leading()
    return -det if _disc_sign(n) < 0 else det


def discriminant_in_y(coeffs_in_t, spec):
    """Discriminant w.r.t. Y of sum coeffs_in_t[j](T) * Y^j, monic in Y.

    Returns a UniPoly in T.  Used by ParamPoly.discriminant_y.
    """
    n = len(coeffs_in_t) - 1
    if n <= 0:
        raise ConstantPolynomial("discriminant needs a nonconstant polynomial")
    ops = _PolyOps(spec)
    if n == 1:
        return ops.one
    deriv = [coeffs_in_t[j] * j for j in range(1, n + 1)]
    while deriv and deriv[-1].is_zero():
        deriv.pop()
    rows = _sylvester(coeffs_in_t, n, deriv, n - 1, ops.zero)
    det = bareiss_determinant(rows, ops)
    return -det if _disc_sign(n) < 0 else det


def resultant_in_y(a_coeffs, b_coeffs, spec):
    """Resultant w.r.t. Y of two polynomials in k[T][Y] given as coefficient
    lists of UniPoly-in-T, ascending in Y.  Returns a UniPoly in T."""
    ops = _PolyOps(spec)
    da, db = len(a_coeffs) - 1, len(b_coeffs) - 1
    if da < 0 or db < 0:
        raise ValueError("resultant of the zero polynomial")
    rows = _sylvester(a_coeffs, da, b_coeffs, db, ops.zero)
    return bareiss_determinant(rows, ops)
