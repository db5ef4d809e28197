"""Polynomials in k[T][Y], monic in Y: fibers of a one-parameter family.

A ParamPoly stores one UniPoly in T per Y-power, ascending, with the top
coefficient equal to the constant polynomial 1.  Evaluating T at a field
point yields the fiber, a UniPoly in Y.
"""

from __future__ import annotations

from .errors import (ConstantPolynomial, DegreeMismatch, DuplicateNodes,
                     NonMonicFiber)
from .fields import FieldSpec
from .resultants import discriminant, discriminant_in_y, resultant_in_y
from .unipoly import UniPoly


class ParamPoly:
    __slots__ = ("spec", "coeffs_in_t", "_disc")

    def __init__(self, spec: FieldSpec, coeffs_in_t):
        cs = []
        for c in coeffs_in_t:
            if isinstance(c, UniPoly):
                if c.spec is not spec:
                    raise DegreeMismatch("coefficient over a different field")
                cs.append(c)
            else:
                cs.append(UniPoly(spec, (c,)) if not isinstance(c, (list, tuple))
                          else UniPoly(spec, c))
        if not cs or not (cs[-1] == UniPoly.one(spec)):
            raise NonMonicFiber("parametric polynomial must be monic in Y")
        self.spec = spec
        self.coeffs_in_t = tuple(cs)
        self._disc = None

    @classmethod
    def from_unipoly(cls, f: UniPoly) -> "ParamPoly":
        """Embed a monic polynomial in Y as a family constant in T."""
        if not f.is_monic():
            raise NonMonicFiber("fiber must be monic")
        return cls(f.spec, [UniPoly(f.spec, (c,)) for c in f.coeffs])

    @property
    def degree_y(self) -> int:
        return len(self.coeffs_in_t) - 1

    @property
    def degree_t(self) -> int:
        return max(c.degree for c in self.coeffs_in_t)

    def coeff(self, j: int) -> UniPoly:
        return self.coeffs_in_t[j]

    def at_t(self, t0) -> UniPoly:
        """The fiber at T = t0, a UniPoly in Y (monic of the same degree)."""
        t0 = self.spec.elem(t0)
        return UniPoly(self.spec, [c.evaluate(t0) for c in self.coeffs_in_t])

    def evaluate(self, t0, y0):
        return self.at_t(t0).evaluate(y0)

    def is_constant_in_t(self) -> bool:
        return all(c.is_constant() for c in self.coeffs_in_t)

    def y_derivative_coeffs(self):
        """Coefficients in T of the Y-derivative (not monic; raw list)."""
        return [self.coeffs_in_t[j] * j for j in range(1, self.degree_y + 1)]

    def discriminant_y(self) -> UniPoly:
        """Discriminant with respect to Y, an exact polynomial in T.

        Cached: the value is immutable and unramifiedness tests evaluate it
        at many points."""
        if self._disc is None:
            self._disc = discriminant_in_y(list(self.coeffs_in_t), self.spec)
        return self._disc

    def resultant_y(self, other: "ParamPoly") -> UniPoly:
        return resultant_in_y(list(self.coeffs_in_t),
                              list(other.coeffs_in_t), self.spec)

    def __eq__(self, other):
        if not isinstance(other, ParamPoly):
            return NotImplemented
        return (self.spec is other.spec
                and self.coeffs_in_t == other.coeffs_in_t)

    def __hash__(self):
        return hash((id(self.spec), self.coeffs_in_t))

    def to_str(self) -> str:
        from .grammar import print_parampoly
        return print_parampoly(self)

    def __str__(self):
        return self.to_str()

    def __repr__(self):
        return f"ParamPoly[{self.spec}]({self})"


def discriminant_y(f):
    """Discriminant w.r.t. Y of a UniPoly (returns a field element) or of a
    ParamPoly (returns a UniPoly in T).  Exact in every characteristic; an
    identically vanishing derivative gives zero."""
    if isinstance(f, ParamPoly):
        return f.discriminant_y()
    if isinstance(f, UniPoly):
        if f.degree <= 0:
            raise ConstantPolynomial("discriminant needs deg >= 1")
        return discriminant(f)
    raise TypeError("expected UniPoly or ParamPoly")


def lagrange_interpolate_coeffwise(nodes, fibers) -> ParamPoly:
    """Monic family R(T, Y) with R(node_i, Y) = fiber_i, exactly.

    Interpolation runs coefficient by coefficient in Y; every T-coefficient
    of the result has degree < len(nodes).
    """
    if len(nodes) < 2:
        raise ValueError("need at least two interpolation nodes")
    if len(nodes) != len(fibers):
        raise DegreeMismatch(
            f"{len(nodes)} nodes against {len(fibers)} fibers")
    if not fibers:
        raise DegreeMismatch("no fibers given")
    spec = fibers[0].spec
    ts = [spec.elem(t) for t in nodes]
    if len({t.value for t in ts}) != len(ts):
        raise DuplicateNodes("interpolation nodes must be pairwise distinct")
    n = fibers[0].degree
    for f in fibers:
        if f.spec is not spec:
            raise DegreeMismatch("fibers over different fields")
        if not f.is_monic():
            raise NonMonicFiber(f"fiber {f} is not monic")
        if f.degree != n:
            raise DegreeMismatch("fibers must share one degree")

    # Lagrange basis in k[T]
    basis = []
    for i, ti in enumerate(ts):
        num = UniPoly.one(spec)
        den = spec.one
        for j, tj in enumerate(ts):
            if j != i:
                num = num * UniPoly(spec, (-tj, spec.one))
                den = den * (ti - tj)
        inv = den.inverse()
        basis.append(UniPoly(spec, [c * inv for c in num.coeffs]))

    coeffs_in_t = []
    for j in range(n):
        acc = UniPoly.zero(spec)
        for i, f in enumerate(fibers):
            v = f.coeff(j)
            if not v.is_zero():
                acc = acc + UniPoly(spec, [c * v for c in basis[i].coeffs])
        coeffs_in_t.append(acc)
    coeffs_in_t.append(UniPoly.one(spec))
    return ParamPoly(spec, coeffs_in_t)
