"""Specialization of a one-parameter family at a base point.

Evaluating a monic family A(T, Y) at T = t0 and factoring the fiber gives
the residue extensions at that point.  Unramifiedness is certified by the
sufficient criterion used throughout the constructions here: the fiber is
separable, i.e. the Y-discriminant does not vanish at t0.
"""

from __future__ import annotations

from dataclasses import dataclass

from .errors import InseparableFamily, RamifiedPoint, WrongBase
from .factorization import factor, is_separable
from .fields import FieldElem
from .parampoly import ParamPoly
from .unipoly import UniPoly


@dataclass(frozen=True)
class SpecializationReport:
    t0: FieldElem
    unramified: bool
    # one (irreducible factor, residue degree) entry per prime of the fiber,
    # repeated according to multiplicity
    fibers: tuple
    degree_sum_ok: bool


def unramified_at(A: ParamPoly, t0) -> bool:
    """True iff the Y-discriminant of A is nonzero at t0.

    Raises InseparableFamily when the discriminant vanishes identically
    (the criterion then certifies nothing anywhere).
    """
    if A.degree_y < 1:
        raise ValueError("family must have positive degree in Y")
    disc = A.discriminant_y()
    if disc.is_zero():
        raise InseparableFamily(
            "family has identically vanishing Y-discriminant")
    return not disc.evaluate(t0).is_zero()


def specialize_at(A: ParamPoly, t0) -> SpecializationReport:
    """Factor the fiber A(t0, Y) and report the residue extensions."""
    spec = A.spec
    t0 = spec.elem(t0)
    fiber = A.at_t(t0)
    try:
        unram = unramified_at(A, t0)
    except InseparableFamily:
        unram = False
    entries = []
    for g, mult in factor(fiber):
        for _ in range(mult):
            entries.append((g, g.degree))
    total = sum(d for _, d in entries)
    return SpecializationReport(
        t0=t0,
        unramified=unram,
        fibers=tuple(entries),
        degree_sum_ok=(total == A.degree_y),
    )


def frobenius_decomposition(A: ParamPoly, t0):
    """Residue degrees with decomposition-group orders over a finite base.

    At an unramified point of a family over GF(q), inertia is trivial and
    the decomposition group at each prime is generated by Frobenius, so its
    order equals the residue degree.  Returns one (residue degree, group
    order) pair per fiber prime.
    """
    spec = A.spec
    if not spec.is_finite:
        raise WrongBase("decomposition data is computed over finite fields")
    t0 = spec.elem(t0)
    fiber = A.at_t(t0)
    if fiber.degree >= 1 and not is_separable(fiber):
        raise RamifiedPoint(f"fiber at {t0} is inseparable")
    out = []
    for g, mult in factor(fiber):
        for _ in range(mult):
            out.append((g.degree, g.degree))
    return out
