"""Constructive builders with verifiable certificates.

Three constructions live here:

* the one-parameter cubic trinomial family Y^3 + (T-x)Y + (T-x), together
  with its discriminant and a generic-fiber witness;
* totally split separable trinomials Y^3 + aY + a from the closed-form
  root parametrization (with exhaustive search as the finite-field
  fallback);
* the interpolation constructor: given an irreducible stem over Q and a
  target degree n, it interpolates a monic family R(T, Y) through three
  fibers (the padded stem at 0, a totally split polynomial at 1, and a
  certified S_n polynomial at a third node) and emits a certificate whose
  every claim can be re-derived from scratch by the verifier.
"""

from __future__ import annotations

import functools
from dataclasses import dataclass
from fractions import Fraction

from .certify import (GroupCertificate, certify_sn,
                      reverify_sn_certificate)
from .errors import (NotIrreducible, NTooSmall, SearchBudgetExhausted,
                     SplitTrinomialNotFound, UnsupportedCharacteristic)
from .factorization import factor, is_separable
from .fields import FieldElem, FieldSpec, rationals
from .parampoly import ParamPoly, lagrange_interpolate_coeffwise
from .unipoly import UniPoly


# ---------------------------------------------------------------------------
# the cubic trinomial family


def lp_trinomial(x) -> ParamPoly:
    """The family Y^3 + (T-x)Y + (T-x) over the field of x."""
    x = x if isinstance(x, FieldElem) else rationals().elem(x)
    spec = x.spec
    shifted = UniPoly(spec, (-x, spec.one))  # T - x
    return ParamPoly(spec, [shifted, shifted, UniPoly.zero(spec),
                            UniPoly.one(spec)])


@dataclass(frozen=True)
class TrinomialFamilyData:
    poly: ParamPoly
    discriminant: UniPoly         # -(T-x)^2 (4(T-x) + 27), exact
    squarefree_part: UniPoly      # -(4(T-x) + 27)
    witness: str


def lp_trinomial_data(x) -> TrinomialFamilyData:
    """The family plus its Y-discriminant and generic-fiber witness.

    The squarefree part of the discriminant has odd T-degree 1, hence is a
    nonsquare in k(T); an irreducible cubic with nonsquare discriminant has
    full symmetric Galois group over k(T)."""
    x = x if isinstance(x, FieldElem) else rationals().elem(x)
    spec = x.spec
    family = lp_trinomial(x)
    shifted = UniPoly(spec, (-x, spec.one))
    disc = -(shifted ** 2) * (4 * shifted + 27)
    sqfree = -(4 * shifted + 27)
    return TrinomialFamilyData(
        poly=family,
        discriminant=disc,
        squarefree_part=sqfree,
        witness="squarefree part of disc_Y has odd degree 1 in T, "
                "hence is a nonsquare in k(T)",
    )


def stem_fields_distinct_necessary(x1, x2) -> bool:
    """Necessary condition for distinct stem fields at two parameters:
    the fibers share no common root over k(T), certified by a nonvanishing
    Y-resultant.  The full distinctness statement is not decided here."""
    a = lp_trinomial(x1)
    b = lp_trinomial(x2)
    return not a.resultant_y(b).is_zero()


# ---------------------------------------------------------------------------
# split trinomials


@dataclass(frozen=True)
class SplitTrinomialResult:
    alpha: FieldElem
    a: FieldElem
    roots: tuple

    def trinomial(self) -> UniPoly:
        spec = self.a.spec
        return UniPoly(spec, (self.a, self.a, spec.zero, spec.one))


def _alpha_admissible(alpha: FieldElem) -> bool:
    spec = alpha.spec
    two = spec.elem(2)
    if alpha in (spec.zero, spec.one, -spec.one, -two):
        return False
    if spec.characteristic != 2 and two * alpha == -spec.one:
        return False
    if alpha * alpha + alpha + spec.one == spec.zero:
        return False
    return True


def split_trinomial_from_alpha(alpha: FieldElem) -> SplitTrinomialResult:
    """Closed-form split trinomial from an admissible parameter:
    beta = (-a^2-a-1)/(a^2+a) and roots {beta, beta*a, beta*(-1-a)}
    multiply out to Y^3 + aY + a with a = (-a^2-a-1)^3/(a^2+a)^2."""
    spec = alpha.spec
    if spec.characteristic == 3:
        raise UnsupportedCharacteristic(
            "root parametrization needs characteristic != 3")
    if not _alpha_admissible(alpha):
        raise ValueError(f"alpha = {alpha} violates an admissibility "
                         "constraint")
    num = -(alpha * alpha + alpha + spec.one)
    den = alpha * alpha + alpha
    beta = num / den
    a = (num ** 3) / (den ** 2)
    roots = (beta, beta * alpha, beta * (-spec.one - alpha))
    return SplitTrinomialResult(alpha=alpha, a=a, roots=roots)


def _alpha_candidates_q(spec):
    """Deterministic order 2, 3, -3, 4, -4, ... over Q."""
    yield spec.elem(2)
    n = 3
    while True:
        yield spec.elem(n)
        yield spec.elem(-n)
        n += 1


def split_trinomial(spec: FieldSpec) -> SplitTrinomialResult:
    """A totally split separable Y^3 + aY + a over the given field.

    Over Q the smallest admissible parameter in the deterministic order is
    used; over a finite field every a is tried exhaustively (small fields
    can rule out all parameters, so the closed form alone is not enough).
    """
    if spec.characteristic == 3:
        raise UnsupportedCharacteristic(
            "Y^3 + aY + a cannot split separably in characteristic 3 via "
            "the root parametrization")
    if not spec.is_finite:
        for alpha in _alpha_candidates_q(spec):
            if _alpha_admissible(alpha):
                return split_trinomial_from_alpha(alpha)
    for a in spec.elements():
        if a.is_zero():
            continue
        trin = UniPoly(spec, (a, a, spec.zero, spec.one))
        roots = [r for r in spec.elements() if trin.evaluate(r).is_zero()]
        if len(roots) == 3 and is_separable(trin):
            r1, r2, r3 = roots
            alpha = r2 / r1  # retrofit: roots are beta, beta*alpha, rest
            return SplitTrinomialResult(alpha=alpha, a=a,
                                        roots=(r1, r2, r3))
    raise SplitTrinomialNotFound(
        f"no totally split separable trinomial over {spec}")


# ---------------------------------------------------------------------------
# padded fibers and S_n search


def build_padded_fibers(stem: UniPoly, n: int):
    """(P0, P1): the stem padded to degree n by fresh linear factors, and
    the totally split polynomial Y(Y-1)...(Y-(n-1))."""
    spec = stem.spec
    if not stem.is_monic() or not is_irreducible(stem):
        raise NotIrreducible("stem must be monic irreducible")
    if not is_separable(stem):
        raise NotIrreducible("stem must be separable")
    if n < stem.degree:
        raise NTooSmall(f"target degree {n} below stem degree {stem.degree}")
    pads = []
    c = 0
    while len(pads) < n - stem.degree:
        if not stem.evaluate(c).is_zero():
            pads.append(c)
        c += 1
    p0 = stem * UniPoly.from_roots(spec, pads)
    p1 = UniPoly.from_roots(spec, range(n))
    return p0, p1


def is_irreducible(f: UniPoly) -> bool:
    if f.degree < 1:
        return False
    parts = factor(f)
    return len(parts) == 1 and parts[0][1] == 1


@functools.lru_cache(maxsize=None)
def search_sn_polynomial(n: int, prime_budget: int = 200,
                         attempt_budget: int = 64):
    """A monic degree-n integer polynomial with certified group S_n.

    Candidate order: Y^n - Y - 1 first, then trinomials Y^n + bY + c by
    increasing coefficient height.  Each candidate must pass certify_sn
    within the prime budget."""
    spec = rationals()
    if n < 1:
        raise ValueError("degree must be >= 1")
    if n == 1:
        return UniPoly.gen(spec), GroupCertificate("S1", reason="degree 1")

    def candidates():
        yield UniPoly(spec, [-1, -1] + [0] * (n - 2) + [1])  # Y^n - Y - 1
        h = 1
        while True:
            for b in range(-h, h + 1):
                for c in range(-h, h + 1):
                    if max(abs(b), abs(c)) == h and not (b == -1 and c == -1):
                        yield UniPoly(spec, [c, b] + [0] * (n - 2) + [1])
            h += 1

    tried = 0
    for cand in candidates():
        if tried >= attempt_budget:
            break
        tried += 1
        if cand.degree != n or not is_separable(cand):
            continue
        cert = certify_sn(cand, prime_budget)
        if cert.claimed_group == f"S{n}":
            return cand, cert
    raise SearchBudgetExhausted(
        f"no certified S_{n} polynomial within {attempt_budget} attempts")


# ---------------------------------------------------------------------------
# the interpolation constructor


@dataclass(frozen=True)
class BBChecks:
    fiber0_separable: bool
    fiber0_contains_stem: bool
    fiber1_totally_split: bool
    nodes_distinct: bool


@dataclass(frozen=True)
class BBBudgets:
    prime_budget: int = 200
    attempt_budget: int = 64


@dataclass(frozen=True)
class BBCertificate:
    input_stem: UniPoly
    target_n: int
    R: ParamPoly
    node_a: FieldElem
    fiber0: UniPoly
    fiber1: UniPoly
    fiberA: UniPoly
    sn_cert: GroupCertificate
    checks: BBChecks


class BBVerification:
    """Outcome of re-deriving a certificate from scratch; truthy iff every
    check passed, with human-readable reasons otherwise."""

    def __init__(self, reasons):
        self.reasons = list(reasons)

    @property
    def ok(self) -> bool:
        return not self.reasons

    def __bool__(self):
        return self.ok

    def __repr__(self):
        return f"BBVerification(ok={self.ok}, reasons={self.reasons})"


def _totally_split(f: UniPoly) -> bool:
    parts = factor(f)
    return all(g.degree == 1 and m == 1 for g, m in parts)


def bb_construct(stem: UniPoly, n: int, budgets: BBBudgets | None = None,
                 q_override: UniPoly | None = None) -> BBCertificate:
    """Build a certified monic family R(T, Y) over Q whose fiber at 0 has
    the stem's splitting field, whose fiber at 1 is totally split, and
    whose fiber at the third node carries an S_n certificate.

    The stem must be monic irreducible (hence separable) over Q with
    deg <= n.  The third node is the smallest integer >= 2.  `q_override`
    replaces the searched S_n polynomial; it is certified before use.
    """
    spec = stem.spec
    if spec.kind != "Q":
        raise NotIrreducible("construction runs over Q")
    budgets = budgets or BBBudgets()
    p0, p1 = build_padded_fibers(stem, n)

    if n == 1:
        # Degenerate case: any monic linear has trivial group and splits,
        # so all three fibers collapse onto the stem and R is constant in T.
        p0 = p1 = q = stem
        cert = GroupCertificate("S1", reason="degree 1")
    elif q_override is not None:
        q = q_override
        cert = certify_sn(q, budgets.prime_budget)
        if cert.claimed_group != f"S{n}":
            raise SearchBudgetExhausted(
                f"override polynomial not certified S_{n}: "
                f"{cert.claimed_group}")
    else:
        q, cert = search_sn_polynomial(n, budgets.prime_budget,
                                       budgets.attempt_budget)

    node_a = spec.elem(2)
    nodes = [spec.zero, spec.one, node_a]
    r = lagrange_interpolate_coeffwise(nodes, [p0, p1, q])
    checks = BBChecks(
        fiber0_separable=is_separable(p0),
        fiber0_contains_stem=stem.divides(p0),
        fiber1_totally_split=_totally_split(p1),
        nodes_distinct=len({t.value for t in nodes}) == 3,
    )
    return BBCertificate(
        input_stem=stem, target_n=n, R=r, node_a=node_a,
        fiber0=p0, fiber1=p1, fiberA=q, sn_cert=cert, checks=checks,
    )


def verify_bb_certificate(cert: BBCertificate) -> BBVerification:
    """Re-derive every claim of a certificate independently.

    Checks node evaluations of R, separability of the fiber at 0, the
    stem-times-distinct-linear-factors shape of that fiber, total splitting
    at 1, and the S_n certificate at the third node (re-running the cycle
    type computations).  Returns a truthy report, with reasons on failure.
    """
    reasons = []
    spec = cert.R.spec
    n = cert.target_n
    zero, one = spec.zero, spec.one

    if cert.node_a in (zero, one):
        reasons.append("third node collides with 0 or 1")
    for node, fiber, label in ((zero, cert.fiber0, "T=0"),
                               (one, cert.fiber1, "T=1"),
                               (cert.node_a, cert.fiberA,
                                f"T={cert.node_a}")):
        if cert.R.at_t(node) != fiber:
            reasons.append(f"node mismatch at {label}")
    for fiber, label in ((cert.fiber0, "0"), (cert.fiber1, "1"),
                         (cert.fiberA, "a")):
        if fiber.degree != n or not fiber.is_monic():
            reasons.append(f"fiber at {label} is not monic of degree {n}")

    if not (cert.input_stem.degree >= 1 and cert.input_stem.is_monic()
            and is_irreducible(cert.input_stem)):
        reasons.append("stem is not monic irreducible")
    if cert.fiber0.degree >= 1 and not is_separable(cert.fiber0):
        reasons.append("fiber at 0 is not separable")
    if not cert.input_stem.divides(cert.fiber0):
        reasons.append("stem does not divide the fiber at 0")
    else:
        cof = cert.fiber0 // cert.input_stem
        if cof.degree > 0 and not _totally_split(cof):
            reasons.append("padding cofactor at 0 is not a product of "
                           "distinct linear factors")
    if not _totally_split(cert.fiber1):
        reasons.append("fiber at 1 not totally split")
    if n == 1:
        if cert.sn_cert.claimed_group != "S1":
            reasons.append("degree-1 certificate should claim S1")
    elif not reverify_sn_certificate(cert.fiberA, cert.sn_cert):
        reasons.append("symmetric-group certificate at the third node "
                       "failed re-verification")
    return BBVerification(reasons)


# ---------------------------------------------------------------------------
# certificate (de)serialization


def certificate_to_dict(cert: BBCertificate) -> dict:
    from .grammar import print_elem, print_parampoly, print_unipoly
    return {
        "field": cert.R.spec.describe(),
        "input_stem": print_unipoly(cert.input_stem),
        "target_n": cert.target_n,
        "R": print_parampoly(cert.R),
        "node_a": print_elem(cert.node_a),
        "fiber0": print_unipoly(cert.fiber0),
        "fiber1": print_unipoly(cert.fiber1),
        "fiberA": print_unipoly(cert.fiberA),
        "sn_cert": {
            "claimed_group": cert.sn_cert.claimed_group,
            "evidence": [[p, list(t)] for p, t in cert.sn_cert.evidence],
            "budget_used": cert.sn_cert.budget_used,
            "reason": cert.sn_cert.reason,
        },
        "checks": {
            "fiber0_separable": cert.checks.fiber0_separable,
            "fiber0_contains_stem": cert.checks.fiber0_contains_stem,
            "fiber1_totally_split": cert.checks.fiber1_totally_split,
            "nodes_distinct": cert.checks.nodes_distinct,
        },
    }


def certificate_from_dict(d: dict) -> BBCertificate:
    from .fields import field_from_string
    from .grammar import parse_elem, parse_parampoly, parse_unipoly
    spec = field_from_string(d["field"])
    sn = d["sn_cert"]
    checks = d["checks"]
    return BBCertificate(
        input_stem=parse_unipoly(d["input_stem"], spec),
        target_n=int(d["target_n"]),
        R=parse_parampoly(d["R"], spec),
        node_a=parse_elem(d["node_a"], spec),
        fiber0=parse_unipoly(d["fiber0"], spec),
        fiber1=parse_unipoly(d["fiber1"], spec),
        fiberA=parse_unipoly(d["fiberA"], spec),
        sn_cert=GroupCertificate(
            claimed_group=sn["claimed_group"],
            evidence=tuple((int(p), tuple(int(x) for x in t))
                           for p, t in sn["evidence"]),
            budget_used=int(sn.get("budget_used", 0)),
            reason=sn.get("reason", ""),
        ),
        checks=BBChecks(
            fiber0_separable=bool(checks["fiber0_separable"]),
            fiber0_contains_stem=bool(checks["fiber0_contains_stem"]),
            fiber1_totally_split=bool(checks["fiber1_totally_split"]),
            nodes_distinct=bool(checks["nodes_distinct"]),
        ),
    )
