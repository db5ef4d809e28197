"""Galois group identification with verifiable certificates.

Two procedures are provided.  Cubic classification uses the discriminant
square-class criterion.  Symmetric-group certification scans reduction
cycle types: an irreducible degree-n polynomial whose reductions exhibit a
p-cycle for some prime p > n/2 together with a transposition shape
(2,1,...,1) generates the full symmetric group.  Certificates are sound;
"inconclusive" is an allowed outcome of the scan.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from fractions import Fraction

from .errors import BadDegree, NotMonic, NotSeparable
from .factorization import factor, is_separable
from .fields import GF, FieldSpec, rationals
from .resultants import discriminant
from .unipoly import UniPoly


@dataclass(frozen=True)
class GroupCertificate:
    claimed_group: str
    evidence: tuple = ()
    budget_used: int = 0
    reason: str = ""

    def is_conclusive(self) -> bool:
        return self.claimed_group != "inconclusive"


# ---------------------------------------------------------------------------
# square classes


def is_square_rational(v: Fraction) -> bool:
    if v < 0:
        return False
    if v == 0:
        return True
    n, d = v.numerator, v.denominator
    rn, rd = math.isqrt(n), math.isqrt(d)
    return rn * rn == n and rd * rd == d


def rational_sqrt(v: Fraction) -> Fraction:
    return Fraction(math.isqrt(v.numerator), math.isqrt(v.denominator))


def is_square_finite(e) -> bool:
    """Euler criterion in GF(q), q odd; in characteristic 2 every element
    is a square."""
    spec = e.spec
    if e.is_zero():
        return True
    if spec.p == 2:
        return True
    return (e ** ((spec.q - 1) // 2)) == spec.one


def is_square(e) -> bool:
    if e.spec.kind == "Q":
        return is_square_rational(e.value)
    return is_square_finite(e)


# ---------------------------------------------------------------------------
# cubic classification


def cubic_galois_group(f: UniPoly) -> GroupCertificate:
    """Classify the Galois group of a separable cubic.

    Irreducible cubics split by the discriminant square class (S3 against
    C3); reducible ones are labeled by their split type.  Characteristics 2
    and 3 fall outside the discriminant criterion and report inconclusive.
    """
    if f.degree != 3:
        raise BadDegree(f"expected a cubic, got degree {f.degree}")
    if not is_separable(f):
        raise NotSeparable("cubic must be separable")
    if f.spec.characteristic in (2, 3):
        return GroupCertificate(
            "inconclusive",
            reason=f"discriminant criterion unavailable in characteristic "
                   f"{f.spec.characteristic}")
    parts = factor(f)
    degrees = sorted(d for g, m in parts for d in [g.degree] * m)
    if degrees != [3]:
        label = f"reducible({','.join(map(str, degrees))})"
        return GroupCertificate(label, evidence=(
            ("split_type", tuple(degrees)),))
    disc = discriminant(f)
    evidence = [("discriminant", str(disc))]
    if is_square(disc):
        if f.spec.kind == "Q":
            evidence.append(("sqrt", str(rational_sqrt(disc.value))))
        evidence.append(("square_class", "square"))
        return GroupCertificate("C3", evidence=tuple(evidence))
    evidence.append(("square_class", "nonsquare"))
    return GroupCertificate("S3", evidence=tuple(evidence))


# ---------------------------------------------------------------------------
# symmetric group certification over Q


def _primes():
    n = 2
    while True:
        for d in range(2, int(n ** 0.5) + 1):
            if n % d == 0:
                break
        else:
            yield n
        n += 1


def _as_integer_poly(f: UniPoly) -> list:
    """Monic f over Q with rational coefficients -> monic integer model with
    the same splitting field, via Y -> Y/den scaling."""
    den = 1
    for c in f.coeffs:
        den = den * c.value.denominator // math.gcd(den,
                                                    c.value.denominator)
    n = f.degree
    return [int(f.coeff(j).value * den ** (n - j)) for j in range(n + 1)]


def cycle_type(f: UniPoly, p: int):
    """Factorization shape of f mod p as a descending partition of deg f.

    Returns None when p is not a good prime (degree drop or repeated
    factors)."""
    if f.spec.kind != "Q":
        raise NotMonic("cycle types are computed for polynomials over Q")
    spec = GF(p)
    ic = _as_integer_poly(f)
    fp = UniPoly(spec, [c % p for c in ic])
    if fp.degree != f.degree:
        return None
    if not is_separable(fp):
        return None
    degs = sorted((g.degree for g, m in factor(fp) for _ in range(m)),
                  reverse=True)
    return tuple(degs)


def _forces_sn(n: int, types) -> bool:
    """Transitivity is certified separately; this checks the cycle-type
    witnesses: a prime-length l-cycle with l > n/2 plus a transposition."""
    if n <= 2:
        return True
    has_long_prime_cycle = any(
        any(_is_prime_int(l) and 2 * l > n for l in t) for t in types)
    has_transposition = any(
        sorted(t, reverse=True)[0] == 2 and sum(1 for l in t if l == 2) == 1
        and all(l <= 2 for l in t) for t in types)
    return has_long_prime_cycle and has_transposition


def _is_prime_int(n: int) -> bool:
    if n < 2:
        return False
    return all(n % d for d in range(2, int(n ** 0.5) + 1))


def certify_sn(f: UniPoly, prime_budget: int) -> GroupCertificate:
    """Certify Gal(f/Q) = S_n by reduction cycle types, n = deg f.

    Scans good primes p <= prime_budget in ascending order and stops as
    soon as the collected types force S_n.  Sound: never labels S_n unless
    f is irreducible and the witnesses verify.
    """
    if f.spec.kind != "Q":
        raise NotMonic("certification runs over Q")
    if not f.is_monic():
        raise NotMonic("polynomial must be monic")
    n = f.degree
    if n < 1:
        raise NotMonic("polynomial must have degree >= 1")
    if not is_separable(f):
        raise NotSeparable("polynomial must be separable")

    parts = factor(f)
    if len(parts) != 1 or parts[0][1] != 1:
        return GroupCertificate("inconclusive", reason="reducible")
    if n == 1:
        return GroupCertificate("S1")
    if n == 2:
        return GroupCertificate("S2", reason="irreducible quadratic")

    evidence = []
    scanned = 0
    for p in _primes():
        if p > prime_budget:
            break
        t = cycle_type(f, p)
        if t is None:
            continue
        scanned += 1
        evidence.append((p, t))
        if _forces_sn(n, [e[1] for e in evidence]):
            return GroupCertificate(f"S{n}", evidence=tuple(evidence),
                                    budget_used=scanned)
    return GroupCertificate("inconclusive", evidence=tuple(evidence),
                            budget_used=scanned,
                            reason="witness cycle types not found in budget")


def reverify_sn_certificate(f: UniPoly, cert: GroupCertificate) -> bool:
    """Re-derive an S_n claim from scratch: irreducibility, then every cited
    cycle type re-computed mod the cited prime, then the forcing criterion."""
    n = f.degree
    if cert.claimed_group != f"S{n}":
        return False
    if not f.is_monic() or not is_separable(f):
        return False
    parts = factor(f)
    if len(parts) != 1 or parts[0][1] != 1:
        return False
    if n <= 2:
        return True
    types = []
    for p, t in cert.evidence:
        actual = cycle_type(f, p)
        if actual is None or actual != tuple(t):
            return False
        types.append(actual)
    return _forces_sn(n, types)


# ---------------------------------------------------------------------------
# root counting in a cubic stem field


def cubic_stem_field_root_count(stem: UniPoly) -> int:
    """Number of roots of an irreducible cubic inside its own stem field
    K = Q[Y]/(stem).

    The canonical root is peeled off by explicit division in K[Y]; whether
    the quadratic cofactor also splits is decided by the discriminant square
    class of the stem (square: K is its own splitting field and all three
    roots lie in K; nonsquare: the cofactor stays irreducible over K).
    """
    if stem.spec.kind != "Q":
        raise NotMonic("stem fields are taken over Q")
    if stem.degree != 3:
        raise BadDegree("root counting implemented for cubic stems")
    parts = factor(stem)
    if len(parts) != 1 or parts[0][1] != 1 or not stem.is_monic():
        raise NotSeparable("stem must be monic irreducible")
    cofactor = _peel_canonical_root(stem)
    assert len(cofactor) == 3  # monic quadratic over K
    return 3 if is_square(discriminant(stem)) else 1


def _peel_canonical_root(stem: UniPoly):
    """Divide stem(Y) by (Y - t) over K = Q[t]/(stem); returns the cofactor
    as a list of K-elements (each a coefficient vector mod stem)."""
    n = stem.degree
    spec = stem.spec

    def k_elem(const):
        v = [Fraction(0)] * n
        v[0] = Fraction(const)
        return v

    def k_mul_t(vec):
        # multiply by t, reduce by the monic stem relation
        out = [Fraction(0)] + vec[:-1]
        top = vec[-1]
        if top:
            for idx in range(n):
                out[idx] -= top * stem.coeff(idx).value
        return out

    # synthetic division of stem by (Y - t) with t the class of Y
    quotient = []
    carry = k_elem(1)  # leading coefficient of stem
    quotient.append(carry)
    for j in range(n - 1, 0, -1):
        carry = k_mul_t(carry)
        cj = stem.coeff(j).value
        carry = [a + (Fraction(cj) if idx == 0 else 0)
                 for idx, a in enumerate(carry)]
        quotient.append(carry)
    # remainder = stem(t) = 0 in K by construction; cofactor ascending:
    return list(reversed(quotient))
