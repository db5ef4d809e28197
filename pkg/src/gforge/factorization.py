"""Exact univariate factorization over Q and over finite fields.

Finite fields: squarefree decomposition (with p-th-root descent in
characteristic p), distinct-degree splitting, and Cantor--Zassenhaus
equal-degree splitting derandomized by a fixed seed.

Rationals: Yun squarefree decomposition, bounded integer-root extraction,
then factorization modulo a good prime, quadratic Hensel lifting over a
factor tree, and subset recombination against the Mignotte bound.  The
degree cap is 64.

Everything is deterministic: factor lists are sorted by degree, then
lexicographically by coefficients from the leading one down.
"""

from __future__ import annotations

import itertools
import math
import random
from fractions import Fraction

from .errors import DegreeCapExceeded, UnsupportedField
from .fields import GF, FieldElem, FieldSpec, is_prime
from .unipoly import UniPoly

DEGREE_CAP = 64
DEFAULT_SEED = 0x5EED

# bound for trial-division work in integer-root extraction
_ROOT_TRIAL_BOUND = 100_000


def is_separable(f: UniPoly) -> bool:
    """True iff gcd(f, f') = 1 (nonconstant f)."""
    if f.degree < 1:
        raise ValueError("separability is defined for nonconstant polynomials")
    d = f.derivative()
    if d.is_zero():
        return False
    return f.gcd(d).degree == 0


def factor(f: UniPoly, seed: int = DEFAULT_SEED):
    """Factor f into monic irreducibles with multiplicities.

    Returns a sorted list of (UniPoly, multiplicity); the product of the
    factor powers times the leading coefficient reproduces f exactly.
    """
    spec = f.spec
    if not isinstance(spec, FieldSpec) or spec.kind not in ("Q", "Fp", "Fq"):
        raise UnsupportedField(
            "factorization is supported over Q and finite fields only")
    if f.is_zero():
        raise ValueError("cannot factor the zero polynomial")
    if f.degree > DEGREE_CAP:
        raise DegreeCapExceeded(f"degree {f.degree} exceeds cap {DEGREE_CAP}")
    if f.degree == 0:
        return []
    if spec.kind == "Q":
        out = _factor_q(f)
    else:
        out = _factor_fq(f, random.Random(seed))
    out.sort(key=lambda fm: fm[0].sort_key())
    return out


def is_irreducible(f: UniPoly, seed: int = DEFAULT_SEED) -> bool:
    if f.degree < 1:
        return False
    fs = factor(f, seed)
    return len(fs) == 1 and fs[0][1] == 1


# ===========================================================================
# finite fields
# ===========================================================================

def _pth_root_poly(f: UniPoly) -> UniPoly:
    """Inverse Frobenius on a polynomial all of whose exponents are
    multiples of p: returns g with g(Y)^p = f(Y)."""
    spec = f.spec
    p = spec.p
    e = p ** (spec.k - 1)  # p-th root exponent in GF(p^k)
    out = []
    for i in range(0, f.degree + 1, p):
        out.append(f.coeff(i) ** e)
    return UniPoly(spec, out)


def _squarefree_fq(f: UniPoly):
    """Squarefree decomposition of a monic f over GF(q); returns a dict
    mapping squarefree monic parts to multiplicities."""
    spec = f.spec
    p = spec.p
    out: dict = {}

    def add(g, m):
        if g.degree > 0:
            out[g] = out.get(g, 0) + m

    def rec(f, outer):
        if f.degree == 0:
            return
        d = f.derivative()
        if d.is_zero():
            rec(_pth_root_poly(f), outer * p)
            return
        c = f.gcd(d)
        w = f // c
        i = 1
        while w.degree > 0:
            y = w.gcd(c)
            z = w // y
            add(z, i * outer)
            w = y
            c = c // y
            i += 1
        if c.degree > 0:
            rec(_pth_root_poly(c), outer * p)

    rec(f, 1)
    return out


def _distinct_degree(f: UniPoly):
    """Split a monic squarefree f over GF(q) into products of irreducibles
    of one common degree; yields (product, degree)."""
    spec = f.spec
    q = spec.q
    y = UniPoly.gen(spec)
    rem = f
    h = y % rem
    d = 0
    while rem.degree >= 2 * (d + 1):
        d += 1
        h = h.pow_mod(q, rem)
        g = (h - y).gcd(rem)
        if g.degree > 0:
            yield g, d
            rem = rem // g
            h = h % rem
    if rem.degree > 0:
        yield rem, rem.degree


def _equal_degree(f: UniPoly, d: int, rng) -> list:
    """Cantor--Zassenhaus split of f (product of degree-d irreducibles)."""
    spec = f.spec
    q = spec.q
    if f.degree == d:
        return [f]
    n = f.degree
    while True:
        # raw encodings: candidates must range over the whole field, not
        # just the prime subfield (prime-subfield polynomials commute with
        # Frobenius and never separate conjugate roots)
        a = UniPoly(spec, [FieldElem(spec, rng.randrange(q))
                           for _ in range(n)])
        if a.degree < 1:
            continue
        if q % 2:
            b = a.pow_mod((q ** d - 1) // 2, f) - 1
        else:
            # char 2: trace map sum a^(2^i), i < k*d
            b = a
            sq = a
            for _ in range(spec.k * d - 1):
                sq = (sq * sq) % f
                b = b + sq
        g = b.gcd(f)
        if 0 < g.degree < n:
            return _equal_degree(g, d, rng) + _equal_degree(f // g, d, rng)


def _factor_fq(f: UniPoly, rng) -> list:
    out = []
    for part, mult in _squarefree_fq(f.monic()).items():
        for prod, d in _distinct_degree(part):
            for irr in _equal_degree(prod, d, rng):
                out.append((irr, mult))
    return out


# ===========================================================================
# rationals
# ===========================================================================

def _yun_squarefree(f: UniPoly):
    """Yun's algorithm over Q: monic f -> list of (monic squarefree, mult)."""
    out = []
    d = f.derivative()
    a = f.gcd(d)
    b = f // a
    z = (d // a) - b.derivative()
    i = 1
    while b.degree > 0:
        a = b.gcd(z)
        if a.degree > 0:
            out.append((a, i))
        b = b // a
        z = (z // a) - b.derivative()
        i += 1
    return out


def _int_coeffs(f: UniPoly):
    """Monic rational f -> (monic integer coefficient list of den^n f(Y/den),
    den).  Factors correspond under Y -> den*Y by Gauss's lemma."""
    den = 1
    for c in f.coeffs:
        den = den * c.value.denominator // math.gcd(den, c.value.denominator)
    n = f.degree
    out = []
    for j, c in enumerate(f.coeffs):
        v = c.value * den ** (n - j)
        out.append(int(v))
    return out, den


def _poly_from_int(spec, coeffs):
    return UniPoly(spec, [Fraction(c) for c in coeffs])


def _int_eval(coeffs, x):
    acc = 0
    for c in reversed(coeffs):
        acc = acc * x + c
    return acc


def _int_divmod_monic(a, b):
    """Divide integer coefficient lists, b monic; returns (q, r) over Z."""
    a = list(a)
    q = [0] * max(0, len(a) - len(b) + 1)
    while len(a) >= len(b):
        c = a[-1]
        off = len(a) - len(b)
        q[off] = c
        if c:
            for j, bj in enumerate(b):
                a[off + j] -= c * bj
        a.pop()
        while a and a[-1] == 0:
            a.pop()
    return q, a


def _divisors_bounded(n: int):
    """Positive divisors of n via trial division; (divisors, complete)."""
    n = abs(n)
    small = {}
    d = 2
    while d <= _ROOT_TRIAL_BOUND and d * d <= n:
        while n % d == 0:
            small[d] = small.get(d, 0) + 1
            n //= d
        d += 1 if d == 2 else 2
    complete = True
    if n > 1:
        if n <= _ROOT_TRIAL_BOUND * _ROOT_TRIAL_BOUND or is_prime(n):
            small[n] = small.get(n, 0) + 1
        else:
            complete = False
    divisors = [1]
    for prime, e in small.items():
        divisors = [dv * prime ** i for dv in divisors for i in range(e + 1)]
        if len(divisors) > 20_000:
            return sorted(divisors), False
    return sorted(divisors), complete


def _integer_roots(coeffs):
    """Integer roots of a monic integer polynomial; (roots, complete flag)."""
    roots = []
    while len(coeffs) > 1 and coeffs[0] == 0:
        roots.append(0)
        coeffs = coeffs[1:]
    if len(coeffs) <= 1:
        return roots, coeffs, True
    divisors, complete = _divisors_bounded(coeffs[0])
    for d in divisors:
        for r in (d, -d):
            while len(coeffs) > 1 and _int_eval(coeffs, r) == 0:
                coeffs, rem = _int_divmod_monic(coeffs, [-r, 1])
                assert not rem
                roots.append(r)
    return roots, coeffs, complete


# -- arithmetic on integer coefficient lists mod m ---------------------------

def _zm_trim(a):
    while a and a[-1] == 0:
        a.pop()
    return a


def _zm_mul(a, b, m):
    if not a or not b:
        return []
    out = [0] * (len(a) + len(b) - 1)
    for i, ai in enumerate(a):
        if ai:
            for j, bj in enumerate(b):
                out[i + j] = (out[i + j] + ai * bj) % m
    return _zm_trim(out)


def _zm_add(a, b, m):
    out = [0] * max(len(a), len(b))
    for i, c in enumerate(a):
        out[i] = c
    for i, c in enumerate(b):
        out[i] = (out[i] + c) % m
    return _zm_trim(out)


def _zm_sub(a, b, m):
    out = [0] * max(len(a), len(b))
    for i, c in enumerate(a):
        out[i] = c
    for i, c in enumerate(b):
        out[i] = (out[i] - c) % m
    return _zm_trim(out)


def _zm_divmod_monic(a, b, m):
    a = list(a)
    q = [0] * max(0, len(a) - len(b) + 1)
    while len(a) >= len(b):
        c = a[-1] % m
        off = len(a) - len(b)
        q[off] = c
        if c:
            for j, bj in enumerate(b):
                a[off + j] = (a[off + j] - c * bj) % m
        a.pop()
        while a and a[-1] % m == 0:
            a.pop()
    return _zm_trim([c % m for c in q]), _zm_trim([c % m for c in a])


def _zp_gcdext(a, b, p):
    """Extended Euclid over GF(p): returns (g, s, t), g monic, sa + tb = g."""
    r0, r1 = [c % p for c in a], [c % p for c in b]
    s0, s1 = [1], []
    t0, t1 = [], [1]
    while _zm_trim(list(r1)):
        q, r = _zm_divmod_monic_field(r0, r1, p)
        r0, r1 = r1, r
        s0, s1 = s1, _zm_sub(s0, _zm_mul(q, s1, p), p)
        t0, t1 = t1, _zm_sub(t0, _zm_mul(q, t1, p), p)
    g = _zm_trim(list(r0))
    if g:
        inv = pow(g[-1], p - 2, p)
        g = [c * inv % p for c in g]
        s0 = [c * inv % p for c in s0]
        t0 = [c * inv % p for c in t0]
    return g, s0, t0


def _zm_divmod_monic_field(a, b, p):
    """Division over GF(p) with arbitrary invertible leading coefficient."""
    a = list(_zm_trim([c % p for c in a]))
    b = _zm_trim([c % p for c in b])
    inv = pow(b[-1], p - 2, p)
    q = [0] * max(0, len(a) - len(b) + 1)
    while len(a) >= len(b):
        c = a[-1] * inv % p
        off = len(a) - len(b)
        q[off] = c
        if c:
            for j, bj in enumerate(b):
                a[off + j] = (a[off + j] - c * bj) % p
        a.pop()
        while a and a[-1] % p == 0:
            a.pop()
    return _zm_trim(q), _zm_trim(a)


def _hensel_step(f, g, h, s, t, m):
    """One quadratic Hensel step: inputs satisfy f = gh and sg + th = 1
    mod m with g, h monic; outputs satisfy the same mod m*m."""
    M = m * m
    fm = [c % M for c in f]
    e = _zm_sub(fm, _zm_mul(g, h, M), M)
    q, r = _zm_divmod_monic(_zm_mul(s, e, M), h, M)
    g1 = _zm_add(g, _zm_add(_zm_mul(t, e, M), _zm_mul(q, g, M), M), M)
    h1 = _zm_add(h, r, M)
    b = _zm_sub(_zm_add(_zm_mul(s, g1, M), _zm_mul(t, h1, M), M), [1], M)
    c, d = _zm_divmod_monic(_zm_mul(s, b, M), h1, M)
    s1 = _zm_sub(s, d, M)
    t1 = _zm_sub(t, _zm_add(_zm_mul(t, b, M), _zm_mul(c, g1, M), M), M)
    return g1, h1, s1, t1


def _lift_tree(f, factors, p, M):
    """Hensel-lift pairwise coprime monic factors of f from mod p to mod M
    (M a 2-power power of p); returns the lifted factor list."""
    if len(factors) == 1:
        return [_zm_trim([c % M for c in f])]
    mid = len(factors) // 2
    g = [1]
    for fac in factors[:mid]:
        g = _zm_mul(g, fac, p)
    h = [1]
    for fac in factors[mid:]:
        h = _zm_mul(h, fac, p)
    one, s, t = _zp_gcdext(g, h, p)
    assert one == [1], "modular factors are not coprime"
    m = p
    while m < M:
        g, h, s, t = _hensel_step(f, g, h, s, t, m)
        m *= m
    return (_lift_tree(g, factors[:mid], p, M)
            + _lift_tree(h, factors[mid:], p, M))


def _symmetric(coeffs, M):
    return [c - M if c > M // 2 else c for c in coeffs]


def _factor_int_squarefree(F):
    """Zassenhaus on a monic squarefree integer polynomial of degree >= 2;
    returns monic integer factor lists."""
    n = len(F) - 1
    # choose the good prime with the fewest modular factors among the first 3
    best = None
    p = 2
    good_seen = 0
    while good_seen < 3:
        while True:
            spec = GF(p) if is_prime(p) else None
            if spec is not None:
                fp = UniPoly(spec, [c % p for c in F])
                if fp.degree == n and is_separable(fp):
                    break
            p += 1
        good_seen += 1
        fac = [f for f, _ in _factor_fq(fp, random.Random(DEFAULT_SEED))]
        if len(fac) == 1:
            return [F]
        if best is None or len(fac) < len(best[1]):
            best = (p, fac)
        p += 1
    p, fac_polys = best
    modular = sorted(([int(c.value) for c in g.coeffs] for g in fac_polys),
                     key=lambda c: (len(c), c))
    # Mignotte-style bound on factor coefficients
    norm = math.isqrt(sum(c * c for c in F)) + 1
    bound = 2 ** n * norm
    e = 1
    while p ** e < 2 * bound + 1:
        e *= 2
    M = p ** e
    lifted = _lift_tree(F, modular, p, M)

    out = []
    remaining = list(range(len(lifted)))
    current = list(F)
    size = 1
    while 2 * size <= len(remaining):
        found = False
        for combo in itertools.combinations(remaining, size):
            cand = [1]
            for i in combo:
                cand = _zm_mul(cand, lifted[i], M)
            cand = _symmetric([c % M for c in cand], M)
            c0 = _int_eval(current, 0)
            if cand[0] != 0 and c0 != 0 and c0 % cand[0] != 0:
                continue
            q, r = _int_divmod_monic(current, cand)
            if not r:
                out.append(cand)
                current = q
                remaining = [i for i in remaining if i not in combo]
                found = True
                break
        if not found:
            size += 1
    if len(current) > 1:
        out.append(current)
    return out


def _factor_q_squarefree(g: UniPoly) -> list:
    """Factor a monic squarefree polynomial over Q into monic irreducibles."""
    spec = g.spec
    if g.degree <= 1:
        return [g]
    F, den = _int_coeffs(g)
    roots, rest, complete = _integer_roots(F)
    out = [UniPoly(spec, [Fraction(-r, den), 1]) for r in roots]
    deg = len(rest) - 1
    if deg == 0:
        return out
    if deg <= 3 and complete:
        # no rational root and degree <= 3: irreducible
        int_factors = [rest]
    else:
        int_factors = _factor_int_squarefree(rest)
    for fc in int_factors:
        h = _poly_from_int(spec, fc)
        h = h.scale_arg(Fraction(den)).monic()
        out.append(h)
    return out


def _factor_q(f: UniPoly) -> list:
    out = []
    for part, mult in _yun_squarefree(f.monic()):
        for irr in _factor_q_squarefree(part):
            out.append((irr, mult))
    return out
