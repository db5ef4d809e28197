"""Small permutation groups by full element enumeration (cap 10^4).

Permutations are tuples of images on 0..degree-1.  Products compose right
factor first: (p * q)(x) = p(q(x)).  Cycle notation in text form is
1-indexed, e.g. "(1 2)(3 4)".
"""

from __future__ import annotations

import itertools

from .errors import GroupTooLarge, NonDivisible, NotASubgroup, ParseError

ELEMENT_CAP = 10_000


def identity(degree: int):
    return tuple(range(degree))


def compose(p, q):
    """(p compose q)(x) = p(q(x))."""
    return tuple(p[q[i]] for i in range(len(p)))


def inverse(p):
    out = [0] * len(p)
    for i, v in enumerate(p):
        out[v] = i
    return tuple(out)


def from_cycles(degree: int, cycles):
    """Permutation from 0-indexed cycles, e.g. [(0, 1), (2, 3)]."""
    img = list(range(degree))
    for cyc in cycles:
        for i, a in enumerate(cyc):
            img[a] = cyc[(i + 1) % len(cyc)]
    return tuple(img)


def to_cycles(p):
    seen = [False] * len(p)
    out = []
    for start in range(len(p)):
        if seen[start] or p[start] == start:
            seen[start] = True
            continue
        cyc = [start]
        seen[start] = True
        nxt = p[start]
        while nxt != start:
            cyc.append(nxt)
            seen[nxt] = True
            nxt = p[nxt]
        out.append(tuple(cyc))
    return out


def print_perm(p) -> str:
    cycles = to_cycles(p)
    if not cycles:
        return "()"
    return "".join("(" + " ".join(str(a + 1) for a in cyc) + ")"
                   for cyc in cycles)


def parse_perm(s: str, degree: int):
    """Parse 1-indexed cycle notation, e.g. "(1 2)(3 4)" or "()"."""
    s = s.strip()
    if s in ("()", "e", "id"):
        return identity(degree)
    cycles = []
    i = 0
    while i < len(s):
        if s[i].isspace():
            i += 1
            continue
        if s[i] != "(":
            raise ParseError(f"expected '(' in permutation", column=i + 1)
        j = s.index(")", i) if ")" in s[i:] else -1
        if j < 0:
            raise ParseError("unclosed cycle", column=i + 1)
        body = s[i + 1:j].replace(",", " ").split()
        try:
            pts = [int(b) - 1 for b in body]
        except ValueError:
            raise ParseError(f"bad cycle {s[i:j+1]!r}", column=i + 1) from None
        if any(a < 0 or a >= degree for a in pts):
            raise ParseError(f"cycle point out of range 1..{degree}",
                             column=i + 1)
        if len(set(pts)) != len(pts):
            raise ParseError("repeated point in cycle", column=i + 1)
        if len(pts) > 1:
            cycles.append(tuple(pts))
        i = j + 1
    return from_cycles(degree, cycles)


class PermGroup:
    """A finite permutation group with its full, sorted element list."""

    def __init__(self, degree: int, elements, generators=()):
        self.degree = degree
        self.elements = tuple(sorted(set(elements)))
        self.generators = tuple(generators)
        self._set = frozenset(self.elements)
        if len(self.elements) > ELEMENT_CAP:
            raise GroupTooLarge(f"group order {len(self.elements)} exceeds "
                                f"cap {ELEMENT_CAP}")

    @classmethod
    def from_generators(cls, degree: int, generators) -> "PermGroup":
        gens = [tuple(g) for g in generators]
        for g in gens:
            if sorted(g) != list(range(degree)):
                raise ValueError(f"{g} is not a permutation of 0..{degree-1}")
        elems = {identity(degree)}
        frontier = [identity(degree)]
        while frontier:
            nxt = []
            for e in frontier:
                for g in gens:
                    h = compose(g, e)
                    if h not in elems:
                        elems.add(h)
                        nxt.append(h)
                        if len(elems) > ELEMENT_CAP:
                            raise GroupTooLarge(
                                f"closure exceeds cap {ELEMENT_CAP}")
            frontier = nxt
        return cls(degree, elems, gens)

    @classmethod
    def symmetric(cls, n: int) -> "PermGroup":
        import math
        if math.factorial(n) > ELEMENT_CAP:
            raise GroupTooLarge(f"S_{n} exceeds cap {ELEMENT_CAP}")
        gens = [from_cycles(n, [(0, 1)]), from_cycles(n, [tuple(range(n))])]
        if n <= 1:
            gens = []
        elif n == 2:
            gens = [from_cycles(n, [(0, 1)])]
        return cls(n, itertools.permutations(range(n)), gens)

    @classmethod
    def trivial(cls, degree: int) -> "PermGroup":
        return cls(degree, [identity(degree)])

    @property
    def order(self) -> int:
        return len(self.elements)

    def __contains__(self, p):
        return p in self._set

    def __iter__(self):
        return iter(self.elements)

    def __eq__(self, other):
        if not isinstance(other, PermGroup):
            return NotImplemented
        return self.degree == other.degree and self._set == other._set

    def __hash__(self):
        return hash((self.degree, self._set))

    def is_subgroup_of(self, other: "PermGroup") -> bool:
        return self.degree == other.degree and self._set <= other._set

    def is_normal_in(self, other: "PermGroup") -> bool:
        return all(compose(compose(g, k), inverse(g)) in self._set
                   for g in other.elements for k in self.elements)

    def subgroup(self, elements) -> "PermGroup":
        return PermGroup(self.degree, elements)

    def __repr__(self):
        return f"PermGroup(degree={self.degree}, order={self.order})"


def normalizer(G: PermGroup, K: PermGroup) -> PermGroup:
    if not K.is_subgroup_of(G):
        raise NotASubgroup("K is not a subgroup of G")
    kset = K._set
    elems = [g for g in G.elements
             if all(compose(compose(g, k), inverse(g)) in kset
                    for k in K.elements)]
    return PermGroup(G.degree, elems)


def normalizer_quotient(G: PermGroup, K: PermGroup):
    """Order and coset representatives of N_G(K)/K.

    For a Galois group G with subgroup K, this is the automorphism group
    order of the fixed field of K.
    """
    if not K.is_subgroup_of(G) or identity(G.degree) not in K._set:
        raise NotASubgroup("K is not a subgroup of G")
    n = normalizer(G, K)
    if n.order % K.order:
        raise AssertionError("Lagrange violation in normalizer")
    reps = []
    covered = set()
    for g in n.elements:
        if g not in covered:
            reps.append(g)
            covered.update(compose(g, k) for k in K.elements)
    return n.order // K.order, tuple(reps)


def all_subgroups(G: PermGroup):
    """Every subgroup of G, via joins of cyclic subgroups (desk scale)."""
    cyclics = set()
    for g in G.elements:
        elems = [identity(G.degree)]
        h = g
        while h != identity(G.degree):
            elems.append(h)
            h = compose(h, g)
        cyclics.add(frozenset(elems))
    found = set(cyclics)
    frontier = set(cyclics)
    while frontier:
        new = set()
        for a in frontier:
            for b in cyclics:
                if b <= a:
                    continue
                join = _closure(a | b, G.degree)
                if join not in found:
                    found.add(join)
                    new.add(join)
        frontier = new
    return sorted((PermGroup(G.degree, fs) for fs in found),
                  key=lambda h: (h.order, h.elements))


def _closure(elems, degree):
    elems = set(elems)
    frontier = list(elems)
    while frontier:
        nxt = []
        for e in frontier:
            for g in list(elems):
                for h in (compose(g, e), compose(e, g)):
                    if h not in elems:
                        elems.add(h)
                        nxt.append(h)
        frontier = nxt
    return frozenset(elems)


def degree_bookkeeping(deg_ehat_over_base: int, deg_ehat_over_e: int) -> int:
    """Outer-extension degree count: [E : base] = [Ehat : base]/[Ehat : E]."""
    if deg_ehat_over_base < 1 or deg_ehat_over_e < 1:
        raise ValueError("degrees must be positive")
    if deg_ehat_over_base % deg_ehat_over_e:
        raise NonDivisible(
            f"{deg_ehat_over_e} does not divide {deg_ehat_over_base}")
    return deg_ehat_over_base // deg_ehat_over_e
