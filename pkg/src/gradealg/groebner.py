"""Buchberger engine and ideal-level operations.

The engine is the classical algorithm with the two standard pair-discarding
criteria (coprime leading monomials, chain criterion) and the normal selection
strategy: pick the pending pair with the smallest lcm degree, break ties
lexicographically on the pair indices. Output is always the reduced basis,
monic, sorted with the largest leading monomial first. Input generators are
canonically sorted before the run, so two runs on shuffled generator lists
produce identical results.

Reduced bases are cached per (generator set, order) for the lifetime of the
process; everything the cache holds is immutable.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from itertools import combinations, combinations_with_replacement
from typing import Sequence

from .errors import AmbientMismatch, LimitExceeded
from .polynomials import (
    GREVLEX,
    PolyRing,
    Polynomial,
    elimination_order,
    mon_div,
    mon_divides,
    mon_lcm,
    mon_mul,
)

POWER_BOUND = 12


class Ideal:
    """An ideal of a polynomial ring, held by a finite generator list."""

    __slots__ = ("ring", "generators", "homogeneous", "_hash")

    def __init__(self, ring: PolyRing, generators: Sequence[Polynomial]):
        gens = []
        for g in generators:
            if not isinstance(g, Polynomial):
                raise TypeError("generators must be polynomials")
            if g.ring != ring:
                raise AmbientMismatch("generator outside the ambient ring")
            if g and g not in gens:
                gens.append(g)
        self.ring = ring
        self.generators = tuple(gens)
        self.homogeneous = all(g.is_homogeneous() for g in gens)
        self._hash = None

    @classmethod
    def parse(cls, ring: PolyRing, texts: Sequence[str]) -> "Ideal":
        return cls(ring, [ring.parse(t) for t in texts])

    def is_zero(self) -> bool:
        return not self.generators

    def __eq__(self, other):
        return (
            isinstance(other, Ideal)
            and other.ring == self.ring
            and frozenset(other.generators) == frozenset(self.generators)
        )

    def __hash__(self):
        if self._hash is None:
            self._hash = hash((self.ring, frozenset(self.generators)))
        return self._hash

    def __repr__(self):
        return f"({', '.join(str(g) for g in self.generators) or '0'})"


def _canon_key(g: Polynomial, order):
    terms = g.sorted_terms(order)
    return (
        order.key(terms[0][0]),
        tuple(order.key(m) for m, _ in terms),
        str(g),
    )


def _reduce_full(f: Polynomial, basis, order) -> Polynomial:
    """Remainder of f under full division by ``basis`` (list of monic polys)."""
    ring = f.ring
    remainder: dict = {}
    h = f
    while h.terms:
        lm = h.leading_monomial(order)
        lc = h.terms[lm]
        for glm, g in basis:
            if mon_divides(glm, lm):
                h = h - g * ring.monomial(mon_div(lm, glm), lc)
                break
        else:
            remainder[lm] = lc
            h = h - ring.monomial(lm, lc)
    return Polynomial(ring, remainder)


def _spoly(f: Polynomial, g: Polynomial, order) -> Polynomial:
    # f, g monic
    lmf, lmg = f.leading_monomial(order), g.leading_monomial(order)
    lcm = mon_lcm(lmf, lmg)
    ring = f.ring
    return f * ring.monomial(mon_div(lcm, lmf)) - g * ring.monomial(mon_div(lcm, lmg))


def buchberger(generators: Sequence[Polynomial], order=GREVLEX) -> list:
    """Reduced Groebner basis of the given generators, as a sorted list."""
    gens = [g for g in generators if g]
    if not gens:
        return []
    ring = gens[0].ring
    work = []
    for g in gens:
        gm = g.monic(order)
        if gm not in work:
            work.append(gm)
    work.sort(key=lambda g: _canon_key(g, order))

    lms = [g.leading_monomial(order) for g in work]
    pending = {}
    for i, j in combinations(range(len(work)), 2):
        pending[(i, j)] = mon_lcm(lms[i], lms[j])

    def pair_of(a: int, b: int):
        return (a, b) if a < b else (b, a)

    while pending:
        (i, j) = min(pending, key=lambda p: (sum(pending[p]), p))
        lcm_ij = pending.pop((i, j))
        if lcm_ij == mon_mul(lms[i], lms[j]):
            continue  # coprime leading monomials
        chain = any(
            k not in (i, j)
            and mon_divides(lms[k], lcm_ij)
            and pair_of(i, k) not in pending
            and pair_of(j, k) not in pending
            for k in range(len(work))
        )
        if chain:
            continue
        s = _spoly(work[i], work[j], order)
        r = _reduce_full(s, list(zip(lms, work)), order)
        if r:
            r = r.monic(order)
            new = len(work)
            work.append(r)
            lms.append(r.leading_monomial(order))
            for k in range(new):
                pending[(k, new)] = mon_lcm(lms[k], lms[new])

    # minimal basis: visit by ascending leading monomial, keep an element only
    # if no kept leading monomial divides its own (equal ones keep the first)
    keep = []
    for i in sorted(range(len(work)), key=lambda i: order.key(lms[i])):
        if not any(mon_divides(lms[j], lms[i]) for j in keep):
            keep.append(i)
    reduced = [work[i] for i in keep]

    # tail reduction to a fixpoint; leading monomials are pairwise
    # non-divisible now, so reduction can only rewrite tails
    changed = True
    while changed:
        changed = False
        for i in range(len(reduced)):
            others = [
                (g.leading_monomial(order), g)
                for j, g in enumerate(reduced)
                if j != i
            ]
            r = _reduce_full(reduced[i], others, order).monic(order)
            if r != reduced[i]:
                reduced[i] = r
                changed = True
    reduced.sort(key=lambda g: order.key(g.leading_monomial(order)), reverse=True)
    return reduced


class GroebnerBasis:
    """A reduced Groebner basis frozen together with its order."""

    __slots__ = ("ring", "order", "polys", "lms")

    def __init__(self, ring: PolyRing, order, polys: Sequence[Polynomial]):
        self.ring = ring
        self.order = order
        self.polys = tuple(polys)
        self.lms = tuple(g.leading_monomial(order) for g in self.polys)

    def normal_form(self, f: Polynomial) -> Polynomial:
        if f.ring != self.ring:
            raise AmbientMismatch("polynomial outside the basis ring")
        return _reduce_full(f, list(zip(self.lms, self.polys)), self.order)

    def contains(self, f: Polynomial) -> bool:
        return not self.normal_form(f)

    def is_unit(self) -> bool:
        return any(sum(lm) == 0 for lm in self.lms)

    def leading_monomials(self) -> tuple:
        return self.lms

    def __iter__(self):
        return iter(self.polys)

    def __len__(self):
        return len(self.polys)

    def __repr__(self):
        return f"GroebnerBasis[{self.order!r}]({', '.join(map(str, self.polys))})"


@lru_cache(maxsize=None)
def _cached_gb(ideal: Ideal, order) -> GroebnerBasis:
    return GroebnerBasis(ideal.ring, order, buchberger(ideal.generators, order))


def groebner_basis(ideal: Ideal, order=GREVLEX) -> GroebnerBasis:
    return _cached_gb(ideal, order)


def normal_form(f: Polynomial, ideal: Ideal, order=GREVLEX) -> Polynomial:
    """Canonical remainder of f modulo the ideal (zero iff f is a member)."""
    return groebner_basis(ideal, order).normal_form(f)


def ideal_member(f: Polynomial, ideal: Ideal, order=GREVLEX) -> bool:
    return not normal_form(f, ideal, order)


def ideal_equal(a: Ideal, b: Ideal) -> bool:
    if a.ring != b.ring:
        raise AmbientMismatch("ideals in different rings")
    return all(ideal_member(g, b) for g in a.generators) and all(
        ideal_member(g, a) for g in b.generators
    )


def ideal_sum(a: Ideal, b: Ideal) -> Ideal:
    if a.ring != b.ring:
        raise AmbientMismatch("ideals in different rings")
    return Ideal(a.ring, a.generators + b.generators)


def ideal_power(ideal: Ideal, n: int, bound: int = POWER_BOUND) -> Ideal:
    """The n-th power, generated by all n-fold products of the generators."""
    if n < 0:
        raise ValueError("negative ideal power")
    if n > bound:
        raise LimitExceeded(f"ideal power {n} exceeds bound {bound}")
    if n == 0:
        return Ideal(ideal.ring, [ideal.ring.one])
    gens = []
    for combo in combinations_with_replacement(ideal.generators, n):
        g = ideal.ring.one
        for f in combo:
            g = g * f
        if g and g not in gens:
            gens.append(g)
    return Ideal(ideal.ring, gens)


def elimination_ideal(ideal: Ideal, keep: Sequence[int]) -> Ideal:
    """Intersection with the subring on the kept variables.

    Computed with a block order that puts the eliminated variables above the
    kept ones; the basis elements free of eliminated variables generate the
    intersection.
    """
    keep = sorted(set(keep))
    ring = ideal.ring
    if any(i < 0 or i >= ring.nvars for i in keep):
        raise ValueError("keep indices outside the ring")
    front = [i for i in range(ring.nvars) if i not in set(keep)]
    if not front:
        gb = groebner_basis(ideal)
        return Ideal(ring, list(gb))
    order = elimination_order(front, ring.nvars)
    gb = groebner_basis(ideal, order)
    kept = [
        g for g in gb if all(all(m[i] == 0 for i in front) for m in g.terms)
    ]
    return Ideal(ring, kept)


# ---------------------------------------------------------------------------
# numerical invariants of the quotient ring

@dataclass(frozen=True)
class GradedHilbert:
    """Dimension of each graded piece of ring/ideal up to a degree bound."""

    dims: tuple
    degree_bound: int

    def __getitem__(self, d: int) -> int:
        if not 0 <= d <= self.degree_bound:
            raise IndexError(f"degree {d} outside [0, {self.degree_bound}]")
        return self.dims[d]

    def as_dict(self) -> dict:
        return {d: v for d, v in enumerate(self.dims)}


def _count_standard_monomials(lms, nvars: int, bound: int) -> list:
    """Count monomials of each degree <= bound divisible by none of ``lms``."""
    by_last = [[] for _ in range(nvars + 1)]
    for lm in lms:
        support = [i for i, e in enumerate(lm) if e]
        last = max(support) if support else -1
        by_last[last + 1].append(lm)
    counts = [0] * (bound + 1)
    exp = [0] * nvars

    def rec(pos: int, deg: int):
        for lm in by_last[pos]:
            if all(lm[i] <= exp[i] for i in range(pos)):
                return
        if pos == nvars:
            counts[deg] += 1
            return
        for e in range(bound - deg + 1):
            exp[pos] = e
            rec(pos + 1, deg + e)
        exp[pos] = 0

    rec(0, 0)
    return counts


def hilbert_function(ideal: Ideal, degree_bound: int) -> GradedHilbert:
    """Graded dimensions of ring/ideal for degrees 0..degree_bound."""
    if not ideal.homogeneous:
        raise ValueError("Hilbert function needs a homogeneous ideal")
    if degree_bound < 0:
        raise ValueError("negative degree bound")
    gb = groebner_basis(ideal)
    counts = _count_standard_monomials(gb.leading_monomials(), ideal.ring.nvars, degree_bound)
    return GradedHilbert(tuple(counts), degree_bound)


def krull_dim(ideal: Ideal) -> int:
    """Krull dimension of ring/ideal.

    Equals the largest number of variables forming a set independent modulo
    the initial ideal: no leading monomial of the reduced basis lives entirely
    on the set. This is insensitive to the order used, so grevlex is fixed.
    """
    gb = groebner_basis(ideal)
    if gb.is_unit():
        raise ValueError("unit ideal has no Krull dimension")
    supports = [frozenset(i for i, e in enumerate(lm) if e) for lm in gb.lms]
    n = ideal.ring.nvars
    for size in range(n, -1, -1):
        for subset in combinations(range(n), size):
            s = set(subset)
            if not any(supp <= s for supp in supports):
                return size
    raise AssertionError("unreachable: empty set is independent for proper ideals")
