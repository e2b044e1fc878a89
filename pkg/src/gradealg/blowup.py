"""Presentations of Rees algebras and associated graded rings.

For a homogeneous ideal I = (f_1..f_m) of A = S/J the Rees algebra A[It] is
presented on S-variables plus one new variable Y_i per generator. Its
defining ideal is computed by adjoining Y_i - f_i*t and eliminating t with a
block order. The associated graded ring is the Rees presentation plus the
ideal (f_1..f_m) itself. Defining ideals are stored as reduced grevlex bases,
so generator lists are canonical and absorbed relations disappear.

The bigrading on the presentation ring: an S-variable has bidegree
(internal degree 1, weight 0); Y_i has (deg f_i, 1). Weight counts the adic
level I^n/I^(n+1); internal degree is the one inherited from S.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Optional, Sequence

from .errors import LimitExceeded
from .groebner import (
    GradedHilbert,
    Ideal,
    POWER_BOUND,
    groebner_basis,
    hilbert_function,
    ideal_member,
    ideal_power,
    ideal_sum,
)
from .polynomials import BlockOrder, PolyRing, Polynomial

LEVEL_BOUND = 8
DEGREE_BOUND = 8
MAX_LEVEL_BOUND = 16
MAX_DEGREE_BOUND = 20


def _default_y_names(base: PolyRing, m: int) -> tuple:
    names = tuple(f"Y{i + 1}" for i in range(m))
    clash = set(names) & set(base.variables)
    if clash:
        raise ValueError(f"variable names {sorted(clash)} collide with Y-variables")
    return names


def _fresh_name(taken, stem: str) -> str:
    name = stem
    while name in taken:
        name += "_"
    return name


@dataclass(frozen=True)
class ReesPresentation:
    """A presentation ring k[X-vars, Y-vars] with its defining ideal."""

    ring: PolyRing
    base_ring: PolyRing
    x_names: tuple
    y_names: tuple
    y_degrees: tuple
    f: tuple
    defining: Ideal
    target: str  # "rees" or "assoc_graded"

    @property
    def x_indices(self) -> tuple:
        return tuple(range(len(self.x_names)))

    @property
    def y_indices(self) -> tuple:
        n = len(self.x_names)
        return tuple(range(n, n + len(self.y_names)))

    def monomial_bidegree(self, mon) -> tuple:
        """(weight, internal degree) of a presentation-ring monomial."""
        n = len(self.x_names)
        weight = sum(mon[n:])
        internal = sum(mon[:n]) + sum(
            e * d for e, d in zip(mon[n:], self.y_degrees)
        )
        return (weight, internal)


def _validated_input(J: Ideal, f: Sequence[Polynomial]):
    S = J.ring
    f = tuple(f)
    if not f:
        raise ValueError("need at least one ideal generator")
    if not J.homogeneous:
        raise ValueError("defining ideal must be homogeneous")
    for g in f:
        if g.ring != S:
            raise ValueError("ideal generators must live in the base ring")
        if not g or not g.is_homogeneous() or g.total_degree() == 0:
            raise ValueError("ideal generators must be homogeneous of positive degree")
        if ideal_member(g, J):
            raise ValueError(f"degenerate generator {g}: already zero in the quotient")
    return S, f


def rees_presentation(
    J: Ideal, f: Sequence[Polynomial], y_names: Optional[Sequence[str]] = None
) -> ReesPresentation:
    """Defining ideal of the Rees algebra (S/J)[It], I = (f)."""
    S, f = _validated_input(J, f)
    m = len(f)
    y_names = tuple(y_names) if y_names else _default_y_names(S, m)
    if len(y_names) != m:
        raise ValueError("need one Y-name per generator")

    t_name = _fresh_name(set(S.variables) | set(y_names), "t")
    big = PolyRing(S.variables + y_names + (t_name,), S.field)
    t = big.var(big.nvars - 1)
    n = S.nvars

    gens = [g.rename_into(big) for g in J.generators]
    for j, fj in enumerate(f):
        gens.append(big.var(n + j) - fj.rename_into(big) * t)

    elim = BlockOrder(((big.nvars - 1,), tuple(range(big.nvars - 1))))
    gb = groebner_basis(Ideal(big, gens), elim)
    kept = [g for g in gb if all(m[-1] == 0 for m in g.terms)]

    xy = PolyRing(S.variables + y_names, S.field)
    drop_t = [xy.var(i) for i in range(xy.nvars)] + [xy.zero]
    kept_xy = [g.map_into(xy, drop_t) for g in kept]
    defining = Ideal(xy, list(groebner_basis(Ideal(xy, kept_xy))))

    return ReesPresentation(
        ring=xy,
        base_ring=S,
        x_names=S.variables,
        y_names=y_names,
        y_degrees=tuple(g.total_degree() for g in f),
        f=f,
        defining=defining,
        target="rees",
    )


def assoc_graded_presentation(
    J: Ideal, f: Sequence[Polynomial], y_names: Optional[Sequence[str]] = None
) -> ReesPresentation:
    """Defining ideal of the associated graded ring of I = (f) on S/J."""
    rees = rees_presentation(J, f, y_names)
    xy = rees.ring
    gens = list(rees.defining.generators) + [g.rename_into(xy) for g in f]
    defining = Ideal(xy, list(groebner_basis(Ideal(xy, gens))))
    return ReesPresentation(
        ring=xy,
        base_ring=rees.base_ring,
        x_names=rees.x_names,
        y_names=rees.y_names,
        y_degrees=rees.y_degrees,
        f=rees.f,
        defining=defining,
        target="assoc_graded",
    )


def is_graded_relation(
    g: Polynomial,
    J: Ideal,
    f: Sequence[Polynomial],
    power_bound: int = POWER_BOUND,
) -> bool:
    """Check that g names a genuine relation of the associated graded ring.

    g lives in the presentation ring on X- and Y-variables and must be
    bihomogeneous there. With d its Y-weight, the test substitutes Y_i -> f_i
    and asks whether the result falls one adic level deeper, i.e. into
    I^(d+1) + J. Relations of weight zero land in I + J.
    """
    S, f = _validated_input(J, f)
    n, m = S.nvars, len(f)
    if g.ring.nvars != n + m:
        raise ValueError("relation must live in the presentation ring")
    x_idx, y_idx = tuple(range(n)), tuple(range(n, n + m))
    bideg = g.bidegree(x_idx, y_idx)
    if bideg is None:
        raise ValueError(f"{g} is not bihomogeneous in the variable split")
    d = bideg.y_degree
    images = [S.var(i) for i in range(n)] + list(f)
    substituted = g.map_into(S, images)
    target = ideal_sum(ideal_power(Ideal(S, f), d + 1, bound=max(power_bound, d + 1)), J)
    return ideal_member(substituted, target)


@dataclass(frozen=True)
class BigradedHilbert:
    """Nonzero dimensions of adic slices I^n/I^(n+1) by internal degree."""

    dims: dict
    level_bound: int
    degree_bound: int

    def __getitem__(self, key) -> int:
        n, d = key
        if not (0 <= n <= self.level_bound and 0 <= d <= self.degree_bound):
            raise IndexError(f"({n}, {d}) outside the computed window")
        return self.dims.get((n, d), 0)


def _check_bounds(level_bound: int, degree_bound: int):
    if not 0 <= level_bound <= MAX_LEVEL_BOUND:
        raise LimitExceeded(f"level bound {level_bound} outside [0, {MAX_LEVEL_BOUND}]")
    if not 0 <= degree_bound <= MAX_DEGREE_BOUND:
        raise LimitExceeded(f"degree bound {degree_bound} outside [0, {MAX_DEGREE_BOUND}]")


def bigraded_hilbert(
    J: Ideal,
    f: Sequence[Polynomial],
    level_bound: int = LEVEL_BOUND,
    degree_bound: int = DEGREE_BOUND,
) -> BigradedHilbert:
    """dim of (I^n/I^(n+1))_d for n <= level_bound, d <= degree_bound.

    Computed downstairs: the slice dimension is the difference of quotient
    Hilbert functions of I^(n+1)+J and I^n+J, all inside the base ring.
    """
    S, f = _validated_input(J, f)
    _check_bounds(level_bound, degree_bound)
    I = Ideal(S, f)

    def quotient_dims(n: int) -> GradedHilbert:
        return hilbert_function(
            ideal_sum(ideal_power(I, n, bound=level_bound + 1), J), degree_bound
        )

    dims = {}
    prev = quotient_dims(0)  # zero ring: I^0 + J = (1)
    for n in range(level_bound + 1):
        cur = quotient_dims(n + 1)
        for d in range(degree_bound + 1):
            v = cur[d] - prev[d]
            if v:
                dims[(n, d)] = v
        prev = cur
    return BigradedHilbert(dims, level_bound, degree_bound)


def presentation_bigraded_hilbert(
    pres: ReesPresentation,
    level_bound: int = LEVEL_BOUND,
    degree_bound: int = DEGREE_BOUND,
) -> BigradedHilbert:
    """Bigraded dimensions of the presentation quotient, counted upstairs.

    Counts standard monomials of the defining ideal's initial ideal, tallied
    by (weight, internal degree). For an associated-graded presentation this
    must agree with ``bigraded_hilbert``.
    """
    _check_bounds(level_bound, degree_bound)
    gb = groebner_basis(pres.defining)
    lms = gb.leading_monomials()
    ring = pres.ring
    nvars = ring.nvars
    n_x = len(pres.x_names)
    weights = [0] * n_x + [1] * len(pres.y_names)
    internal = [1] * n_x + list(pres.y_degrees)

    by_last = [[] for _ in range(nvars + 1)]
    for lm in lms:
        support = [i for i, e in enumerate(lm) if e]
        last = max(support) if support else -1
        by_last[last + 1].append(lm)

    dims: dict = {}
    exp = [0] * nvars

    def rec(pos: int, weight: int, degree: int):
        for lm in by_last[pos]:
            if all(lm[i] <= exp[i] for i in range(pos)):
                return
        if pos == nvars:
            dims[(weight, degree)] = dims.get((weight, degree), 0) + 1
            return
        e = 0
        while True:
            w = weight + e * weights[pos]
            d = degree + e * internal[pos]
            if w > level_bound or d > degree_bound:
                break
            exp[pos] = e
            rec(pos + 1, w, d)
            e += 1
        exp[pos] = 0

    rec(0, 0, 0)
    return BigradedHilbert({k: v for k, v in dims.items() if v}, level_bound, degree_bound)
