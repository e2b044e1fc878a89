"""Deciding whether the associated graded ring is isomorphic to the base ring.

Everything here works with presentations: A = S/J with S a polynomial ring,
I given by homogeneous lifts. The decision is constructive both ways.

The criterion: A and its associated graded ring along I are isomorphic
(as graded quotients of the same kind of polynomial ring) exactly when

  (1) modulo J, I is generated by a set of variables x_i (i in B), and
  (2) J can be regenerated so that every generator lies entirely in the
      B-variables or entirely in the complementary C-variables.

For (1) the candidate B is forced: with J generated in degrees >= 2, the set
B = {i : x_i in I + J} is the only possible variable support, because the
degree-one part of (X_B') + J is spanned by the B'-variables themselves.
For (2) it is enough to compare J against its two elimination images:
JB = J restricted to the B-variables, JC to the C-variables. Both inclusions
of the equivalence are mechanical: a regrouped generating set splits into
B-pure and C-pure generators which land in JB resp. JC, and conversely
generators of JB and JC are elements of J. So J splits iff every given
generator of J is a member of JB + JC.

A positive decision can be certified: the associated graded presentation on
Y-variables (one per element of B) must equal (X_B) + JB-renamed + JC, where
the renaming sends the B-variable x_i to its Y-partner. ``verify_iso_witness``
checks that ideal equality exactly.
"""

from __future__ import annotations

import warnings
from dataclasses import dataclass
from typing import Optional, Sequence

from .blowup import assoc_graded_presentation
from .groebner import (
    Ideal,
    elimination_ideal,
    groebner_basis,
    ideal_equal,
    ideal_member,
    ideal_sum,
)


@dataclass(frozen=True)
class SplitWitness:
    """Certificate that J splits across a variable subset B."""

    b: tuple  # variable indices generating I modulo J
    c: tuple  # the complement
    jb: Ideal  # J restricted to the B-variables
    jc: Ideal  # J restricted to the C-variables
    sigma: dict  # renaming on variable names certifying the isomorphism

    def __post_init__(self):
        object.__setattr__(self, "sigma", dict(self.sigma))


@dataclass(frozen=True)
class IsoDecision:
    isomorphic: bool
    witness: Optional[SplitWitness]
    failure_reason: Optional[str]  # "not-variable-generated" | "not-split"
    verified: bool = False


def _as_ideal(J: Ideal, i_gens) -> Ideal:
    if isinstance(i_gens, Ideal):
        if i_gens.ring != J.ring:
            raise ValueError("I and J must share the ambient ring")
        return i_gens
    return Ideal(J.ring, list(i_gens))


def variable_subset_basis(i_gens, J: Ideal) -> Optional[tuple]:
    """The full set B of variables lying in I + J, if it generates I there.

    Returns sorted variable indices, or None when I + J is not generated by
    variables together with J. B is canonical: with J generated in degrees
    >= 2 no other variable subset can work, so no search is needed.
    """
    I = _as_ideal(J, i_gens)
    S = J.ring
    total = ideal_sum(I, J)
    b = tuple(i for i in range(S.nvars) if ideal_member(S.var(i), total))
    xb = Ideal(S, [S.var(i) for i in b])
    if ideal_equal(total, ideal_sum(xb, J)):
        return b
    return None


def split_check(J: Ideal, b: Sequence[int]) -> Optional[SplitWitness]:
    """Try to certify that J regenerates as B-pure plus C-pure generators."""
    S = J.ring
    b = tuple(sorted(set(b)))
    c = tuple(i for i in range(S.nvars) if i not in set(b))
    jb = elimination_ideal(J, b)
    jc = elimination_ideal(J, c)
    both = ideal_sum(jb, jc)
    if not all(ideal_member(g, both) for g in J.generators):
        return None
    sigma = {S.variables[i]: f"Y{pos + 1}" for pos, i in enumerate(b)}
    return SplitWitness(b=b, c=c, jb=jb, jc=jc, sigma=sigma)


def _validate_problem(J: Ideal, I: Ideal, allow_linear: bool):
    if not J.homogeneous:
        raise ValueError("J must be homogeneous")
    for g in I.generators:
        if not g.is_homogeneous() or g.total_degree() == 0:
            raise ValueError("I needs homogeneous generators of positive degree")
    if not I.generators:
        raise ValueError("I must be nonzero")
    if groebner_basis(ideal_sum(I, J)).is_unit():
        raise ValueError("I is the unit ideal modulo J")
    if all(ideal_member(g, J) for g in I.generators):
        raise ValueError("I is zero modulo J")
    linear = [g for g in J.generators if g.total_degree() == 1]
    if linear:
        message = (
            f"J has degree-1 generators ({', '.join(map(str, linear))}); "
            "the variable count is not reduced automatically and the "
            "canonical B may lose uniqueness"
        )
        if not allow_linear:
            raise ValueError(message + " (pass allow_linear=True to proceed)")
        warnings.warn(message)


def decide_iso(J: Ideal, i_gens, allow_linear: bool = False) -> IsoDecision:
    """Decide whether the associated graded ring along I is the base ring."""
    I = _as_ideal(J, i_gens)
    _validate_problem(J, I, allow_linear)
    b = variable_subset_basis(I, J)
    if b is None:
        return IsoDecision(False, None, "not-variable-generated")
    witness = split_check(J, b)
    if witness is None:
        return IsoDecision(False, None, "not-split")
    return IsoDecision(True, witness, None)


def verify_iso_witness(J: Ideal, witness: SplitWitness) -> bool:
    """Certify a positive decision on the presentation level.

    Computes the full associated graded presentation for I = (x_i : i in B)
    and checks its defining ideal equals (X_B) + sigma(JB) + JC.
    """
    S = J.ring
    f = [S.var(i) for i in witness.b]
    pres = assoc_graded_presentation(J, f)
    xy = pres.ring
    expected = (
        [xy.var(xy.var_index(S.variables[i])) for i in witness.b]
        + [g.rename_into(xy, witness.sigma) for g in witness.jb.generators]
        + [g.rename_into(xy) for g in witness.jc.generators]
    )
    return ideal_equal(pres.defining, Ideal(xy, expected))


def decide_and_verify(J: Ideal, i_gens, allow_linear: bool = False) -> IsoDecision:
    """decide_iso plus the constructive certificate on positive answers."""
    decision = decide_iso(J, i_gens, allow_linear)
    if not decision.isomorphic:
        return decision
    return IsoDecision(
        True, decision.witness, None, verified=verify_iso_witness(J, decision.witness)
    )
