"""Simplicial complexes and graded local cohomology of their face rings.

The graded pieces of local cohomology of a face ring k[D] are assembled from
reduced homology of face links: a face s with link homology rank r in
(cohomological) index i = |s| + 1 + (homology index) contributes

    r * C(-j-1, |s|-1)   to dimension at every internal degree j <= -|s|,

while the empty face contributes its rank at degree 0 only. Homology ranks
are computed from boundary matrices by Gaussian elimination over the exact
coefficient field, so everything downstream of this module is exact as well:
a window object can answer dimension queries at any degree, not just inside
the stored band, because the per-index contribution profile is finite data.

Vanishing flags fall out of the same profile. A nonempty contributing face
of size s forces nonzero dimensions at every degree <= -s, and size-1 faces
reach degree -2; so for a face ring, "finite length", "concentrated in
degree 0" and "zero in all degrees <= -2" are all equivalent to "only the
empty face contributes".
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations
from math import comb
from typing import Iterable, NamedTuple, Optional

from .errors import LimitExceeded, WindowUnderflow
from .groebner import Ideal

VERTEX_BOUND = 12
WINDOW_LO = -10
WINDOW_HI = 2


class SimplicialComplex:
    """A finite simplicial complex held by its facets.

    ``vertices`` is the ambient vertex set (sorted labels); facets are
    frozensets of labels. The complex whose only face is the empty set is
    allowed (give no facets); the void complex with no faces at all is not
    representable. A label missing from every facet is an ambient vertex
    whose singleton is a non-face.
    """

    __slots__ = ("vertices", "facets")

    def __init__(self, vertices: Iterable[int], facets: Iterable[Iterable[int]]):
        vertices = tuple(sorted(set(vertices)))
        vset = set(vertices)
        cleaned = set()
        for f in facets:
            f = frozenset(f)
            if not f <= vset:
                raise ValueError(f"facet {sorted(f)} outside the vertex set")
            cleaned.add(f)
        maximal = [
            f for f in cleaned if not any(f < g for g in cleaned)
        ]
        if not maximal:
            maximal = [frozenset()]
        self.vertices = vertices
        self.facets = tuple(sorted(maximal, key=lambda f: (len(f), sorted(f))))

    @classmethod
    def from_ideal(cls, J: Ideal) -> "SimplicialComplex":
        """Complex whose non-faces are the generator supports of J.

        J must be generated by squarefree monomials; the vertex labels are
        the variable indices of its ring.
        """
        n = J.ring.nvars
        if n > VERTEX_BOUND:
            raise LimitExceeded(f"{n} vertices exceed the bound {VERTEX_BOUND}")
        supports = []
        for g in J.generators:
            if len(g.terms) != 1:
                raise ValueError(f"{g} is not a monomial")
            (mon,) = g.terms
            if any(e > 1 for e in mon):
                raise ValueError(f"{g} is not squarefree")
            supports.append(frozenset(i for i, e in enumerate(mon) if e))
        faces = [
            s
            for size in range(n + 1)
            for s in map(frozenset, combinations(range(n), size))
            if not any(ns <= s for ns in supports)
        ]
        return cls(range(n), faces)

    @property
    def dim(self) -> int:
        return max(len(f) for f in self.facets) - 1

    def faces(self) -> set:
        out = set()
        for f in self.facets:
            for size in range(len(f) + 1):
                out.update(map(frozenset, combinations(sorted(f), size)))
        return out

    def has_face(self, s: Iterable[int]) -> bool:
        s = frozenset(s)
        return any(s <= f for f in self.facets)

    def link(self, s: Iterable[int]) -> "SimplicialComplex":
        s = frozenset(s)
        if not self.has_face(s):
            raise ValueError(f"{sorted(s)} is not a face")
        return SimplicialComplex(
            set(self.vertices) - s, [f - s for f in self.facets if s <= f]
        )

    def join(self, other: "SimplicialComplex") -> "SimplicialComplex":
        if set(self.vertices) & set(other.vertices):
            raise ValueError("join needs disjoint vertex sets")
        return SimplicialComplex(
            self.vertices + other.vertices,
            [f | g for f in self.facets for g in other.facets],
        )

    def __eq__(self, other):
        return (
            isinstance(other, SimplicialComplex)
            and other.vertices == self.vertices
            and set(other.facets) == set(self.facets)
        )

    def __hash__(self):
        return hash((self.vertices, frozenset(self.facets)))

    def __repr__(self):
        body = ", ".join("{" + ",".join(map(str, sorted(f))) + "}" for f in self.facets)
        return f"SimplicialComplex[{body}]"


def _field_rank(rows: list, field) -> int:
    """Rank of a dense matrix (list of row lists) over an exact field."""
    if not rows or not rows[0]:
        return 0
    rows = [list(r) for r in rows]
    ncols = len(rows[0])
    rank = 0
    for col in range(ncols):
        pivot = next((r for r in range(rank, len(rows)) if rows[r][col]), None)
        if pivot is None:
            continue
        rows[rank], rows[pivot] = rows[pivot], rows[rank]
        inv = field.one / rows[rank][col]
        rows[rank] = [x * inv for x in rows[rank]]
        for r in range(len(rows)):
            if r != rank and rows[r][col]:
                factor = rows[r][col]
                rows[r] = [a - factor * b for a, b in zip(rows[r], rows[rank])]
        rank += 1
        if rank == len(rows):
            break
    return rank


def reduced_homology_ranks(complex: SimplicialComplex, field) -> dict:
    """Ranks of reduced homology over the field, indexed -1..dim.

    Uses the augmented chain complex, so the empty complex has rank one in
    index -1 and any nonempty complex has rank zero there.
    """
    faces_by_dim: dict = {}
    for f in complex.faces():
        faces_by_dim.setdefault(len(f) - 1, []).append(tuple(sorted(f)))
    for fs in faces_by_dim.values():
        fs.sort()
    top = complex.dim

    boundary_rank: dict = {}
    for i in range(0, top + 1):
        rows_idx = {f: k for k, f in enumerate(faces_by_dim.get(i - 1, []))}
        mat = []
        for f in faces_by_dim.get(i, []):
            row = [field.zero] * len(rows_idx)
            for k in range(len(f)):
                sub = f[:k] + f[k + 1 :]
                sign = field.one if k % 2 == 0 else -field.one
                row[rows_idx[sub]] = sign
            mat.append(row)
        boundary_rank[i] = _field_rank(mat, field)

    ranks = {}
    for i in range(-1, top + 1):
        dim_ci = len(faces_by_dim.get(i, []))
        ranks[i] = dim_ci - boundary_rank.get(i, 0) - boundary_rank.get(i + 1, 0)
    return ranks


class IndexFlags(NamedTuple):
    is_zero: bool
    finite_length: bool
    vanishes_below_minus_one: bool


class CohomologyWindow:
    """Graded dimensions of local cohomology over a degree band, with the
    exact per-index contribution profile when available.

    ``tables[i][j]`` stores nonzero dimensions for lo <= j <= hi. When the
    window was built from a contribution profile, ``dim_at`` is exact at
    every degree; a hand-built window raises WindowUnderflow outside its
    band unless a flag settles the value.
    """

    def __init__(
        self,
        lo: int,
        hi: int,
        tables: dict,
        flags: dict,
        max_index: int,
        contrib: Optional[dict] = None,
        contrib_faces: Optional[dict] = None,
    ):
        if lo > hi:
            raise ValueError("empty window")
        self.lo = lo
        self.hi = hi
        self.tables = {i: dict(t) for i, t in tables.items()}
        self.flags = dict(flags)
        self.max_index = max_index
        self.contrib = None if contrib is None else {i: dict(c) for i, c in contrib.items()}
        self.contrib_faces = (
            None
            if contrib_faces is None
            else {i: tuple(fs) for i, fs in contrib_faces.items()}
        )

    def indices(self) -> range:
        return range(0, self.max_index + 1)

    def flag(self, i: int) -> IndexFlags:
        return self.flags.get(i, IndexFlags(True, True, True))

    def dim_at(self, i: int, j: int) -> int:
        if self.contrib is not None:
            profile = self.contrib.get(i)
            if not profile:
                return 0
            if j > 0:
                return 0
            if j == 0:
                return profile.get(0, 0)
            return sum(
                r * comb(-j - 1, s - 1) for s, r in profile.items() if s >= 1
            )
        if self.lo <= j <= self.hi:
            return self.tables.get(i, {}).get(j, 0)
        flags = self.flag(i)
        if flags.is_zero:
            return 0
        if j <= -2 and flags.vanishes_below_minus_one:
            return 0
        raise WindowUnderflow(
            f"degree {j} outside window [{self.lo}, {self.hi}] for index {i}"
        )

    def table(self, i: int) -> dict:
        return dict(self.tables.get(i, {}))


def local_cohomology_window(
    complex: SimplicialComplex,
    field,
    lo: int = WINDOW_LO,
    hi: int = WINDOW_HI,
) -> CohomologyWindow:
    """Graded local cohomology dimensions of the face ring over the window."""
    if len(complex.vertices) > VERTEX_BOUND:
        raise LimitExceeded(
            f"{len(complex.vertices)} vertices exceed the bound {VERTEX_BOUND}"
        )
    d = complex.dim + 1  # ring dimension, top cohomological index

    contrib: dict = {}
    contrib_faces: dict = {}
    for s in sorted(complex.faces(), key=lambda f: (len(f), sorted(f))):
        link_ranks = reduced_homology_ranks(complex.link(s), field)
        for hom_index, rank in link_ranks.items():
            if rank <= 0:
                continue
            i = hom_index + len(s) + 1
            contrib.setdefault(i, {})
            contrib[i][len(s)] = contrib[i].get(len(s), 0) + rank
            contrib_faces.setdefault(i, []).append((s, rank))

    tables: dict = {}
    flags: dict = {}
    for i in range(0, d + 1):
        profile = contrib.get(i, {})
        table = {}
        for j in range(lo, hi + 1):
            v = 0
            if j == 0:
                v = profile.get(0, 0)
            elif j < 0:
                v = sum(r * comb(-j - 1, s - 1) for s, r in profile.items() if s >= 1)
            if v:
                table[j] = v
        tables[i] = table
        only_empty = all(s == 0 for s in profile)
        flags[i] = IndexFlags(
            is_zero=not profile,
            finite_length=only_empty,
            vanishes_below_minus_one=only_empty,
        )
    return CohomologyWindow(lo, hi, tables, flags, d, contrib, contrib_faces)


@dataclass(frozen=True)
class SRInvariants:
    """Homological invariants of a face ring over a given field."""

    dim: int
    depth: int
    a_invariant: Optional[int]  # None would mean vanishing top cohomology
    cm: bool
    gencm: bool
    field_name: str


def sr_invariants(complex: SimplicialComplex, field) -> SRInvariants:
    window = local_cohomology_window(complex, field, lo=-1, hi=0)
    d = complex.dim + 1
    nonzero = [i for i in window.indices() if not window.flag(i).is_zero]
    depth = min(nonzero) if nonzero else d
    profile_top = (window.contrib or {}).get(d, {})
    if not profile_top:
        a_inv = None
    elif 0 in profile_top:
        a_inv = 0
    else:
        a_inv = -min(s for s in profile_top if s >= 1)
    gencm = all(window.flag(i).finite_length for i in range(0, d))
    return SRInvariants(
        dim=d,
        depth=depth,
        a_invariant=a_inv,
        cm=depth == d,
        gencm=gencm,
        field_name=field.name,
    )


def top_minimal_primes(complex: SimplicialComplex) -> list:
    """For each top-dimensional facet F, the variable set off F.

    These index the minimal primes of top dimension of the face ring: the
    prime of F is generated by the variables not in F.
    """
    top = complex.dim + 1
    out = []
    for f in complex.facets:
        if len(f) == top:
            out.append(tuple(sorted(set(complex.vertices) - f)))
    return out
