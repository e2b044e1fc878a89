"""Tests for blowup cohomology: band transform, tensor assembly, verdicts."""

from itertools import combinations
from math import comb

import pytest

from gradealg import (
    GF,
    QQ,
    BandWindow,
    Ideal,
    PolyRing,
    SimplicialComplex,
    SplitSRData,
    TensorWindow,
    adic_a_invariant,
    assemble_rees_cohomology,
    decide_cm_rees,
    decide_gencm,
    dim_rees,
    krull_dim,
    local_cohomology_window,
    rees_presentation,
    restrict_complex,
    window_table,
)
from tests.cech_oracle import local_cohomology_dim
from tests.test_simplicial import RP2_FACETS

TWO_POINTS = SimplicialComplex(range(2), [(0,), (1,)])
EDGE = SimplicialComplex(range(2), [(0, 1)])
PATH = SimplicialComplex(range(3), [(0, 2), (1, 2)])
CIRCLE = SimplicialComplex(range(3), [(0, 1), (1, 2), (0, 2)])
RP2 = SimplicialComplex(range(6), RP2_FACETS)
CONE_RP2 = SimplicialComplex(range(7), [f + (6,) for f in RP2_FACETS])


def sr_ideal(complex, field=QQ, prefix="x"):
    """Stanley-Reisner ideal of a complex, generated by minimal non-faces."""
    verts = complex.vertices
    ring = PolyRing([f"{prefix}{v + 1}" for v in verts], field)
    gens = []
    for size in range(1, len(verts) + 1):
        for sub in combinations(verts, size):
            if complex.has_face(sub):
                continue
            if all(complex.has_face(tuple(u for u in sub if u != v)) for v in sub):
                gens.append("*".join(ring.variables[v] for v in sub))
    return ring, Ideal.parse(ring, gens)


def test_restrict_complex():
    sub = restrict_complex(PATH, [0, 1])
    assert sub == SimplicialComplex([0, 1], [(0,), (1,)])
    assert restrict_complex(PATH, []).facets == (frozenset(),)
    with pytest.raises(ValueError):
        restrict_complex(PATH, [5])


def test_from_split_accepts_joins_and_rejects_others():
    data = SplitSRData.from_split(PATH, (0, 1))
    assert data.b == (0, 1) and data.c == (2,)
    assert data.factor_b == TWO_POINTS
    with pytest.raises(ValueError):
        SplitSRData.from_split(PATH, (0,))
    with pytest.raises(ValueError):
        SplitSRData.from_split(PATH, (7,))
    trivial = SplitSRData.from_split(CIRCLE, ())
    assert trivial.factor_c == CIRCLE


def test_band_matches_bivariate_cech():
    pt = SimplicialComplex([0], [(0,)])
    band = BandWindow(local_cohomology_window(pt, QQ, -6, 0))
    assert band.max_index == 2
    for i in range(0, 3):
        for a in range(-6, 1):
            assert band.dim_at(i, a) == local_cohomology_dim(2, i, a)
    assert band.dim_at(2, -1) == 0
    assert [band.dim_at(2, a) for a in (-2, -3, -4)] == [1, 2, 3]


def test_band_flags_for_polynomial_base():
    pt = SimplicialComplex([0], [(0,)])
    band = BandWindow(local_cohomology_window(pt, QQ, -4, 0))
    assert band.flag(0).is_zero and band.flag(1).is_zero
    top = band.flag(2)
    assert not top.is_zero and not top.finite_length


def test_band_keeps_degree_zero_of_base():
    w = local_cohomology_window(CIRCLE, QQ, -4, 0)
    band = BandWindow(w)
    assert w.dim_at(2, 0) == 1
    assert band.dim_at(2, 0) == 1
    assert band.dim_at(2, 1) == 0
    assert band.dim_at(3, -2) == w.dim_at(2, -2)


def test_trivariate_assembly_matches_cech():
    data = SplitSRData.from_split(EDGE, (0,))
    tw = assemble_rees_cohomology(data, QQ, -8, 0)
    assert tw.max_index == 3
    for a in range(-8, 1):
        expected = comb(-a - 1, 2) if a <= -1 else 0
        assert tw.dim_at(3, a) == expected
    for i in range(0, 4):
        for a in range(-4, 1):
            assert tw.dim_at(i, a) == local_cohomology_dim(3, i, a)


def test_assembly_reduces_to_band_when_c_empty():
    fixtures = [TWO_POINTS, PATH, CIRCLE, RP2]
    for complex in fixtures:
        for field in (QQ, GF(2)):
            data = SplitSRData.from_split(complex, complex.vertices)
            assembled = assemble_rees_cohomology(data, field, -6, 0)
            band = BandWindow(local_cohomology_window(complex, field, -6, 0))
            assert assembled.max_index == band.max_index
            for q in assembled.indices():
                for a in range(-6, 1):
                    assert assembled.dim_at(q, a) == band.dim_at(q, a)
                af, bf = assembled.flag(q), band.flag(q)
                assert af.is_zero == bf.is_zero
                assert af.finite_length == bf.finite_length


class _Stub:
    """Minimal window: explicit nonpositive-degree table, everything else 0."""

    def __init__(self, entries):
        self.entries = dict(entries)
        self.max_index = max((i for i, _ in self.entries), default=0)

    def indices(self):
        return range(0, self.max_index + 1)

    def dim_at(self, i, a):
        return self.entries.get((i, a), 0)


def test_tensor_assembly_is_the_degreewise_convolution():
    first = _Stub({(1, -1): 2, (1, -2): 1, (2, 0): 3})
    second = _Stub({(0, 0): 1, (1, -1): 3})
    tw = TensorWindow(first, second)
    for q in range(0, 4):
        for a in range(-4, 1):
            expected = 0
            for i in range(0, q + 1):
                for alpha in range(a, 1):
                    expected += first.dim_at(i, alpha) * second.dim_at(
                        q - i, a - alpha
                    )
            assert tw.dim_at(q, a) == expected
    assert tw.dim_at(2, -2) == 2 * 3 + 0
    doubled = TensorWindow(first, _Stub({(0, 0): 1, (1, -1): 6}))
    assert doubled.dim_at(2, -2) - tw.dim_at(2, -2) == 2 * 3
    assert doubled.dim_at(1, -1) == tw.dim_at(1, -1)


def test_window_table_shape():
    band = BandWindow(local_cohomology_window(TWO_POINTS, QQ, -3, 0))
    table = window_table(band, -3, 0)
    assert set(table) == {0, 1, 2}
    assert table[2] == {-2: 2, -3: 4}
    assert table[0] == {}


DIM_FIXTURES = [
    (TWO_POINTS, (0,), 2),
    (SimplicialComplex(range(3), [(0,), (1, 2)]), (0,), 2),
    (PATH, (0, 1), 3),
    (SimplicialComplex(range(4), [(0,), (1, 2, 3)]), (0,), 3),
    (SimplicialComplex(range(4), [(0, 1), (2, 3)]), (0,), 3),
    (EDGE, (0,), 3),
]


def test_dim_rees_both_branches():
    assert dim_rees(TWO_POINTS, (0,)) == 2
    assert dim_rees(SimplicialComplex(range(3), [(0,), (1, 2)]), (0,)) == 2
    assert dim_rees(PATH, (0, 1)) == 3
    assert dim_rees(PATH, ()) == 2


def test_dim_rees_matches_krull_dimension_of_presentation():
    for complex, b, expected in DIM_FIXTURES:
        ring, J = sr_ideal(complex)
        pres = rees_presentation(J, [ring.var(i) for i in b])
        assert krull_dim(pres.defining) == expected
        assert dim_rees(complex, b) == expected


def test_adic_a_invariant_fixtures():
    assert adic_a_invariant(TWO_POINTS, (0,), QQ) == 0
    assert adic_a_invariant(TWO_POINTS, (0, 1), QQ) == 0
    assert adic_a_invariant(EDGE, (0,), QQ) == -1
    assert adic_a_invariant(EDGE, (), QQ) == 0
    simplex3 = SimplicialComplex(range(3), [(0, 1, 2)])
    assert adic_a_invariant(simplex3, (0, 1), QQ) == -2
    assert adic_a_invariant(PATH, (0, 1), QQ) == 0


def test_path_rees_not_cm_despite_cm_base():
    data = SplitSRData.from_split(PATH, (0, 1))
    v = decide_cm_rees(data, QQ)
    assert v.cm_base
    assert v.a_standard == -1
    assert v.a_adic == 0
    assert not v.cm_rees
    assert (v.dim_base, v.dim_rees) == (2, 3)
    assert v.field_name == "Q"


def test_edge_rees_is_cm():
    data = SplitSRData.from_split(EDGE, (0,))
    v = decide_cm_rees(data, QQ)
    assert v.cm_rees and v.cm_base
    assert v.a_adic == -1
    g = decide_gencm(data, QQ)
    assert g.gencm and g.case == "case3-vanishing"
    assert g.cm_R


def test_gencm_path_fails_on_a_invariant():
    data = SplitSRData.from_split(PATH, (0, 1))
    g = decide_gencm(data, QQ)
    assert not g.gencm and g.case == "none"
    assert g.precondition_A_gencm
    assert not g.evidence["a_A1_negative"]
    assert g.evidence["dim_A1"] == 1 and g.evidence["dim_A2"] == 1
    assert g.dim_R == 3 and not g.cm_R


def test_gencm_case1_with_zero_ideal():
    data = SplitSRData.from_split(TWO_POINTS, ())
    g = decide_gencm(data, QQ)
    assert g.gencm and g.case == "case1-contained"
    assert g.evidence["I_in_all_top_primes"]
    assert g.dim_R == 1


def test_gencm_case2_zero_dimensional_complement():
    data = SplitSRData.from_split(CIRCLE, CIRCLE.vertices)
    g = decide_gencm(data, QQ)
    assert g.gencm and g.case == "case2-dimA2-zero"
    assert g.evidence["dimA2_zero"]
    assert not g.cm_R

    simplex = SimplicialComplex(range(3), [(0, 1, 2)])
    data = SplitSRData.from_split(simplex, simplex.vertices)
    g = decide_gencm(data, QQ)
    assert g.gencm and g.case == "case2-dimA2-zero"
    assert g.cm_R


def test_cone_over_projective_plane_depends_on_field():
    data = SplitSRData.from_split(CONE_RP2, (6,))
    over_q = decide_cm_rees(data, QQ)
    assert over_q.cm_rees and over_q.a_adic == -1
    g_q = decide_gencm(data, QQ)
    assert g_q.gencm and g_q.case == "case3-vanishing"

    over_2 = decide_cm_rees(data, GF(2))
    assert not over_2.cm_base and not over_2.cm_rees
    g_2 = decide_gencm(data, GF(2))
    assert not g_2.gencm and g_2.case == "none"
    assert not g_2.precondition_A_gencm


def test_cm_rees_implies_gencm_across_corpus():
    corpus = [
        (TWO_POINTS, (0, 1)),
        (TWO_POINTS, ()),
        (PATH, (0, 1)),
        (PATH, (2,)),
        (EDGE, (0,)),
        (EDGE, (0, 1)),
        (SimplicialComplex(range(3), [(0, 1, 2)]), (0, 1)),
        (CIRCLE, CIRCLE.vertices),
        (RP2, RP2.vertices),
        (CONE_RP2, (6,)),
    ]
    for complex, b in corpus:
        for field in (QQ, GF(2)):
            data = SplitSRData.from_split(complex, b)
            cm = decide_cm_rees(data, field).cm_rees
            g = decide_gencm(data, field)
            assert g.cm_R == cm
            if cm:
                assert g.gencm
