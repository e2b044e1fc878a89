"""Exact computations with associated graded rings and Rees algebras."""

from .blowup import (
    BigradedHilbert,
    ReesPresentation,
    assoc_graded_presentation,
    bigraded_hilbert,
    is_graded_relation,
    presentation_bigraded_hilbert,
    rees_presentation,
)
from .criterion import (
    IsoDecision,
    SplitWitness,
    decide_and_verify,
    decide_iso,
    split_check,
    variable_subset_basis,
    verify_iso_witness,
)
from .errors import AmbientMismatch, LimitExceeded, ParseError, WindowUnderflow
from .fields import GF, QQ, parse_field
from .groebner import (
    GradedHilbert,
    GroebnerBasis,
    Ideal,
    buchberger,
    elimination_ideal,
    groebner_basis,
    hilbert_function,
    ideal_equal,
    ideal_member,
    ideal_power,
    ideal_sum,
    krull_dim,
    normal_form,
)
from .polynomials import (
    GREVLEX,
    LEX,
    Bidegree,
    BlockOrder,
    PolyRing,
    Polynomial,
    bidegree,
    elimination_order,
    parse_poly,
)
from .rees_cohomology import (
    BandWindow,
    CMReesVerdict,
    GenCMVerdict,
    SplitSRData,
    TensorWindow,
    adic_a_invariant,
    assemble_rees_cohomology,
    decide_cm_rees,
    decide_gencm,
    dim_rees,
    restrict_complex,
    window_table,
)
from .simplicial import (
    CohomologyWindow,
    IndexFlags,
    SimplicialComplex,
    SRInvariants,
    local_cohomology_window,
    reduced_homology_ranks,
    sr_invariants,
    top_minimal_primes,
)

__version__ = "0.1.0"
