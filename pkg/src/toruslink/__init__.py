"""
toruslink: invariants of torus-covering T^2-links from commuting braid words.

A degree-n torus-covering link is determined by a pair of commuting
n-strand braid words.  This package computes, in exact arithmetic, the
invariants that separate such links and detect chirality: Fox p-coloring
counts, triple linking numbers, and the dihedral quandle cocycle
invariant in multiset, polynomial and reduced (cyclotomic) forms,
together with the move calculus that classifies the degree-3 links by
their tri-coloring count.
"""

from ._shadow import backend_name
from .braid import (
    BraidWord,
    CommutingPair,
    GeneratorRangeError,
    NonCommutingError,
    NormalForm,
    Permutation,
    StrandMismatchError,
    WordSyntaxError,
    commutes,
    equivalent,
    exponent_sum,
    format_word,
    free_reduce,
    full_twist,
    full_twist_power,
    inverse,
    is_pure,
    mirror,
    nf_to_word,
    normal_form,
    parse_word,
    permutation,
    reverse,
    sigma,
    transform,
)
from .cocycle import (
    CyclotomicInt,
    HypothesisViolationError,
    PhiPolynomial,
    ReducedInvariant,
    ShadowColoring,
    WeightMultiset,
    gauss_sum,
    legendre,
    mochizuki,
    phi_closed_multiset,
    phi_n3_polynomial,
    phi_via_shadow,
    recover_phi_polynomial,
    reduced_phi,
    shadow_invariant,
    theta_table,
)
from .coloring import (
    ColoringMatrix,
    ColoringSpace,
    GoldenUnitReport,
    NotOddPrimeError,
    QuadraticUnit,
    coloring_kernel,
    coloring_matrix,
    count_colorings_closure,
    count_colorings_link,
    eps_power,
    golden_unit_criterion,
    is_odd_prime,
    phi_p_exponent,
    sigma12_count_closed_form,
)
from .linking import (
    ChiralityCertificate,
    LinkingProfile,
    NotPureError,
    TripleLinking,
    UZExponents,
    UZ_MATRIX,
    UZ_MATRIX_INV,
    chirality_certificate,
    linking_profile,
    triple_linking,
    triple_linking_tensor,
    triple_linking_variant,
    uz_exponents,
)
from .qdl import (
    B3Decomposition,
    DecompositionError,
    InapplicableMoveError,
    QdlClass,
    QdlMove,
    apply_move,
    bracket_reduce,
    classify,
    decompose_commuting,
    full_twist_exponent,
    in_same_bracket,
    phi3,
    s4_family_phi3,
    tc_index_bound,
)

__version__ = "0.1.0"
