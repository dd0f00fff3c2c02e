"""Numerical semigroup invariants, Groebner-basis certificates and bounds."""

from ._core import (
    BoundReport,
    CertifiedMembership,
    GroebnerBasis,
    InvariantReport,
    NumsgError,
    SemigroupSpec,
    StaircaseModel,
    WilfReport,
    bound_report,
    bound_table,
    buchberger,
    certify,
    check_reference_rows,
    count_p,
    count_q,
    denumerant,
    gly_based_bound,
    gly_based_bound_exact,
    gly_weak_holds,
    invariants,
    is_member,
    minimal_generators,
    n_of_alpha,
    n_s_corollary_bound,
    normal_form_of_power,
    normalize,
    parse_generators,
    prism_pyramid_high,
    prism_pyramid_low,
    run_selftest,
    shift_lemma_check,
    simple_corollary_bound,
    wilf_check,
)

__version__ = "0.1.0"


def staircase(generators):
    """Staircase model of the reduced basis for ``generators``."""
    return StaircaseModel(buchberger(SemigroupSpec(generators)))
