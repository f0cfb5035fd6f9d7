"""Finite rings with endomorphisms, skew polynomial arithmetic, and exhaustive
deciders for Armendariz-type annihilator conditions."""

from .rings import (
    AxiomError,
    Bimodule,
    CarrierMismatchError,
    DEFAULT_SIZE_CAP,
    Endomorphism,
    FiniteRing,
    Ideal,
    RingElement,
    RingError,
    RingIsomorphism,
    SizeCapError,
    endo_orbit,
    frobenius,
    generated_ideal,
    identity_endomorphism,
    induced_endomorphism,
    make_bimodule,
    make_direct_product,
    make_galois_field,
    make_ideal,
    make_isomorphism,
    make_quotient,
    make_table_ring,
    make_trivial_extension,
    make_zmod,
    product_endomorphism,
    random_relabeling,
    regular_bimodule,
    relabel_ring,
    table_endomorphism,
    transport,
    zero_endomorphism,
)
from .skewpoly import (
    LaurentSkewPoly,
    SkewPoly,
    TruncatedSkewSeries,
    forall_sandwich_zero,
    forall_sandwich_zero_laurent,
    forall_sandwich_zero_series,
    laurent_add,
    laurent_from_poly,
    laurent_monomial,
    laurent_poly,
    laurent_sandwich,
    laurent_skew_mul,
    monomial,
    parse_laurent,
    parse_poly,
    sandwich,
    skew_add,
    skew_mul,
    skew_poly,
    truncate_poly,
    truncated_add,
    truncated_mul,
    truncated_series,
)
from .deciders import (
    BudgetExceededError,
    DEFAULT_TUPLE_BUDGET,
    Envelope,
    PropertyId,
    ReplayMismatch,
    Verdict,
    Witness,
    check_armendariz_family,
    check_laurent_q_alpha_skew,
    check_powerseries_q_alpha_skew,
    check_property,
    is_commutative,
    is_domain,
    is_reduced,
    is_reversible,
    is_rigid,
    is_semicommutative,
    is_symmetric,
    replay_witness,
    twisted_chain_product,
)

__version__ = "0.1.0"
