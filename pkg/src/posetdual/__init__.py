"""Isotone-map ideals L(P,Q) of finite posets and their Alexander duals."""

from .classifier import (
    DualityVerdict,
    PairReport,
    Witness,
    build_disconnected_witness,
    build_high_prime,
    chain_sum_dual,
    find_non_co_rooted_config,
    find_non_rooted_config,
    predict_duality,
    verify_pair,
    verify_witness,
)
from .duality import (
    alexander_dual,
    check_min_eq_hom,
    duality_holds_computed,
    ideal_height,
    is_minimal_cover,
    minimal_covers,
    minimal_transversals,
    prime_of_map,
)
from .errors import CapExceeded, CycleError, PosetError
from .homset import IsotoneMap, compose, enumerate_hom, fixpoints, is_isotone
from .ideal import (
    Ideal,
    build_L,
    embed,
    ideal_equals,
    ideal_product,
    ideal_sum,
    monomial_of_map,
    tau,
)
from .poset import (
    Poset,
    antichain,
    canonical_key,
    chain,
    direct_sum,
    generate_posets,
    new_poset,
)
from .sweep import SweepConfig, SweepReport, run_sweep

__version__ = "0.1.0"
