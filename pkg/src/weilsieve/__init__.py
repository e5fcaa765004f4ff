"""Exact real-Weil-polynomial enumeration, elimination, and curve verification."""

from .intpoly import (
    FactorMultiset,
    FactorizationFailed,
    IntPoly,
    NotDivisible,
    RootCount,
    ZeroInput,
    count_real_roots,
    count_real_roots_in,
    factor_int_poly,
    is_squarefree_integer,
    poly_divexact,
    poly_gcd,
    poly_mul,
    resultant,
    squarefree_part,
    weil_all_roots_in,
    yun_decomposition,
)
from .weil import (
    ConstraintCheck,
    ConstraintSet,
    NonIntegralPlaceCount,
    NotWeilSymmetric,
    WeilProfile,
    minimal_factor_multiplicity,
    mobius,
    nonneg_horizon,
    real_to_weil,
    satisfies_constraints,
    weil_to_real,
)
from .enumeration import enumerate_real_weil, extension_range
from .eliminate import (
    Verdict,
    eliminate_all,
    resultant_one_test,
    supersingular_factor_test,
    verdicts_to_csv,
    verdicts_to_json,
)
from .coverproof import (
    Certificate,
    MissingBound,
    Step,
    StepFailed,
    load_point_bounds,
    point_bound,
    replay_theorem2,
)
from .gf2m import DivisionByZero, GFContext, NoSuchElement, gf_context
from .ffcurve import (
    DEFAULT_COVER,
    DegreeMismatch,
    InconsistentCounts,
    KummerCoverSpec,
    LiftFailed,
    PlaceRecord,
    brute_force_count_D,
    count_points_C,
    divisor_of_f,
    genus_C_rh,
    kummer_place_behavior,
    local_series_y,
    places_D,
    places_to_csv,
    real_weil_of_C,
)

__all__ = [
    "FactorMultiset",
    "FactorizationFailed",
    "IntPoly",
    "NotDivisible",
    "RootCount",
    "ZeroInput",
    "count_real_roots",
    "count_real_roots_in",
    "factor_int_poly",
    "is_squarefree_integer",
    "poly_divexact",
    "poly_gcd",
    "poly_mul",
    "resultant",
    "squarefree_part",
    "weil_all_roots_in",
    "yun_decomposition",
    "ConstraintCheck",
    "ConstraintSet",
    "NonIntegralPlaceCount",
    "NotWeilSymmetric",
    "WeilProfile",
    "minimal_factor_multiplicity",
    "mobius",
    "nonneg_horizon",
    "real_to_weil",
    "satisfies_constraints",
    "weil_to_real",
    "enumerate_real_weil",
    "extension_range",
    "Verdict",
    "eliminate_all",
    "resultant_one_test",
    "supersingular_factor_test",
    "verdicts_to_csv",
    "verdicts_to_json",
    "Certificate",
    "MissingBound",
    "Step",
    "StepFailed",
    "load_point_bounds",
    "point_bound",
    "replay_theorem2",
    "DivisionByZero",
    "GFContext",
    "NoSuchElement",
    "gf_context",
    "DEFAULT_COVER",
    "DegreeMismatch",
    "InconsistentCounts",
    "KummerCoverSpec",
    "LiftFailed",
    "PlaceRecord",
    "brute_force_count_D",
    "count_points_C",
    "divisor_of_f",
    "genus_C_rh",
    "kummer_place_behavior",
    "local_series_y",
    "places_D",
    "places_to_csv",
    "real_weil_of_C",
]

__version__ = "0.1.0"
