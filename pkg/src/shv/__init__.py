"""Exact calculus for the super Heisenberg-Virasoro algebra and its modules."""

from .conformal import (
    CheckReport,
    ConformalAlgebraSpec,
    ExtensionAnsatz,
    ExtensionFamily,
    GcPoly,
    RankOneModuleSpec,
    Scalar,
    check_conformal_module,
    check_jacobi,
    check_skew,
    classify_rank_one_extension,
    extension_spec,
    hv_spec,
    jth_products,
    lambda_bracket,
    rank_one_irreducible,
    s_spec,
)
from .induced import (
    BaseModule,
    ConditionsReport,
    FiniteTableModule,
    InducedVector,
    ProbeTrace,
    WhittakerBase,
    annihilation_bound,
    degree_after_lowering,
    dim_check_t1,
    random_vector,
    random_word,
    simplicity_probe,
    support_and_degree,
    validate_conditions,
    verma,
    whittaker,
)
from .order import (
    BoolIndex,
    IndexVec,
    PBWMonomial,
    beps,
    eps,
    lower_prime,
    min_support,
    principal_compare,
    rev_lex_compare,
    weight,
)
from .superalgebra import (
    G,
    I,
    L,
    NEVEU_SCHWARZ,
    QuotientAlgebra,
    RAMOND,
    S_alpha_beta,
    S_rst,
    SubalgebraSpec,
    SuperElement,
    TagMismatchError,
    T_sub,
    bracket,
    check_ns_embedding,
    formal_bracket,
    gen,
    lie_matches_bracket,
    lie_of,
    member,
    ns_embed,
    ns_gen,
    quotient_algebra,
    rbracket,
)

__all__ = [name for name in dir() if not name.startswith("_")]
