"""Rank-one subshift words, sliding block codes, and factor classification."""

__version__ = "0.1.0"

from .words import (  # noqa: F401
    PeriodReport,
    Word,
    border_array,
    find_occurrences,
    is_period,
    is_period_prefix_form,
    minimal_period,
    periods_from_borders,
    subword,
)
from .construction import (  # noqa: F401
    AffineExtension,
    Decomposition,
    ExplicitExtension,
    FixedPoint,
    LeftTail,
    PeriodicExtension,
    RankOneParams,
    RightTail,
    Stage,
    VPrefixSample,
    build_vn,
    dump_params,
    expected_occurrences,
    language_words,
    load_params,
    point_window,
    scan_decomposition,
    telescope,
    v_prefix,
    vn_length,
    vstar_suffix,
)
from .codes import (  # noqa: F401
    SlidingBlockCode,
    alpha_n,
    apply_code,
    beta_a,
    constant_code,
    dump_code,
    identity_code,
    image_point_window,
    load_code,
    normalize_for_code,
    run_detector_code,
    w_prefix,
    wstar_suffix,
)
from .classify import (  # noqa: F401
    Budgets,
    FactorClassification,
    SpacerProfile,
    classify,
    detect_finite_period,
    invertibility_margin,
    margin_holds,
    revalidate,
    spacer_profile,
    tail_separation_check,
)
from .errors import (  # noqa: F401
    ExtensionExhaustedError,
    HorizonExhaustedError,
    InternalInconsistencyError,
    NeedsTelescopingError,
    NoParseError,
    RankOneError,
    WindowInsufficientError,
)
