"""Twisted torus links T(p, q; r, s): normalization, invariants, classification and a braid oracle."""
from .braids import (
    BraidWord,
    LinkingSummary,
    closure_analysis,
    torus_braid,
    twist_region_count,
    twisted_torus_braid,
)
from .classifier import (
    AdjacentCount,
    EvenTwistRegion,
    GcdExceedsTwo,
    Hyperbolic,
    KqForm,
    NotHyperbolic,
    TorusLink,
    Undetermined,
    UndeterminedReason,
    classify,
    classify_t_link,
)
from .codes import export_code, parse_braid_word
from .errors import (
    NotALink,
    NotApplicable,
    NotThisCase,
    OutOfRange,
    TwistedTorusError,
    Unsupported,
    UnsupportedShape,
)
from .formulas import (
    KqCompanionData,
    TwistRegionSplit,
    companion_adjacent,
    companion_kq,
    pairwise_linking_number,
    parallel_linking_number,
    twist_region_split,
)
from .params import (
    NormalForm,
    TLinkParams,
    TorusLinkParams,
    TwistedTorusParams,
    component_count,
    new_params,
    normalize,
    to_t_link,
)
