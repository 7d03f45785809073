"""Calculus of Bockstein dimension types and stable intersections of compacta."""

from bockstein.decorated import (
    Decoration,
    DecoratedNumber,
    Ordering,
    box_add,
    circle_add,
    compare_decorated,
    neg_decoration,
    tensor,
)
from bockstein.dimtype import (
    DimensionType,
    SigmaGroup,
    add_scalar,
    boxplus,
    const_type,
    dim_of,
    eval_sigma,
    le_type,
    make_type,
    ominus,
    oplus,
)
from bockstein.groups import GroupExpr, SigmaSet, dim_wrt_group, parse_group, sigma_basis
from bockstein.theorems import (
    UniverseConfig,
    VerificationReport,
    decomposition_hypothesis,
    enumerate_types,
    union_bound,
    verify_algebra,
    verify_typeminus,
)
from bockstein.classifier import (
    IntersectionQuery,
    Outcome,
    Theorem,
    Verdict,
    atlas,
    classify,
    classify_types,
    embeddings_dense,
    is_boltyanskii,
    tuple_realizable,
)

__version__ = "0.1.0"
