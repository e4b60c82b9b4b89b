"""Total and total Roman domination on geometric unit disk graphs."""

from .approx import (
    TDS_FACTOR,
    TRDS_FACTOR,
    RomanAssignment,
    TotalDominatingSet,
    tds_udg_sc,
    trdf_udg_sc,
    verify_rdf,
    verify_tds,
    verify_trdf,
)
from .errors import (
    InvalidAssignmentError,
    IsolatedMemberError,
    IsolatedVertexError,
    NotDominatingError,
    RetryExhaustedError,
    SizeLimitError,
    UDGDomError,
    UncoverableError,
)
from .estimators import TotalDominatingSetUDG, TotalRomanDominationUDG
from .exact import ExactResult, exact_min_ds, exact_min_rdf, exact_min_tds, exact_min_trdf
from .geometry import (
    Point2D,
    PointSet,
    UnitDiskGraph,
    build_udg,
    isolated_vertices,
    neighbors,
)
from .mis import IndependentSet, check_independent_maximal, maximal_independent_set
from .setcover import (
    CoverSelection,
    SetCoverInstance,
    build_cover_instance,
    exact_set_cover,
    greedy_set_cover,
)

__version__ = "0.1.0"
