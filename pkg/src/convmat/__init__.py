"""Convex (0,1)-matrices: diagrams, ranked essential sets, reconstruction,
margin classes, interchanges, and the lattice of convex matrices."""

from .binmat import (
    BinaryMatrix,
    Comparison,
    Direction,
    Interval,
    MarginPair,
    Position,
    compare,
    connectivity_check,
    convexity_check,
    dominates,
    entrywise_and,
    entrywise_or,
    find_sources,
    is_directed,
    margins,
    rotate,
)
from .classes import (
    FerrersConvexSpec,
    StaircaseProfile,
    block_regular_class,
    enumerate_class,
    ferrers_convex,
    ferrers_matrix,
    is_unimodal,
    sort_rows_to_convex,
    staircase_from_profile,
    two_regular_profile,
    unit_rows_nonempty,
    unit_rows_witness,
)
from .diagram import (
    Diagram,
    FerrersShape,
    RankedEssentialSet,
    diagram,
    essential_set,
    full_essential_set,
    is_ferrers_diagram,
    ranked_essential_set,
)
from .errors import (
    BadInput,
    ConvmatError,
    Inconsistent,
    Infeasible,
    InvalidMove,
    NegativeRank,
    ParseError,
    PreconditionViolated,
    ShapeMismatch,
    SizeExceeded,
    SpecInvalid,
    UnknownProperty,
)
from .interchange import (
    ConvexClassSpec,
    InterchangeMove,
    IntervalRelation,
    OneShiftPair,
    apply_interchange,
    build_convex_class,
    convex_preserving_moves,
    enumerate_interchanges,
    interval_relation,
    is_convex_class,
)
from .lattice import (
    CoverStep,
    convex_hull,
    covers,
    distributivity_witness,
    join,
    maximal_chain,
    meet,
)
from .oracle import SweepReport, enumerate_all, iter_convex, property_ids, run_sweep
from .reconstruct import (
    ReconstructionResult,
    reconstruct,
    reconstruct_detailed,
    reconstruct_directed,
)

__version__ = "0.1.0"
