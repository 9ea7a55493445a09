"""Volume entropy of geometric surface-group presentations.

The pipeline: validate the presentation, find the planar cyclic ordering of
the generators (or prove there is none), compute the minimal bigons and the
middle-parameter boundary circle map, assemble its kneading matrix of exact
integer polynomials, and isolate the smallest root of the column-deleted
determinant in (0, 1); the volume entropy is the log of its reciprocal.
A planar-tiling ball serves as an independent growth oracle.

All stages are pure functions over immutable values and safe to call from
any thread; the tiling ball is the one mutable structure and is
single-writer during construction.
"""

from .analysis import AnalysisReport, analyze_presentation
from .bigons import (
    Bigon,
    EPRay,
    all_minimal_bigons,
    centered_continuation,
    extend,
    middle_ray,
    minimal_bigon,
)
from .errors import (
    AddressUndecidableError,
    InconsistentClosureError,
    InexactDivisionError,
    InternalInconsistencyError,
    IterationCapExceededError,
    NoRootInUnitIntervalError,
    NotGeometricError,
    OutOfBuiltRegionError,
    PresentationSyntaxError,
    TieUnresolvedError,
)
from .kneading import (
    KneadingMatrix,
    build_matrix,
    entropy_from_matrix,
    jump_at_cutting_point,
    jump_at_preimage,
)
from .ordering import (
    CyclicOrder,
    compute_cyclic_order,
    orientation_map,
    orientation_of,
    reversing_set,
)
from .polyalg import (
    Poly,
    bareiss_determinant,
    count_roots_in_unit_interval,
    exact_div,
    poly_gcd,
    smallest_root_in_unit_interval,
    squarefree_part,
)
from .presentation import (
    Presentation,
    ShiftTable,
    inverse_word,
    letter_name,
    occurrence_check,
    parse,
    parse_word,
    symmetrized_shifts,
    word_name,
)
from .symbolic import Lap, LapImages, MiddleChart, lap_images, refine_address, split_laps
from .tiling import PlanarComplex, build_ball, sphere_sizes, trace_path

__version__ = "0.1.0"

__all__ = [
    "AnalysisReport",
    "analyze_presentation",
    "Bigon",
    "EPRay",
    "all_minimal_bigons",
    "centered_continuation",
    "extend",
    "middle_ray",
    "minimal_bigon",
    "AddressUndecidableError",
    "InconsistentClosureError",
    "InexactDivisionError",
    "InternalInconsistencyError",
    "IterationCapExceededError",
    "NoRootInUnitIntervalError",
    "NotGeometricError",
    "OutOfBuiltRegionError",
    "PresentationSyntaxError",
    "TieUnresolvedError",
    "KneadingMatrix",
    "build_matrix",
    "entropy_from_matrix",
    "jump_at_cutting_point",
    "jump_at_preimage",
    "CyclicOrder",
    "compute_cyclic_order",
    "orientation_map",
    "orientation_of",
    "reversing_set",
    "Poly",
    "bareiss_determinant",
    "count_roots_in_unit_interval",
    "exact_div",
    "poly_gcd",
    "smallest_root_in_unit_interval",
    "squarefree_part",
    "Presentation",
    "ShiftTable",
    "inverse_word",
    "letter_name",
    "occurrence_check",
    "parse",
    "parse_word",
    "symmetrized_shifts",
    "word_name",
    "Lap",
    "LapImages",
    "MiddleChart",
    "lap_images",
    "refine_address",
    "split_laps",
    "PlanarComplex",
    "build_ball",
    "sphere_sizes",
    "trace_path",
]
