"""Delta-matroid algebra over small ground sets.

Set systems with the symmetric exchange axiom, twists and minors, handle
slides, GF(2) representability certificates, canonical forms D_{i,j,k,l}
with replayable slide traces, and an exhaustive small-case census."""

from .canon import (
    CanonicalParams,
    ReductionResult,
    build_canonical,
    canonical_params,
    match_canonical,
    reduce,
    reduce_matroid,
)
from .census import (
    CensusReport,
    FailureRecord,
    enumerate_delta_matroids,
    report_dump,
    report_lines,
    verify_small,
)
from .errors import (
    AxiomError,
    DeltaMatroidError,
    EmptyFamilyError,
    NotBinaryError,
    ReductionError,
)
from .gf2 import (
    BinaryCertificate,
    SymmetricBitMatrix,
    default_ground,
    delta_from_matrix,
    principal_invertible,
    recognize_binary,
)
from .matroid import (
    BoundSide,
    Matroid,
    MinorMode,
    SetStatus,
    bound_matroid,
    graphic_matroid,
    has_u24_pattern,
    minor,
    minor_step,
    set_status,
)
from .setsystem import (
    MAX_ELEMENTS,
    GroundSet,
    Parity,
    SetSystem,
    StructureProfile,
    check_ea,
    check_sea,
    direct_sum,
    dual,
    find_isomorphism,
    iter_bits,
    profile,
    subset_key,
    twist,
)
from .slides import SlideTrace, apply_trace, handle_slide
from .textio import (
    ParseError,
    parse_graph,
    parse_matrix,
    parse_system,
    parse_trace,
    serialize_matrix,
    serialize_system,
    serialize_trace,
)

__version__ = "0.1.0"

__all__ = [
    "AxiomError",
    "BinaryCertificate",
    "BoundSide",
    "CanonicalParams",
    "CensusReport",
    "DeltaMatroidError",
    "EmptyFamilyError",
    "FailureRecord",
    "GroundSet",
    "MAX_ELEMENTS",
    "Matroid",
    "MinorMode",
    "NotBinaryError",
    "Parity",
    "ParseError",
    "ReductionError",
    "ReductionResult",
    "SetStatus",
    "SetSystem",
    "SlideTrace",
    "StructureProfile",
    "SymmetricBitMatrix",
    "apply_trace",
    "bound_matroid",
    "build_canonical",
    "canonical_params",
    "check_ea",
    "check_sea",
    "default_ground",
    "delta_from_matrix",
    "direct_sum",
    "dual",
    "enumerate_delta_matroids",
    "find_isomorphism",
    "graphic_matroid",
    "handle_slide",
    "has_u24_pattern",
    "iter_bits",
    "match_canonical",
    "minor",
    "minor_step",
    "parse_graph",
    "parse_matrix",
    "parse_system",
    "parse_trace",
    "principal_invertible",
    "profile",
    "recognize_binary",
    "reduce",
    "reduce_matroid",
    "report_dump",
    "report_lines",
    "serialize_matrix",
    "serialize_system",
    "serialize_trace",
    "set_status",
    "subset_key",
    "twist",
    "verify_small",
]
