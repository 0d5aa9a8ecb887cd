"""Cox quotient presentations and symbolic A1-homotopy reports for smooth
proper toric fans, with independent brute-force oracles for every
combinatorial step."""

from ._version import __version__
from .cox import (
    MonomialIdeal,
    PicardGroup,
    SubspaceArrangement,
    arrangement,
    arrangement_bruteforce,
    irrelevant_ideal,
    minimal_nonfaces,
    pairwise_intersection_ok,
    picard_group,
)
from .errors import (
    FanError,
    InvalidParameters,
    MalformedInput,
    NonUnimodularCone,
    NotAFace,
    NotPointed,
    NotPure,
    NotSmoothProper,
    RayCollision,
    TooSmall,
    TorsionDetected,
)
from .fan import (
    Fan,
    Finding,
    ValidationReport,
    hirzebruch,
    kleinschmidt,
    projective_space,
    star_subdivision,
    validate,
)
from .geometry import (
    HalfspaceRep,
    extreme_rays,
    h_representation,
    intersect_in_common_face,
    is_complete,
)
from .homotopy import (
    DirectSum,
    Extension,
    GroupExpr,
    HomotopyReport,
    MWPower,
    Partial,
    TorusPower,
    Trivial,
    TRIVIAL,
    analyze,
    cox_cover_homotopy,
    direct_sum,
    extension,
    group_from_json,
    group_to_json,
    kleinschmidt_case,
    kmw,
    normalize,
    render,
    surjection_onto,
    torus,
)

__all__ = [
    "__version__",
    "Fan",
    "Finding",
    "ValidationReport",
    "validate",
    "projective_space",
    "hirzebruch",
    "kleinschmidt",
    "star_subdivision",
    "HalfspaceRep",
    "h_representation",
    "extreme_rays",
    "intersect_in_common_face",
    "is_complete",
    "MonomialIdeal",
    "SubspaceArrangement",
    "PicardGroup",
    "irrelevant_ideal",
    "minimal_nonfaces",
    "arrangement",
    "arrangement_bruteforce",
    "pairwise_intersection_ok",
    "picard_group",
    "GroupExpr",
    "Trivial",
    "TRIVIAL",
    "TorusPower",
    "MWPower",
    "DirectSum",
    "Extension",
    "Partial",
    "normalize",
    "render",
    "torus",
    "kmw",
    "direct_sum",
    "extension",
    "surjection_onto",
    "group_to_json",
    "group_from_json",
    "HomotopyReport",
    "analyze",
    "cox_cover_homotopy",
    "kleinschmidt_case",
    "FanError",
    "MalformedInput",
    "InvalidParameters",
    "NonUnimodularCone",
    "NotPointed",
    "NotPure",
    "NotAFace",
    "TooSmall",
    "RayCollision",
    "TorsionDetected",
    "NotSmoothProper",
]
