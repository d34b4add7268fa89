"""fittutor: real-time posture coaching by per-limb slope comparison.

Compares a user's 2D skeleton (17 keypoints from any pose detector) against a
stored reference pose, limb by limb, and emits match-or-correct feedback per
frame. Ships a CLI (extract / compare / serve) and a streaming session server.
"""

from ._kernel import KERNEL_NAME
from .compare import (
    VERTICAL,
    ComparisonConfig,
    Feedback,
    LimbOrientation,
    PairFeedback,
    ProfileEntry,
    ReferencePose,
    SlopeProfile,
    Status,
    ValidityReport,
    compare_angle_mode,
    compare_profiles,
    compute_slope,
    extract_profile,
    make_reference,
    make_suggestion,
    validate_frame,
)
from .documents import (
    adapt_external_keypoints,
    parse_feedback,
    parse_frame,
    parse_reference,
    parse_report,
    serialize_feedback,
    serialize_frame,
    serialize_reference,
    serialize_report,
)
from .errors import (
    DegeneratePair,
    DocumentError,
    DuplicatePart,
    FitTutorError,
    MalformedDocument,
    MissingPart,
    OutOfRangeScore,
    PairSetMismatch,
    UnknownPartName,
)
from .session import (
    FrameFeedback,
    PairCounts,
    Session,
    SessionConfig,
    SessionReport,
    aggregate_report,
    apply_debounce,
    process_stream,
)
from .skeleton import (
    EXTENDED_PAIRS,
    TABLE2_PAIRS,
    BodyPart,
    JointPair,
    Keypoint,
    LimbClass,
    PoseFrame,
    mirror_frame,
    pair_set,
)

__version__ = "0.1.0"

__all__ = [
    "BodyPart",
    "ComparisonConfig",
    "DegeneratePair",
    "DocumentError",
    "DuplicatePart",
    "EXTENDED_PAIRS",
    "Feedback",
    "FitTutorError",
    "FrameFeedback",
    "JointPair",
    "KERNEL_NAME",
    "Keypoint",
    "LimbClass",
    "LimbOrientation",
    "MalformedDocument",
    "MissingPart",
    "OutOfRangeScore",
    "PairCounts",
    "PairFeedback",
    "PairSetMismatch",
    "PoseFrame",
    "ProfileEntry",
    "ReferencePose",
    "Session",
    "SessionConfig",
    "SessionReport",
    "SlopeProfile",
    "Status",
    "TABLE2_PAIRS",
    "UnknownPartName",
    "VERTICAL",
    "ValidityReport",
    "adapt_external_keypoints",
    "aggregate_report",
    "apply_debounce",
    "compare_angle_mode",
    "compare_profiles",
    "compute_slope",
    "extract_profile",
    "make_reference",
    "make_suggestion",
    "mirror_frame",
    "pair_set",
    "parse_feedback",
    "parse_frame",
    "parse_reference",
    "parse_report",
    "process_stream",
    "serialize_feedback",
    "serialize_frame",
    "serialize_reference",
    "serialize_report",
    "validate_frame",
]
