"""Limb-slope comparison engine.

A frame's slope profile maps each configured joint pair to its limb
orientation (a finite dy/dx slope, or vertical) plus the unit direction of the
segment. Comparing a user profile against a reference profile yields one
verdict per pair: a match inside the tolerance band, a directional correction,
or not-visible when detection confidence is too low.

The per-pair arithmetic lives in ``fittutor._kernel`` (compiled when
available); this module owns the domain types and the contracts.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from enum import Enum

from . import _kernel
from .errors import DegeneratePair, PairSetMismatch
from .skeleton import (
    PART_INDEX,
    JointPair,
    LimbClass,
    PoseFrame,
    pair_set,
)

VERTICAL_EPS = _kernel.VERTICAL_EPS


@dataclass(frozen=True)
class LimbOrientation:
    """Orientation of a limb segment: finite slope (dy/dx) or vertical."""

    slope: float | None = None

    @property
    def is_vertical(self) -> bool:
        return self.slope is None

    def __repr__(self) -> str:
        if self.slope is None:
            return "Vertical"
        return f"Finite({self.slope!r})"


VERTICAL = LimbOrientation(None)


class Status(Enum):
    """Per-pair comparison verdict."""

    MATCH = "Match"
    MOVE_UP = "MoveUp"
    MOVE_DOWN = "MoveDown"
    MOVE_LEFT = "MoveLeft"
    MOVE_RIGHT = "MoveRight"
    NOT_VISIBLE = "NotVisible"
    INDETERMINATE = "Indeterminate"


_STATUS_BY_CODE = {
    _kernel.MATCH: Status.MATCH,
    _kernel.MOVE_UP: Status.MOVE_UP,
    _kernel.MOVE_DOWN: Status.MOVE_DOWN,
    _kernel.MOVE_LEFT: Status.MOVE_LEFT,
    _kernel.MOVE_RIGHT: Status.MOVE_RIGHT,
    _kernel.NOT_VISIBLE: Status.NOT_VISIBLE,
    _kernel.INDETERMINATE: Status.INDETERMINATE,
}

STATUS_BY_NAME = {status.value: status for status in Status}


@dataclass(frozen=True)
class ComparisonConfig:
    """Knobs for profile extraction and comparison.

    tolerance is the inclusive slope-difference band; min_score gates limb
    visibility; mode "angle" switches to line-orientation comparison with
    angle_tolerance_deg, which behaves uniformly near vertical where raw
    slopes explode.
    """

    tolerance: float = 0.5
    min_score: float = 0.5
    pairs: tuple[JointPair, ...] = ()
    pair_set_name: str = "table2"
    mode: str = "slope"
    angle_tolerance_deg: float = 15.0

    def __post_init__(self) -> None:
        if not self.pairs:
            object.__setattr__(self, "pairs", pair_set(self.pair_set_name))
        if not self.tolerance > 0:
            raise ValueError("tolerance must be positive")
        if not 0.0 <= self.min_score <= 1.0:
            raise ValueError("min_score must be within [0, 1]")
        if self.mode not in ("slope", "angle"):
            raise ValueError(f"unknown mode {self.mode!r}")
        if not self.angle_tolerance_deg > 0:
            raise ValueError("angle_tolerance_deg must be positive")
        ids = [p.id for p in self.pairs]
        if len(set(ids)) != len(ids):
            raise ValueError("pair ids must be unique")

    @property
    def pair_ids(self) -> tuple[str, ...]:
        return tuple(p.id for p in self.pairs)


@dataclass(frozen=True)
class ProfileEntry:
    """One pair's orientation; orientation is None when the pair is invalid."""

    orientation: LimbOrientation | None
    valid: bool
    norm_dy: float
    norm_dx: float


SlopeProfile = dict[str, ProfileEntry]

_INVALID_ENTRY = ProfileEntry(None, False, 0.0, 0.0)


@dataclass(frozen=True)
class PairFeedback:
    """Verdict for one pair; deviation is the absolute slope difference,
    present only when both orientations are finite and valid."""

    status: Status
    deviation: float | None = None


Feedback = dict[str, PairFeedback]


def compute_slope(
    p1: tuple[float, float],
    p2: tuple[float, float],
    limb_length: float | None = None,
) -> LimbOrientation:
    """Slope of the segment p1-p2: (y2-y1)/(x2-x1), or Vertical when dx is
    negligible against the limb length. Symmetric in argument order."""
    if p1 == p2:
        raise DegeneratePair(f"coincident points {p1}")
    dx = p2[0] - p1[0]
    dy = p2[1] - p1[1]
    if limb_length is None:
        limb_length = math.sqrt(dx * dx + dy * dy)
    if abs(dx) < VERTICAL_EPS * limb_length:
        return VERTICAL
    return LimbOrientation(dy / dx)


def _frame_arrays(frame: PoseFrame):
    # Coordinates may be ints in parsed documents; the kernels expect doubles.
    xs = [0.0] * 17
    ys = [0.0] * 17
    ss = [0.0] * 17
    for i, kp in enumerate(frame.keypoints):
        xs[i] = float(kp.x)
        ys[i] = float(kp.y)
        ss[i] = float(kp.score)
    return xs, ys, ss


def _pair_indices(pairs: tuple[JointPair, ...]):
    prox = [PART_INDEX[p.proximal] for p in pairs]
    dist = [PART_INDEX[p.distal] for p in pairs]
    return prox, dist


def _entry_from_flat(flat) -> ProfileEntry:
    valid, vertical, slope, norm_dy, norm_dx = flat
    if not valid:
        return _INVALID_ENTRY
    orientation = VERTICAL if vertical else LimbOrientation(slope)
    return ProfileEntry(orientation, True, norm_dy, norm_dx)


def extract_profile(frame: PoseFrame, config: ComparisonConfig) -> SlopeProfile:
    """Build the slope profile of a frame over the configured pairs.

    Pairs whose endpoint scores fall below min_score, or whose endpoints
    coincide, come back with valid=False rather than raising.
    """
    xs, ys, ss = _frame_arrays(frame)
    prox, dist = _pair_indices(config.pairs)
    flat = _kernel.extract_pairs(xs, ys, ss, prox, dist, config.min_score)
    return {
        pair.id: _entry_from_flat(entry) for pair, entry in zip(config.pairs, flat)
    }


def _flat_from_entry(entry: ProfileEntry):
    if not entry.valid:
        return (False, False, 0.0, 0.0, 0.0)
    assert entry.orientation is not None
    if entry.orientation.is_vertical:
        return (True, True, 0.0, entry.norm_dy, entry.norm_dx)
    return (True, False, entry.orientation.slope, entry.norm_dy, entry.norm_dx)


def _check_pair_sets(
    ref: SlopeProfile, user: SlopeProfile, config: ComparisonConfig
) -> None:
    ids = config.pair_ids
    if tuple(ref) != ids or tuple(user) != ids:
        raise PairSetMismatch(
            f"profiles cover {tuple(ref)} / {tuple(user)}, config expects {ids}"
        )


def _compare(
    ref: SlopeProfile,
    user: SlopeProfile,
    config: ComparisonConfig,
    angle_mode: bool,
) -> Feedback:
    _check_pair_sets(ref, user, config)
    ref_flat = [_flat_from_entry(ref[p.id]) for p in config.pairs]
    user_flat = [_flat_from_entry(user[p.id]) for p in config.pairs]
    axes = [
        _kernel.AXIS_VERTICAL if p.limb_class is LimbClass.ARM else _kernel.AXIS_HORIZONTAL
        for p in config.pairs
    ]
    results = _kernel.compare_pairs(
        ref_flat,
        user_flat,
        axes,
        config.tolerance,
        angle_mode,
        config.angle_tolerance_deg,
    )
    return {
        pair.id: PairFeedback(_STATUS_BY_CODE[code], deviation)
        for pair, (code, deviation) in zip(config.pairs, results)
    }


def compare_profiles(
    ref: SlopeProfile, user: SlopeProfile, config: ComparisonConfig
) -> Feedback:
    """Compare a user profile against a reference, one verdict per pair.

    Slope mode: match when both vertical or |user - ref| <= tolerance
    (inclusive); a vertical/finite mix is a mismatch steered by the unit
    direction. Angle mode delegates to compare_angle_mode. Either side
    invalid yields NotVisible.
    """
    if config.mode == "angle":
        return _compare(ref, user, config, angle_mode=True)
    return _compare(ref, user, config, angle_mode=False)


def compare_angle_mode(
    ref: SlopeProfile, user: SlopeProfile, config: ComparisonConfig
) -> Feedback:
    """Compare by line orientation: match when the wrapped angle difference
    stays within angle_tolerance_deg. Orientation wraps at 180 degrees, so
    near-vertical limbs with opposite slope signs compare as close."""
    return _compare(ref, user, config, angle_mode=True)


def make_suggestion(
    pair: JointPair, ref: ProfileEntry, user: ProfileEntry
) -> Status:
    """Direction to move a limb that failed the tolerance test.

    Arms correct vertically: the user's segment pointing farther down the
    image than the reference (larger norm_dy, +y down) means the limb hangs
    too low, so MoveUp. Legs report horizontal displacement of the distal
    end: larger norm_dx means displaced toward image +x, so MoveRight.
    Exactly equal components are Indeterminate.
    """
    if pair.limb_class is LimbClass.ARM:
        if user.norm_dy > ref.norm_dy:
            return Status.MOVE_UP
        if user.norm_dy < ref.norm_dy:
            return Status.MOVE_DOWN
        return Status.INDETERMINATE
    if user.norm_dx > ref.norm_dx:
        return Status.MOVE_RIGHT
    if user.norm_dx < ref.norm_dx:
        return Status.MOVE_LEFT
    return Status.INDETERMINATE


@dataclass(frozen=True)
class ValidityReport:
    """Which configured pairs are unusable in a frame; usable when at least
    one pair remains valid."""

    usable: bool
    invalid_pairs: tuple[str, ...]


def validate_frame(frame: PoseFrame, config: ComparisonConfig) -> ValidityReport:
    """Report pairs that cannot be compared (low score or degenerate limb).

    Never raises on bad content; an unusable frame simply lists every pair.
    """
    profile = extract_profile(frame, config)
    invalid = tuple(pid for pid in config.pair_ids if not profile[pid].valid)
    return ValidityReport(usable=len(invalid) < len(config.pairs), invalid_pairs=invalid)


@dataclass(frozen=True)
class ReferencePose:
    """A named stored pose: frame plus its profile under a fixed config.

    The profile is recomputable from the frame; construction enforces that the
    stored copy matches, so a reference loaded from disk is always consistent.
    """

    name: str
    frame: PoseFrame
    config: ComparisonConfig
    profile: SlopeProfile = field(default_factory=dict)

    def __post_init__(self) -> None:
        recomputed = extract_profile(self.frame, self.config)
        if not self.profile:
            object.__setattr__(self, "profile", recomputed)
        elif self.profile != recomputed:
            raise ValueError(
                f"reference {self.name!r}: stored profile does not match its frame"
            )


def make_reference(
    name: str, frame: PoseFrame, config: ComparisonConfig | None = None
) -> ReferencePose:
    """Extract and store a reference pose under the given config."""
    return ReferencePose(name=name, frame=frame, config=config or ComparisonConfig())
