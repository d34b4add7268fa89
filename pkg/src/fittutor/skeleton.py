"""Skeleton data model: body parts, keypoints, pose frames and joint pairs.

All types are immutable values; every operation here is a pure function.
Coordinates are image coordinates: origin top-left, +x rightward, +y downward.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, replace
from enum import Enum

from .errors import DuplicatePart, MissingPart, OutOfRangeScore


class BodyPart(Enum):
    """The 17 detectable body parts, named exactly as detectors export them."""

    NOSE = "nose"
    LEFT_EYE = "leftEye"
    RIGHT_EYE = "rightEye"
    LEFT_EAR = "leftEar"
    RIGHT_EAR = "rightEar"
    LEFT_SHOULDER = "leftShoulder"
    RIGHT_SHOULDER = "rightShoulder"
    LEFT_ELBOW = "leftElbow"
    RIGHT_ELBOW = "rightElbow"
    LEFT_WRIST = "leftWrist"
    RIGHT_WRIST = "rightWrist"
    LEFT_HIP = "leftHip"
    RIGHT_HIP = "rightHip"
    LEFT_KNEE = "leftKnee"
    RIGHT_KNEE = "rightKnee"
    LEFT_ANKLE = "leftAnkle"
    RIGHT_ANKLE = "rightAnkle"


#: Canonical part order used for serialization and array layouts.
PART_ORDER: tuple[BodyPart, ...] = tuple(BodyPart)

PART_INDEX: dict[BodyPart, int] = {part: i for i, part in enumerate(PART_ORDER)}

PART_BY_NAME: dict[str, BodyPart] = {part.value: part for part in BodyPart}

#: left* <-> right* partner for each sided part; nose maps to itself.
MIRROR_PARTNER: dict[BodyPart, BodyPart] = {
    part: (
        PART_BY_NAME["right" + part.value[4:]]
        if part.value.startswith("left")
        else PART_BY_NAME["left" + part.value[5:]]
        if part.value.startswith("right")
        else part
    )
    for part in BodyPart
}


@dataclass(frozen=True)
class Keypoint:
    """One detected body part: image position plus detection confidence."""

    part: BodyPart
    x: float
    y: float
    score: float

    def __post_init__(self) -> None:
        if not (math.isfinite(self.x) and math.isfinite(self.y)):
            raise ValueError(f"{self.part.value}: coordinates must be finite")
        if not 0.0 <= self.score <= 1.0:
            raise OutOfRangeScore(
                f"{self.part.value}: score {self.score} outside [0, 1]"
            )


@dataclass(frozen=True)
class PoseFrame:
    """A full 17-keypoint skeleton for one image or video frame.

    Keypoints are stored in canonical part order regardless of input order.
    Keypoints may lie outside the image bounds; visibility is a matter of
    score, not position.
    """

    timestamp_ms: int
    width: float
    height: float
    keypoints: tuple[Keypoint, ...]

    def __post_init__(self) -> None:
        if not self.width > 0 or not self.height > 0:
            raise ValueError("frame dimensions must be positive")
        seen = set()
        for kp in self.keypoints:
            if kp.part in seen:
                raise DuplicatePart(kp.part.value)
            seen.add(kp.part)
        if len(seen) != len(BodyPart):
            missing = sorted(p.value for p in BodyPart if p not in seen)
            raise MissingPart(", ".join(missing))
        ordered = tuple(sorted(self.keypoints, key=lambda kp: PART_INDEX[kp.part]))
        object.__setattr__(self, "keypoints", ordered)

    def keypoint(self, part: BodyPart) -> Keypoint:
        return self.keypoints[PART_INDEX[part]]


class LimbClass(Enum):
    """Determines the suggestion axis: arms correct vertically, legs horizontally."""

    ARM = "arm"
    LEG = "leg"


@dataclass(frozen=True)
class JointPair:
    """An ordered (proximal, distal) pair of parts whose segment is compared."""

    id: str
    proximal: BodyPart
    distal: BodyPart
    limb_class: LimbClass

    def __post_init__(self) -> None:
        if self.proximal is self.distal:
            raise ValueError(f"{self.id}: proximal and distal must differ")


#: Default comparison set: shoulder-elbow and hip-ankle on both sides.
TABLE2_PAIRS: tuple[JointPair, ...] = (
    JointPair("leftArm", BodyPart.LEFT_SHOULDER, BodyPart.LEFT_ELBOW, LimbClass.ARM),
    JointPair("rightArm", BodyPart.RIGHT_SHOULDER, BodyPart.RIGHT_ELBOW, LimbClass.ARM),
    JointPair("leftLeg", BodyPart.LEFT_HIP, BodyPart.LEFT_ANKLE, LimbClass.LEG),
    JointPair("rightLeg", BodyPart.RIGHT_HIP, BodyPart.RIGHT_ANKLE, LimbClass.LEG),
)

#: Extended set adds the elbow-wrist segments so forearms are coached too.
EXTENDED_PAIRS: tuple[JointPair, ...] = TABLE2_PAIRS + (
    JointPair("leftForearm", BodyPart.LEFT_ELBOW, BodyPart.LEFT_WRIST, LimbClass.ARM),
    JointPair("rightForearm", BodyPart.RIGHT_ELBOW, BodyPart.RIGHT_WRIST, LimbClass.ARM),
)

PAIR_SETS: dict[str, tuple[JointPair, ...]] = {
    "table2": TABLE2_PAIRS,
    "extended": EXTENDED_PAIRS,
}


def pair_set(name: str) -> tuple[JointPair, ...]:
    """Look up a named joint-pair set ("table2" or "extended")."""
    try:
        return PAIR_SETS[name]
    except KeyError:
        raise ValueError(f"unknown pair set {name!r}") from None


def mirror_frame(frame: PoseFrame) -> PoseFrame:
    """Flip a frame horizontally: x -> width - x, left/right parts swapped.

    Timestamps, scores and y values are unchanged. Involutive (applying twice
    restores the frame) whenever width - x is representable exactly, which
    holds for pixel-grid coordinates.
    """
    flipped = tuple(
        replace(kp, part=MIRROR_PARTNER[kp.part], x=frame.width - kp.x)
        for kp in frame.keypoints
    )
    return replace(frame, keypoints=flipped)
