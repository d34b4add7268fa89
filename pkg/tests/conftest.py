"""Shared builders for synthetic skeletons and randomized frames."""

from __future__ import annotations

import math
import random

import pytest

from fittutor import BodyPart, Keypoint, PoseFrame

#: Coordinates are quantized to 1/64 px. With integer frame dimensions this
#: keeps mirror (w - x) and translation (x + dx) arithmetic exact in doubles,
#: so the geometric invariants can be asserted without tolerance slop.
GRID = 64


def grid_value(rng: random.Random, lo: float, hi: float) -> float:
    return rng.randrange(int(lo * GRID), int(hi * GRID) + 1) / GRID


def make_frame(
    positions: dict[BodyPart, tuple[float, float]],
    scores: dict[BodyPart, float] | float = 0.95,
    width: float = 640,
    height: float = 480,
    t: int = 0,
) -> PoseFrame:
    """Frame from explicit positions; parts not listed are parked on a shelf
    along the top of the image so they never collide."""
    keypoints = []
    for i, part in enumerate(BodyPart):
        x, y = positions.get(part, (20.0 + 10.0 * i, 10.0))
        score = scores if isinstance(scores, (int, float)) else scores.get(part, 0.95)
        keypoints.append(Keypoint(part, x, y, score))
    return PoseFrame(t, width, height, tuple(keypoints))


def random_frame(
    rng: random.Random,
    width: int = 640,
    height: int = 480,
    t: int = 0,
    min_keypoint_score: float = 0.5,
) -> PoseFrame:
    """A valid random frame on the exact grid; scores are multiples of 1/128.

    Keypoints may fall outside the image bounds, as real detectors produce.
    """
    keypoints = []
    for part in BodyPart:
        x = grid_value(rng, -width / 4, width * 1.25)
        y = grid_value(rng, -height / 4, height * 1.25)
        lo = int(min_keypoint_score * 128)
        score = rng.randrange(lo, 129) / 128
        keypoints.append(Keypoint(part, x, y, score))
    return PoseFrame(t, width, height, tuple(keypoints))


def noisy_random_frame(rng: random.Random, **kwargs) -> PoseFrame:
    """Like random_frame but with occasional low scores and coincident joints."""
    frame = random_frame(rng, min_keypoint_score=0.0, **kwargs)
    if rng.random() < 0.2:
        # Collapse a limb to zero length.
        kps = list(frame.keypoints)
        i, j = rng.sample(range(17), 2)
        kps[j] = Keypoint(kps[j].part, kps[i].x, kps[i].y, kps[j].score)
        frame = PoseFrame(frame.timestamp_ms, frame.width, frame.height, tuple(kps))
    return frame


# Synthetic coach skeleton: every compared limb sits on a 45-degree diagonal
# (slope +1 on the left side, -1 on the right), so rotating a limb by +-20 or
# +-45 degrees always leaves the 0.5 slope-tolerance band.
COACH_POSITIONS: dict[BodyPart, tuple[float, float]] = {
    BodyPart.NOSE: (320.0, 100.0),
    BodyPart.LEFT_EYE: (330.0, 90.0),
    BodyPart.RIGHT_EYE: (310.0, 90.0),
    BodyPart.LEFT_EAR: (345.0, 95.0),
    BodyPart.RIGHT_EAR: (295.0, 95.0),
    BodyPart.LEFT_SHOULDER: (400.0, 150.0),
    BodyPart.RIGHT_SHOULDER: (240.0, 150.0),
    BodyPart.LEFT_ELBOW: (460.0, 210.0),
    BodyPart.RIGHT_ELBOW: (180.0, 210.0),
    BodyPart.LEFT_WRIST: (520.0, 270.0),
    BodyPart.RIGHT_WRIST: (120.0, 270.0),
    BodyPart.LEFT_HIP: (360.0, 280.0),
    BodyPart.RIGHT_HIP: (280.0, 280.0),
    BodyPart.LEFT_KNEE: (400.0, 320.0),
    BodyPart.RIGHT_KNEE: (240.0, 320.0),
    BodyPart.LEFT_ANKLE: (440.0, 360.0),
    BodyPart.RIGHT_ANKLE: (200.0, 360.0),
}


def coach_frame(t: int = 0) -> PoseFrame:
    return make_frame(COACH_POSITIONS, t=t)


def rotate_about(
    center: tuple[float, float], point: tuple[float, float], degrees: float
) -> tuple[float, float]:
    """Rotate point about center; positive angles turn +x toward +y (downward
    in image coordinates)."""
    rad = math.radians(degrees)
    c, s = math.cos(rad), math.sin(rad)
    dx = point[0] - center[0]
    dy = point[1] - center[1]
    return (center[0] + c * dx - s * dy, center[1] + s * dx + c * dy)


@pytest.fixture
def rng() -> random.Random:
    return random.Random(0xF17)
