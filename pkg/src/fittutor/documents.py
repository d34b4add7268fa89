"""Canonical JSON documents: frames, references, feedback, reports.

One canonical form per document: fixed key order, keypoints and pairs in
configuration order, compact separators, floats via repr (lossless round
trip). Parsing is strict about the fields it knows and ignores unknown extras.
"""

from __future__ import annotations

import json
from typing import Any

from .compare import (
    STATUS_BY_NAME,
    ComparisonConfig,
    PairFeedback,
    ProfileEntry,
    ReferencePose,
)
from .errors import MalformedDocument, UnknownPartName
from .session import (
    FrameFeedback,
    PairCounts,
    SessionConfig,
    SessionReport,
)
from .skeleton import (
    PART_BY_NAME,
    BodyPart,
    JointPair,
    Keypoint,
    LimbClass,
    PoseFrame,
)

#: Frame dimensions assumed when an external export omits them.
DEFAULT_WIDTH = 640.0
DEFAULT_HEIGHT = 480.0


def _dumps(obj: Any) -> str:
    return json.dumps(obj, ensure_ascii=False, separators=(",", ":"), allow_nan=False)


def _loads(text: str | bytes) -> Any:
    if isinstance(text, (bytes, bytearray)):
        try:
            text = text.decode("utf-8")
        except UnicodeDecodeError as exc:
            raise MalformedDocument(f"not UTF-8: {exc}") from None
    try:
        return json.loads(text, parse_constant=_reject_constant)
    except json.JSONDecodeError as exc:
        raise MalformedDocument(str(exc)) from None


def _reject_constant(name: str) -> Any:
    raise MalformedDocument(f"non-finite number {name!r} not allowed")


def _require(obj: Any, key: str, where: str) -> Any:
    if not isinstance(obj, dict):
        raise MalformedDocument(f"{where}: expected an object")
    if key not in obj:
        raise MalformedDocument(f"{where}: missing {key!r}")
    return obj[key]


def _number(value: Any, where: str) -> float:
    if isinstance(value, bool) or not isinstance(value, (int, float)):
        raise MalformedDocument(f"{where}: expected a number, got {value!r}")
    return value


def _integer(value: Any, where: str) -> int:
    if isinstance(value, bool) or not isinstance(value, int):
        raise MalformedDocument(f"{where}: expected an integer, got {value!r}")
    return value


def _part(name: Any, where: str) -> BodyPart:
    if not isinstance(name, str) or name not in PART_BY_NAME:
        raise MalformedDocument(f"{where}: unknown part {name!r}")
    return PART_BY_NAME[name]


# ---------------------------------------------------------------------------
# Frame documents


def frame_to_obj(frame: PoseFrame) -> dict:
    return {
        "t": frame.timestamp_ms,
        "w": frame.width,
        "h": frame.height,
        "keypoints": [
            {"part": kp.part.value, "x": kp.x, "y": kp.y, "score": kp.score}
            for kp in frame.keypoints
        ],
    }


def serialize_frame(frame: PoseFrame) -> str:
    """Canonical frame document; equal frames serialize byte-identically."""
    return _dumps(frame_to_obj(frame))


def frame_from_obj(obj: Any) -> PoseFrame:
    t = _integer(_require(obj, "t", "frame"), "frame.t")
    w = _number(_require(obj, "w", "frame"), "frame.w")
    h = _number(_require(obj, "h", "frame"), "frame.h")
    raw = _require(obj, "keypoints", "frame")
    if not isinstance(raw, list):
        raise MalformedDocument("frame.keypoints: expected a list")
    keypoints = []
    for entry in raw:
        part = _part(_require(entry, "part", "keypoint"), "keypoint.part")
        x = _number(_require(entry, "x", "keypoint"), f"{part.value}.x")
        y = _number(_require(entry, "y", "keypoint"), f"{part.value}.y")
        score = _number(_require(entry, "score", "keypoint"), f"{part.value}.score")
        keypoints.append(Keypoint(part, x, y, score))
    try:
        return PoseFrame(t, w, h, tuple(keypoints))
    except ValueError as exc:
        raise MalformedDocument(str(exc)) from None


def parse_frame(text: str | bytes) -> PoseFrame:
    """Parse a canonical frame document, validating the 17-part invariant."""
    return frame_from_obj(_loads(text))


def adapt_external_keypoints(
    text: str | bytes,
    default_width: float = DEFAULT_WIDTH,
    default_height: float = DEFAULT_HEIGHT,
) -> PoseFrame:
    """Convert a detector's keypoint export into a PoseFrame.

    Accepts the common shape: a list of {"part", "position": {"x", "y"},
    "score"} entries, or an object wrapping that list under "keypoints" with
    optional "width"/"height"/"t". Part names must match our names exactly;
    near-misses like "left_shoulder" are rejected rather than guessed at.
    """
    data = _loads(text)
    t = 0
    width: float = default_width
    height: float = default_height
    if isinstance(data, dict):
        if "t" in data:
            t = _integer(data["t"], "export.t")
        if "width" in data:
            width = _number(data["width"], "export.width")
        if "height" in data:
            height = _number(data["height"], "export.height")
        data = _require(data, "keypoints", "export")
    if not isinstance(data, list):
        raise MalformedDocument("export: expected a keypoint list")
    keypoints = []
    for entry in data:
        name = _require(entry, "part", "export keypoint")
        if not isinstance(name, str) or name not in PART_BY_NAME:
            raise UnknownPartName(repr(name))
        pos = _require(entry, "position", "export keypoint")
        x = _number(_require(pos, "x", "position"), f"{name}.x")
        y = _number(_require(pos, "y", "position"), f"{name}.y")
        score = _number(_require(entry, "score", "export keypoint"), f"{name}.score")
        keypoints.append(Keypoint(PART_BY_NAME[name], x, y, score))
    return PoseFrame(t, width, height, tuple(keypoints))


# ---------------------------------------------------------------------------
# Config documents


def config_to_obj(config: ComparisonConfig) -> dict:
    return {
        "tolerance": config.tolerance,
        "minScore": config.min_score,
        "pairs": [
            {
                "id": p.id,
                "proximal": p.proximal.value,
                "distal": p.distal.value,
                "limbClass": p.limb_class.value,
            }
            for p in config.pairs
        ],
        "pairSetName": config.pair_set_name,
        "mode": config.mode,
        "angleToleranceDeg": config.angle_tolerance_deg,
    }


def config_from_obj(obj: Any) -> ComparisonConfig:
    if not isinstance(obj, dict):
        raise MalformedDocument("config: expected an object")
    kwargs: dict[str, Any] = {}
    if "tolerance" in obj:
        kwargs["tolerance"] = _number(obj["tolerance"], "config.tolerance")
    if "minScore" in obj:
        kwargs["min_score"] = _number(obj["minScore"], "config.minScore")
    if "pairSetName" in obj:
        name = obj["pairSetName"]
        if not isinstance(name, str):
            raise MalformedDocument("config.pairSetName: expected a string")
        kwargs["pair_set_name"] = name
    if "mode" in obj:
        mode = obj["mode"]
        if not isinstance(mode, str):
            raise MalformedDocument("config.mode: expected a string")
        kwargs["mode"] = mode
    if "angleToleranceDeg" in obj:
        kwargs["angle_tolerance_deg"] = _number(
            obj["angleToleranceDeg"], "config.angleToleranceDeg"
        )
    if "pairs" in obj:
        raw = obj["pairs"]
        if not isinstance(raw, list):
            raise MalformedDocument("config.pairs: expected a list")
        pairs = []
        for entry in raw:
            pid = _require(entry, "id", "pair")
            if not isinstance(pid, str):
                raise MalformedDocument("pair.id: expected a string")
            proximal = _part(_require(entry, "proximal", "pair"), f"{pid}.proximal")
            distal = _part(_require(entry, "distal", "pair"), f"{pid}.distal")
            limb = _require(entry, "limbClass", "pair")
            try:
                limb_class = LimbClass(limb)
            except ValueError:
                raise MalformedDocument(f"{pid}.limbClass: {limb!r}") from None
            pairs.append(JointPair(pid, proximal, distal, limb_class))
        kwargs["pairs"] = tuple(pairs)
    try:
        return ComparisonConfig(**kwargs)
    except ValueError as exc:
        raise MalformedDocument(f"config: {exc}") from None


def session_config_to_obj(config: SessionConfig) -> dict:
    return {
        "comparison": config_to_obj(config.comparison),
        "debounceFrames": config.debounce_frames,
    }


def session_config_from_obj(obj: Any) -> SessionConfig:
    if not isinstance(obj, dict):
        raise MalformedDocument("session config: expected an object")
    comparison = ComparisonConfig()
    if "comparison" in obj:
        comparison = config_from_obj(obj["comparison"])
    debounce = 0
    if "debounceFrames" in obj:
        debounce = _integer(obj["debounceFrames"], "debounceFrames")
    try:
        return SessionConfig(comparison=comparison, debounce_frames=debounce)
    except ValueError as exc:
        raise MalformedDocument(str(exc)) from None


# ---------------------------------------------------------------------------
# Reference documents


def _profile_entry_to_obj(entry: ProfileEntry) -> dict:
    if not entry.valid:
        return {"slope": None, "valid": False}
    assert entry.orientation is not None
    slope = "vertical" if entry.orientation.is_vertical else entry.orientation.slope
    return {"slope": slope, "valid": True}


def reference_to_obj(ref: ReferencePose) -> dict:
    return {
        "name": ref.name,
        "frame": frame_to_obj(ref.frame),
        "config": config_to_obj(ref.config),
        "profile": {
            pid: _profile_entry_to_obj(ref.profile[pid]) for pid in ref.config.pair_ids
        },
    }


def serialize_reference(ref: ReferencePose) -> str:
    return _dumps(reference_to_obj(ref))


def _check_profile_cache(obj: Any, ref: ReferencePose) -> None:
    # The stored profile is a cache of extract_profile(frame, config); a
    # document whose cache disagrees with its own frame is corrupt.
    if not isinstance(obj, dict):
        raise MalformedDocument("reference.profile: expected an object")
    for pid in ref.config.pair_ids:
        if pid not in obj:
            raise MalformedDocument(f"reference.profile: missing pair {pid!r}")
        cached = obj[pid]
        valid = _require(cached, "valid", f"profile.{pid}")
        if not isinstance(valid, bool):
            raise MalformedDocument(f"profile.{pid}.valid: expected a boolean")
        entry = ref.profile[pid]
        if valid != entry.valid:
            raise MalformedDocument(
                f"profile.{pid}: cached valid={valid} does not match the frame"
            )
        if not valid:
            continue
        slope = _require(cached, "slope", f"profile.{pid}")
        assert entry.orientation is not None
        if entry.orientation.is_vertical:
            if slope != "vertical":
                raise MalformedDocument(
                    f"profile.{pid}: cached slope {slope!r}, frame says vertical"
                )
        elif isinstance(slope, bool) or slope != entry.orientation.slope:
            raise MalformedDocument(
                f"profile.{pid}: cached slope {slope!r} does not match the frame"
            )


def reference_from_obj(obj: Any) -> ReferencePose:
    name = _require(obj, "name", "reference")
    if not isinstance(name, str):
        raise MalformedDocument("reference.name: expected a string")
    frame = frame_from_obj(_require(obj, "frame", "reference"))
    config = ComparisonConfig()
    if "config" in obj:
        config = config_from_obj(obj["config"])
    ref = ReferencePose(name=name, frame=frame, config=config)
    if "profile" in obj:
        _check_profile_cache(obj["profile"], ref)
    return ref


def parse_reference(text: str | bytes) -> ReferencePose:
    """Parse a reference document, recomputing its profile from the frame.

    The profile block is optional on input (it is a cache); when present it
    must agree exactly with the recomputation.
    """
    return reference_from_obj(_loads(text))


# ---------------------------------------------------------------------------
# Feedback documents


def feedback_to_obj(feedback: FrameFeedback) -> dict:
    pairs = {}
    for pid, pf in feedback.pairs.items():
        entry: dict[str, Any] = {"status": pf.status.value}
        if pf.deviation is not None:
            entry["deviation"] = pf.deviation
        pairs[pid] = entry
    return {"t": feedback.timestamp_ms, "pairs": pairs}


def serialize_feedback(feedback: FrameFeedback) -> str:
    return _dumps(feedback_to_obj(feedback))


def feedback_from_obj(obj: Any) -> FrameFeedback:
    t = _integer(_require(obj, "t", "feedback"), "feedback.t")
    raw = _require(obj, "pairs", "feedback")
    if not isinstance(raw, dict):
        raise MalformedDocument("feedback.pairs: expected an object")
    pairs = {}
    for pid, entry in raw.items():
        status_name = _require(entry, "status", f"pairs.{pid}")
        if not isinstance(status_name, str) or status_name not in STATUS_BY_NAME:
            raise MalformedDocument(f"pairs.{pid}.status: {status_name!r}")
        deviation = None
        if "deviation" in entry:
            deviation = _number(entry["deviation"], f"pairs.{pid}.deviation")
        pairs[pid] = PairFeedback(STATUS_BY_NAME[status_name], deviation)
    return FrameFeedback(t, pairs)


def parse_feedback(text: str | bytes) -> FrameFeedback:
    return feedback_from_obj(_loads(text))


# ---------------------------------------------------------------------------
# Report documents


def report_to_obj(report: SessionReport) -> dict:
    return {
        "framesProcessed": report.frames_processed,
        "framesUsable": report.frames_usable,
        "fullMatchFrames": report.full_match_frames,
        "perPair": {
            pid: {
                "matchFrames": counts.match_frames,
                "correctionFrames": counts.correction_frames,
                "notVisibleFrames": counts.not_visible_frames,
            }
            for pid, counts in report.per_pair.items()
        },
    }


def serialize_report(report: SessionReport) -> str:
    return _dumps(report_to_obj(report))


def report_from_obj(obj: Any) -> SessionReport:
    processed = _integer(_require(obj, "framesProcessed", "report"), "framesProcessed")
    usable = _integer(_require(obj, "framesUsable", "report"), "framesUsable")
    full = _integer(_require(obj, "fullMatchFrames", "report"), "fullMatchFrames")
    raw = _require(obj, "perPair", "report")
    if not isinstance(raw, dict):
        raise MalformedDocument("report.perPair: expected an object")
    per_pair = {}
    for pid, entry in raw.items():
        per_pair[pid] = PairCounts(
            match_frames=_integer(
                _require(entry, "matchFrames", pid), f"{pid}.matchFrames"
            ),
            correction_frames=_integer(
                _require(entry, "correctionFrames", pid), f"{pid}.correctionFrames"
            ),
            not_visible_frames=_integer(
                _require(entry, "notVisibleFrames", pid), f"{pid}.notVisibleFrames"
            ),
        )
    return SessionReport(processed, usable, full, per_pair)


def parse_report(text: str | bytes) -> SessionReport:
    return report_from_obj(_loads(text))
