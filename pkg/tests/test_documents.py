"""Canonical document formats: round trips, adapter, error contracts."""

import json
import random
from pathlib import Path

import pytest
from hypothesis import given
from hypothesis import strategies as st

from fittutor import (
    BodyPart,
    ComparisonConfig,
    Keypoint,
    MalformedDocument,
    MissingPart,
    OutOfRangeScore,
    PoseFrame,
    SessionConfig,
    Status,
    UnknownPartName,
    adapt_external_keypoints,
    aggregate_report,
    extract_profile,
    make_reference,
    parse_feedback,
    parse_frame,
    parse_reference,
    parse_report,
    process_stream,
    serialize_feedback,
    serialize_frame,
    serialize_reference,
    serialize_report,
)
from fittutor.documents import DEFAULT_HEIGHT, DEFAULT_WIDTH

from conftest import coach_frame, make_frame, random_frame

FIXTURES = Path(__file__).parent / "fixtures"


def fixture_text(name: str) -> str:
    return (FIXTURES / name).read_text(encoding="utf-8")


class TestFrameDocuments:
    def test_parse_fixture(self):
        frame = parse_frame(fixture_text("tpose_frame.json"))
        assert len(frame.keypoints) == 17
        assert frame.width == 640
        assert all(kp.score == 0.9 for kp in frame.keypoints)

    def test_missing_part_error(self):
        doc = json.loads(fixture_text("tpose_frame.json"))
        doc["keypoints"] = [k for k in doc["keypoints"] if k["part"] != "rightAnkle"]
        with pytest.raises(MissingPart):
            parse_frame(json.dumps(doc))

    def test_duplicate_part_error(self):
        from fittutor import DuplicatePart

        doc = json.loads(fixture_text("tpose_frame.json"))
        doc["keypoints"][3] = dict(doc["keypoints"][0])
        with pytest.raises(DuplicatePart):
            parse_frame(json.dumps(doc))

    def test_out_of_range_score_error(self):
        doc = json.loads(fixture_text("tpose_frame.json"))
        doc["keypoints"][0]["score"] = 1.5
        with pytest.raises(OutOfRangeScore):
            parse_frame(json.dumps(doc))

    @pytest.mark.parametrize(
        "mangle",
        [
            lambda d: "{not json",
            lambda d: json.dumps([1, 2, 3]),
            lambda d: json.dumps({"w": 640, "h": 480, "keypoints": []}),  # no t
            lambda d: d.replace('"t":0', '"t":0.5'),
            lambda d: d.replace('"w":640', '"w":-640'),
            lambda d: d.replace('"part":"nose"', '"part":"snout"'),
            lambda d: d.replace('"x":320.0', '"x":NaN'),
            lambda d: d.replace('"x":320.0', '"x":true'),
        ],
    )
    def test_malformed_documents(self, mangle):
        with pytest.raises(MalformedDocument):
            parse_frame(mangle(fixture_text("tpose_frame.json")))

    def test_unknown_extra_fields_ignored(self):
        doc = json.loads(fixture_text("tpose_frame.json"))
        doc["source"] = "webcam"
        doc["keypoints"][0]["z"] = 1.0
        frame = parse_frame(json.dumps(doc))
        assert frame == parse_frame(fixture_text("tpose_frame.json"))

    def test_keypoint_order_normalized(self):
        doc = json.loads(fixture_text("tpose_frame.json"))
        doc["keypoints"].reverse()
        assert parse_frame(json.dumps(doc)) == parse_frame(fixture_text("tpose_frame.json"))

    def test_round_trip_identity(self, rng):
        for _ in range(50):
            frame = random_frame(rng, t=rng.randrange(10**9))
            assert parse_frame(serialize_frame(frame)) == frame

    def test_serialization_deterministic(self, rng):
        frame = random_frame(rng)
        twin = PoseFrame(
            frame.timestamp_ms, frame.width, frame.height, tuple(frame.keypoints)
        )
        assert serialize_frame(frame) == serialize_frame(twin)

    def test_byte_identical_round_trip(self, rng):
        for _ in range(50):
            doc = serialize_frame(random_frame(rng))
            assert serialize_frame(parse_frame(doc)) == doc

    def test_decimal_values_survive_exactly(self):
        frame = make_frame({BodyPart.NOSE: (12.25, 7.5)})
        doc = serialize_frame(frame)
        assert '"x":12.25' in doc
        assert parse_frame(doc).keypoint(BodyPart.NOSE).x == 12.25

    @given(
        x=st.floats(allow_nan=False, allow_infinity=False, width=64),
        y=st.floats(allow_nan=False, allow_infinity=False, width=64),
        score=st.floats(0.0, 1.0),
    )
    def test_float_precision_lossless(self, x, y, score):
        frame = make_frame({BodyPart.NOSE: (x, y)}, scores=score)
        parsed = parse_frame(serialize_frame(frame))
        kp = parsed.keypoint(BodyPart.NOSE)
        assert (kp.x, kp.y, kp.score) == (x, y, score)

    def test_accepts_bytes(self):
        text = fixture_text("tpose_frame.json")
        assert parse_frame(text.encode()) == parse_frame(text)


class TestExternalAdapter:
    def test_adapts_posenet_export(self):
        frame = adapt_external_keypoints(fixture_text("posenet_export.json"))
        assert frame.width == 640
        assert frame.height == 480
        assert frame.keypoint(BodyPart.LEFT_SHOULDER).x == 380.0

    def test_missing_dimensions_use_defaults(self):
        frame = adapt_external_keypoints(fixture_text("posenet_export_nodims.json"))
        assert frame.width == DEFAULT_WIDTH
        assert frame.height == DEFAULT_HEIGHT
        assert frame.timestamp_ms == 0

    def test_configurable_defaults(self):
        frame = adapt_external_keypoints(
            fixture_text("posenet_export_nodims.json"),
            default_width=1280,
            default_height=720,
        )
        assert (frame.width, frame.height) == (1280, 720)

    def test_wrong_spelling_rejected(self):
        doc = json.loads(fixture_text("posenet_export.json"))
        doc["keypoints"][5]["part"] = "left_shoulder"
        with pytest.raises(UnknownPartName):
            adapt_external_keypoints(json.dumps(doc))

    def test_missing_part_rejected(self):
        doc = json.loads(fixture_text("posenet_export.json"))
        del doc["keypoints"][0]
        with pytest.raises(MissingPart):
            adapt_external_keypoints(json.dumps(doc))

    def test_adapter_output_matches_canonical_fixture(self):
        adapted = adapt_external_keypoints(fixture_text("posenet_export.json"))
        canonical = parse_frame(fixture_text("tpose_frame.json"))
        assert adapted == canonical


class TestReferenceDocuments:
    def test_round_trip(self, rng):
        ref = make_reference("squat", random_frame(rng))
        doc = serialize_reference(ref)
        parsed = parse_reference(doc)
        assert parsed == ref
        assert serialize_reference(parsed) == doc

    def test_profile_block_optional(self, rng):
        ref = make_reference("squat", random_frame(rng))
        doc = json.loads(serialize_reference(ref))
        del doc["profile"]
        assert parse_reference(json.dumps(doc)) == ref

    def test_config_block_optional_defaults(self, rng):
        ref = make_reference("squat", random_frame(rng))
        doc = json.loads(serialize_reference(ref))
        del doc["config"]
        assert parse_reference(json.dumps(doc)) == ref

    def test_inconsistent_profile_cache_rejected(self, rng):
        ref = make_reference("squat", random_frame(rng))
        doc = json.loads(serialize_reference(ref))
        entry = doc["profile"]["leftArm"]
        if entry["valid"]:
            entry["slope"] = (entry["slope"] or 0) + 1.0 if entry["slope"] != "vertical" else 3.0
        else:
            entry["valid"] = True
        with pytest.raises(MalformedDocument):
            parse_reference(json.dumps(doc))

    def test_vertical_slope_serialized_as_tag(self):
        ref = make_reference("tpose", parse_frame(fixture_text("tpose_frame.json")))
        doc = json.loads(serialize_reference(ref))
        assert doc["profile"]["leftLeg"]["slope"] == "vertical"
        assert doc["profile"]["leftArm"]["slope"] == 0.0

    def test_invalid_pairs_serialized_with_null_slope(self):
        ref = make_reference("dark", parse_frame(fixture_text("zero_score_frame.json")))
        doc = json.loads(serialize_reference(ref))
        assert doc["profile"]["leftArm"] == {"slope": None, "valid": False}

    def test_extended_config_round_trip(self, rng):
        config = ComparisonConfig(pair_set_name="extended", tolerance=0.25, mode="angle")
        ref = make_reference("y-pose", random_frame(rng), config)
        parsed = parse_reference(serialize_reference(ref))
        assert parsed.config == config
        assert tuple(parsed.profile) == config.pair_ids


class TestFeedbackAndReportDocuments:
    def _session_output(self, rng, n=5):
        ref = make_reference("coach", coach_frame())
        frames = [random_frame(rng, t=i * 33) for i in range(n)]
        return process_stream(frames, ref, SessionConfig())

    def test_feedback_round_trip(self, rng):
        feedbacks, _ = self._session_output(rng)
        for fb in feedbacks:
            doc = serialize_feedback(fb)
            parsed = parse_feedback(doc)
            assert parsed == fb
            assert serialize_feedback(parsed) == doc

    def test_deviation_omitted_when_absent(self):
        ref = make_reference("dark", parse_frame(fixture_text("zero_score_frame.json")))
        feedbacks, _ = process_stream([ref.frame], ref, SessionConfig())
        doc = serialize_feedback(feedbacks[0])
        assert "deviation" not in doc
        parsed = parse_feedback(doc)
        assert all(pf.status is Status.NOT_VISIBLE for pf in parsed.pairs.values())

    def test_report_round_trip(self, rng):
        _, report = self._session_output(rng)
        doc = serialize_report(report)
        parsed = parse_report(doc)
        assert parsed == report
        assert serialize_report(parsed) == doc

    def test_report_matches_recount(self, rng):
        feedbacks, report = self._session_output(rng, n=20)
        assert aggregate_report(feedbacks) == report

    def test_malformed_feedback_rejected(self):
        with pytest.raises(MalformedDocument):
            parse_feedback('{"t": 0, "pairs": {"leftArm": {"status": "Shrug"}}}')
        with pytest.raises(MalformedDocument):
            parse_feedback('{"pairs": {}}')
