"""Stream processing: ordering, debounce, report aggregation."""

import random

import pytest
from hypothesis import given
from hypothesis import strategies as st

from fittutor import (
    ComparisonConfig,
    PairSetMismatch,
    Session,
    SessionConfig,
    Status,
    aggregate_report,
    apply_debounce,
    compare_profiles,
    extract_profile,
    make_reference,
    process_stream,
    serialize_feedback,
    serialize_report,
)
from fittutor.session import FrameFeedback

from conftest import coach_frame, noisy_random_frame, random_frame

M, U, D, L, R, NV, IND = (
    Status.MATCH,
    Status.MOVE_UP,
    Status.MOVE_DOWN,
    Status.MOVE_LEFT,
    Status.MOVE_RIGHT,
    Status.NOT_VISIBLE,
    Status.INDETERMINATE,
)

STATUS_POOL = [M, U, D, L, R, NV, IND]


class TestApplyDebounce:
    def test_zero_is_identity(self, rng):
        seq = [rng.choice(STATUS_POOL) for _ in range(50)]
        assert apply_debounce(seq, 0) == seq

    def test_one_is_identity(self, rng):
        seq = [rng.choice(STATUS_POOL) for _ in range(50)]
        assert apply_debounce(seq, 1) == seq

    def test_single_frame_jitter_suppressed(self):
        assert apply_debounce([M, U, M, M], 2) == [M, M, M, M]

    def test_persistent_correction_emitted(self):
        assert apply_debounce([M, U, U, M], 2) == [M, M, U, M]

    def test_run_interrupted_by_match_restarts(self):
        assert apply_debounce([U, M, U, U], 2) == [M, M, M, U]

    def test_different_corrections_do_not_pool(self):
        # A MoveUp run does not count toward a MoveDown threshold.
        assert apply_debounce([U, D, U, D], 2) == [M, M, M, M]

    def test_not_visible_passes_through(self):
        # The held MoveUp repeats the last emitted status, which is NotVisible.
        assert apply_debounce([NV, U, NV], 2) == [NV, NV, NV]

    def test_held_correction_repeats_last_emitted(self):
        assert apply_debounce([L, L, L, R, R, R], 3) == [M, M, L, L, L, R]

    def test_indeterminate_is_debounced_like_a_correction(self):
        assert apply_debounce([M, IND, M], 2) == [M, M, M]
        assert apply_debounce([M, IND, IND], 2) == [M, M, IND]

    @given(
        seq=st.lists(st.sampled_from(STATUS_POOL), max_size=40),
        n=st.integers(0, 5),
    )
    def test_output_length_matches_input(self, seq, n):
        assert len(apply_debounce(seq, n)) == len(seq)

    @given(seq=st.lists(st.sampled_from(STATUS_POOL), max_size=40))
    def test_pass_through_statuses_always_survive(self, seq):
        out = apply_debounce(seq, 3)
        for got, raw in zip(out, seq):
            if raw in (M, NV):
                assert got is raw


def _stream(rng, n, jitter=False):
    maker = noisy_random_frame if jitter else random_frame
    return [maker(rng, t=i * 33) for i in range(n)]


class TestProcessStream:
    def test_reference_stream_fully_matches(self):
        ref = make_reference("coach", coach_frame())
        frames = [coach_frame(t=i) for i in range(6)]
        feedbacks, report = process_stream(frames, ref, SessionConfig())
        assert len(feedbacks) == 6
        for fb in feedbacks:
            assert all(pf.status is M for pf in fb.pairs.values())
        assert report.full_match_frames == 6
        assert report.frames_usable == 6
        assert report.frames_processed == 6

    def test_empty_stream_zero_report(self):
        ref = make_reference("coach", coach_frame())
        feedbacks, report = process_stream([], ref, SessionConfig())
        assert feedbacks == []
        assert report.frames_processed == 0
        assert report.frames_usable == 0
        assert report.full_match_frames == 0
        assert report.per_pair == {}

    def test_one_feedback_per_frame_in_order(self, rng):
        ref = make_reference("coach", coach_frame())
        frames = _stream(rng, 40)
        feedbacks, _ = process_stream(frames, ref, SessionConfig())
        assert [fb.timestamp_ms for fb in feedbacks] == [f.timestamp_ms for f in frames]

    def test_matches_per_frame_recomputation(self, rng):
        # Oracle: with debounce off, the stream result is exactly the framewise
        # extract + compare composition, serialized bytes included.
        ref = make_reference("coach", coach_frame())
        config = SessionConfig()
        frames = _stream(rng, 100, jitter=True)
        feedbacks, _ = process_stream(frames, ref, config)
        for frame, fb in zip(frames, feedbacks):
            expected = compare_profiles(
                ref.profile,
                extract_profile(frame, config.comparison),
                config.comparison,
            )
            assert fb.pairs == expected
            assert serialize_feedback(fb) == serialize_feedback(
                FrameFeedback(frame.timestamp_ms, expected)
            )

    def test_replay_determinism(self, rng):
        ref = make_reference("coach", coach_frame())
        frames = _stream(rng, 50, jitter=True)
        a = process_stream(frames, ref, SessionConfig(debounce_frames=2))
        b = process_stream(frames, ref, SessionConfig(debounce_frames=2))
        assert [serialize_feedback(fb) for fb in a[0]] == [
            serialize_feedback(fb) for fb in b[0]
        ]
        assert serialize_report(a[1]) == serialize_report(b[1])

    def test_pair_set_mismatch_rejected(self, rng):
        ref = make_reference(
            "coach", coach_frame(), ComparisonConfig(pair_set_name="extended")
        )
        with pytest.raises(PairSetMismatch):
            Session(ref, SessionConfig())

    def test_debounced_stream_equals_columnwise_apply_debounce(self, rng):
        ref = make_reference("coach", coach_frame())
        frames = _stream(rng, 60, jitter=True)
        raw, _ = process_stream(frames, ref, SessionConfig())
        n = 3
        debounced, _ = process_stream(frames, ref, SessionConfig(debounce_frames=n))
        for pid in ref.config.pair_ids:
            column = [fb.pairs[pid].status for fb in raw]
            expected = apply_debounce(column, n)
            got = [fb.pairs[pid].status for fb in debounced]
            assert got == expected

    def test_debounce_keeps_frame_deviation(self, rng):
        ref = make_reference("coach", coach_frame())
        frames = _stream(rng, 30)
        raw, _ = process_stream(frames, ref, SessionConfig())
        debounced, _ = process_stream(frames, ref, SessionConfig(debounce_frames=4))
        for fb_raw, fb_deb in zip(raw, debounced):
            for pid in fb_raw.pairs:
                assert fb_deb.pairs[pid].deviation == fb_raw.pairs[pid].deviation


class TestReports:
    def test_counts_conserved_per_pair(self, rng):
        ref = make_reference("coach", coach_frame())
        frames = _stream(rng, 80, jitter=True)
        _, report = process_stream(frames, ref, SessionConfig())
        for counts in report.per_pair.values():
            assert (
                counts.match_frames
                + counts.correction_frames
                + counts.not_visible_frames
                == report.frames_processed
            )
        assert report.full_match_frames <= report.frames_usable <= report.frames_processed

    def test_aggregate_of_empty_is_zero(self):
        report = aggregate_report([])
        assert report.frames_processed == 0
        assert report.per_pair == {}

    def test_aggregate_counts_all_match_frames(self):
        ref = make_reference("coach", coach_frame())
        feedbacks, _ = process_stream([coach_frame(t=i) for i in range(3)], ref, SessionConfig())
        report = aggregate_report(feedbacks)
        assert report.full_match_frames == 3
        for counts in report.per_pair.values():
            assert counts.match_frames == 3

    def test_incremental_report_equals_recount(self, rng):
        # Session tallies incrementally; aggregate_report recounts from
        # scratch. They must agree on any stream, debounced or not.
        ref = make_reference("coach", coach_frame())
        for debounce in (0, 2):
            frames = _stream(rng, 50, jitter=True)
            feedbacks, report = process_stream(
                frames, ref, SessionConfig(debounce_frames=debounce)
            )
            assert aggregate_report(feedbacks) == report
