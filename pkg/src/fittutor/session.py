"""Session processing: ordered frame streams, debouncing, report aggregation.

A session is a sequential pipeline: frames in arrival order, one feedback per
frame, and a running tally that becomes the final report. Distinct sessions
share no state, so any number can run concurrently.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Iterable, Sequence

from .compare import (
    ComparisonConfig,
    Feedback,
    PairFeedback,
    ReferencePose,
    Status,
    compare_profiles,
    extract_profile,
)
from .errors import PairSetMismatch
from .skeleton import PoseFrame

#: Statuses that bypass debouncing; everything else must persist first.
_PASS_THROUGH = frozenset((Status.MATCH, Status.NOT_VISIBLE))


@dataclass(frozen=True)
class SessionConfig:
    """Comparison settings plus optional correction debouncing.

    debounce_frames = 0 keeps the raw per-frame verdicts; n > 0 holds a
    correction back until it has persisted n consecutive frames, suppressing
    single-frame jitter.
    """

    comparison: ComparisonConfig = field(default_factory=ComparisonConfig)
    debounce_frames: int = 0

    def __post_init__(self) -> None:
        if self.debounce_frames < 0:
            raise ValueError("debounce_frames must be >= 0")


@dataclass(frozen=True)
class FrameFeedback:
    """Feedback for one frame: the frame's timestamp plus per-pair verdicts."""

    timestamp_ms: int
    pairs: Feedback


@dataclass(frozen=True)
class PairCounts:
    """Per-pair frame tallies; the three buckets always sum to the frame count."""

    match_frames: int = 0
    correction_frames: int = 0
    not_visible_frames: int = 0


@dataclass(frozen=True)
class SessionReport:
    """Aggregate tallies for a finished (or in-flight) session."""

    frames_processed: int = 0
    frames_usable: int = 0
    full_match_frames: int = 0
    per_pair: dict[str, PairCounts] = field(default_factory=dict)


def apply_debounce(statuses: Sequence[Status], n: int) -> list[Status]:
    """Suppress corrections until they persist n consecutive frames.

    Match and NotVisible pass through immediately and reset the pending run;
    any other status is replaced by the last emitted status until it has
    occurred n frames in a row. n = 0 (or 1) is the identity.
    """
    if n < 0:
        raise ValueError("debounce count must be >= 0")
    if n == 0:
        return list(statuses)
    out = []
    last_emitted = Status.MATCH
    run_status = None
    run_len = 0
    for status in statuses:
        if status in _PASS_THROUGH:
            last_emitted = status
            run_status = None
            run_len = 0
            out.append(status)
            continue
        if status is run_status:
            run_len += 1
        else:
            run_status = status
            run_len = 1
        if run_len >= n:
            last_emitted = status
        out.append(last_emitted)
    return out


class _DebounceState:
    """Streaming twin of apply_debounce for a single pair."""

    __slots__ = ("last_emitted", "run_status", "run_len")

    def __init__(self) -> None:
        self.last_emitted = Status.MATCH
        self.run_status: Status | None = None
        self.run_len = 0

    def push(self, status: Status, n: int) -> Status:
        if status in _PASS_THROUGH:
            self.last_emitted = status
            self.run_status = None
            self.run_len = 0
            return status
        if status is self.run_status:
            self.run_len += 1
        else:
            self.run_status = status
            self.run_len = 1
        if self.run_len >= n:
            self.last_emitted = status
        return self.last_emitted


class Session:
    """One live coaching session: feed frames, collect feedback, read the report.

    Tallies are kept incrementally so report() is O(pairs) at any point.
    """

    def __init__(self, ref: ReferencePose, config: SessionConfig | None = None):
        self.config = config or SessionConfig()
        comparison = self.config.comparison
        if tuple(ref.profile) != comparison.pair_ids:
            raise PairSetMismatch(
                f"reference profile pairs {tuple(ref.profile)} do not match "
                f"session pairs {comparison.pair_ids}"
            )
        self.ref = ref
        self._frames = 0
        self._usable = 0
        self._full_match = 0
        self._match = {pid: 0 for pid in comparison.pair_ids}
        self._correction = {pid: 0 for pid in comparison.pair_ids}
        self._not_visible = {pid: 0 for pid in comparison.pair_ids}
        self._debounce = {pid: _DebounceState() for pid in comparison.pair_ids}

    def feed(self, frame: PoseFrame) -> FrameFeedback:
        """Compare one frame against the reference and update the tallies."""
        comparison = self.config.comparison
        user = extract_profile(frame, comparison)
        raw = compare_profiles(self.ref.profile, user, comparison)
        n = self.config.debounce_frames
        pairs: Feedback = {}
        usable = False
        full_match = False
        for pid, verdict in raw.items():
            status = verdict.status
            if n > 0:
                status = self._debounce[pid].push(status, n)
                verdict = PairFeedback(status, verdict.deviation)
            pairs[pid] = verdict
            if status is Status.NOT_VISIBLE:
                self._not_visible[pid] += 1
            elif status is Status.MATCH:
                self._match[pid] += 1
                usable = True
            else:
                self._correction[pid] += 1
                usable = True
        if usable:
            full_match = all(
                fb.status in (Status.MATCH, Status.NOT_VISIBLE)
                for fb in pairs.values()
            )
        self._frames += 1
        self._usable += usable
        self._full_match += full_match
        return FrameFeedback(frame.timestamp_ms, pairs)

    def report(self) -> SessionReport:
        # A zero-frame report has an empty perPair, matching aggregate_report
        # which cannot know the pair set without at least one feedback.
        pair_ids = self.config.comparison.pair_ids if self._frames else ()
        return SessionReport(
            frames_processed=self._frames,
            frames_usable=self._usable,
            full_match_frames=self._full_match,
            per_pair={
                pid: PairCounts(
                    match_frames=self._match[pid],
                    correction_frames=self._correction[pid],
                    not_visible_frames=self._not_visible[pid],
                )
                for pid in pair_ids
            },
        )


def process_stream(
    frames: Iterable[PoseFrame],
    ref: ReferencePose,
    config: SessionConfig | None = None,
) -> tuple[list[FrameFeedback], SessionReport]:
    """Run an ordered frame stream through a session.

    Exactly one feedback per frame, in input order; an empty stream yields an
    empty feedback list and a zero report.
    """
    session = Session(ref, config)
    feedbacks = [session.feed(frame) for frame in frames]
    return feedbacks, session.report()


def aggregate_report(feedbacks: Sequence[FrameFeedback]) -> SessionReport:
    """Recount a feedback sequence into a report from scratch.

    Independent of Session's incremental tallies; the two must always agree.
    """
    per_pair_ids: tuple[str, ...] = tuple(feedbacks[0].pairs) if feedbacks else ()
    match = {pid: 0 for pid in per_pair_ids}
    correction = {pid: 0 for pid in per_pair_ids}
    not_visible = {pid: 0 for pid in per_pair_ids}
    usable_frames = 0
    full_match_frames = 0
    for fb in feedbacks:
        statuses = {pid: pf.status for pid, pf in fb.pairs.items()}
        for pid, status in statuses.items():
            if status is Status.NOT_VISIBLE:
                not_visible[pid] += 1
            elif status is Status.MATCH:
                match[pid] += 1
            else:
                correction[pid] += 1
        visible = [s for s in statuses.values() if s is not Status.NOT_VISIBLE]
        if visible:
            usable_frames += 1
            if all(s is Status.MATCH for s in visible):
                full_match_frames += 1
    return SessionReport(
        frames_processed=len(feedbacks),
        frames_usable=usable_frames,
        full_match_frames=full_match_frames,
        per_pair={
            pid: PairCounts(match[pid], correction[pid], not_visible[pid])
            for pid in per_pair_ids
        },
    )
