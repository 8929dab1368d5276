"""Cut speech segments into annotation-sized utterance bounds.

Cuts happen only at pause boundaries or speaker changes (segments arrive
already split per speaker). A pause-free run longer than the cap forces hard
cuts at the cap and is reported, never silently truncated.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Any, Iterable, Sequence

from speechforge.corpus.records import MAX_UTTERANCE_SECONDS
from speechforge.pretag.types import SegmentKind, SegmentLabel


@dataclass(frozen=True)
class UtteranceBounds:
    start: float
    end: float
    speaker_local_id: str | None

    @property
    def duration(self) -> float:
        return self.end - self.start


@dataclass(frozen=True)
class UncuttableSpan:
    """A pause-free speech run over the cap; hard cuts were forced."""

    segment_start: float
    segment_end: float
    forced_cuts: tuple[float, ...]

    def to_dict(self) -> dict[str, Any]:
        return {
            "segment_start": self.segment_start,
            "segment_end": self.segment_end,
            "forced_cuts": list(self.forced_cuts),
        }


def _cut_one(
    segment: SegmentLabel,
    pause_points: Sequence[tuple[float, float]],
    max_seconds: float,
) -> tuple[list[UtteranceBounds], UncuttableSpan | None]:
    # pauses strictly inside the segment; each is a (start, end) span
    inner = sorted(p for p in pause_points if segment.start < p[0] and p[1] < segment.end)
    bounds: list[UtteranceBounds] = []
    forced: list[float] = []
    pos = segment.start
    while segment.end - pos > max_seconds + 1e-9:
        # farthest reachable pause keeps the piece count minimal
        reachable = [p for p in inner if pos < p[0] <= pos + max_seconds + 1e-9]
        if reachable:
            cut_at, resume = reachable[-1]
            bounds.append(UtteranceBounds(pos, cut_at, segment.speaker_local_id))
            pos = resume
        else:
            cut = pos + max_seconds
            bounds.append(UtteranceBounds(pos, cut, segment.speaker_local_id))
            forced.append(cut)
            pos = cut
    if segment.end - pos > 1e-9:
        bounds.append(UtteranceBounds(pos, segment.end, segment.speaker_local_id))
    report = (
        UncuttableSpan(segment.start, segment.end, tuple(forced)) if forced else None
    )
    return bounds, report


def cut_utterances(
    segments: Iterable[SegmentLabel],
    pauses: Iterable[tuple[float, float]] = (),
    max_seconds: float = MAX_UTTERANCE_SECONDS,
) -> tuple[list[UtteranceBounds], list[UncuttableSpan]]:
    """Cut sorted, non-overlapping speech segments at pauses.

    Returns the emitted bounds plus reports for any segment that needed
    forced cuts. Non-speech segments are ignored.
    """
    speech = sorted(
        (s for s in segments if s.kind is SegmentKind.SPEECH), key=lambda s: s.start
    )
    for a, b in zip(speech, speech[1:]):
        if b.start < a.end - 1e-9:
            raise ValueError(f"speech segments overlap: {a} / {b}")
    pause_list = [(float(s), float(e)) for s, e in pauses]
    for s, e in pause_list:
        if e < s:
            raise ValueError(f"pause span ({s}, {e}) has negative length")

    all_bounds: list[UtteranceBounds] = []
    reports: list[UncuttableSpan] = []
    for segment in speech:
        bounds, report = _cut_one(segment, pause_list, max_seconds)
        all_bounds.extend(bounds)
        if report is not None:
            reports.append(report)
    return all_bounds, reports
