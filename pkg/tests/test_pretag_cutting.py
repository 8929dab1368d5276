from __future__ import annotations

import itertools
import random

import pytest

from speechforge.pretag import SegmentKind, SegmentLabel, cut_utterances


def _speech(start: float, end: float, spk: str = "S0") -> SegmentLabel:
    return SegmentLabel(start, end, SegmentKind.SPEECH, speaker_local_id=spk)


def test_short_segment_uncut():
    bounds, reports = cut_utterances([_speech(0.0, 15.0)])
    assert [(b.start, b.end) for b in bounds] == [(0.0, 15.0)]
    assert reports == []


def test_cut_at_pause_matches_minimal_cut_oracle():
    # Oracle: enumerate every legal cut set over the candidate pauses and keep
    # the ones with the fewest cuts; the cutter must produce one of them.
    segment = _speech(0.0, 30.0)
    pause_points = [18.0]

    def pieces(cuts: tuple[float, ...]) -> list[tuple[float, float]]:
        edges = [0.0, *sorted(cuts), 30.0]
        return list(zip(edges, edges[1:]))

    legal = [
        cuts
        for r in range(len(pause_points) + 1)
        for cuts in itertools.combinations(pause_points, r)
        if all(e - s <= 20.0 for s, e in pieces(cuts))
    ]
    best = min(len(c) for c in legal)
    minimal = {tuple(pieces(c)) for c in legal if len(c) == best}

    bounds, reports = cut_utterances([segment], pauses=[(18.0, 18.0)])
    assert reports == []
    assert tuple((b.start, b.end) for b in bounds) in minimal
    assert [(b.start, b.end) for b in bounds] == [(0.0, 18.0), (18.0, 30.0)]


def test_pause_free_run_forces_hard_cuts():
    bounds, reports = cut_utterances([_speech(0.0, 45.0)])
    assert [(b.start, b.end) for b in bounds] == [(0.0, 20.0), (20.0, 40.0), (40.0, 45.0)]
    assert len(reports) == 1
    assert reports[0].forced_cuts == (20.0, 40.0)


def test_pause_span_excluded_from_bounds():
    bounds, reports = cut_utterances([_speech(0.0, 30.0)], pauses=[(18.0, 18.5)])
    assert [(b.start, b.end) for b in bounds] == [(0.0, 18.0), (18.5, 30.0)]
    assert reports == []


def test_nonspeech_ignored():
    # 12 s of speech fits the cap, so the pause is not used: minimal cuts
    segments = [
        SegmentLabel(0.0, 10.0, SegmentKind.MUSIC),
        _speech(10.0, 22.0),
        SegmentLabel(22.0, 25.0, SegmentKind.NOISE),
    ]
    bounds, _ = cut_utterances(segments, pauses=[(15.0, 15.0)])
    assert [(b.start, b.end) for b in bounds] == [(10.0, 22.0)]


def test_overlapping_segments_rejected():
    with pytest.raises(ValueError):
        cut_utterances([_speech(0.0, 10.0), _speech(9.0, 12.0)])


def test_random_cutting_invariants():
    rng = random.Random(1234)
    for _ in range(200):
        segments = []
        pos = 0.0
        for _ in range(rng.randint(1, 4)):
            pos += rng.uniform(0.1, 2.0)
            length = rng.uniform(0.5, 60.0)
            segments.append(_speech(pos, pos + length, f"S{rng.randint(0, 2)}"))
            pos += length
        pauses = []
        for seg in segments:
            for _ in range(rng.randint(0, 3)):
                at = rng.uniform(seg.start, seg.end)
                pauses.append((at, min(at + rng.uniform(0, 0.5), seg.end - 1e-6)))
        bounds, reports = cut_utterances(segments, pauses)
        pause_starts = {round(p[0], 9) for p in pauses}
        forced = {round(c, 9) for r in reports for c in r.forced_cuts}
        total_speech = sum(s.duration for s in segments)
        total_pause = sum(e - s for s, e in pauses)
        covered = sum(b.duration for b in bounds)
        assert covered >= total_speech - total_pause - 1e-6
        for bound in bounds:
            assert bound.duration <= 20.0 + 1e-9
            assert any(s.start <= bound.start and bound.end <= s.end for s in segments)
            # inner cut edges happen at pause boundaries or forced-cut points
            end_is_seg_edge = any(abs(bound.end - s.end) < 1e-9 for s in segments)
            if not end_is_seg_edge:
                assert round(bound.end, 9) in pause_starts | forced
