from __future__ import annotations

import random

import pytest

from speechforge.corpus import UtteranceRecord, aggregate_stats
from speechforge.corpus.aggregate import aggregate_records
from speechforge.errors import InconsistentGenderError

from corpusgen import assemble, make_corpus


def _utt(i: int, spk: str, seconds: float, gender: str, topics: list[str], noise: str = "clean"):
    return UtteranceRecord(
        utterance_id=f"u{i}",
        speaker_id=spk,
        session_id="c0",
        audio_path=f"/a/u{i}.wav",
        duration_in_seconds=seconds,
        domains=[topics[0]] if topics else [],
        topics=topics,
        transcription="t",
        language="english",
        accent="en-us",
        gender=gender,
        noise_background=noise,
    )


def test_three_male_utterances():
    utts = [_utt(i, "s0", 10.0, "male", ["sports"]) for i in range(3)]
    corpus = assemble(utts, {"s0": "male"})
    manifest = aggregate_stats(corpus)
    assert manifest.utterances_cnt == 3
    assert manifest.gender_dist_by_hours == {"male": 30.0 / 3600.0}
    assert manifest.duration_in_hours == pytest.approx(30.0 / 3600.0)


def test_topics_by_speakers_single_speaker():
    utts = [_utt(i, "s0", 5.0, "female", ["sports"]) for i in range(4)]
    corpus = assemble(utts, {"s0": "female"})
    manifest = aggregate_stats(corpus)
    assert manifest.topics_by_speakers == {"sports": 1}


def test_multi_topic_hours_count_every_topic():
    utts = [_utt(0, "s0", 3600.0 * 0.001, "male", ["sports", "finance"])]
    manifest = aggregate_records(utts, [], speechdb_name="x")
    assert manifest.topics_by_hours["sports"] == pytest.approx(0.001)
    assert manifest.topics_by_hours["finance"] == pytest.approx(0.001)


def test_inconsistent_gender_raises():
    utts = [
        _utt(0, "s0", 5.0, "male", ["sports"]),
        _utt(1, "s0", 5.0, "female", ["sports"]),
    ]
    with pytest.raises(InconsistentGenderError):
        aggregate_records(utts, [], speechdb_name="x")


def test_aggregate_matches_brute_force_oracle():
    # Independent oracle: plain loop summation over raw records.
    rng = random.Random(99)
    corpus = make_corpus(rng, n_utterances=200, n_speakers=12, n_sessions=9)
    manifest = aggregate_stats(corpus)

    total = sum(u.duration_in_seconds for u in corpus.utterances.values()) / 3600.0
    assert manifest.duration_in_hours == pytest.approx(total, rel=1e-12)

    topic_hours: dict[str, float] = {}
    gender_hours: dict[str, float] = {}
    noise_hours: dict[str, float] = {}
    for u in corpus.utterances.values():
        for t in u.topics:
            topic_hours[t] = topic_hours.get(t, 0.0) + u.duration_in_seconds / 3600.0
        gender_hours[u.gender] = gender_hours.get(u.gender, 0.0) + u.duration_in_seconds / 3600.0
        noise_hours[u.noise_background] = noise_hours.get(u.noise_background, 0.0) + u.duration_in_seconds / 3600.0
    assert set(manifest.topics_by_hours) == set(topic_hours)
    for t, h in topic_hours.items():
        assert manifest.topics_by_hours[t] == pytest.approx(h, rel=1e-9)
    for g, h in gender_hours.items():
        assert manifest.gender_dist_by_hours[g] == pytest.approx(h, rel=1e-9)
    for n, h in noise_hours.items():
        assert manifest.noisetype_dist_by_hours[n] == pytest.approx(h, rel=1e-9)

    topic_speakers: dict[str, set[str]] = {}
    for u in corpus.utterances.values():
        for t in u.topics:
            topic_speakers.setdefault(t, set()).add(u.speaker_id)
    assert manifest.topics_by_speakers == {t: len(s) for t, s in sorted(topic_speakers.items())}

    gender_speakers: dict[str, int] = {}
    for s in corpus.speakers.values():
        gender_speakers[s.gender] = gender_speakers.get(s.gender, 0) + 1
    assert manifest.gender_dist_by_speakers == dict(sorted(gender_speakers.items()))
    assert manifest.speakers_cnt == len(corpus.speakers)
    assert manifest.utterances_cnt == len(corpus.utterances)


def test_aggregate_idempotent():
    corpus = make_corpus(random.Random(123), n_utterances=50)
    once = aggregate_stats(corpus)
    corpus.manifest = once
    assert aggregate_stats(corpus) == once
