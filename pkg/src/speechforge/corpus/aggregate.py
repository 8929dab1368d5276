"""Dataset-level statistics recomputed from utterance and speaker records."""

from __future__ import annotations

from collections.abc import Iterable

from speechforge.corpus.records import (
    Corpus,
    DatasetManifest,
    REQUIRED_SAMPLING_BIT,
    REQUIRED_SAMPLING_RATE,
    SpeakerRecord,
    UtteranceRecord,
)
from speechforge.errors import InconsistentGenderError


def aggregate_records(
    utterances: Iterable[UtteranceRecord],
    speakers: Iterable[SpeakerRecord],
    *,
    speechdb_name: str,
    language: str = "",
    accent: str = "",
) -> DatasetManifest:
    """Build a manifest purely from records.

    An utterance contributes its hours to every topic it lists; a speaker
    counts toward a topic if any of their utterances lists it. Raises
    InconsistentGenderError when one speaker carries two genders across
    utterances.
    """
    utterances = list(utterances)
    speakers = list(speakers)

    total_hours = 0.0
    topics_by_hours: dict[str, float] = {}
    gender_hours: dict[str, float] = {}
    noise_hours: dict[str, float] = {}
    speaker_topics: dict[str, set[str]] = {}
    speaker_genders: dict[str, set[str]] = {}

    for utt in utterances:
        hours = utt.duration_in_seconds / 3600.0
        total_hours += hours
        for topic in utt.topics:
            topics_by_hours[topic] = topics_by_hours.get(topic, 0.0) + hours
        gender_hours[utt.gender] = gender_hours.get(utt.gender, 0.0) + hours
        noise_hours[utt.noise_background] = noise_hours.get(utt.noise_background, 0.0) + hours
        speaker_topics.setdefault(utt.speaker_id, set()).update(utt.topics)
        speaker_genders.setdefault(utt.speaker_id, set()).add(utt.gender)

    for speaker_id in sorted(speaker_genders):
        genders = speaker_genders[speaker_id]
        if len(genders) > 1:
            raise InconsistentGenderError(
                f"speaker {speaker_id} carries genders {sorted(genders)} across utterances",
                speaker=speaker_id,
            )

    topics_by_speakers: dict[str, int] = {}
    for topics in speaker_topics.values():
        for topic in topics:
            topics_by_speakers[topic] = topics_by_speakers.get(topic, 0) + 1

    gender_speakers: dict[str, int] = {}
    for speaker in speakers:
        gender_speakers[speaker.gender] = gender_speakers.get(speaker.gender, 0) + 1

    return DatasetManifest(
        speechdb_name=speechdb_name,
        language=language,
        accent=accent,
        duration_in_hours=total_hours,
        speakers_cnt=len(speakers),
        utterances_cnt=len(utterances),
        topics_by_hours=dict(sorted(topics_by_hours.items())),
        topics_by_speakers=dict(sorted(topics_by_speakers.items())),
        gender_dist_by_hours=dict(sorted(gender_hours.items())),
        gender_dist_by_speakers=dict(sorted(gender_speakers.items())),
        noisetype_dist_by_hours=dict(sorted(noise_hours.items())),
        sampling_rate=REQUIRED_SAMPLING_RATE,
        sampling_bit=REQUIRED_SAMPLING_BIT,
        audio_channels=1,
    )


def aggregate_stats(corpus: Corpus) -> DatasetManifest:
    """Recompute the corpus manifest from its records, keeping identity fields.

    Idempotent: aggregating a corpus whose manifest was produced by this
    function changes nothing.
    """
    return aggregate_records(
        corpus.utterances.values(),
        corpus.speakers.values(),
        speechdb_name=corpus.manifest.speechdb_name,
        language=corpus.manifest.language,
        accent=corpus.manifest.accent,
    )
