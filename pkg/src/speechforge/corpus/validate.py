"""Corpus invariant validation.

Violations are data, not exceptions: the report lists every breached
invariant with the offending record id, deterministically ordered.
"""

from __future__ import annotations

from dataclasses import dataclass, field

from speechforge.corpus.records import (
    Corpus,
    DEFAULT_GENDERS,
    DEFAULT_NOISE_KINDS,
    MAX_UTTERANCE_SECONDS,
    REQUIRED_AUDIO_CHANNELS,
    REQUIRED_SAMPLING_BIT,
    REQUIRED_SAMPLING_RATE,
    SPEAKER_CAP_MINUTES,
)
from speechforge.vocab import DEFAULT_VOCABULARY, TopicVocabulary

# Violation codes
UTTERANCE_TOO_LONG = "UTTERANCE_TOO_LONG"
UTTERANCE_DURATION_NONPOSITIVE = "UTTERANCE_DURATION_NONPOSITIVE"
BAD_SAMPLING_RATE = "BAD_SAMPLING_RATE"
BAD_SAMPLING_BIT = "BAD_SAMPLING_BIT"
UNKNOWN_GENDER = "UNKNOWN_GENDER"
UNKNOWN_NOISE = "UNKNOWN_NOISE"
DOMAINS_NOT_IN_TOPICS = "DOMAINS_NOT_IN_TOPICS"
UNKNOWN_TOPIC = "UNKNOWN_TOPIC"
SESSION_MISSING_UTTERANCE = "SESSION_MISSING_UTTERANCE"
SESSION_BACKREF_MISMATCH = "SESSION_BACKREF_MISMATCH"
SESSION_SPEAKERS_MISMATCH = "SESSION_SPEAKERS_MISMATCH"
SESSION_DURATION_SHORT = "SESSION_DURATION_SHORT"
SPEAKER_CAP_EXCEEDED = "SPEAKER_CAP_EXCEEDED"
SPEAKER_DURATION_MISMATCH = "SPEAKER_DURATION_MISMATCH"
SPEAKER_CONTEXT_MISMATCH = "SPEAKER_CONTEXT_MISMATCH"
SPEAKER_MISSING_UTTERANCE = "SPEAKER_MISSING_UTTERANCE"
SPEAKER_UTTERANCE_SET_MISMATCH = "SPEAKER_UTTERANCE_SET_MISMATCH"
MANIFEST_DURATION_MISMATCH = "MANIFEST_DURATION_MISMATCH"
MANIFEST_GENDER_HOURS_MISMATCH = "MANIFEST_GENDER_HOURS_MISMATCH"
MANIFEST_GENDER_SPEAKERS_MISMATCH = "MANIFEST_GENDER_SPEAKERS_MISMATCH"
MANIFEST_NOISE_HOURS_MISMATCH = "MANIFEST_NOISE_HOURS_MISMATCH"
MANIFEST_AUDIO_CHANNELS = "MANIFEST_AUDIO_CHANNELS"
MANIFEST_UTTERANCE_COUNT = "MANIFEST_UTTERANCE_COUNT"
MANIFEST_SPEAKER_COUNT = "MANIFEST_SPEAKER_COUNT"


@dataclass(frozen=True)
class CorpusConfig:
    """Validation knobs; defaults mirror the interchange format's fixed values."""

    genders: tuple[str, ...] = DEFAULT_GENDERS
    noise_kinds: tuple[str, ...] = DEFAULT_NOISE_KINDS
    vocabulary: TopicVocabulary = DEFAULT_VOCABULARY
    rel_tol: float = 1e-6
    check_topic_vocabulary: bool = True


DEFAULT_CONFIG = CorpusConfig()


@dataclass(frozen=True)
class Violation:
    record_id: str
    code: str
    details: str

    def to_dict(self) -> dict[str, str]:
        return {"record_id": self.record_id, "code": self.code, "details": self.details}


@dataclass
class ValidationReport:
    violations: list[Violation] = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return not self.violations

    def codes(self) -> set[str]:
        return {v.code for v in self.violations}

    def to_json_dict(self) -> list[dict[str, str]]:
        return [v.to_dict() for v in self.violations]


def _close(a: float, b: float, rel_tol: float) -> bool:
    return abs(a - b) <= max(rel_tol * max(abs(a), abs(b)), 1e-9)


def _check_utterance(utt, config: CorpusConfig, out: list[Violation]) -> None:
    uid = utt.utterance_id
    if utt.duration_in_seconds <= 0:
        out.append(Violation(uid, UTTERANCE_DURATION_NONPOSITIVE,
                             f"duration_in_seconds={utt.duration_in_seconds}"))
    elif utt.duration_in_seconds > MAX_UTTERANCE_SECONDS:
        out.append(Violation(uid, UTTERANCE_TOO_LONG,
                             f"duration_in_seconds={utt.duration_in_seconds} exceeds {MAX_UTTERANCE_SECONDS}"))
    if utt.sampling_rate != REQUIRED_SAMPLING_RATE:
        out.append(Violation(uid, BAD_SAMPLING_RATE, f"sampling_rate={utt.sampling_rate}"))
    if utt.sampling_bit != REQUIRED_SAMPLING_BIT:
        out.append(Violation(uid, BAD_SAMPLING_BIT, f"sampling_bit={utt.sampling_bit}"))
    if utt.gender not in config.genders:
        out.append(Violation(uid, UNKNOWN_GENDER, f"gender={utt.gender!r}"))
    if utt.noise_background not in config.noise_kinds:
        out.append(Violation(uid, UNKNOWN_NOISE, f"noise_background={utt.noise_background!r}"))
    topic_set = {t.lower() for t in utt.topics}
    missing_domains = [d for d in utt.domains if d.lower() not in topic_set]
    if missing_domains:
        out.append(Violation(uid, DOMAINS_NOT_IN_TOPICS, f"domains not listed in topics: {missing_domains}"))
    if config.check_topic_vocabulary:
        unknown = [t for t in utt.topics if not config.vocabulary.is_known(t)]
        if unknown:
            out.append(Violation(uid, UNKNOWN_TOPIC, f"topics outside vocabulary: {unknown}"))


def _check_session(session, corpus: Corpus, config: CorpusConfig, out: list[Violation]) -> None:
    sid = session.session_id
    member_speakers: set[str] = set()
    member_seconds = 0.0
    for uid in session.utterance_ids_list:
        utt = corpus.utterances.get(uid)
        if utt is None:
            out.append(Violation(sid, SESSION_MISSING_UTTERANCE, f"utterance {uid} not present"))
            continue
        if utt.session_id != sid:
            out.append(Violation(sid, SESSION_BACKREF_MISMATCH,
                                 f"utterance {uid} back-references session {utt.session_id!r}"))
        member_speakers.add(utt.speaker_id)
        member_seconds += utt.duration_in_seconds
    if set(session.speakers) != member_speakers:
        out.append(Violation(sid, SESSION_SPEAKERS_MISMATCH,
                             f"listed={sorted(session.speakers)} derived={sorted(member_speakers)}"))
    min_minutes = member_seconds / 60.0
    if session.duration_in_minutes < min_minutes and not _close(session.duration_in_minutes, min_minutes, config.rel_tol):
        out.append(Violation(sid, SESSION_DURATION_SHORT,
                             f"duration_in_minutes={session.duration_in_minutes} < member sum {min_minutes:.6f}"))


def _check_speaker(speaker, corpus: Corpus, config: CorpusConfig, out: list[Violation]) -> None:
    spk = speaker.speaker_id
    seconds = 0.0
    contexts: set[str] = set()
    for uid in speaker.utterance_ids_list:
        utt = corpus.utterances.get(uid)
        if utt is None:
            out.append(Violation(spk, SPEAKER_MISSING_UTTERANCE, f"utterance {uid} not present"))
            continue
        seconds += utt.duration_in_seconds
        contexts.add(utt.session_id)
    listed = set(speaker.utterance_ids_list)
    derived = {u.utterance_id for u in corpus.utterances.values() if u.speaker_id == spk}
    if listed != derived:
        out.append(Violation(spk, SPEAKER_UTTERANCE_SET_MISMATCH,
                             f"listed={sorted(listed)} derived={sorted(derived)}"))
    if speaker.duration_in_minutes >= SPEAKER_CAP_MINUTES:
        out.append(Violation(spk, SPEAKER_CAP_EXCEEDED,
                             f"duration_in_minutes={speaker.duration_in_minutes} >= {SPEAKER_CAP_MINUTES}"))
    expected_minutes = seconds / 60.0
    if not _close(speaker.duration_in_minutes, expected_minutes, config.rel_tol):
        out.append(Violation(spk, SPEAKER_DURATION_MISMATCH,
                             f"duration_in_minutes={speaker.duration_in_minutes} != utterance sum {expected_minutes:.9f}"))
    if set(speaker.context_ids_list) != contexts:
        out.append(Violation(spk, SPEAKER_CONTEXT_MISMATCH,
                             f"listed={sorted(speaker.context_ids_list)} derived={sorted(contexts)}"))


def _check_manifest(corpus: Corpus, config: CorpusConfig, out: list[Violation]) -> None:
    manifest = corpus.manifest
    name = manifest.speechdb_name
    total_hours = sum(u.duration_in_seconds for u in corpus.utterances.values()) / 3600.0
    if not _close(manifest.duration_in_hours, total_hours, config.rel_tol):
        out.append(Violation(name, MANIFEST_DURATION_MISMATCH,
                             f"duration_in_hours={manifest.duration_in_hours} != record sum {total_hours:.9f}"))
    gender_hours = sum(manifest.gender_dist_by_hours.values())
    if not _close(gender_hours, manifest.duration_in_hours, config.rel_tol):
        out.append(Violation(name, MANIFEST_GENDER_HOURS_MISMATCH,
                             f"gender hours sum {gender_hours} != duration_in_hours {manifest.duration_in_hours}"))
    gender_speakers = sum(manifest.gender_dist_by_speakers.values())
    if gender_speakers != manifest.speakers_cnt:
        out.append(Violation(name, MANIFEST_GENDER_SPEAKERS_MISMATCH,
                             f"gender speaker sum {gender_speakers} != speakers_cnt {manifest.speakers_cnt}"))
    noise_hours = sum(manifest.noisetype_dist_by_hours.values())
    if not _close(noise_hours, manifest.duration_in_hours, config.rel_tol):
        out.append(Violation(name, MANIFEST_NOISE_HOURS_MISMATCH,
                             f"noise hours sum {noise_hours} != duration_in_hours {manifest.duration_in_hours}"))
    if manifest.audio_channels != REQUIRED_AUDIO_CHANNELS:
        out.append(Violation(name, MANIFEST_AUDIO_CHANNELS, f"audio_channels={manifest.audio_channels}"))
    if manifest.utterances_cnt != len(corpus.utterances):
        out.append(Violation(name, MANIFEST_UTTERANCE_COUNT,
                             f"utterances_cnt={manifest.utterances_cnt} != {len(corpus.utterances)}"))
    if manifest.speakers_cnt != len(corpus.speakers):
        out.append(Violation(name, MANIFEST_SPEAKER_COUNT,
                             f"speakers_cnt={manifest.speakers_cnt} != {len(corpus.speakers)}"))


def validate_corpus(corpus: Corpus, config: CorpusConfig = DEFAULT_CONFIG) -> ValidationReport:
    """Check every schema invariant; empty report means the corpus is clean."""
    out: list[Violation] = []
    for uid in sorted(corpus.utterances):
        _check_utterance(corpus.utterances[uid], config, out)
    for sid in sorted(corpus.sessions):
        _check_session(corpus.sessions[sid], corpus, config, out)
    for spk in sorted(corpus.speakers):
        _check_speaker(corpus.speakers[spk], corpus, config, out)
    _check_manifest(corpus, config, out)
    out.sort(key=lambda v: (v.record_id, v.code, v.details))
    return ValidationReport(out)
