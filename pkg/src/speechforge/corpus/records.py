"""Record types for the four-level corpus metadata schema.

A corpus is described at four levels: a dataset manifest, audio sessions,
utterances cut from those sessions, and per-speaker rollups. Records keep any
unrecognized wire fields in ``extras`` so files written by newer tools survive
a load/save cycle untouched.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Any

REQUIRED_SAMPLING_RATE = 16000
REQUIRED_SAMPLING_BIT = 16
REQUIRED_AUDIO_CHANNELS = 1
MAX_UTTERANCE_SECONDS = 20.0
SPEAKER_CAP_MINUTES = 60.0
DEFAULT_GENDERS = ("male", "female")
DEFAULT_NOISE_KINDS = ("clean", "noisy", "music")


@dataclass
class UtteranceRecord:
    """A short clip: one speaker, one sentence-sized span of audio."""

    utterance_id: str
    speaker_id: str
    session_id: str
    audio_path: str
    duration_in_seconds: float
    domains: list[str] = field(default_factory=list)
    topics: list[str] = field(default_factory=list)
    transcription: str = ""
    language: str = ""
    accent: str = ""
    gender: str = ""
    noise_background: str = "clean"
    sampling_rate: int = REQUIRED_SAMPLING_RATE
    sampling_bit: int = REQUIRED_SAMPLING_BIT
    extras: dict[str, Any] = field(default_factory=dict)


@dataclass
class SessionRecord:
    """A group of related utterances, e.g. one interview or broadcast clip."""

    session_id: str
    audio_path: str
    duration_in_minutes: float
    utterance_ids_list: list[str] = field(default_factory=list)
    speakers: list[str] = field(default_factory=list)
    session_brief_title: str = ""
    domains: list[str] = field(default_factory=list)
    topics: list[str] = field(default_factory=list)
    language: str = ""
    accent: str = ""
    noise_background: str = "clean"
    sampling_rate: int = REQUIRED_SAMPLING_RATE
    sampling_bit: int = REQUIRED_SAMPLING_BIT
    extras: dict[str, Any] = field(default_factory=dict)


@dataclass
class SpeakerRecord:
    """Per-speaker rollup across sessions; capped below 60 minutes of audio."""

    speaker_id: str
    utterance_ids_list: list[str] = field(default_factory=list)
    context_ids_list: list[str] = field(default_factory=list)
    duration_in_minutes: float = 0.0
    language: str = ""
    accent: str = ""
    gender: str = ""
    extras: dict[str, Any] = field(default_factory=dict)


@dataclass
class DatasetManifest:
    """Dataset-level statistics and identity."""

    speechdb_name: str
    language: str = ""
    accent: str = ""
    duration_in_hours: float = 0.0
    speakers_cnt: int = 0
    utterances_cnt: int = 0
    topics_by_hours: dict[str, float] = field(default_factory=dict)
    topics_by_speakers: dict[str, int] = field(default_factory=dict)
    gender_dist_by_hours: dict[str, float] = field(default_factory=dict)
    gender_dist_by_speakers: dict[str, int] = field(default_factory=dict)
    noisetype_dist_by_hours: dict[str, float] = field(default_factory=dict)
    sampling_rate: int = REQUIRED_SAMPLING_RATE
    sampling_bit: int = REQUIRED_SAMPLING_BIT
    audio_channels: int = REQUIRED_AUDIO_CHANNELS
    extras: dict[str, Any] = field(default_factory=dict)


@dataclass
class Corpus:
    """An in-memory corpus: one manifest plus id-indexed record maps.

    Treated as an immutable value after construction; operations that change
    a corpus produce a new one.
    """

    manifest: DatasetManifest
    utterances: dict[str, UtteranceRecord] = field(default_factory=dict)
    sessions: dict[str, SessionRecord] = field(default_factory=dict)
    speakers: dict[str, SpeakerRecord] = field(default_factory=dict)

    @classmethod
    def empty(cls, name: str = "empty") -> "Corpus":
        return cls(manifest=DatasetManifest(speechdb_name=name))

    def utterances_of_speaker(self, speaker_id: str) -> list[UtteranceRecord]:
        return [u for u in self.utterances.values() if u.speaker_id == speaker_id]

    def utterances_of_session(self, session_id: str) -> list[UtteranceRecord]:
        return [u for u in self.utterances.values() if u.session_id == session_id]
