"""Domain types for the pre-labeling pipeline."""

from __future__ import annotations

import json
from dataclasses import dataclass, field
from enum import Enum
from typing import Any

from speechforge.corpus.records import MAX_UTTERANCE_SECONDS


class Stage(str, Enum):
    SOURCE_SEPARATION = "source_separation"
    SYNTHETIC_DETECTION = "synthetic_detection"
    LANGUAGE_ID = "language_id"
    ACCENT_ID = "accent_id"
    SPEECH_SEGMENTATION = "speech_segmentation"
    SPEAKER_SEGMENTATION = "speaker_segmentation"
    GENDER_DETECTION = "gender_detection"
    ASR = "asr"
    TOPIC_DETECTION = "topic_detection"


MANDATORY_STAGES = (
    Stage.SYNTHETIC_DETECTION,
    Stage.LANGUAGE_ID,
    Stage.SPEECH_SEGMENTATION,
    Stage.SPEAKER_SEGMENTATION,
    Stage.ASR,
)


@dataclass(frozen=True)
class RawSessionInput:
    """One raw audio session entering the pipeline."""

    session_id: str
    audio_path: str
    title: str = ""
    scraped_tags: tuple[str, ...] = ()
    declared_sample_rate: int = 16000
    declared_sample_bit: int = 16
    declared_duration_s: float = 0.0

    @classmethod
    def from_dict(cls, data: dict[str, Any]) -> "RawSessionInput":
        return cls(
            session_id=data["session_id"],
            audio_path=data["audio_path"],
            title=data.get("title", ""),
            scraped_tags=tuple(data.get("scraped_tags", ())),
            declared_sample_rate=data.get("declared_sample_rate", 16000),
            declared_sample_bit=data.get("declared_sample_bit", 16),
            declared_duration_s=data.get("declared_duration_s", 0.0),
        )

    def to_dict(self) -> dict[str, Any]:
        return {
            "session_id": self.session_id,
            "audio_path": self.audio_path,
            "title": self.title,
            "scraped_tags": list(self.scraped_tags),
            "declared_sample_rate": self.declared_sample_rate,
            "declared_sample_bit": self.declared_sample_bit,
            "declared_duration_s": self.declared_duration_s,
        }


@dataclass(frozen=True)
class StageResult:
    """Output of one stage adapter run for one session."""

    stage: Stage
    payload: dict[str, Any]
    confidence: float
    provenance: str

    def __post_init__(self) -> None:
        if not 0.0 <= self.confidence <= 1.0:
            raise ValueError(f"confidence {self.confidence} outside [0, 1]")
        _check_payload(self.stage, self.payload)


_PAYLOAD_REQUIRED_KEYS: dict[Stage, tuple[str, ...]] = {
    Stage.SOURCE_SEPARATION: ("applied",),
    Stage.SYNTHETIC_DETECTION: ("spoofed",),
    Stage.LANGUAGE_ID: ("language",),
    Stage.ACCENT_ID: ("accent",),
    Stage.SPEECH_SEGMENTATION: ("segments",),
    Stage.SPEAKER_SEGMENTATION: ("turns",),
    Stage.GENDER_DETECTION: ("genders",),
    Stage.ASR: ("items",),
    Stage.TOPIC_DETECTION: ("topics",),
}


def _check_payload(stage: Stage, payload: dict[str, Any]) -> None:
    missing = [k for k in _PAYLOAD_REQUIRED_KEYS[stage] if k not in payload]
    if missing:
        raise ValueError(f"payload for stage {stage.value} missing keys {missing}")


@dataclass(frozen=True)
class GatingPolicy:
    """Pre-label usefulness thresholds on estimated accuracy/confidence.

    Below ``hurt_threshold`` machine labels are known to hurt annotators;
    at or above ``help_threshold`` they are known to help. Outputs are only
    presented to annotators in the helpful band.
    """

    hurt_threshold: float = 0.70
    help_threshold: float = 0.85

    def __post_init__(self) -> None:
        if not 0.0 <= self.hurt_threshold <= self.help_threshold <= 1.0:
            raise ValueError(
                f"thresholds must satisfy 0 <= hurt <= help <= 1, got "
                f"({self.hurt_threshold}, {self.help_threshold})"
            )


class PrelabelMode(str, Enum):
    ASSISTED = "assisted"
    FROM_SCRATCH = "from_scratch"


class SegmentKind(str, Enum):
    SPEECH = "speech"
    MUSIC = "music"
    NOISE = "noise"


@dataclass(frozen=True)
class SegmentLabel:
    start: float
    end: float
    kind: SegmentKind
    speaker_local_id: str | None = None

    def __post_init__(self) -> None:
        if self.start >= self.end:
            raise ValueError(f"segment start {self.start} must precede end {self.end}")
        if self.kind is not SegmentKind.SPEECH and self.speaker_local_id is not None:
            raise ValueError("speaker_local_id only applies to speech segments")

    @property
    def duration(self) -> float:
        return self.end - self.start

    def to_dict(self) -> dict[str, Any]:
        return {
            "start": self.start,
            "end": self.end,
            "kind": self.kind.value,
            "speaker_local_id": self.speaker_local_id,
        }


class RoutingStatus(str, Enum):
    ACCEPTED = "accepted"
    REJECTED_SYNTHETIC = "rejected_synthetic"
    REJECTED_UNSUPPORTED_LANGUAGE = "rejected_unsupported_language"


@dataclass(frozen=True)
class RoutingDecision:
    status: RoutingStatus
    language: str = ""
    accent: str = ""
    confidence: float = 0.0

    @property
    def accepted(self) -> bool:
        return self.status is RoutingStatus.ACCEPTED

    def to_dict(self) -> dict[str, Any]:
        return {
            "status": self.status.value,
            "language": self.language,
            "accent": self.accent,
            "confidence": self.confidence,
        }


@dataclass(frozen=True)
class UtteranceDraft:
    """A machine-proposed utterance: bounds, speaker and transcript hypothesis."""

    start: float
    end: float
    speaker_local_id: str
    hypothesis: str
    asr_confidence: float

    @property
    def duration(self) -> float:
        return self.end - self.start

    def to_dict(self) -> dict[str, Any]:
        return {
            "start": self.start,
            "end": self.end,
            "speaker_local_id": self.speaker_local_id,
            "hypothesis": self.hypothesis,
            "asr_confidence": self.asr_confidence,
        }


@dataclass
class PretagBundle:
    """Everything the machine side knows about one session."""

    session_id: str
    routing: RoutingDecision
    segments: list[SegmentLabel] = field(default_factory=list)
    drafts: list[UtteranceDraft] = field(default_factory=list)
    genders: dict[str, str] = field(default_factory=dict)
    topics: list[str] = field(default_factory=list)
    prelabel_mode: PrelabelMode = PrelabelMode.FROM_SCRATCH
    stage_provenance: dict[str, str] = field(default_factory=dict)
    uncuttable: list[dict[str, Any]] = field(default_factory=list)
    source_separated: bool = False

    def __post_init__(self) -> None:
        if not self.routing.accepted and self.drafts:
            raise ValueError("rejected sessions must carry no utterance drafts")
        for draft in self.drafts:
            if draft.duration > MAX_UTTERANCE_SECONDS + 1e-9:
                raise ValueError(f"draft {draft} exceeds {MAX_UTTERANCE_SECONDS} s")

    def to_dict(self) -> dict[str, Any]:
        return {
            "session_id": self.session_id,
            "routing": self.routing.to_dict(),
            "segments": [s.to_dict() for s in self.segments],
            "drafts": [d.to_dict() for d in self.drafts],
            "genders": dict(sorted(self.genders.items())),
            "topics": list(self.topics),
            "prelabel_mode": self.prelabel_mode.value,
            "stage_provenance": dict(sorted(self.stage_provenance.items())),
            "uncuttable": self.uncuttable,
            "source_separated": self.source_separated,
        }

    def to_json(self) -> str:
        """Canonical serialization; byte-identical for identical bundles."""
        return json.dumps(self.to_dict(), sort_keys=True, ensure_ascii=False)

    @classmethod
    def from_dict(cls, data: dict[str, Any]) -> "PretagBundle":
        return cls(
            session_id=data["session_id"],
            routing=RoutingDecision(
                status=RoutingStatus(data["routing"]["status"]),
                language=data["routing"].get("language", ""),
                accent=data["routing"].get("accent", ""),
                confidence=data["routing"].get("confidence", 0.0),
            ),
            segments=[
                SegmentLabel(
                    start=s["start"],
                    end=s["end"],
                    kind=SegmentKind(s["kind"]),
                    speaker_local_id=s.get("speaker_local_id"),
                )
                for s in data.get("segments", [])
            ],
            drafts=[
                UtteranceDraft(
                    start=d["start"],
                    end=d["end"],
                    speaker_local_id=d["speaker_local_id"],
                    hypothesis=d["hypothesis"],
                    asr_confidence=d["asr_confidence"],
                )
                for d in data.get("drafts", [])
            ],
            genders=dict(data.get("genders", {})),
            topics=list(data.get("topics", [])),
            prelabel_mode=PrelabelMode(data.get("prelabel_mode", "from_scratch")),
            stage_provenance=dict(data.get("stage_provenance", {})),
            uncuttable=list(data.get("uncuttable", [])),
            source_separated=data.get("source_separated", False),
        )
