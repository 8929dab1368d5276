"""Pipeline orchestration: stage order, routing, gating, draft assembly.

Stage order over one session: source separation (optional) -> synthetic
detection -> language ID -> accent ID (optional) -> speech segmentation ->
speaker segmentation -> gender detection (optional) -> ASR -> topics.
Rejections short-circuit: later adapters are never called for a rejected
session.
"""

from __future__ import annotations

import dataclasses
import threading
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass, field
from typing import Any, Iterable

from speechforge.errors import AdapterFailureError, PipelineConfigError
from speechforge.pretag.adapters import StageAdapter, check_mandatory
from speechforge.pretag.cutting import UtteranceBounds, cut_utterances
from speechforge.pretag.topics import detect_topics
from speechforge.pretag.types import (
    GatingPolicy,
    PrelabelMode,
    PretagBundle,
    RawSessionInput,
    RoutingDecision,
    RoutingStatus,
    SegmentKind,
    SegmentLabel,
    Stage,
    StageResult,
    UtteranceDraft,
)
from speechforge.vocab import DEFAULT_VOCABULARY, TopicVocabulary


@dataclass(frozen=True)
class PipelineConfig:
    gating: GatingPolicy = GatingPolicy()
    supported_languages: frozenset[str] = frozenset({"english"})
    vocabulary: TopicVocabulary = DEFAULT_VOCABULARY
    # adapters derive pauses as inter-speech gaps at or above this length
    min_pause_s: float = 0.3
    max_utterance_seconds: float = 20.0


def gate_prelabels(asr_confidence: float, policy: GatingPolicy) -> PrelabelMode:
    """Assisted iff confidence reaches the help threshold; conservative below.

    Confidences between the hurt and help thresholds also fall back to
    from-scratch annotation: marginal pre-labels are withheld.
    """
    if not 0.0 <= asr_confidence <= 1.0:
        raise ValueError(f"asr_confidence {asr_confidence} outside [0, 1]")
    if asr_confidence >= policy.help_threshold:
        return PrelabelMode.ASSISTED
    return PrelabelMode.FROM_SCRATCH


def route_language(lang_result: StageResult, supported: Iterable[str]) -> RoutingDecision:
    """Accept when the detected language is in the supported set."""
    if lang_result.stage is not Stage.LANGUAGE_ID:
        raise ValueError(f"expected a language_id result, got {lang_result.stage.value}")
    language = str(lang_result.payload["language"])
    supported_lower = {s.lower() for s in supported}
    if language.lower() in supported_lower:
        return RoutingDecision(
            RoutingStatus.ACCEPTED, language=language, confidence=lang_result.confidence
        )
    return RoutingDecision(
        RoutingStatus.REJECTED_UNSUPPORTED_LANGUAGE,
        language=language,
        confidence=lang_result.confidence,
    )


def _parse_speech_payload(payload: dict[str, Any]) -> tuple[list[SegmentLabel], list[tuple[float, float]]]:
    segments = [
        SegmentLabel(start=float(s["start"]), end=float(s["end"]), kind=SegmentKind(s["kind"]))
        for s in payload["segments"]
    ]
    pauses = [(float(p["start"]), float(p["end"])) for p in payload.get("pauses", [])]
    return segments, pauses


def _parse_turns(payload: dict[str, Any]) -> list[tuple[float, float, str]]:
    turns = sorted(
        (float(t["start"]), float(t["end"]), str(t["speaker"])) for t in payload["turns"]
    )
    clipped: list[tuple[float, float, str]] = []
    prev_end = float("-inf")
    for start, end, speaker in turns:
        start = max(start, prev_end)  # diarization overlap is clipped, not fatal
        if end - start > 1e-9:
            clipped.append((start, end, speaker))
            prev_end = end
    return clipped


def merge_speaker_turns(
    segments: list[SegmentLabel], turns: list[tuple[float, float, str]]
) -> list[SegmentLabel]:
    """Split speech segments at speaker-turn boundaries.

    Speech not covered by any turn keeps speaker_local_id=None (kept as a
    segment, never drafted). Non-speech segments pass through untouched.
    """
    merged: list[SegmentLabel] = []
    for segment in segments:
        if segment.kind is not SegmentKind.SPEECH:
            merged.append(segment)
            continue
        pos = segment.start
        for t_start, t_end, speaker in turns:
            lo, hi = max(segment.start, t_start), min(segment.end, t_end)
            if hi - lo <= 1e-9:
                continue
            if lo - pos > 1e-9:
                merged.append(SegmentLabel(pos, lo, SegmentKind.SPEECH))
            merged.append(SegmentLabel(lo, hi, SegmentKind.SPEECH, speaker_local_id=speaker))
            pos = hi
        if segment.end - pos > 1e-9:
            merged.append(SegmentLabel(pos, segment.end, SegmentKind.SPEECH))
    merged.sort(key=lambda s: (s.start, s.kind.value))
    return merged


def _assemble_drafts(
    bounds: list[UtteranceBounds], asr_items: list[dict[str, Any]]
) -> list[UtteranceDraft]:
    drafts: list[UtteranceDraft] = []
    items = sorted(asr_items, key=lambda i: (float(i["start"]), float(i["end"])))
    for bound in bounds:
        if bound.speaker_local_id is None:
            continue
        texts: list[str] = []
        weighted = 0.0
        weight = 0.0
        for item in items:
            mid = (float(item["start"]) + float(item["end"])) / 2.0
            if bound.start <= mid < bound.end:
                texts.append(str(item["text"]))
                item_weight = max(float(item["end"]) - float(item["start"]), 1e-9)
                weighted += float(item["confidence"]) * item_weight
                weight += item_weight
        drafts.append(
            UtteranceDraft(
                start=bound.start,
                end=bound.end,
                speaker_local_id=bound.speaker_local_id,
                hypothesis=" ".join(texts),
                asr_confidence=weighted / weight if weight else 0.0,
            )
        )
    return drafts


def _rejected_bundle(session_id: str, routing: RoutingDecision,
                     provenance: dict[str, str], source_separated: bool) -> PretagBundle:
    return PretagBundle(
        session_id=session_id,
        routing=routing,
        stage_provenance=provenance,
        source_separated=source_separated,
    )


def run_pipeline(
    session: RawSessionInput,
    adapters: dict[Stage, StageAdapter],
    config: PipelineConfig = PipelineConfig(),
) -> PretagBundle:
    """Run all stages over one session and assemble its bundle.

    Raises PipelineConfigError when a mandatory adapter is missing and
    AdapterFailureError when a mandatory stage fails at runtime (the caller
    parks the session for retry).
    """
    missing = check_mandatory(adapters)
    if missing:
        raise PipelineConfigError(
            f"missing mandatory adapters: {[s.value for s in missing]}"
        )
    provenance: dict[str, str] = {}

    def call(stage: Stage) -> StageResult:
        result = adapters[stage](session)
        provenance[stage.value] = result.provenance
        return result

    source_separated = False
    if Stage.SOURCE_SEPARATION in adapters:
        source_separated = bool(call(Stage.SOURCE_SEPARATION).payload["applied"])

    synth = call(Stage.SYNTHETIC_DETECTION)
    if synth.payload["spoofed"]:
        routing = RoutingDecision(RoutingStatus.REJECTED_SYNTHETIC, confidence=synth.confidence)
        return _rejected_bundle(session.session_id, routing, provenance, source_separated)

    routing = route_language(call(Stage.LANGUAGE_ID), config.supported_languages)
    if not routing.accepted:
        return _rejected_bundle(session.session_id, routing, provenance, source_separated)

    if Stage.ACCENT_ID in adapters:
        try:
            accent = str(call(Stage.ACCENT_ID).payload["accent"])
        except AdapterFailureError:
            accent = ""  # accent stays blank; the session still proceeds
        routing = dataclasses.replace(routing, accent=accent)

    speech_segments, pauses = _parse_speech_payload(call(Stage.SPEECH_SEGMENTATION).payload)
    turns = _parse_turns(call(Stage.SPEAKER_SEGMENTATION).payload)
    segments = merge_speaker_turns(speech_segments, turns)

    genders: dict[str, str] = {}
    if Stage.GENDER_DETECTION in adapters:
        genders = {
            str(k): str(v) for k, v in call(Stage.GENDER_DETECTION).payload["genders"].items()
        }

    asr = call(Stage.ASR)
    bounds, uncuttable = cut_utterances(segments, pauses, config.max_utterance_seconds)
    drafts = _assemble_drafts(bounds, asr.payload["items"])
    mode = gate_prelabels(asr.confidence, config.gating)

    if session.scraped_tags:
        topics = [t for t in session.scraped_tags if config.vocabulary.is_known(t)]
    elif Stage.TOPIC_DETECTION in adapters:
        topics = [str(t) for t in call(Stage.TOPIC_DETECTION).payload["topics"]]
    else:
        transcript = " ".join(str(i["text"]) for i in asr.payload["items"])
        topics = [ts.topic for ts in detect_topics(transcript, config.vocabulary)]

    return PretagBundle(
        session_id=session.session_id,
        routing=routing,
        segments=segments,
        drafts=drafts,
        genders=genders,
        topics=topics,
        prelabel_mode=mode,
        stage_provenance=provenance,
        uncuttable=[u.to_dict() for u in uncuttable],
        source_separated=source_separated,
    )


class _SingleFlight:
    """Serializes calls into an adapter that declared single_flight."""

    def __init__(self, adapter: StageAdapter) -> None:
        self._adapter = adapter
        self._lock = threading.Lock()
        self.name = adapter.name
        self.version = adapter.version
        self.single_flight = True

    def __call__(self, session: RawSessionInput) -> StageResult:
        with self._lock:
            return self._adapter(session)


@dataclass
class ParkedSession:
    session_id: str
    stage: str
    cause: str


@dataclass
class BatchResult:
    bundles: dict[str, PretagBundle] = field(default_factory=dict)
    parked: list[ParkedSession] = field(default_factory=list)


def run_pipeline_batch(
    sessions: Iterable[RawSessionInput],
    adapters: dict[Stage, StageAdapter],
    config: PipelineConfig = PipelineConfig(),
    max_workers: int = 4,
) -> BatchResult:
    """Run many sessions concurrently; stage order stays sequential per session.

    Failed sessions are parked with their failing stage and cause, never
    dropped.
    """
    wrapped = {
        stage: _SingleFlight(adapter) if getattr(adapter, "single_flight", False) else adapter
        for stage, adapter in adapters.items()
    }
    sessions = list(sessions)
    result = BatchResult()
    lock = threading.Lock()

    def work(session: RawSessionInput) -> None:
        try:
            bundle = run_pipeline(session, wrapped, config)
        except AdapterFailureError as exc:
            with lock:
                result.parked.append(ParkedSession(session.session_id, exc.stage, exc.cause))
            return
        with lock:
            result.bundles[session.session_id] = bundle

    if max_workers <= 1:
        for session in sessions:
            work(session)
    else:
        with ThreadPoolExecutor(max_workers=max_workers) as pool:
            list(pool.map(work, sessions))
    return result
