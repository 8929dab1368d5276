"""Machine pre-labeling pipeline: pluggable stage adapters, routing, gating."""

from speechforge.pretag.adapters import (
    ExternalServiceAdapter,
    FixtureStageAdapter,
    fixture_adapter_set,
)
from speechforge.pretag.cutting import UncuttableSpan, UtteranceBounds, cut_utterances
from speechforge.pretag.pipeline import (
    PipelineConfig,
    gate_prelabels,
    route_language,
    run_pipeline,
    run_pipeline_batch,
)
from speechforge.pretag.topics import TopicScore, detect_topics
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

__all__ = [
    "ExternalServiceAdapter",
    "FixtureStageAdapter",
    "GatingPolicy",
    "PipelineConfig",
    "PrelabelMode",
    "PretagBundle",
    "RawSessionInput",
    "RoutingDecision",
    "RoutingStatus",
    "SegmentKind",
    "SegmentLabel",
    "Stage",
    "StageResult",
    "TopicScore",
    "UncuttableSpan",
    "UtteranceBounds",
    "UtteranceDraft",
    "cut_utterances",
    "detect_topics",
    "fixture_adapter_set",
    "gate_prelabels",
    "route_language",
    "run_pipeline",
    "run_pipeline_batch",
]
