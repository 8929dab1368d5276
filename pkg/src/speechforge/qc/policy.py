"""Quality-control policy: one flat, JSON-loadable knob set."""

from __future__ import annotations

import dataclasses
import json
from dataclasses import dataclass
from pathlib import Path
from typing import Any


@dataclass(frozen=True)
class QcPolicy:
    # assignment shape
    assignment_size: int = 10
    k_test_questions: int = 2
    lease_minutes: float = 30.0
    # test-question scoring
    wer_tolerance: float = 0.10
    removal_threshold: float = 0.80
    min_attempts: int = 5
    recycle_keeps_prelabels: bool = True
    # behavior monitoring
    min_listen_coverage: float = 0.98
    min_dwell_per_audio_second_ms: float = 100.0
    max_zero_edit_streak: int = 15
    min_population_for_soft_flags: int = 20
    soft_flag_z: float = 3.0
    # final delivery sampling
    sampling_confidence: float = 0.95
    sampling_margin: float = 0.05
    assumed_proportion: float = 0.5
    accuracy_threshold: float = 0.95

    def __post_init__(self) -> None:
        if not 0.0 < self.removal_threshold <= 1.0:
            raise ValueError("removal_threshold must be in (0, 1]")
        if self.k_test_questions < 0 or self.assignment_size <= 0:
            raise ValueError("assignment shape must be positive")
        if not 0.0 <= self.min_listen_coverage <= 1.0:
            raise ValueError("min_listen_coverage must be in [0, 1]")

    @classmethod
    def from_dict(cls, data: dict[str, Any]) -> "QcPolicy":
        known = {f.name for f in dataclasses.fields(cls)}
        unknown = set(data) - known
        if unknown:
            raise ValueError(f"unknown policy keys: {sorted(unknown)}")
        return cls(**data)

    @classmethod
    def from_json_file(cls, path: str | Path) -> "QcPolicy":
        with open(path, encoding="utf-8") as fh:
            return cls.from_dict(json.load(fh))

    def to_dict(self) -> dict[str, Any]:
        return dataclasses.asdict(self)
