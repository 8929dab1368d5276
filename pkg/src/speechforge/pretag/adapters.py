"""Stage adapters.

An adapter maps a raw session to one StageResult. The reference adapter reads
sidecar fixture files ({session_id}.pretag.json); the external-service adapter
posts the session reference to a real model service. Adapters declare
``single_flight=True`` when they cannot take concurrent calls, and the batch
runner honors it.
"""

from __future__ import annotations

import json
import threading
from pathlib import Path
from typing import Any, Protocol

import requests

from speechforge.errors import AdapterFailureError
from speechforge.pretag.types import MANDATORY_STAGES, RawSessionInput, Stage, StageResult


class StageAdapter(Protocol):
    name: str
    version: str
    single_flight: bool

    def __call__(self, session: RawSessionInput) -> StageResult: ...


class FixtureStageAdapter:
    """Reads stage payloads from ``{session_id}.pretag.json`` sidecar files.

    Sidecar shape::

        {"session_id": "...",
         "stages": {"asr": {"payload": {...}, "confidence": 0.9}, ...}}

    Every call is appended to ``calls`` so tests can assert short-circuiting.
    """

    def __init__(self, stage: Stage, fixtures_root: str | Path,
                 name: str = "fixture", version: str = "1") -> None:
        self.stage = stage
        self.fixtures_root = Path(fixtures_root)
        self.name = name
        self.version = version
        self.single_flight = False
        self.calls: list[str] = []
        self._lock = threading.Lock()

    @property
    def provenance(self) -> str:
        return f"{self.name}:{self.version}"

    def __call__(self, session: RawSessionInput) -> StageResult:
        with self._lock:
            self.calls.append(session.session_id)
        path = self.fixtures_root / f"{session.session_id}.pretag.json"
        try:
            with open(path, encoding="utf-8") as fh:
                sidecar = json.load(fh)
        except FileNotFoundError as exc:
            raise AdapterFailureError(self.stage.value, f"fixture missing: {path}") from exc
        except json.JSONDecodeError as exc:
            raise AdapterFailureError(self.stage.value, f"fixture unreadable: {exc}") from exc
        entry = sidecar.get("stages", {}).get(self.stage.value)
        if entry is None:
            raise AdapterFailureError(self.stage.value, f"no payload for stage in {path}")
        try:
            return StageResult(
                stage=self.stage,
                payload=entry["payload"],
                confidence=entry.get("confidence", 1.0),
                provenance=entry.get("provenance", self.provenance),
            )
        except (KeyError, ValueError) as exc:
            raise AdapterFailureError(self.stage.value, f"bad fixture payload: {exc}") from exc


class ExternalServiceAdapter:
    """Calls a model service: POST {stage, session_id, audio_path} -> StageResult JSON."""

    def __init__(self, stage: Stage, endpoint: str, name: str = "external",
                 version: str = "unversioned", timeout_s: float = 30.0,
                 single_flight: bool = False,
                 session: requests.Session | None = None) -> None:
        self.stage = stage
        self.endpoint = endpoint
        self.name = name
        self.version = version
        self.timeout_s = timeout_s
        self.single_flight = single_flight
        self._http = session or requests.Session()

    def __call__(self, session: RawSessionInput) -> StageResult:
        request_body = {
            "stage": self.stage.value,
            "session_id": session.session_id,
            "audio_path": session.audio_path,
        }
        try:
            response = self._http.post(self.endpoint, json=request_body, timeout=self.timeout_s)
            response.raise_for_status()
            body: dict[str, Any] = response.json()
        except requests.RequestException as exc:
            raise AdapterFailureError(self.stage.value, f"service call failed: {exc}") from exc
        try:
            return StageResult(
                stage=Stage(body.get("stage", self.stage.value)),
                payload=body["payload"],
                confidence=body["confidence"],
                provenance=body.get("provenance", f"{self.name}:{self.version}"),
            )
        except (KeyError, ValueError) as exc:
            raise AdapterFailureError(self.stage.value, f"bad service response: {exc}") from exc


def fixture_adapter_set(fixtures_root: str | Path,
                        stages: tuple[Stage, ...] | None = None) -> dict[Stage, FixtureStageAdapter]:
    """Fixture adapters for the given stages (defaults to all)."""
    chosen = stages if stages is not None else tuple(Stage)
    return {stage: FixtureStageAdapter(stage, fixtures_root) for stage in chosen}


def check_mandatory(adapters: dict[Stage, Any]) -> list[Stage]:
    return [stage for stage in MANDATORY_STAGES if stage not in adapters]
