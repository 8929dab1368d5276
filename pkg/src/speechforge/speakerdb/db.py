"""Speaker enrollment: match against enrolled centroids or mint a new identity.

Identities are anonymous: ids come from the database's own seeded RNG and
carry nothing derived from the audio source. Each enrolled speaker keeps a
duration-weighted accumulator of its evidence; the centroid is the normalized
accumulator, so re-enrolling the same embedding never moves it.

Persistence is an append-only JSON-lines event log plus snapshots; replaying
the log reproduces the snapshot byte for byte.
"""

from __future__ import annotations

import json
import random
import threading
from dataclasses import dataclass, field
from pathlib import Path
from typing import Iterable, Sequence

import numpy as np

from speechforge.corpus.records import SPEAKER_CAP_MINUTES
from speechforge.errors import EmptySegmentsError
from speechforge.speakerdb.embeddings import DEFAULT_DIM, check_unit, normalized, score

_ID_ALPHABET = "abcdefghijklmnopqrstuvwxyz0123456789"
_ID_LENGTH = 16


@dataclass
class EnrolledSpeaker:
    speaker_id: str
    accumulator: np.ndarray  # sum of embedding * duration_s over all evidence
    segment_count: int
    total_duration_s: float
    session_ids: set[str] = field(default_factory=set)

    @property
    def centroid(self) -> np.ndarray:
        return normalized(self.accumulator)

    @property
    def total_duration_minutes(self) -> float:
        return self.total_duration_s / 60.0


@dataclass(frozen=True)
class MatchDecision:
    matched: str | None
    score: float
    threshold_used: float


@dataclass(frozen=True)
class EnrollmentResult:
    speaker_id: str
    decision: MatchDecision
    warnings: tuple[str, ...] = ()


def cap_eligible(speaker: EnrolledSpeaker, additional_minutes: float) -> bool:
    """True iff the speaker stays strictly under the 60-minute corpus cap."""
    if additional_minutes < 0:
        raise ValueError("additional_minutes must be non-negative")
    return speaker.total_duration_minutes + additional_minutes < SPEAKER_CAP_MINUTES


class SpeakerDB:
    """Single-writer speaker store with cosine matching against centroids."""

    def __init__(
        self,
        dim: int = DEFAULT_DIM,
        threshold: float = 0.7,
        seed: int | None = None,
        log_path: str | Path | None = None,
    ) -> None:
        self.dim = dim
        self.threshold = threshold
        self.speakers: dict[str, EnrolledSpeaker] = {}
        self._rng = random.Random(seed)
        self._lock = threading.Lock()
        self._log_path = Path(log_path) if log_path is not None else None
        if self._log_path is not None:
            self._log_path.parent.mkdir(parents=True, exist_ok=True)

    # --- identity ---------------------------------------------------------

    def _new_speaker_id(self) -> str:
        while True:
            sid = "".join(self._rng.choice(_ID_ALPHABET) for _ in range(_ID_LENGTH))
            if sid not in self.speakers:
                return sid

    # --- matching & enrollment --------------------------------------------

    def identify(self, probe: np.ndarray) -> MatchDecision:
        """Best-scoring enrolled centroid; matched only at or above threshold."""
        probe = check_unit(probe)
        best_id: str | None = None
        best_score = -1.0
        for sid in sorted(self.speakers):
            s = score(probe, self.speakers[sid].centroid)
            if s > best_score:
                best_id, best_score = sid, s
        if best_id is not None and best_score >= self.threshold:
            return MatchDecision(best_id, best_score, self.threshold)
        return MatchDecision(None, best_score, self.threshold)

    def enroll_session_speaker(
        self,
        segments: Sequence[tuple[np.ndarray | list[float], float]],
        session_id: str,
        threshold: float | None = None,
    ) -> EnrollmentResult:
        """Enroll one session-local speaker's evidence.

        ``segments`` is a non-empty list of (unit-norm embedding, duration
        seconds). The probe is the renormalized mean of the segment
        embeddings; on a match the enrolled speaker's accumulator absorbs the
        duration-weighted evidence, otherwise a new identity is created.
        """
        if not segments:
            raise EmptySegmentsError("cannot enroll an empty segment list")
        with self._lock:
            if threshold is not None and threshold != self.threshold:
                decision_threshold = threshold
            else:
                decision_threshold = self.threshold
            vectors = [check_unit(np.asarray(v, dtype=np.float64)) for v, _ in segments]
            for v in vectors:
                if v.shape[0] != self.dim:
                    raise ValueError(f"expected dim {self.dim}, got {v.shape[0]}")
            durations = [float(d) for _, d in segments]
            if any(d < 0 for d in durations):
                raise ValueError("segment durations must be non-negative")
            probe = normalized(np.mean(vectors, axis=0))

            best_id: str | None = None
            best_score = -1.0
            for sid in sorted(self.speakers):
                s = score(probe, self.speakers[sid].centroid)
                if s > best_score:
                    best_id, best_score = sid, s

            weighted_sum = np.zeros(self.dim, dtype=np.float64)
            for v, d in zip(vectors, durations):
                weighted_sum += v * d
            duration_s = sum(durations)

            if best_id is not None and best_score >= decision_threshold:
                decision = MatchDecision(best_id, best_score, decision_threshold)
                speaker = self.speakers[best_id]
                speaker.accumulator = speaker.accumulator + weighted_sum
                speaker.segment_count += len(segments)
                speaker.total_duration_s += duration_s
                speaker.session_ids.add(session_id)
                self._append_log("update", best_id, weighted_sum, duration_s, len(segments), session_id)
                return EnrollmentResult(best_id, decision)

            decision = MatchDecision(None, best_score, decision_threshold)
            new_id = self._new_speaker_id()
            self.speakers[new_id] = EnrolledSpeaker(
                speaker_id=new_id,
                accumulator=weighted_sum.copy(),
                segment_count=len(segments),
                total_duration_s=duration_s,
                session_ids={session_id},
            )
            self._append_log("new", new_id, weighted_sum, duration_s, len(segments), session_id)
            return EnrollmentResult(new_id, decision)

    def enroll_session(
        self,
        session_id: str,
        local_speakers: dict[str, Sequence[tuple[np.ndarray | list[float], float]]],
    ) -> dict[str, EnrollmentResult]:
        """Enroll every local speaker of one session, in local-id order.

        When two local speakers resolve to the same enrolled identity (a
        likely diarization error) both merge and a warning is attached to the
        later result.
        """
        results: dict[str, EnrollmentResult] = {}
        seen: dict[str, str] = {}
        for local_id in sorted(local_speakers):
            result = self.enroll_session_speaker(local_speakers[local_id], session_id)
            if result.speaker_id in seen:
                warning = (
                    f"local speakers {seen[result.speaker_id]!r} and {local_id!r} of session "
                    f"{session_id!r} both matched enrolled speaker {result.speaker_id}"
                )
                result = EnrollmentResult(
                    result.speaker_id, result.decision, result.warnings + (warning,)
                )
            else:
                seen[result.speaker_id] = local_id
            results[local_id] = result
        return results

    # --- bookkeeping --------------------------------------------------------

    def total_enrolled_minutes(self) -> float:
        return sum(s.total_duration_s for s in self.speakers.values()) / 60.0

    # --- persistence --------------------------------------------------------

    def _append_log(self, event: str, speaker_id: str, weighted_sum: np.ndarray,
                    duration_s: float, segments: int, session_id: str) -> None:
        if self._log_path is None:
            return
        line = json.dumps(
            {
                "event": event,
                "speaker_id": speaker_id,
                "embedding": weighted_sum.tolist(),
                "duration": duration_s,
                "segments": segments,
                "session": session_id,
            },
            sort_keys=True,
        )
        with open(self._log_path, "a", encoding="utf-8") as fh:
            fh.write(line + "\n")

    def snapshot(self) -> dict:
        """Canonical JSON-ready state; byte-stable across replays."""
        return {
            "dim": self.dim,
            "threshold": self.threshold,
            "speakers": {
                sid: {
                    "accumulator": self.speakers[sid].accumulator.tolist(),
                    "segment_count": self.speakers[sid].segment_count,
                    "total_duration_s": self.speakers[sid].total_duration_s,
                    "session_ids": sorted(self.speakers[sid].session_ids),
                }
                for sid in sorted(self.speakers)
            },
        }

    def save_snapshot(self, path: str | Path) -> None:
        Path(path).write_text(json.dumps(self.snapshot(), sort_keys=True) + "\n", encoding="utf-8")

    @classmethod
    def replay_log(cls, log_path: str | Path, dim: int = DEFAULT_DIM,
                   threshold: float = 0.7) -> "SpeakerDB":
        """Rebuild a database by applying the enrollment log in order."""
        db = cls(dim=dim, threshold=threshold)
        with open(log_path, encoding="utf-8") as fh:
            for line in fh:
                line = line.strip()
                if not line:
                    continue
                entry = json.loads(line)
                weighted_sum = np.asarray(entry["embedding"], dtype=np.float64)
                if entry["event"] == "new":
                    db.speakers[entry["speaker_id"]] = EnrolledSpeaker(
                        speaker_id=entry["speaker_id"],
                        accumulator=weighted_sum,
                        segment_count=entry["segments"],
                        total_duration_s=entry["duration"],
                        session_ids={entry["session"]},
                    )
                else:
                    speaker = db.speakers[entry["speaker_id"]]
                    speaker.accumulator = speaker.accumulator + weighted_sum
                    speaker.segment_count += entry["segments"]
                    speaker.total_duration_s += entry["duration"]
                    speaker.session_ids.add(entry["session"])
        return db


def build_probe(segments: Iterable[tuple[np.ndarray | list[float], float]]) -> np.ndarray:
    """Renormalized mean of segment embeddings (the matching probe)."""
    vectors = [check_unit(np.asarray(v, dtype=np.float64)) for v, _ in segments]
    if not vectors:
        raise EmptySegmentsError("cannot build a probe from zero segments")
    return normalized(np.mean(vectors, axis=0))
