"""Seeded sidecar-fixture generator for pipeline tests."""

from __future__ import annotations

import json
import random
from pathlib import Path

from speechforge.pretag.types import RawSessionInput, Stage

# make_sidecar emits every stage except topic detection (the pipeline falls
# back to the built-in keyword scorer when that adapter is absent)
DEFAULT_STAGES = tuple(s for s in Stage if s is not Stage.TOPIC_DETECTION)

WORDS = (
    "westbrook rebounds assists nba basketball game team score win market stock bank "
    "loan recipe dinner chef storm rain forecast movie film music the a and to of in"
).split()


def make_sidecar(
    rng: random.Random,
    session_id: str,
    *,
    spoofed: bool = False,
    language: str = "english",
    n_speakers: int = 2,
    n_segments: int = 2,
    with_music: bool = False,
    asr_confidence: float | None = None,
) -> dict:
    """Build one coherent sidecar payload dict."""
    speakers = [f"S{i}" for i in range(n_speakers)]
    segments = []
    turns = []
    pauses = []
    items = []
    pos = rng.uniform(0.0, 2.0)
    for _ in range(n_segments):
        seg_len = rng.uniform(5.0, 45.0)
        seg_start, seg_end = pos, pos + seg_len
        segments.append({"start": round(seg_start, 3), "end": round(seg_end, 3), "kind": "speech"})
        t = seg_start
        while seg_end - t > 0.5:
            turn_len = min(rng.uniform(3.0, 16.0), seg_end - t)
            speaker = rng.choice(speakers)
            turns.append({"start": round(t, 3), "end": round(t + turn_len, 3), "speaker": speaker})
            if turn_len > 8.0 and rng.random() < 0.6:
                at = t + rng.uniform(2.0, turn_len - 2.0)
                pauses.append({"start": round(at, 3), "end": round(at + rng.uniform(0.0, 0.4), 3)})
            t += turn_len
        item_t = seg_start
        while seg_end - item_t > 0.4:
            item_len = min(rng.uniform(0.8, 3.0), seg_end - item_t)
            items.append(
                {
                    "start": round(item_t, 3),
                    "end": round(item_t + item_len, 3),
                    "text": " ".join(rng.choices(WORDS, k=rng.randint(1, 4))),
                    "confidence": round(rng.uniform(0.5, 1.0), 3),
                }
            )
            item_t += item_len
        pos = seg_end + rng.uniform(0.5, 3.0)
        if with_music:
            segments.append({"start": round(pos, 3), "end": round(pos + 4.0, 3), "kind": "music"})
            pos += 5.0

    return {
        "session_id": session_id,
        "stages": {
            "source_separation": {"payload": {"applied": True}, "confidence": 1.0},
            "synthetic_detection": {"payload": {"spoofed": spoofed}, "confidence": round(rng.uniform(0.9, 1.0), 3)},
            "language_id": {"payload": {"language": language}, "confidence": round(rng.uniform(0.8, 1.0), 3)},
            "accent_id": {"payload": {"accent": "en-us"}, "confidence": 0.75},
            "speech_segmentation": {"payload": {"segments": segments, "pauses": pauses}, "confidence": 0.97},
            "speaker_segmentation": {"payload": {"turns": turns}, "confidence": 0.95},
            "gender_detection": {
                "payload": {"genders": {s: rng.choice(["male", "female"]) for s in speakers}},
                "confidence": 0.99,
            },
            "asr": {
                "payload": {"items": items},
                "confidence": asr_confidence if asr_confidence is not None else round(rng.uniform(0.4, 1.0), 3),
            },
        },
    }


def write_sidecar(root: Path, sidecar: dict) -> RawSessionInput:
    root.mkdir(parents=True, exist_ok=True)
    session_id = sidecar["session_id"]
    (root / f"{session_id}.pretag.json").write_text(json.dumps(sidecar, indent=1))
    return RawSessionInput(session_id=session_id, audio_path=f"/audio-session/{session_id}.wav")
