"""Corpus file IO.

On-disk layout: the manifest sits at the corpus root as ``{speechdb_name}.json``
and each record level gets its own directory of per-record ``{id}.json`` files::

    root/
      MyDataset.json
      sessions/{session_id}.json
      utterances/{utterance_id}.json
      speakers/{speaker_id}.json

Wire field names are preserved exactly as the interchange format defines them,
including the legacy spellings ``utterce_id`` / ``utterce_ids_list``, the
spaced key ``"session brief title"`` and the capitalized ``Topics_by_*``
manifest keys. Unknown fields round-trip untouched via ``extras``.
"""

from __future__ import annotations

import json
from pathlib import Path
from typing import Any

from speechforge.corpus.records import (
    Corpus,
    DatasetManifest,
    SessionRecord,
    SpeakerRecord,
    UtteranceRecord,
)
from speechforge.errors import (
    DanglingReferenceError,
    IoWriteError,
    MalformedJsonError,
    MissingFieldError,
)

UTTERANCES_DIR = "utterances"
SESSIONS_DIR = "sessions"
SPEAKERS_DIR = "speakers"

# (wire key, attribute) pairs in canonical serialization order.
_UTTERANCE_FIELDS = (
    ("utterce_id", "utterance_id"),  # legacy wire spelling, kept for interchange compatibility
    ("speaker_id", "speaker_id"),
    ("session_id", "session_id"),
    ("audio_path", "audio_path"),
    ("duration_in_seconds", "duration_in_seconds"),
    ("domains", "domains"),
    ("topics", "topics"),
    ("transcription", "transcription"),
    ("language", "language"),
    ("accent", "accent"),
    ("gender", "gender"),
    ("noise_background", "noise_background"),
    ("sampling_rate", "sampling_rate"),
    ("sampling_bit", "sampling_bit"),
)

_SESSION_FIELDS = (
    ("session_id", "session_id"),
    ("audio_path", "audio_path"),
    ("duration_in_minutes", "duration_in_minutes"),
    ("utterance_ids_list", "utterance_ids_list"),
    ("speakers", "speakers"),
    ("session brief title", "session_brief_title"),  # wire key contains spaces
    ("domains", "domains"),
    ("topics", "topics"),
    ("language", "language"),
    ("accent", "accent"),
    ("noise_background", "noise_background"),
    ("sampling_rate", "sampling_rate"),
    ("sampling_bit", "sampling_bit"),
)

_SPEAKER_FIELDS = (
    ("speaker_id", "speaker_id"),
    ("utterce_ids_list", "utterance_ids_list"),  # legacy wire spelling
    ("context_ids_list", "context_ids_list"),
    ("duration_in_minutes", "duration_in_minutes"),
    ("language", "language"),
    ("accent", "accent"),
    ("gender", "gender"),
)

_MANIFEST_FIELDS = (
    ("speechdb_name", "speechdb_name"),
    ("language", "language"),
    ("accent", "accent"),
    ("duration_in_hours", "duration_in_hours"),
    ("speakers_cnt", "speakers_cnt"),
    ("utterances_cnt", "utterances_cnt"),
    ("Topics_by_hours", "topics_by_hours"),
    ("Topics_by_speakers", "topics_by_speakers"),
    ("gender_dist_by_hours", "gender_dist_by_hours"),
    ("gender_dist_by_speakers", "gender_dist_by_speakers"),
    ("noisetype_dist_by_hours", "noisetype_dist_by_hours"),
    ("sampling_rate", "sampling_rate"),
    ("sampling_bit", "sampling_bit"),
    ("audio_channels", "audio_channels"),
)

_FLOAT_ATTRS = {"duration_in_seconds", "duration_in_minutes", "duration_in_hours"}
_INT_ATTRS = {"sampling_rate", "sampling_bit", "audio_channels", "speakers_cnt", "utterances_cnt"}
_LIST_ATTRS = {"domains", "topics", "utterance_ids_list", "speakers", "context_ids_list"}
_FLOAT_MAP_ATTRS = {"topics_by_hours", "gender_dist_by_hours", "noisetype_dist_by_hours"}
_INT_MAP_ATTRS = {"topics_by_speakers", "gender_dist_by_speakers"}


def _coerce(attr: str, value: Any, path: str) -> Any:
    try:
        if attr in _FLOAT_ATTRS:
            return float(value)
        if attr in _INT_ATTRS:
            if isinstance(value, bool) or not isinstance(value, int):
                raise ValueError(f"{attr} must be an integer")
            return value
        if attr in _LIST_ATTRS:
            if not isinstance(value, list):
                raise ValueError(f"{attr} must be a list")
            return [str(v) for v in value]
        if attr in _FLOAT_MAP_ATTRS:
            if not isinstance(value, dict):
                raise ValueError(f"{attr} must be an object")
            return {str(k): float(v) for k, v in value.items()}
        if attr in _INT_MAP_ATTRS:
            if not isinstance(value, dict):
                raise ValueError(f"{attr} must be an object")
            return {str(k): int(v) for k, v in value.items()}
    except (TypeError, ValueError) as exc:
        raise MalformedJsonError(f"{path}: {exc}", file=path) from exc
    return value


def _read_json(path: Path) -> dict[str, Any]:
    try:
        with open(path, encoding="utf-8") as fh:
            data = json.load(fh)
    except json.JSONDecodeError as exc:
        raise MalformedJsonError(f"{path}: {exc}", file=str(path)) from exc
    if not isinstance(data, dict):
        raise MalformedJsonError(f"{path}: top-level value must be an object", file=str(path))
    return data


def _parse_record(data: dict[str, Any], fields: tuple, cls: type, path: str) -> Any:
    kwargs: dict[str, Any] = {}
    wire_keys = set()
    for wire_key, attr in fields:
        wire_keys.add(wire_key)
        if wire_key not in data:
            raise MissingFieldError(f"{path}: missing field {wire_key!r}", file=path, field=wire_key)
        kwargs[attr] = _coerce(attr, data[wire_key], path)
    extras = {k: v for k, v in data.items() if k not in wire_keys}
    return cls(**kwargs, extras=extras)


def _to_wire(record: Any, fields: tuple) -> dict[str, Any]:
    out: dict[str, Any] = {}
    for wire_key, attr in fields:
        out[wire_key] = getattr(record, attr)
    out.update(record.extras)
    return out


def parse_utterance(data: dict[str, Any], path: str = "<memory>") -> UtteranceRecord:
    return _parse_record(data, _UTTERANCE_FIELDS, UtteranceRecord, path)


def parse_session(data: dict[str, Any], path: str = "<memory>") -> SessionRecord:
    return _parse_record(data, _SESSION_FIELDS, SessionRecord, path)


def parse_speaker(data: dict[str, Any], path: str = "<memory>") -> SpeakerRecord:
    return _parse_record(data, _SPEAKER_FIELDS, SpeakerRecord, path)


def parse_manifest(data: dict[str, Any], path: str = "<memory>") -> DatasetManifest:
    return _parse_record(data, _MANIFEST_FIELDS, DatasetManifest, path)


def utterance_to_wire(record: UtteranceRecord) -> dict[str, Any]:
    return _to_wire(record, _UTTERANCE_FIELDS)


def session_to_wire(record: SessionRecord) -> dict[str, Any]:
    return _to_wire(record, _SESSION_FIELDS)


def speaker_to_wire(record: SpeakerRecord) -> dict[str, Any]:
    return _to_wire(record, _SPEAKER_FIELDS)


def manifest_to_wire(record: DatasetManifest) -> dict[str, Any]:
    return _to_wire(record, _MANIFEST_FIELDS)


def _load_dir(root: Path, subdir: str, parse, target: dict, id_attr: str) -> None:
    directory = root / subdir
    if not directory.is_dir():
        return
    for path in sorted(directory.glob("*.json")):
        record = parse(_read_json(path), str(path))
        target[getattr(record, id_attr)] = record


def _check_references(corpus: Corpus) -> None:
    for uid in sorted(corpus.utterances):
        utt = corpus.utterances[uid]
        if utt.session_id not in corpus.sessions:
            raise DanglingReferenceError(
                f"utterance {uid} references unknown session {utt.session_id!r}", id=utt.session_id
            )
        if utt.speaker_id not in corpus.speakers:
            raise DanglingReferenceError(
                f"utterance {uid} references unknown speaker {utt.speaker_id!r}", id=utt.speaker_id
            )
    for sid in sorted(corpus.sessions):
        session = corpus.sessions[sid]
        for uid in session.utterance_ids_list:
            if uid not in corpus.utterances:
                raise DanglingReferenceError(
                    f"session {sid} references unknown utterance {uid!r}", id=uid
                )
        for spk in session.speakers:
            if spk not in corpus.speakers:
                raise DanglingReferenceError(
                    f"session {sid} references unknown speaker {spk!r}", id=spk
                )
    for spk_id in sorted(corpus.speakers):
        speaker = corpus.speakers[spk_id]
        for uid in speaker.utterance_ids_list:
            if uid not in corpus.utterances:
                raise DanglingReferenceError(
                    f"speaker {spk_id} references unknown utterance {uid!r}", id=uid
                )
        for sid in speaker.context_ids_list:
            if sid not in corpus.sessions:
                raise DanglingReferenceError(
                    f"speaker {spk_id} references unknown session {sid!r}", id=sid
                )


def load_corpus(root: str | Path) -> Corpus:
    """Load a corpus directory, enforcing referential closure across levels.

    Raises MalformedJsonError, MissingFieldError or DanglingReferenceError.
    """
    root = Path(root)
    manifest_paths = sorted(p for p in root.glob("*.json") if p.is_file())
    if len(manifest_paths) != 1:
        raise MalformedJsonError(
            f"{root}: expected exactly one top-level manifest JSON, found {len(manifest_paths)}",
            file=str(root),
        )
    manifest = parse_manifest(_read_json(manifest_paths[0]), str(manifest_paths[0]))
    corpus = Corpus(manifest=manifest)
    _load_dir(root, UTTERANCES_DIR, parse_utterance, corpus.utterances, "utterance_id")
    _load_dir(root, SESSIONS_DIR, parse_session, corpus.sessions, "session_id")
    _load_dir(root, SPEAKERS_DIR, parse_speaker, corpus.speakers, "speaker_id")
    _check_references(corpus)
    return corpus


def _write_json(path: Path, payload: dict[str, Any]) -> None:
    try:
        path.parent.mkdir(parents=True, exist_ok=True)
        with open(path, "w", encoding="utf-8") as fh:
            json.dump(payload, fh, indent=2, ensure_ascii=False)
            fh.write("\n")
    except OSError as exc:
        raise IoWriteError(f"cannot write {path}: {exc}", file=str(path)) from exc


def save_corpus(corpus: Corpus, root: str | Path) -> None:
    """Write a corpus directory; ``load_corpus`` of the result equals the input.

    Key order and whitespace are canonicalized; record directories are only
    created for levels that have records.
    """
    root = Path(root)
    _write_json(root / f"{corpus.manifest.speechdb_name}.json", manifest_to_wire(corpus.manifest))
    for uid in sorted(corpus.utterances):
        _write_json(root / UTTERANCES_DIR / f"{uid}.json", utterance_to_wire(corpus.utterances[uid]))
    for sid in sorted(corpus.sessions):
        _write_json(root / SESSIONS_DIR / f"{sid}.json", session_to_wire(corpus.sessions[sid]))
    for spk in sorted(corpus.speakers):
        _write_json(root / SPEAKERS_DIR / f"{spk}.json", speaker_to_wire(corpus.speakers[spk]))
