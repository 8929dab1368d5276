from __future__ import annotations

import json
import random

import pytest

from speechforge.corpus import Corpus, DatasetManifest, load_corpus, save_corpus
from speechforge.corpus.io import parse_utterance, utterance_to_wire
from speechforge.errors import DanglingReferenceError, MalformedJsonError, MissingFieldError

from corpusgen import make_corpus


def test_load_appendix_fixture(appendix_root):
    corpus = load_corpus(appendix_root)
    assert len(corpus.utterances) == 1
    assert len(corpus.sessions) == 1
    assert len(corpus.speakers) == 1
    utt = corpus.utterances["asd123efs-123"]
    assert utt.duration_in_seconds == 15.3
    assert utt.gender == "male"
    assert corpus.sessions["asd123efs"].session_brief_title == "nba sports news westbrook"
    assert corpus.manifest.topics_by_hours["sports"] == 0.00425


def test_appendix_round_trip(appendix_root, tmp_path):
    corpus = load_corpus(appendix_root)
    save_corpus(corpus, tmp_path / "out")
    reloaded = load_corpus(tmp_path / "out")
    assert reloaded == corpus


def test_wire_spellings_preserved(appendix_root, tmp_path):
    corpus = load_corpus(appendix_root)
    save_corpus(corpus, tmp_path / "out")
    utt_data = json.loads((tmp_path / "out" / "utterances" / "asd123efs-123.json").read_text())
    assert "utterce_id" in utt_data and "utterance_id" not in utt_data
    spk_data = json.loads(
        (tmp_path / "out" / "speakers" / "sddseewsf32sxeor.json").read_text()
    )
    assert "utterce_ids_list" in spk_data
    sess_data = json.loads((tmp_path / "out" / "sessions" / "asd123efs.json").read_text())
    assert "session brief title" in sess_data
    manifest_data = json.loads(
        (tmp_path / "out" / "UHV-OTS-Commercial-enus-general-lighthouse-20211001.json").read_text()
    )
    assert "Topics_by_hours" in manifest_data and "Topics_by_speakers" in manifest_data


def test_empty_corpus_round_trip(tmp_path):
    corpus = Corpus(manifest=DatasetManifest(speechdb_name="emptydb"))
    save_corpus(corpus, tmp_path / "out")
    files = list((tmp_path / "out").rglob("*.json"))
    assert [f.name for f in files] == ["emptydb.json"]
    reloaded = load_corpus(tmp_path / "out")
    assert reloaded == corpus
    assert reloaded.manifest.duration_in_hours == 0.0


def test_dangling_session_reference(appendix_root, tmp_path):
    corpus = load_corpus(appendix_root)
    save_corpus(corpus, tmp_path / "out")
    utt_path = tmp_path / "out" / "utterances" / "asd123efs-123.json"
    data = json.loads(utt_path.read_text())
    data["session_id"] = "zzz"
    utt_path.write_text(json.dumps(data))
    with pytest.raises(DanglingReferenceError) as exc:
        load_corpus(tmp_path / "out")
    assert exc.value.context["id"] == "zzz"


def test_missing_field(appendix_root, tmp_path):
    corpus = load_corpus(appendix_root)
    save_corpus(corpus, tmp_path / "out")
    utt_path = tmp_path / "out" / "utterances" / "asd123efs-123.json"
    data = json.loads(utt_path.read_text())
    del data["gender"]
    utt_path.write_text(json.dumps(data))
    with pytest.raises(MissingFieldError) as exc:
        load_corpus(tmp_path / "out")
    assert exc.value.context["field"] == "gender"


def test_malformed_json(appendix_root, tmp_path):
    corpus = load_corpus(appendix_root)
    save_corpus(corpus, tmp_path / "out")
    (tmp_path / "out" / "utterances" / "asd123efs-123.json").write_text("{not json")
    with pytest.raises(MalformedJsonError):
        load_corpus(tmp_path / "out")


def test_manifest_count_enforced(tmp_path):
    (tmp_path / "a.json").write_text("{}")
    (tmp_path / "b.json").write_text("{}")
    with pytest.raises(MalformedJsonError):
        load_corpus(tmp_path)


def test_unknown_fields_preserved(tmp_path):
    wire = {
        "utterce_id": "u1",
        "speaker_id": "s1",
        "session_id": "c1",
        "audio_path": "/a.wav",
        "duration_in_seconds": 3.5,
        "domains": [],
        "topics": [],
        "transcription": "hi",
        "language": "english",
        "accent": "en-us",
        "gender": "female",
        "noise_background": "clean",
        "sampling_rate": 16000,
        "sampling_bit": 16,
        "x_custom_field": {"nested": [1, 2, 3]},
    }
    utt = parse_utterance(wire)
    assert utt.extras == {"x_custom_field": {"nested": [1, 2, 3]}}
    assert utterance_to_wire(utt) == wire


def test_round_trip_random_records(tmp_path):
    # 1000 randomized records across the three record levels plus manifest.
    rng = random.Random(20211001)
    corpus = make_corpus(rng, n_utterances=900, n_speakers=60, n_sessions=45)
    assert len(corpus.utterances) + len(corpus.sessions) + len(corpus.speakers) >= 1000
    save_corpus(corpus, tmp_path / "out")
    reloaded = load_corpus(tmp_path / "out")
    assert reloaded.manifest == corpus.manifest
    assert reloaded.utterances == corpus.utterances
    assert reloaded.sessions == corpus.sessions
    assert reloaded.speakers == corpus.speakers
