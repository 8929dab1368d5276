"""Seeded generators for consistent-by-construction corpora used across tests."""

from __future__ import annotations

import random

from speechforge.corpus.aggregate import aggregate_records
from speechforge.corpus.records import Corpus, SessionRecord, SpeakerRecord, UtteranceRecord
from speechforge.vocab import DEFAULT_VOCABULARY

GENDERS = ("male", "female")
NOISES = ("clean", "noisy", "music")
_TOPIC_POOL = [c.name for c in DEFAULT_VOCABULARY.categories]


def make_corpus(
    rng: random.Random,
    n_utterances: int = 20,
    n_speakers: int = 4,
    n_sessions: int = 3,
    name: str = "testdb",
    utterance_seconds: tuple[float, float] = (1.0, 19.5),
) -> Corpus:
    """Random corpus whose cross-level fields are derived, so it validates clean."""
    speaker_ids = [f"spk{i:03d}" for i in range(n_speakers)]
    session_ids = [f"sess{i:03d}" for i in range(n_sessions)]
    speaker_gender = {s: rng.choice(GENDERS) for s in speaker_ids}

    utterances: list[UtteranceRecord] = []
    for i in range(n_utterances):
        uid = f"utt{i:05d}"
        spk = rng.choice(speaker_ids)
        sess = rng.choice(session_ids)
        domain = rng.choice(_TOPIC_POOL)
        topics = [domain] + rng.sample(_TOPIC_POOL, k=rng.randint(0, 2))
        topics = list(dict.fromkeys(topics))
        utterances.append(
            UtteranceRecord(
                utterance_id=uid,
                speaker_id=spk,
                session_id=sess,
                audio_path=f"/audio-utterance/{sess}/{uid}.wav",
                duration_in_seconds=round(rng.uniform(*utterance_seconds), 3),
                domains=[domain],
                topics=topics,
                transcription=f"sample transcript {i}",
                language="english",
                accent="en-us",
                gender=speaker_gender[spk],
                noise_background=rng.choice(NOISES),
            )
        )

    return assemble(utterances, speaker_gender, name=name)


def assemble(
    utterances: list[UtteranceRecord],
    speaker_gender: dict[str, str],
    name: str = "testdb",
) -> Corpus:
    """Derive sessions, speakers and manifest from a list of utterances."""
    by_session: dict[str, list[UtteranceRecord]] = {}
    by_speaker: dict[str, list[UtteranceRecord]] = {}
    for utt in utterances:
        by_session.setdefault(utt.session_id, []).append(utt)
        by_speaker.setdefault(utt.speaker_id, []).append(utt)

    sessions = {}
    for sid, members in by_session.items():
        topics = sorted({t for u in members for t in u.topics})
        domains = sorted({d for u in members for d in u.domains})
        sessions[sid] = SessionRecord(
            session_id=sid,
            audio_path=f"/audio-session/{sid}.wav",
            duration_in_minutes=sum(u.duration_in_seconds for u in members) / 60.0 + 1.0,
            utterance_ids_list=[u.utterance_id for u in members],
            speakers=sorted({u.speaker_id for u in members}),
            session_brief_title=f"session {sid}",
            domains=domains,
            topics=topics,
            language="english",
            accent="en-us",
            noise_background=members[0].noise_background,
        )

    speakers = {}
    for spk, members in by_speaker.items():
        speakers[spk] = SpeakerRecord(
            speaker_id=spk,
            utterance_ids_list=[u.utterance_id for u in members],
            context_ids_list=sorted({u.session_id for u in members}),
            duration_in_minutes=sum(u.duration_in_seconds for u in members) / 60.0,
            language="english",
            accent="en-us",
            gender=speaker_gender.get(spk, members[0].gender),
        )

    manifest = aggregate_records(
        utterances, speakers.values(), speechdb_name=name, language="english", accent="en-us"
    )
    return Corpus(
        manifest=manifest,
        utterances={u.utterance_id: u for u in utterances},
        sessions=sessions,
        speakers=speakers,
    )
