"""Anonymized speaker database: cosine matching, enrollment, duration caps."""

from speechforge.speakerdb.db import (
    EnrolledSpeaker,
    EnrollmentResult,
    MatchDecision,
    SpeakerDB,
    cap_eligible,
)
from speechforge.speakerdb.embeddings import normalized, score

__all__ = [
    "EnrolledSpeaker",
    "EnrollmentResult",
    "MatchDecision",
    "SpeakerDB",
    "cap_eligible",
    "normalized",
    "score",
]
