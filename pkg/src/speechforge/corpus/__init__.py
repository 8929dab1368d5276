"""Four-level corpus metadata: records, file IO, validation, aggregation, naming."""

from speechforge.corpus.aggregate import aggregate_records, aggregate_stats
from speechforge.corpus.io import load_corpus, save_corpus
from speechforge.corpus.naming import DatasetName, NameKind, parse_name, render_name
from speechforge.corpus.records import (
    Corpus,
    DatasetManifest,
    SessionRecord,
    SpeakerRecord,
    UtteranceRecord,
)
from speechforge.corpus.validate import CorpusConfig, ValidationReport, Violation, validate_corpus

__all__ = [
    "Corpus",
    "CorpusConfig",
    "DatasetManifest",
    "DatasetName",
    "NameKind",
    "SessionRecord",
    "SpeakerRecord",
    "UtteranceRecord",
    "ValidationReport",
    "Violation",
    "aggregate_records",
    "aggregate_stats",
    "load_corpus",
    "parse_name",
    "render_name",
    "save_corpus",
    "validate_corpus",
]
