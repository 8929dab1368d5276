"""speechforge: human-in-the-loop speech corpus production.

Subpackages:
  corpus     four-level metadata records, file IO, validation, aggregation
  pretag     machine pre-labeling pipeline over pluggable stage adapters
  speakerdb  anonymized speaker enrollment with cosine matching
  qc         blind test questions, behavior monitoring, validation rules,
             acceptance sampling
  packaging  distribution-constrained dataset subset selection and emission
  service    event-sourced work orchestration, JSON API, leasing
  sim        simulated annotator populations driving the orchestrator
"""

__version__ = "0.1.0"
