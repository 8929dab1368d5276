"""Exception types shared across the toolkit.

Every error carries a stable machine-readable ``code`` so the service and CLI
layers can map failures onto wire responses without string matching.
"""

from __future__ import annotations

from typing import Any


class SpeechForgeError(Exception):
    code = "ERROR"

    def __init__(self, message: str, **context: Any) -> None:
        super().__init__(message)
        self.context = context


# --- corpus files ---------------------------------------------------------


class MalformedJsonError(SpeechForgeError):
    code = "MALFORMED_JSON"


class MissingFieldError(SpeechForgeError):
    code = "MISSING_FIELD"


class DanglingReferenceError(SpeechForgeError):
    code = "DANGLING_REFERENCE"


class IoWriteError(SpeechForgeError):
    code = "IO_WRITE"


class InconsistentGenderError(SpeechForgeError):
    code = "INCONSISTENT_GENDER"


# --- dataset naming -------------------------------------------------------


class InvalidDateError(SpeechForgeError):
    code = "INVALID_DATE"


class EmptySegmentError(SpeechForgeError):
    code = "EMPTY_SEGMENT"


class InvalidSegmentError(SpeechForgeError):
    code = "INVALID_SEGMENT"


# --- pre-tagging ----------------------------------------------------------


class AdapterFailureError(SpeechForgeError):
    """A stage adapter failed; the session is parked for retry, never dropped."""

    code = "ADAPTER_FAILURE"

    def __init__(self, stage: str, cause: str, **context: Any) -> None:
        super().__init__(f"adapter for stage {stage} failed: {cause}", **context)
        self.stage = stage
        self.cause = cause


class PipelineConfigError(SpeechForgeError):
    code = "PIPELINE_CONFIG"


# --- speaker database -----------------------------------------------------


class DimensionMismatchError(SpeechForgeError):
    code = "DIMENSION_MISMATCH"


class EmptySegmentsError(SpeechForgeError):
    code = "EMPTY_SEGMENTS"


# --- quality control ------------------------------------------------------


class TqPoolExhaustedError(SpeechForgeError):
    code = "TQ_POOL_EXHAUSTED"

    def __init__(self, annotator_id: str, **context: Any) -> None:
        super().__init__(f"test-question pool exhausted for annotator {annotator_id}", **context)
        self.annotator_id = annotator_id


class BadRuleError(SpeechForgeError):
    code = "BAD_RULE"

    def __init__(self, rule_id: str, cause: str, **context: Any) -> None:
        super().__init__(f"rule {rule_id} will not compile: {cause}", **context)
        self.rule_id = rule_id


class EmptyAuditError(SpeechForgeError):
    code = "EMPTY_AUDIT"


class ProfileRemovedError(SpeechForgeError):
    code = "PROFILE_REMOVED"


# --- packaging ------------------------------------------------------------


class EmptyEligiblePoolError(SpeechForgeError):
    code = "EMPTY_ELIGIBLE_POOL"


# --- orchestration --------------------------------------------------------


class NoWorkError(SpeechForgeError):
    code = "NO_WORK"


class AnnotatorRemovedError(SpeechForgeError):
    code = "ANNOTATOR_REMOVED"


class AnnotatorUnknownError(SpeechForgeError):
    code = "ANNOTATOR_UNKNOWN"


class NotQualifiedError(SpeechForgeError):
    code = "NOT_QUALIFIED"


class LeaseExpiredError(SpeechForgeError):
    code = "LEASE_EXPIRED"


class UnknownAssignmentError(SpeechForgeError):
    code = "UNKNOWN_ASSIGNMENT"


class UnknownJobError(SpeechForgeError):
    code = "UNKNOWN_JOB"


class JobIncompleteError(SpeechForgeError):
    code = "JOB_INCOMPLETE"
