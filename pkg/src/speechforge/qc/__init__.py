"""Quality control: blind test questions, behavior monitoring, validation, sampling."""

from speechforge.qc.assignments import Assignment, Slot, TestQuestion, build_assignment
from speechforge.qc.behavior import BehaviorEvent, BehaviorFlag, monitor_behavior
from speechforge.qc.judging import (
    AnnotatorProfile,
    ProfileStatus,
    RecycleAll,
    judge_answer,
    recycle_units,
    token_error_rate,
    update_score_and_enforce,
)
from speechforge.qc.policy import QcPolicy
from speechforge.qc.rules import CompiledRules, RuleViolation, ValidationRule, validate_realtime
from speechforge.qc.sampling import QaVerdict, SamplingPlan, assess_delivery, plan_sample, wilson_lower_bound

__all__ = [
    "Assignment",
    "AnnotatorProfile",
    "BehaviorEvent",
    "BehaviorFlag",
    "CompiledRules",
    "ProfileStatus",
    "QaVerdict",
    "QcPolicy",
    "RecycleAll",
    "RuleViolation",
    "SamplingPlan",
    "Slot",
    "TestQuestion",
    "ValidationRule",
    "build_assignment",
    "judge_answer",
    "monitor_behavior",
    "plan_sample",
    "recycle_units",
    "token_error_rate",
    "update_score_and_enforce",
    "validate_realtime",
    "wilson_lower_bound",
    "assess_delivery",
]
