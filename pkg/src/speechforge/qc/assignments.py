"""Work assignments with covertly injected test questions.

A test question's payload has exactly the shape of a regular unit payload;
the hidden flag lives server-side only and never reaches the annotator-facing
serialization.
"""

from __future__ import annotations

import random
from dataclasses import dataclass
from typing import Any, Callable, Sequence

from speechforge.errors import TqPoolExhaustedError


@dataclass(frozen=True)
class TestQuestion:
    tq_id: str
    payload: dict[str, Any]
    ground_truth: str
    kind: str  # "transcription" | "label"
    verified_by: str

    def __post_init__(self) -> None:
        if not self.ground_truth:
            raise ValueError("test questions require a non-empty ground truth")
        if self.kind not in ("transcription", "label"):
            raise ValueError(f"unknown test question kind {self.kind!r}")

    @classmethod
    def from_dict(cls, data: dict[str, Any]) -> "TestQuestion":
        return cls(
            tq_id=data["tq_id"],
            payload=dict(data["payload"]),
            ground_truth=data["ground_truth"],
            kind=data["kind"],
            verified_by=data.get("verified_by", ""),
        )


@dataclass(frozen=True)
class Slot:
    slot_index: int
    unit_ref: str
    is_tq: bool
    target_id: str  # real unit id, or tq id for hidden test questions


@dataclass
class Assignment:
    assignment_id: str
    annotator_id: str
    items: list[Slot]
    lease_expiry: float

    def tq_slots(self) -> list[Slot]:
        return [s for s in self.items if s.is_tq]

    def annotator_items(self) -> list[dict[str, Any]]:
        """Annotator-facing view: slot order and refs only, no hidden flags."""
        return [{"slot_index": s.slot_index, "unit_ref": s.unit_ref} for s in self.items]


def build_assignment(
    units: Sequence[tuple[str, str]],
    tq_pool: Sequence[TestQuestion],
    k: int,
    rng: random.Random | int,
    *,
    assignment_id: str,
    annotator_id: str,
    used_tq_ids: frozenset[str] | set[str] = frozenset(),
    lease_expiry: float = 0.0,
    tq_ref_factory: Callable[[TestQuestion], str] | None = None,
) -> tuple[Assignment, list[TestQuestion]]:
    """Bundle units plus ``k`` fresh test questions in a uniform random order.

    ``units`` carries (visible_ref, unit_id) pairs. Test questions already
    seen by this annotator are skipped; raises TqPoolExhaustedError when
    fewer than ``k`` remain. ``tq_ref_factory`` mints the visible ref for a
    test question slot (callers use it to alias refs into the regular unit-id
    shape). Returns the assignment and the chosen questions.
    """
    if not units:
        raise ValueError("assignments require at least one work unit")
    rng = random.Random(rng) if isinstance(rng, int) else rng
    eligible = [tq for tq in tq_pool if tq.tq_id not in used_tq_ids]
    if len(eligible) < k:
        raise TqPoolExhaustedError(annotator_id, available=len(eligible), requested=k)
    chosen = rng.sample(eligible, k) if k else []
    make_ref = tq_ref_factory or (lambda tq: tq.tq_id)

    entries: list[tuple[str, str, bool]] = [(ref, uid, False) for ref, uid in units]
    entries += [(make_ref(tq), tq.tq_id, True) for tq in chosen]
    rng.shuffle(entries)
    items = [
        Slot(slot_index=i, unit_ref=ref, is_tq=is_tq, target_id=target)
        for i, (ref, target, is_tq) in enumerate(entries)
    ]
    return (
        Assignment(
            assignment_id=assignment_id,
            annotator_id=annotator_id,
            items=items,
            lease_expiry=lease_expiry,
        ),
        chosen,
    )
