"""Dataset naming: render and parse the hyphen-joined release name pattern.

Commercial: ``UHV-OTS-Commercial-{locale}-{domain}-{projectname}-{releasedate}``
Research:   ``UHV-OTS-Research-{locale}-{domain}-{releasedate}``

Segments are hyphen-free so rendering stays a bijection with parsing.
"""

from __future__ import annotations

from dataclasses import dataclass
from datetime import datetime
from enum import Enum

from speechforge.errors import EmptySegmentError, InvalidDateError, InvalidSegmentError

NAME_PREFIX = "UHV-OTS"


class NameKind(str, Enum):
    COMMERCIAL = "Commercial"
    RESEARCH = "Research"


@dataclass(frozen=True)
class DatasetName:
    kind: NameKind
    locale: str
    domain: str
    projectname: str | None
    releasedate: str  # YYYYMMDD

    @classmethod
    def commercial(cls, locale: str, domain: str, projectname: str, releasedate: str) -> "DatasetName":
        return cls(NameKind.COMMERCIAL, locale, domain, projectname, releasedate)

    @classmethod
    def research(cls, locale: str, domain: str, releasedate: str) -> "DatasetName":
        return cls(NameKind.RESEARCH, locale, domain, None, releasedate)


def _check_segment(label: str, value: str) -> None:
    if not value:
        raise EmptySegmentError(f"{label} segment is empty", segment=label)
    if "-" in value:
        raise InvalidSegmentError(f"{label} segment {value!r} must not contain hyphens", segment=label)


def _check_date(value: str) -> None:
    if len(value) != 8 or not value.isdigit():
        raise InvalidDateError(f"releasedate {value!r} is not YYYYMMDD")
    try:
        datetime.strptime(value, "%Y%m%d")
    except ValueError as exc:
        raise InvalidDateError(f"releasedate {value!r} is not a valid date") from exc


def render_name(name: DatasetName) -> str:
    """Render the canonical dataset name string."""
    _check_segment("locale", name.locale)
    _check_segment("domain", name.domain)
    _check_date(name.releasedate)
    if name.kind is NameKind.COMMERCIAL:
        if name.projectname is None:
            raise EmptySegmentError("commercial names require a projectname segment", segment="projectname")
        _check_segment("projectname", name.projectname)
        parts = [NAME_PREFIX, name.kind.value, name.locale, name.domain, name.projectname, name.releasedate]
    else:
        if name.projectname is not None:
            raise InvalidSegmentError("research names carry no projectname segment", segment="projectname")
        parts = [NAME_PREFIX, name.kind.value, name.locale, name.domain, name.releasedate]
    return "-".join(parts)


def parse_name(rendered: str) -> DatasetName:
    """Inverse of render_name on the valid domain."""
    parts = rendered.split("-")
    if len(parts) < 6 or f"{parts[0]}-{parts[1]}" != NAME_PREFIX:
        raise InvalidSegmentError(f"{rendered!r} does not start with the {NAME_PREFIX} prefix")
    kind_str = parts[2]
    try:
        kind = NameKind(kind_str)
    except ValueError as exc:
        raise InvalidSegmentError(f"unknown dataset kind {kind_str!r}") from exc
    tail = parts[3:]
    if kind is NameKind.COMMERCIAL:
        if len(tail) != 4:
            raise InvalidSegmentError(f"commercial name must have 7 segments, got {len(parts)}")
        name = DatasetName(kind, tail[0], tail[1], tail[2], tail[3])
    else:
        if len(tail) != 3:
            raise InvalidSegmentError(f"research name must have 6 segments, got {len(parts)}")
        name = DatasetName(kind, tail[0], tail[1], None, tail[2])
    render_name(name)  # re-validate segments and date
    return name
