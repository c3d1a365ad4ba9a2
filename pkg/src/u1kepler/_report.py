"""Small container shared by every verification routine."""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Any


@dataclass
class Report:
    """Outcome of a verification routine.

    ``rows`` holds one record per checked item (exact values kept as
    :class:`fractions.Fraction` or ``int``); ``failures`` holds the subset of
    records that did not pass.
    """

    name: str
    rows: list[dict[str, Any]] = field(default_factory=list)
    failures: list[dict[str, Any]] = field(default_factory=list)

    @property
    def passed(self) -> bool:
        return not self.failures

    def add(self, ok: bool, **record: Any) -> None:
        record["ok"] = bool(ok)
        self.rows.append(record)
        if not ok:
            self.failures.append(record)

    def extend(self, other: Report) -> None:
        for row in other.rows:
            self.rows.append({"check": other.name, **row})
        for row in other.failures:
            self.failures.append({"check": other.name, **row})

    def __bool__(self) -> bool:
        return self.passed
