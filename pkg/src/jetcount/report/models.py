"""Report records emitted by every command."""

from __future__ import annotations

from typing import Any

from pydantic import BaseModel, Field

from jetcount.counting.models import CountReport
from jetcount.invariants.models import GammaVector


class EntryRecord(BaseModel):
    """One gamma entry with its provenance."""

    index: int = Field(..., ge=0)
    value: int | str
    provenance: str

    @classmethod
    def from_vector(cls, vector: GammaVector) -> list[EntryRecord]:
        return [
            cls(
                index=s,
                value=entry.value if isinstance(entry.value, int) else entry.value.value,
                provenance=entry.provenance.value,
            )
            for s, entry in enumerate(vector.entries)
        ]


class VerifyCase(BaseModel):
    """Outcome of one case of the verification suite."""

    name: str
    expected: Any
    actual: Any = None
    matched: bool = False
    error: str | None = None


class Report(BaseModel):
    """Everything a job produced, in a serializable form."""

    command: str
    mode: str
    seed: int
    job: dict[str, Any] = Field(default_factory=dict)
    equation_invariants: list[EntryRecord] | None = None
    cuspidal_numbers: list[EntryRecord] | None = None
    count: CountReport | None = None
    degree_theorem: int | None = None
    degree_measured: int | None = None
    parity: str | None = None
    routes_agree: bool | None = None
    cases: list[VerifyCase] | None = None

    @property
    def verify_matches(self) -> int:
        return sum(case.matched for case in self.cases or [])

    @property
    def degree_consistent(self) -> bool:
        """Theorem and measurement agree whenever both were computed."""
        if self.degree_theorem is None or self.degree_measured is None:
            return True
        return self.degree_theorem == self.degree_measured
