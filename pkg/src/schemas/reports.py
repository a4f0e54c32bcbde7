"""
Pydantic schemas for verification reports.

Every sweep and probe returns a ``ProbeReport``. The JSON form is the
stable CLI output: ``{name, passed, checked, counterexample?, data?, version}``.
"""

from typing import Any

from pydantic import BaseModel, Field, model_validator

from src.config import settings


class Counterexample(BaseModel):
    """
    First failing grid cell of a sweep, rendered as text.

    Fields:
        inputs: named inputs of the failing cell (x, y, v, m, ...)
        lhs: left-hand side of the failed identity
        rhs: right-hand side of the failed identity
        residual: lhs - rhs
    """

    inputs: dict[str, str]
    lhs: str | None = None
    rhs: str | None = None
    residual: str | None = None


class ProbeReport(BaseModel):
    """
    Deterministic outcome of a sweep or probe.

    Invariant: a passed report carries no counterexample.
    """

    name: str
    passed: bool
    checked: int = Field(ge=0)
    counterexample: Counterexample | None = None
    data: dict[str, Any] | None = None
    version: str = Field(default_factory=lambda: settings.report_version)

    @model_validator(mode="after")
    def validate_counterexample(self) -> "ProbeReport":
        if self.passed and self.counterexample is not None:
            raise ValueError("A passed report cannot carry a counterexample")
        return self

    def to_json_dict(self) -> dict[str, Any]:
        """Stable JSON form with absent optional fields dropped."""
        return self.model_dump(mode="json", exclude_none=True)
