"""Structured outcome of a numerical theorem check."""

from __future__ import annotations

from dataclasses import dataclass, field
import json
import math


def _jsonable(value):
    if isinstance(value, complex):
        return [value.real, value.imag]
    if isinstance(value, dict):
        return {k: _jsonable(v) for k, v in value.items()}
    if isinstance(value, (list, tuple)):
        return [_jsonable(v) for v in value]
    if isinstance(value, float) and not math.isfinite(value):
        return repr(value)
    return value


@dataclass(frozen=True)
class VerificationReport:
    """Pass/fail record of one theorem check.

    Margins follow one sign convention per field: ``hypothesis_margin`` is
    negative when the hypothesis holds with room to spare (for cardioid
    containment it is the worst quartic value over the samples), and
    ``conclusion_margin`` is positive when the conclusion holds with room.
    """

    theorem: str
    params: dict
    hypothesis_pass: bool
    hypothesis_margin: float
    conclusion_pass: bool
    conclusion_margin: float
    worst_point: complex
    sample_count: int
    note: str = ""
    details: dict = field(default_factory=dict)

    @property
    def counterexample(self) -> bool:
        return self.hypothesis_pass and not self.conclusion_pass

    @property
    def passed(self) -> bool:
        return self.hypothesis_pass and self.conclusion_pass

    def to_dict(self) -> dict:
        out = {
            "theorem": self.theorem,
            "params": _jsonable(self.params),
            "hypothesis_pass": self.hypothesis_pass,
            "hypothesis_margin": _jsonable(self.hypothesis_margin),
            "conclusion_pass": self.conclusion_pass,
            "conclusion_margin": _jsonable(self.conclusion_margin),
            "counterexample": self.counterexample,
            "worst_point": _jsonable(self.worst_point),
            "sample_count": self.sample_count,
        }
        if self.note:
            out["note"] = self.note
        if self.details:
            out["details"] = _jsonable(self.details)
        return out

    def to_json(self) -> str:
        return json.dumps(self.to_dict())
