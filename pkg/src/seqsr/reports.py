"""Verdict records returned by every decision procedure."""

from __future__ import annotations

import dataclasses
import json
from typing import Any

SCHEMA = "seqsr.report/1"


@dataclasses.dataclass(frozen=True)
class CheckReport:
    """A boolean verdict with a structured witness.

    On failure the witness names what failed (a face and degree, a skeleton
    index, a subcheck, ...) so it can be replayed.  Some checks also attach a
    certificate on success, e.g. a shelling order.  Truthiness is the verdict.
    """

    property: str
    verdict: bool
    witness: dict[str, Any] | None = None
    r: int | None = None
    field: str | None = None

    def __bool__(self):
        return self.verdict

    def to_dict(self) -> dict[str, Any]:
        return {
            "property": self.property,
            "r": self.r,
            "field": self.field,
            "verdict": self.verdict,
            "witness": self.witness,
        }

    def to_json(self) -> str:
        return json.dumps(self.to_dict(), sort_keys=True)

    def to_text(self) -> str:
        head = f"{self.property}"
        if self.r is not None:
            head += f" r={self.r}"
        if self.field is not None:
            head += f" field={self.field}"
        line = f"{head}: {'true' if self.verdict else 'false'}"
        if self.witness:
            line += "  witness: " + json.dumps(self.witness, sort_keys=True)
        return line
