"""Machine-readable outcome of a single identity check."""

from __future__ import annotations

import json
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Any

from .exactnum import QuadRat, format_rational

PASS = "pass"
FAIL = "fail"
SKIPPED = "skipped-precondition"


def render_value(value: Any) -> str:
    """String form of a scalar, quadratic element, matrix or sequence."""
    if value is None:
        return ""
    if isinstance(value, str):
        return value
    if isinstance(value, (int, Fraction)):
        return format_rational(value)
    if isinstance(value, QuadRat):
        return str(value)
    rows = getattr(value, "rows", None)
    if rows is not None:
        return "[" + ",".join("[" + ",".join(format_rational(x) for x in r) + "]" for r in rows) + "]"
    if isinstance(value, (list, tuple)):
        return "[" + ",".join(render_value(v) for v in value) + "]"
    return str(value)


def _jsonable(value: Any) -> Any:
    if isinstance(value, dict):
        return {str(k): _jsonable(v) for k, v in value.items()}
    if isinstance(value, (list, tuple)):
        return [_jsonable(v) for v in value]
    if isinstance(value, bool) or value is None:
        return value
    if isinstance(value, int):
        return value
    return render_value(value)


@dataclass(frozen=True)
class IdentityReport:
    id: str
    params: dict = field(default_factory=dict)
    status: str = PASS
    lhs: str = ""
    rhs: str = ""
    note: str = ""
    seed: int | None = None

    def __post_init__(self):
        object.__setattr__(self, "params", _jsonable(self.params))

    @classmethod
    def compare(cls, id: str, params: dict, lhs: Any, rhs: Any, note: str = "", seed=None):
        status = PASS if lhs == rhs else FAIL
        return cls(id, params, status, render_value(lhs), render_value(rhs), note, seed)

    @classmethod
    def skipped(cls, id: str, params: dict, reason: str, seed=None):
        return cls(id, params, SKIPPED, "", "", reason, seed)

    @property
    def passed(self) -> bool:
        return self.status == PASS

    @property
    def failed(self) -> bool:
        return self.status == FAIL

    def to_dict(self) -> dict:
        return {
            "id": self.id,
            "params": self.params,
            "status": self.status,
            "lhs": self.lhs,
            "rhs": self.rhs,
            "note": self.note,
            "seed": self.seed,
        }

    def to_json(self) -> str:
        return json.dumps(self.to_dict(), sort_keys=False, separators=(", ", ": "))

    def sort_key(self):
        return (self.id, json.dumps(self.params, sort_keys=True))
