"""Run reports: instance summary, lengths, oracle ratios and inequality audits."""
from __future__ import annotations

import json
import math
import os
from dataclasses import dataclass, field

AUDIT_TOL = 1e-9


@dataclass
class Audit:
    """One checked inequality ``lhs >= rhs - tol``.

    ``hard`` audits make the CLI exit non-zero when violated; soft ones are
    monitored and reported only.
    """

    name: str
    lhs: float
    rhs: float
    tol: float = AUDIT_TOL
    hard: bool = True
    note: str = ""

    @property
    def satisfied(self) -> bool:
        return self.lhs >= self.rhs - self.tol

    def to_dict(self):
        d = {
            "name": self.name,
            "lhs": self.lhs,
            "rhs": self.rhs,
            "tol": self.tol,
            "hard": self.hard,
            "satisfied": self.satisfied,
        }
        if self.note:
            d["note"] = self.note
        return d


@dataclass
class Ratio:
    name: str
    value: float
    oracle: str
    oracle_length: float

    def to_dict(self):
        return {"name": self.name, "value": self.value, "oracle": self.oracle, "oracle_length": self.oracle_length}


@dataclass
class RunReport:
    algorithm: str
    n: int
    h: int
    perimeter: float
    diameter: float
    length: float = float("nan")
    kind: str = ""
    components: dict = field(default_factory=dict)
    oracles: dict = field(default_factory=dict)
    ratios: list = field(default_factory=list)
    audits: list = field(default_factory=list)
    extra: dict = field(default_factory=dict)
    wall_time: float | None = None

    def audit(self, name, lhs, rhs, tol=AUDIT_TOL, hard=True, note="") -> Audit:
        a = Audit(name, float(lhs), float(rhs), tol, hard, note)
        self.audits.append(a)
        return a

    def ratio(self, name, oracle, oracle_length) -> Ratio:
        value = self.length / oracle_length if oracle_length > 0 else math.nan
        r = Ratio(name, value, oracle, float(oracle_length))
        self.ratios.append(r)
        return r

    @property
    def violations(self):
        return [a for a in self.audits if not a.satisfied]

    @property
    def hard_violations(self):
        return [a for a in self.audits if a.hard and not a.satisfied]

    def to_dict(self, timing: bool | None = None):
        if timing is None:
            timing = bool(os.environ.get("NONCROSS_TIMING"))
        d = {
            "algorithm": self.algorithm,
            "instance": {"n": self.n, "h": self.h, "P": self.perimeter, "D": self.diameter},
            "kind": self.kind,
            "length": self.length,
            "components": dict(self.components),
            "oracles": dict(self.oracles),
            "ratios": [r.to_dict() for r in self.ratios],
            "audits": [a.to_dict() for a in self.audits],
            "violations": [a.name for a in self.violations],
            "extra": _jsonable(self.extra),
        }
        if timing and self.wall_time is not None:
            d["wall_time"] = self.wall_time
        return d

    def to_json(self, timing: bool | None = None) -> str:
        return json.dumps(self.to_dict(timing), sort_keys=True, allow_nan=True)


def _jsonable(x):
    if isinstance(x, dict):
        return {str(k): _jsonable(v) for k, v in x.items()}
    if isinstance(x, (list, tuple)):
        return [_jsonable(v) for v in x]
    if hasattr(x, "item"):
        return x.item()
    if hasattr(x, "value") and not isinstance(x, (int, float, str, bool)):
        return x.value
    return x


def new_report(algorithm: str, s) -> RunReport:
    from .geometry import convex_hull, diameter

    hull = convex_hull(s)
    _, d = diameter(s)
    return RunReport(algorithm, s.n, hull.h, hull.perimeter, d)
