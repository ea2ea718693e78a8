import json

from noncross import PointSet, a3
from noncross.report import Audit, RunReport


def test_audit_satisfaction():
    assert Audit("x", 1.0, 1.0 + 1e-12).satisfied
    assert not Audit("x", 1.0, 1.1).satisfied
    assert Audit("x", 1.0, 1.1, tol=0.2).satisfied


def test_report_json_is_deterministic(square, monkeypatch):
    monkeypatch.delenv("NONCROSS_TIMING", raising=False)
    _, r1 = a3(square, mst_length=3.0)
    _, r2 = a3(PointSet(square.xy), mst_length=3.0)
    assert r1.to_json() == r2.to_json()
    d = json.loads(r1.to_json())
    assert "wall_time" not in d
    assert d["ratios"][0]["oracle"] == "max_spanning_tree"
    assert "wall_time" in json.loads(r1.to_json(timing=True))
    monkeypatch.setenv("NONCROSS_TIMING", "1")
    assert "wall_time" in json.loads(r1.to_json())


def test_violation_lists():
    r = RunReport("t", 3, 3, 1.0, 1.0)
    r.audit("ok", 2, 1)
    r.audit("soft", 0, 1, hard=False)
    r.audit("hard", 0, 1)
    assert [a.name for a in r.violations] == ["soft", "hard"]
    assert [a.name for a in r.hard_violations] == ["hard"]
    assert r.to_dict()["violations"] == ["soft", "hard"]
