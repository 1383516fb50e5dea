"""Verdicts, law reports and deterministic JSON output."""

import json
import os
import time
from dataclasses import dataclass, field

from .errors import BudgetExceeded

SCHEMA = 1


def jsonable(x):
    """Plain JSON data for ids, witnesses and tables."""
    if x is None or isinstance(x, (bool, int, float, str)):
        return x
    if hasattr(x, "to_json"):
        return x.to_json()
    if isinstance(x, dict):
        return {str(k) if not isinstance(k, str) else k: jsonable(v)
                for k, v in x.items()}
    if isinstance(x, (tuple, list)):
        return [jsonable(v) for v in x]
    if isinstance(x, (set, frozenset)):
        return sorted((jsonable(v) for v in x), key=repr)
    return repr(x)


def dumps(obj):
    data = jsonable(obj)
    if isinstance(data, dict):
        data = {"schema": SCHEMA, **data}
    return json.dumps(data, sort_keys=True, ensure_ascii=False, indent=1)


@dataclass
class Verdict:
    flag: bool
    witness: object = None
    counterexample: object = None

    def __bool__(self):
        return bool(self.flag)

    def to_json(self):
        return {"flag": bool(self.flag), "witness": jsonable(self.witness),
                "counterexample": jsonable(self.counterexample)}


class Budget:
    """Wall-clock budget in milliseconds; CATKERNEL_MAX_MS overrides the default."""

    def __init__(self, max_ms=None):
        if max_ms is None:
            env = os.environ.get("CATKERNEL_MAX_MS")
            max_ms = int(env) if env else None
        self.max_ms = max_ms
        self.start = time.monotonic()
        self._n = 0

    def check(self):
        if self.max_ms is None:
            return
        self._n += 1
        if self._n & 1023:
            return
        if (time.monotonic() - self.start) * 1000 > self.max_ms:
            raise BudgetExceeded(f"exceeded {self.max_ms} ms")


@dataclass
class LawResult:
    label: str
    suite: str
    status: str  # pass | fail | skipped | absent
    checked: int = 0
    counterexample: dict = None
    skipped: int = 0
    note: str = None

    @property
    def ok(self):
        return self.status != "fail"

    def to_json(self):
        d = {"suite": self.suite, "label": self.label, "status": self.status,
             "checked": self.checked}
        if self.skipped:
            d["skipped"] = self.skipped
        if self.counterexample is not None:
            d["counterexample"] = jsonable(self.counterexample)
        if self.note:
            d["note"] = self.note
        return d


@dataclass
class LawReport:
    suite: str
    label: str
    results: list = field(default_factory=list)

    @property
    def status(self):
        if any(r.status == "fail" for r in self.results):
            return "fail"
        if self.results and all(r.status in ("skipped", "absent") for r in self.results):
            return "skipped"
        return "pass"

    @property
    def ok(self):
        return self.status != "fail"

    @property
    def checked(self):
        return sum(r.checked for r in self.results)

    @property
    def counterexample(self):
        for r in self.results:
            if r.status == "fail":
                return {"label": r.label, **(r.counterexample or {})}
        return None

    def result(self, label):
        for r in self.results:
            if r.label == label:
                return r
        raise KeyError(label)

    def failures(self):
        return [r for r in self.results if r.status == "fail"]

    def to_json(self):
        d = {"suite": self.suite, "label": self.label, "status": self.status,
             "checked": self.checked,
             "results": [r.to_json() for r in self.results]}
        if self.counterexample is not None:
            d["counterexample"] = jsonable(self.counterexample)
        return d
