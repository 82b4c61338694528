"""Structured pass/fail reports for the verification suites.

A suite emits one :class:`SuiteReport`: the parameter set, a list of
:class:`CheckRecord` rows (lhs/rhs/stderr/margin/pass), optional ratio
envelopes (min/median/max of observed ratios where only equivalence up to
constants is claimed), free-form notes, and a verdict.  Reports serialize to
a stable JSON document (sorted keys, repr floats) so reruns with the same
seed are byte-identical, and flatten to CSV rows for plotting.
"""

from __future__ import annotations

import json
import math
from dataclasses import dataclass, field

__all__ = ["CheckRecord", "SuiteReport", "envelope", "combined_tolerance"]

VERDICT_PASS = "pass"
VERDICT_FAIL = "fail"
VERDICT_EVIDENCE = "evidence-only"


@dataclass
class CheckRecord:
    """One verified relation; ``margin`` is slack in the passing direction."""

    name: str
    lhs: float
    rhs: float
    stderr: float
    margin: float
    passed: bool

    def as_dict(self) -> dict:
        return {
            "name": self.name,
            "lhs": _num(self.lhs),
            "rhs": _num(self.rhs),
            "stderr": _num(self.stderr),
            "margin": _num(self.margin),
            "pass": bool(self.passed),
        }


def _num(x):
    if isinstance(x, complex):
        return {"re": float(x.real), "im": float(x.imag)}
    x = float(x)
    if math.isnan(x):
        return "nan"
    if math.isinf(x):
        return "inf" if x > 0 else "-inf"
    return x


def envelope(values) -> dict:
    """min / median / max summary of a ratio family."""
    vals = sorted(float(v) for v in values)
    if not vals:
        return {"min": 0.0, "median": 0.0, "max": 0.0, "count": 0}
    k = len(vals)
    med = vals[k // 2] if k % 2 else 0.5 * (vals[k // 2 - 1] + vals[k // 2])
    return {"min": _num(vals[0]), "median": _num(med), "max": _num(vals[-1]), "count": k}


def combined_tolerance(*estimates, scale: float = 0.0, rel: float = 1e-4, sigmas: float = 4.0) -> float:
    """max(rel * scale, sigmas * combined stderr) with quadrature proxies included.

    Quadrature estimates carry an |order - order/2| convergence proxy instead
    of a standard error; it enters the budget at twice its face value.
    """
    var = 0.0
    proxy = 0.0
    for est in estimates:
        if est is None:
            continue
        var += est.stderr ** 2
        proxy += est.extra.get("error_proxy", 0.0)
        scale = max(scale, abs(est.value)) if math.isfinite(abs(est.value)) else scale
    return max(rel * scale, sigmas * math.sqrt(var) + 2.0 * proxy)


@dataclass
class SuiteReport:
    """The full outcome of one verification suite run."""

    suite: str
    params: dict
    checks: list = field(default_factory=list)
    envelopes: dict = field(default_factory=dict)
    verdict: str = VERDICT_PASS
    seed: int = 0
    notes: list = field(default_factory=list)

    def add(self, name: str, lhs, rhs, stderr: float, margin: float, passed: bool) -> CheckRecord:
        rec = CheckRecord(name, lhs, rhs, stderr, margin, bool(passed))
        self.checks.append(rec)
        return rec

    def add_leq(self, name: str, lhs: float, rhs: float, tol: float, stderr: float = 0.0) -> CheckRecord:
        """Record the inequality lhs <= rhs with ``tol`` slack."""
        margin = rhs - lhs
        return self.add(name, lhs, rhs, stderr, margin, margin >= -tol)

    def add_close(self, name: str, lhs: float, rhs: float, tol: float, stderr: float = 0.0) -> CheckRecord:
        """Record the equality |lhs - rhs| <= tol."""
        resid = abs(lhs - rhs)
        return self.add(name, lhs, rhs, stderr, tol - resid, resid <= tol)

    @property
    def passed(self) -> bool:
        return all(c.passed for c in self.checks)

    def finalize(self, evidence_only: bool = False) -> "SuiteReport":
        if evidence_only:
            self.verdict = VERDICT_EVIDENCE
        else:
            self.verdict = VERDICT_PASS if self.passed else VERDICT_FAIL
        return self

    def to_dict(self) -> dict:
        return {
            "suite": self.suite,
            "params": {k: _num(v) if isinstance(v, (int, float, complex)) else v
                       for k, v in self.params.items()},
            "checks": [c.as_dict() for c in self.checks],
            "envelopes": self.envelopes,
            "verdict": self.verdict,
            "seed": self.seed,
            "notes": list(self.notes),
        }

    def to_json(self, **extra) -> str:
        doc = self.to_dict()
        doc.update(extra)
        return json.dumps(doc, sort_keys=True, indent=2)

    def csv_rows(self) -> list:
        """Flattened check rows: suite, check, lhs, rhs, stderr, margin, pass."""
        rows = [["suite", "check", "lhs", "rhs", "stderr", "margin", "pass"]]
        for c in self.checks:
            rows.append([
                self.suite, c.name, repr(float(c.lhs)) if not isinstance(c.lhs, complex) else str(c.lhs),
                repr(float(c.rhs)) if not isinstance(c.rhs, complex) else str(c.rhs),
                repr(float(c.stderr)), repr(float(c.margin)), str(c.passed),
            ])
        return rows
