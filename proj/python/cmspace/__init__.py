"""Hurwitz zeta values at rationals, cotangent-derivative identities and
integer-relation probes, backed by the C++ core."""

from __future__ import annotations

import json
from fractions import Fraction
from typing import Any

from . import _core
from ._core import DomainError, UsageError, expand, hurwitz_zeta, is_in_subfield, known_commands

__all__ = [
    "DomainError",
    "ExperimentFailed",
    "UsageError",
    "exact_ratio",
    "expand",
    "hurwitz_zeta",
    "is_in_subfield",
    "known_commands",
    "run",
]


class ExperimentFailed(RuntimeError):
    """A verification ran but missed its threshold (exit code 1)."""

    def __init__(self, report: dict[str, Any]):
        super().__init__("verification did not meet its threshold")
        self.report = report


def run(command: str, **params: Any) -> dict[str, Any]:
    """Runs one experiment, e.g. ``run("verify-lemma3", k=3, q=4, a=1)``.

    Returns the JSON report as a dict. Raises UsageError for bad parameters
    and ExperimentFailed when a verification misses its threshold.
    """
    if "bound" in params:
        params["bound"] = str(params["bound"])
    exit_code, output, error = _core.run(json.dumps({"command": command, **params}))
    if exit_code == 2:
        raise UsageError(error)
    report = json.loads(output) if params.get("format", "json") == "json" else {"csv": output}
    if exit_code == 1:
        raise ExperimentFailed(report)
    return report


def exact_ratio(k: int, a: int, q: int) -> tuple[int, list[Fraction]]:
    """Exact (zeta(k,a/q) - zeta(k,1-a/q)) / (2 pi i)^k as (q, power-basis coefficients)."""
    head, _, tail = _core.exact_ratio(k, a, q).partition(";")
    return int(head), [Fraction(c.strip()) for c in tail.split(",")]
