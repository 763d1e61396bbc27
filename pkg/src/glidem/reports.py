"""Run configuration and verification reports.

A report carries the suite name, an echo of the configuration, case and pass
counts, and a failure record per broken case (with serialized witnesses).
The canonical JSON form is deterministic: identical configurations produce
byte-identical files, so wall time is kept out of it and only shown in the
human summary.
"""

from __future__ import annotations

import json
from dataclasses import dataclass, field
from typing import Callable, Iterable, Optional

from .matrices import make_rng, RNG_NAME
from .scalars import GF, QQ, ScalarDomain

__all__ = ["RunConfig", "VerificationReport", "run_cases"]


@dataclass
class RunConfig:
    domain: ScalarDomain = QQ
    n: int = 2
    mode: str = "sampled"  # exhaustive | sampled
    samples: int = 1000
    seed: int = 0
    out: Optional[str] = None
    workers: int = 1
    extras: dict = field(default_factory=dict)

    def validate(self) -> None:
        if self.mode not in ("exhaustive", "sampled"):
            raise ValueError(f"unknown mode {self.mode!r}")
        if self.mode == "exhaustive" and not self.domain.is_finite:
            raise ValueError("exhaustive mode needs a prime-field domain")
        if self.n < 1:
            raise ValueError("dimension must be at least 1")
        if self.samples < 1:
            raise ValueError("sample count must be positive")

    def rng(self):
        return make_rng(self.seed)

    def to_json(self) -> dict:
        out = {
            "domain": self.domain.to_json(),
            "dim": self.n,
            "mode": self.mode,
            "samples": self.samples,
            "seed": self.seed,
            "rng": RNG_NAME,
            "workers": self.workers,
        }
        if self.extras:
            out["extras"] = self.extras
        return out


@dataclass
class VerificationReport:
    suite: str
    config: dict
    cases: int = 0
    passes: int = 0
    failures: list = field(default_factory=list)
    notes: dict = field(default_factory=dict)
    rows: list = field(default_factory=list)
    wall_time_s: float = 0.0

    @property
    def passed(self) -> bool:
        return not self.failures and self.passes == self.cases

    def to_json_obj(self) -> dict:
        obj = {
            "suite": self.suite,
            "config": self.config,
            "cases": self.cases,
            "passes": self.passes,
            "failures": self.failures,
            "notes": self.notes,
        }
        if self.rows:
            obj["rows"] = self.rows
        return obj

    def to_json(self) -> str:
        return json.dumps(self.to_json_obj(), sort_keys=True, indent=2)

    def summary(self) -> str:
        state = "PASS" if self.passed else "FAIL"
        return (
            f"[{state}] suite={self.suite} cases={self.cases} "
            f"passes={self.passes} failures={len(self.failures)} "
            f"wall={self.wall_time_s:.2f}s"
        )


def run_cases(
    suite: str,
    cfg: RunConfig,
    cases: Iterable[tuple[str, Callable[[], dict]]],
) -> VerificationReport:
    """Execute named checks; exceptions become failure records, not crashes.

    Each case callable returns a detail dict on success and raises
    AssertionError (or anything else) on failure.
    """
    import time

    report = VerificationReport(suite=suite, config=cfg.to_json())
    start = time.perf_counter()
    for name, fn in cases:
        report.cases += 1
        try:
            detail = fn() or {}
            report.passes += 1
            if detail:
                report.notes[name] = detail
        except Exception as exc:  # noqa: BLE001 - recorded, never crashes
            report.failures.append({"case": name, "error": f"{type(exc).__name__}: {exc}"})
    report.wall_time_s = time.perf_counter() - start
    return report
