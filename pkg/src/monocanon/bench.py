"""Benchmark harness: raw input versus canonical form, wall-clock timed.

Every timing uses the monotonic clock.  When the raw side hits the timeout
its elapsed time is still recorded and the speedup becomes a lower bound.
Computed values must agree between the raw and canonical sides whenever
both finished; a report that violates that is an error, not data.
"""

from __future__ import annotations

import os
import statistics
import time
from dataclasses import asdict, dataclass

from .canonical import canonicalize
from .ideals import Factor
from .invariance import InvarianceViolation
from .koszul import FieldChoice, Rationals, depth
from .limits import ResourceError, deadline_from_timeout
from .parse import format_factor
from .sdepth import sdepth


@dataclass
class SideTiming:
    value: int | None
    millis: float
    timed_out: bool


@dataclass
class MetricBench:
    raw: SideTiming
    canonical: SideTiming
    speedup: float | None
    speedup_is_lower_bound: bool


@dataclass
class BenchReport:
    label: str
    variables: list[str]
    raw_form: str
    canonical_form: str
    raw_box_volume: int
    canonical_box_volume: int
    box_ratio: float
    repeat: int
    timeout_seconds: float | None
    metrics: dict[str, MetricBench]

    def to_dict(self) -> dict:
        return asdict(self)

    @classmethod
    def from_dict(cls, data: dict) -> "BenchReport":
        metrics = {
            name: MetricBench(
                raw=SideTiming(**m["raw"]),
                canonical=SideTiming(**m["canonical"]),
                speedup=m["speedup"],
                speedup_is_lower_bound=m["speedup_is_lower_bound"],
            )
            for name, m in data["metrics"].items()
        }
        return cls(**{**data, "metrics": metrics})


def _measure(fn, repeat: int, timeout: float | None) -> SideTiming:
    """Median wall time over `repeat` runs; a timed-out run ends the series."""
    times = []
    value = None
    for _ in range(repeat):
        deadline = deadline_from_timeout(timeout)
        start = time.monotonic()
        try:
            got = fn(deadline)
        except ResourceError:
            elapsed = (time.monotonic() - start) * 1000.0
            times.append(elapsed)
            return SideTiming(value=None, millis=statistics.median(times), timed_out=True)
        elapsed = (time.monotonic() - start) * 1000.0
        times.append(elapsed)
        if value is not None and got != value:
            raise InvarianceViolation(
                f"repeated runs disagreed: {value} then {got}"
            )
        value = got
    return SideTiming(value=value, millis=statistics.median(times), timed_out=False)


def _box_volume(F: Factor) -> int:
    volume = 1
    for e in F.join_exponents():
        volume *= e + 1
    return volume


def run_bench(F: Factor, names, *, label: str = "", repeat: int = 1,
              timeout: float | None = None, parallel: bool = False,
              field: FieldChoice = Rationals()) -> BenchReport:
    canonical = canonicalize(F)
    raw_volume = _box_volume(F)
    canonical_volume = _box_volume(canonical)
    workers = os.cpu_count() if parallel else None

    metrics: dict[str, MetricBench] = {}
    plans = {
        "sdepth": (
            lambda dl: sdepth(F, deadline=dl)[0],
            lambda dl: sdepth(canonical, deadline=dl)[0],
        ),
        "depth": (
            lambda dl: depth(F, field, deadline=dl, workers=workers),
            lambda dl: depth(canonical, field, deadline=dl, workers=workers),
        ),
    }
    for name, (raw_fn, canonical_fn) in plans.items():
        raw = _measure(raw_fn, repeat, timeout)
        canon = _measure(canonical_fn, repeat, timeout)
        if (
            raw.value is not None
            and canon.value is not None
            and raw.value != canon.value
        ):
            raise InvarianceViolation(
                f"{name} differs between raw ({raw.value}) and canonical "
                f"({canon.value}) forms of {label or format_factor(F, names)}"
            )
        speedup = None
        if canon.millis > 0:
            speedup = raw.millis / canon.millis
        metrics[name] = MetricBench(
            raw=raw,
            canonical=canon,
            speedup=speedup,
            speedup_is_lower_bound=raw.timed_out,
        )
    return BenchReport(
        label=label,
        variables=list(names),
        raw_form=format_factor(F, names),
        canonical_form=format_factor(canonical, names),
        raw_box_volume=raw_volume,
        canonical_box_volume=canonical_volume,
        box_ratio=raw_volume / canonical_volume,
        repeat=repeat,
        timeout_seconds=timeout,
        metrics=metrics,
    )
