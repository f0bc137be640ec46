"""Experiment runner: seeded parallel repetitions, statistics, bound reports.

A repetition's RNG stream is derived from (master seed, repetition index),
so results are reproducible independently of scheduling order.  One flat
CSV row per repetition keeps downstream analysis tool-agnostic.
"""

from __future__ import annotations

import csv
import math
import os
import statistics
import time
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, replace
from pathlib import Path
from typing import Iterable, Sequence

import numpy as np

from . import bounds
from .algorithms import AlgorithmConfig, RunRecord, gsemo_run, sms_emoa_run
from .benchmarks import ProblemInstance

CSV_HEADER = [
    "problem", "n", "m", "k", "algo", "mu", "mutation", "beta", "update",
    "seed", "rep", "iterations", "evaluations", "censored", "seconds",
]

ALGO_NAMES = {"sms_emoa": "sms", "gsemo": "gsemo"}


@dataclass(frozen=True, slots=True)
class ExperimentSpec:
    """One experiment: a problem, an algorithm config, and repetitions."""

    problem: ProblemInstance
    config: AlgorithmConfig
    repetitions: int = 1
    master_seed: int = 0
    out: Path | None = None
    bound_report: bool = False

    def __post_init__(self) -> None:
        if self.repetitions < 1:
            raise ValueError(f"repetitions must be >= 1, got {self.repetitions}")


@dataclass(frozen=True, slots=True)
class ResultRow:
    """One CSV row per repetition."""

    problem: ProblemInstance
    config: AlgorithmConfig
    rep: int
    iterations: int
    evaluations: int
    censored: bool
    seconds: float

    def as_csv(self) -> list[str]:
        inst, cfg = self.problem, self.config
        heavy = cfg.mutation.kind == "heavy_tailed"
        return [
            inst.kind,
            str(inst.n),
            str(inst.m),
            "" if inst.k is None else str(inst.k),
            ALGO_NAMES[cfg.algo],
            "" if cfg.mu is None else str(cfg.mu),
            "heavy" if heavy else "standard",
            str(cfg.mutation.beta) if heavy else "",
            cfg.update,
            str(cfg.seed),
            str(self.rep),
            str(self.iterations),
            str(self.evaluations),
            "1" if self.censored else "0",
            f"{self.seconds:.6f}",
        ]


@dataclass(frozen=True, slots=True)
class BoundRow:
    theorem: str
    bound: float
    empirical_mean: float
    ci_half_width: float
    passed: bool


@dataclass(frozen=True, slots=True)
class BoundReport:
    rows: tuple[BoundRow, ...]


@dataclass(frozen=True, slots=True)
class Summary:
    repetitions: int
    censored: int
    mean_iterations: float
    median_iterations: float
    ci_half_width: float


def bound_value(theorem: str, inst: ProblemInstance, cfg: AlgorithmConfig) -> float:
    """Closed-form iteration bound, with mu resolved from the config."""
    from .algorithms import auto_mu

    mu = cfg.mu if cfg.mu is not None else auto_mu(inst, cfg.update)
    return bounds.bound_value(theorem, inst, mu)


def applicable_theorems(inst: ProblemInstance, cfg: AlgorithmConfig) -> list[str]:
    if inst.kind == "omm":
        return ["omm"] if cfg.algo == "sms_emoa" else []
    if inst.kind == "lotz":
        return ["lotz"] if cfg.algo == "sms_emoa" else []
    if inst.kind == "mojzj":
        if cfg.algo == "gsemo":
            return ["gsemo"]
        if cfg.mutation.kind == "heavy_tailed":
            return []  # no explicit-constant closed form for that variant
        return ["spu"] if cfg.update == "stochastic" else ["sms"]
    return []


def _one_rep(args: tuple[ProblemInstance, AlgorithmConfig, int, int]) -> ResultRow:
    inst, cfg, master_seed, rep = args
    rng = np.random.default_rng([master_seed, rep])
    cfg = replace(cfg, seed=master_seed)
    start = time.perf_counter()
    record: RunRecord
    if cfg.algo == "gsemo":
        record = gsemo_run(inst, cfg, rng)
    else:
        record = sms_emoa_run(inst, cfg, rng)
    elapsed = time.perf_counter() - start
    initial = 1 if cfg.algo == "gsemo" else record.max_population_size
    iterations = (
        record.iterations_to_coverage
        if record.iterations_to_coverage is not None
        else record.evaluations - initial  # iterations actually executed
    )
    return ResultRow(inst, cfg, rep, iterations, record.evaluations, record.censored, elapsed)


def summarize(rows: Sequence[ResultRow]) -> Summary:
    """Mean/median and a 95% normal-approximation CI over uncensored runs."""
    done = [r.iterations for r in rows if not r.censored]
    if not done:
        return Summary(len(rows), len(rows), math.nan, math.nan, math.nan)
    mean = statistics.fmean(done)
    median = statistics.median(done)
    if len(done) > 1:
        ci = 1.96 * statistics.stdev(done) / math.sqrt(len(done))
    else:
        ci = math.nan
    return Summary(len(rows), len(rows) - len(done), mean, median, ci)


def build_bound_report(
    spec: ExperimentSpec, rows: Sequence[ResultRow]
) -> BoundReport:
    summary = summarize(rows)
    out = []
    for theorem in applicable_theorems(spec.problem, spec.config):
        b = bound_value(theorem, spec.problem, spec.config)
        ci = 0.0 if math.isnan(summary.ci_half_width) else summary.ci_half_width
        passed = (
            summary.censored == 0
            and not math.isnan(summary.mean_iterations)
            and summary.mean_iterations + ci <= b
        )
        out.append(BoundRow(theorem, b, summary.mean_iterations, ci, passed))
    return BoundReport(tuple(out))


def write_csv(rows: Iterable[ResultRow], path: Path) -> None:
    with open(path, "w", newline="") as fh:
        writer = csv.writer(fh)
        writer.writerow(CSV_HEADER)
        for row in rows:
            writer.writerow(row.as_csv())


def run_experiment(
    spec: ExperimentSpec, jobs: int | None = None
) -> tuple[list[ResultRow], BoundReport | None]:
    """Execute all repetitions (in parallel), optionally writing CSV rows
    incrementally, and build the bound report if requested."""
    args = [
        (spec.problem, spec.config, spec.master_seed, rep)
        for rep in range(spec.repetitions)
    ]
    if jobs is None:
        jobs = min(os.cpu_count() or 1, spec.repetitions)
    rows: list[ResultRow] = []
    writer = None
    fh = None
    if spec.out is not None:
        fh = open(spec.out, "w", newline="")
        writer = csv.writer(fh)
        writer.writerow(CSV_HEADER)
    try:
        if jobs > 1:
            with ProcessPoolExecutor(max_workers=jobs) as pool:
                iterator = pool.map(_one_rep, args)
                for row in iterator:
                    rows.append(row)
                    if writer is not None:
                        writer.writerow(row.as_csv())
                        fh.flush()
        else:
            for a in args:
                row = _one_rep(a)
                rows.append(row)
                if writer is not None:
                    writer.writerow(row.as_csv())
                    fh.flush()
    finally:
        if fh is not None:
            fh.close()
    report = build_bound_report(spec, rows) if spec.bound_report else None
    return rows, report
