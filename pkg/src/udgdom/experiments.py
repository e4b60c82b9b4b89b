"""Seeded instance generation and approximation-ratio experiments.

Randomness comes from numpy's PCG64 bit generator seeded through
``SeedSequence([seed, trial])``, which is portable across platforms, so a
report is a pure function of its configuration.
"""

from __future__ import annotations

import io
import os
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass
from fractions import Fraction

import numpy as np

from .approx import TDS_FACTOR, TRDS_FACTOR, tds_udg_sc, trdf_udg_sc, verify_tds, verify_trdf
from .errors import RetryExhaustedError, UDGDomError
from .exact import TDS_LIMIT, TRDF_LIMIT, exact_min_tds, exact_min_trdf
from .geometry import PointSet, UnitDiskGraph, build_udg, isolated_vertices

MAX_RETRIES = 1000
WORKERS_ENV = "UDGDOM_WORKERS"
PROBLEMS = ("ds", "tds", "rds", "trds")
NEEDS_NO_ISOLATED = {"tds", "trds"}


@dataclass(frozen=True)
class ExperimentConfig:
    trials: int = 50
    n: int = 12
    box_width: float = 3.0
    box_height: float = 3.0
    radius: float = 1.0
    seed: int = 0
    exact_limit: int | None = None
    problem: str = "tds"

    def __post_init__(self):
        if self.problem not in PROBLEMS:
            raise UDGDomError(f"unknown problem {self.problem!r}")
        if self.trials < 1 or self.n < 1:
            raise UDGDomError("trials and n must be positive")
        if self.box_width <= 0 or self.box_height <= 0 or self.radius <= 0:
            raise UDGDomError("box dimensions and radius must be positive")
        if not 0 <= self.seed < 2**64:
            raise UDGDomError("seed must be a 64-bit unsigned integer")

    @property
    def limit(self) -> int:
        if self.exact_limit is not None:
            return self.exact_limit
        return TDS_LIMIT if self.problem == "tds" else TRDF_LIMIT

    @property
    def bound(self) -> Fraction:
        return TDS_FACTOR if self.problem == "tds" else TRDS_FACTOR


def rng_for(seed: int, trial: int | None = None) -> np.random.Generator:
    entropy = [seed] if trial is None else [seed, trial]
    return np.random.Generator(np.random.PCG64(np.random.SeedSequence(entropy)))


def sample_instance(
    rng: np.random.Generator,
    n: int,
    width: float,
    height: float,
    radius: float = 1.0,
    problem: str = "tds",
    max_retries: int = MAX_RETRIES,
) -> tuple[PointSet, UnitDiskGraph]:
    """Uniform points in a box, resampled while isolated vertices remain (if the problem forbids them)."""
    for _ in range(max_retries):
        xy = rng.uniform(0.0, 1.0, size=(n, 2)) * (width, height)
        ps = PointSet.from_coords(xy.tolist(), radius)
        g = build_udg(ps)
        if problem not in NEEDS_NO_ISOLATED or not isolated_vertices(g):
            return ps, g
    raise RetryExhaustedError(
        f"no instance without isolated vertices after {max_retries} draws (n={n})"
    )


def generate(config: ExperimentConfig) -> PointSet:
    ps, _ = sample_instance(
        rng_for(config.seed),
        config.n,
        config.box_width,
        config.box_height,
        config.radius,
        config.problem,
    )
    return ps


@dataclass(frozen=True)
class RatioReportRow:
    trial: int
    n: int
    edges: int
    approx: int
    exact: int | None
    bound: Fraction
    verified: bool

    @property
    def ratio(self) -> Fraction | None:
        if self.exact is None:
            return None
        return Fraction(self.approx, self.exact)

    @property
    def within_bound(self) -> bool:
        return self.ratio is None or self.ratio <= self.bound

    def csv_fields(self) -> list[str]:
        ratio = self.ratio
        return [
            str(self.trial),
            str(self.n),
            str(self.edges),
            str(self.approx),
            "NA" if self.exact is None else str(self.exact),
            "NA" if ratio is None else f"{float(ratio):.6f}",
            f"{self.bound.numerator}/{self.bound.denominator}",
            "true" if self.verified else "false",
        ]


CSV_HEADER = ["trial", "n", "edges", "approx", "exact", "ratio", "bound", "verified"]


def run_trial(config: ExperimentConfig, trial: int) -> RatioReportRow:
    problem = "tds" if config.problem in ("ds", "tds") else "trds"
    _, g = sample_instance(
        rng_for(config.seed, trial),
        config.n,
        config.box_width,
        config.box_height,
        config.radius,
        problem,
    )
    exact = None
    if problem == "tds":
        s = tds_udg_sc(g)
        approx, ok = len(s), verify_tds(g, s)
        if g.n <= config.limit:
            exact = exact_min_tds(g, limit=config.limit).objective
    else:
        f = trdf_udg_sc(g)
        approx, ok = f.weight, verify_trdf(g, f)
        if g.n <= config.limit:
            exact = exact_min_trdf(g, limit=config.limit).objective
    return RatioReportRow(trial, g.n, g.n_edges, approx, exact, config.bound, ok)


def _run_trial_args(args):
    return run_trial(*args)


def worker_count() -> int:
    try:
        return max(1, int(os.environ.get(WORKERS_ENV, "1")))
    except ValueError:
        return 1


def run_ratio(config: ExperimentConfig, workers: int | None = None) -> list[RatioReportRow]:
    workers = worker_count() if workers is None else workers
    jobs = [(config, t) for t in range(config.trials)]
    if workers <= 1:
        return [run_trial(*j) for j in jobs]
    with ProcessPoolExecutor(max_workers=workers) as pool:
        return list(pool.map(_run_trial_args, jobs))


def summary(rows: list[RatioReportRow]) -> dict:
    ratios = [r.ratio for r in rows if r.ratio is not None]
    return {
        "max_ratio": max(ratios) if ratios else None,
        "mean_ratio": sum(ratios) / len(ratios) if ratios else None,
        "all_verified": all(r.verified for r in rows),
        "all_within_bound": all(r.within_bound for r in rows),
    }


def report_body(rows: list[RatioReportRow]) -> str:
    """CSV rows plus a ``#`` summary line; everything here is deterministic."""
    out = io.StringIO()
    out.write(",".join(CSV_HEADER) + "\n")
    for r in rows:
        out.write(",".join(r.csv_fields()) + "\n")
    s = summary(rows)

    def fmt(x):
        return "NA" if x is None else f"{float(x):.6f}"

    out.write(
        f"# summary trials={len(rows)} max_ratio={fmt(s['max_ratio'])} "
        f"mean_ratio={fmt(s['mean_ratio'])} verified={str(s['all_verified']).lower()} "
        f"within_bound={str(s['all_within_bound']).lower()}\n"
    )
    return out.getvalue()
