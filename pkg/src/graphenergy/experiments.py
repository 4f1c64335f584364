"""Seeded Monte Carlo experiments: per-trial energy and bound evaluation for
random graph models, with deterministic CSV/JSON output.

Each trial derives its own RNG stream from (seed, trial index), so the
output is byte-identical regardless of worker count; rows are ordered by
trial index, not completion order.
"""

from __future__ import annotations

import json
import math
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass

from . import asymptotics
from .bounds import BoundReport, bound_report
from .graph import Graph, GraphError, degree_profile
from .random_graphs import ba_tree, derive_seed, er_graph
from .spectral import energy

__all__ = [
    "ExperimentConfig",
    "ResultRow",
    "SoundnessError",
    "run_experiment",
    "rows_to_csv",
    "summarize",
    "CSV_COLUMNS",
    "CSV_SCHEMA",
]

CSV_SCHEMA = "graphenergy-results v1"
CSV_COLUMNS = (
    "trial",
    "seed",
    "n",
    "edges",
    "energy",
    "energy_per_n",
    "mcclelland",
    "koolen_moulton",
    "aj",
    "ad",
    "tp",
    "tpg",
    "global",
    "degree_hist",
)

# Bounds may only be undercut by eigensolver noise, never more than this.
SOUNDNESS_SLACK_PER_VERTEX = 1e-7


class SoundnessError(RuntimeError):
    """A computed energy exceeded an applicable upper bound: regression tripwire."""


@dataclass(frozen=True)
class ExperimentConfig:
    model: str              # "ba" or "er"
    n: int
    trials: int
    seed: int
    lam: float | None = None   # ER only; p = lam/n
    threads: int = 1

    def validate(self) -> None:
        if self.model not in ("ba", "er"):
            raise GraphError(f"unknown model {self.model!r}")
        if self.n < 3:
            raise GraphError(f"experiments need n >= 3, got {self.n}")
        if self.trials < 1:
            raise GraphError(f"trials must be >= 1, got {self.trials}")
        if self.threads < 1:
            raise GraphError(f"threads must be >= 1, got {self.threads}")
        if self.model == "er":
            if self.lam is None:
                raise GraphError("er model requires lambda")
            if not (0 < self.lam < self.n):
                raise GraphError(f"er needs 0 < lambda < n, got {self.lam}")


@dataclass(frozen=True)
class ResultRow:
    trial: int
    seed: int
    n: int
    edges: int
    energy: float
    report: BoundReport

    def values(self) -> dict[str, float | int | None]:
        d = self.report.as_dict()
        return {
            "trial": self.trial,
            "seed": self.seed,
            "n": self.n,
            "edges": self.edges,
            "energy": self.energy,
            "energy_per_n": self.energy / self.n,
            "mcclelland": d["mcclelland"],
            "koolen_moulton": d["koolen_moulton"],
            "aj": d["aj"],
            "ad": d["ad"],
            "tp": d["tp"],
            "tpg": d["tpg"],
            "global": d["global"],
            "degree_hist": d["degree_hist"],
        }


def _generate(config: ExperimentConfig, trial: int) -> tuple[int, Graph]:
    sub_seed = derive_seed(config.seed, trial)
    if config.model == "ba":
        return sub_seed, ba_tree(config.n, sub_seed)
    return sub_seed, er_graph(config.n, config.lam, sub_seed)


def _check_soundness(row: ResultRow) -> None:
    slack = SOUNDNESS_SLACK_PER_VERTEX * row.n
    for name, value in row.report.applicable().items():
        if row.energy > value + slack:
            raise SoundnessError(
                f"trial {row.trial}: energy {row.energy:.9g} exceeds "
                f"{name} bound {value:.9g} (n={row.n}, seed={row.seed})"
            )


def _run_trial(config: ExperimentConfig, trial: int) -> ResultRow:
    sub_seed, g = _generate(config, trial)
    profile = degree_profile(g)
    row = ResultRow(
        trial=trial,
        seed=sub_seed,
        n=g.n,
        edges=g.m,
        energy=energy(g),
        report=bound_report(g, profile),
    )
    _check_soundness(row)
    return row


def run_experiment(config: ExperimentConfig) -> list[ResultRow]:
    """Run all trials; deterministic given (config, seed), any thread count."""
    config.validate()
    trials = range(config.trials)
    if config.threads == 1:
        return [_run_trial(config, t) for t in trials]
    with ThreadPoolExecutor(max_workers=config.threads) as pool:
        return list(pool.map(lambda t: _run_trial(config, t), trials))


def _fmt(x) -> str:
    if x is None:
        return ""
    if isinstance(x, int):
        return str(x)
    return format(x, ".12g")


def rows_to_csv(rows: list[ResultRow]) -> str:
    """Serialize rows to CSV text (with a versioned schema comment line)."""
    lines = [f"# {CSV_SCHEMA}", ",".join(CSV_COLUMNS)]
    for row in rows:
        vals = row.values()
        lines.append(",".join(_fmt(vals[c]) for c in CSV_COLUMNS))
    return "\n".join(lines) + "\n"


def _stats(values: list[float]) -> dict[str, float]:
    return {
        "mean": math.fsum(values) / len(values),
        "min": min(values),
        "max": max(values),
    }


def summarize(config: ExperimentConfig, rows: list[ResultRow]) -> dict:
    """Mean/min/max of energy/n and each bound/n, plus the limit constant."""
    summary: dict = {
        "schema_version": 1,
        "model": config.model,
        "n": config.n,
        "trials": config.trials,
        "seed": config.seed,
    }
    if config.model == "er":
        summary["lambda"] = config.lam
        ref = asymptotics.er_f(config.lam, 40)
        summary["asymptotic_constant"] = ref.value
        summary["asymptotic_truncation_bound"] = ref.truncation_bound
    else:
        ref = asymptotics.ba_limit_constant(100001)
        summary["asymptotic_constant"] = ref.value
        summary["asymptotic_truncation_bound"] = ref.truncation_bound

    summary["energy_per_n"] = _stats([r.energy / r.n for r in rows])
    per_bound: dict[str, dict[str, float]] = {}
    for name in ("mcclelland", "koolen_moulton", "aj", "ad", "tp", "tpg", "global", "degree_hist"):
        vals = [row.values()[name] / row.n for row in rows if row.values()[name] is not None]
        if vals:
            per_bound[name] = _stats(vals)
    summary["bounds_per_n"] = per_bound
    summary["mean_edges_per_n"] = math.fsum(r.edges for r in rows) / (len(rows) * config.n)
    return summary
