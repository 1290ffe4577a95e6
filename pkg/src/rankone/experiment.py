"""Seeded batch classification with machine-readable, reproducible reports.

The master seed plus the trial index fully determines every trial.  Report
bodies are canonical JSON and byte-identical across reruns and worker
counts; wall times live outside the hashed body.
"""

from __future__ import annotations

import hashlib
import json
import random
import time
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass

from . import __version__
from .classify import Budgets, classify, revalidate
from .codes import SlidingBlockCode, code_from_dict, code_to_dict
from .construction import RankOneParams, params_from_dict, params_to_dict
from .errors import InternalInconsistencyError

CONFIG_SCHEMA = "rankone-experiment-config/1"
REPORT_SCHEMA = "rankone-experiment-report/1"


def canonical_json(doc) -> str:
    return json.dumps(doc, sort_keys=True, separators=(",", ":"))


def digest(doc) -> str:
    return hashlib.sha256(canonical_json(doc).encode()).hexdigest()[:16]


def derive_seed(master_seed: int, index: int) -> int:
    raw = hashlib.sha256(f"{master_seed}:{index}".encode()).digest()
    return int.from_bytes(raw[:8], "big")


def random_code(rng: random.Random, R_range: tuple[int, int], b: int) -> SlidingBlockCode:
    """Uniform table over [0, b-1]; R drawn uniformly from the given range."""
    R = rng.randint(R_range[0], R_range[1])
    table = tuple(rng.randrange(b) for _ in range(2 ** (R + 1)))
    return SlidingBlockCode(R, b, table)


def budgets_from_dict(doc: dict) -> Budgets:
    kr = doc.get("K_range", (-3, 3))
    return Budgets(
        n_max=doc.get("n_max", 6),
        p_max=doc.get("p_max"),
        M_max=doc.get("M_max", 8),
        probe_length=doc.get("probe_length"),
        K_range=(kr[0], kr[1]),
        normalize_horizon=doc.get("normalize_horizon", 32),
    )


def budgets_to_dict(budgets: Budgets) -> dict:
    return {
        "n_max": budgets.n_max,
        "p_max": budgets.p_max,
        "M_max": budgets.M_max,
        "probe_length": budgets.probe_length,
        "K_range": list(budgets.K_range),
        "normalize_horizon": budgets.normalize_horizon,
    }


@dataclass(frozen=True)
class ExperimentConfig:
    params: RankOneParams
    code_source: dict  # {"random": {"R_range": [lo, hi], "b": b}} or an inline code document
    budgets: Budgets
    trials: int
    master_seed: int
    revalidate: bool = True

    def __post_init__(self):
        if self.trials < 1:
            raise ValueError("trial count must be at least 1")

    def to_dict(self) -> dict:
        return {
            "schema": CONFIG_SCHEMA,
            "params": params_to_dict(self.params),
            "code": self.code_source,
            "budgets": budgets_to_dict(self.budgets),
            "trials": self.trials,
            "master_seed": self.master_seed,
            "revalidate": self.revalidate,
        }


def config_from_dict(doc: dict, read_file=None) -> ExperimentConfig:
    """Parse a config document; file references are resolved via read_file."""

    def resolve(entry, what):
        if isinstance(entry, dict) and "file" in entry:
            if read_file is None:
                raise ValueError(f"{what} references a file but no reader was provided")
            return json.loads(read_file(entry["file"]))
        return entry

    try:
        params = params_from_dict(resolve(doc["params"], "params"))
        code_source = doc["code"]
        if not (isinstance(code_source, dict) and "random" in code_source):
            code_source = resolve(code_source, "code")
            code_from_dict(code_source)  # validate early
        trials = doc["trials"]
        master_seed = doc["master_seed"]
    except KeyError as exc:
        raise ValueError(f"missing field {exc.args[0]!r} in experiment config") from None
    budgets = budgets_from_dict(doc.get("budgets", {}))
    return ExperimentConfig(
        params, code_source, budgets, trials, master_seed, doc.get("revalidate", True)
    )


class ExperimentAbort(Exception):
    """A trial hit an internal inconsistency; carries a reproduction bundle."""

    def __init__(self, message: str, bundle: dict):
        super().__init__(message)
        self.bundle = bundle


def _trial_code(config: ExperimentConfig, index: int) -> SlidingBlockCode:
    source = config.code_source
    if isinstance(source, dict) and "random" in source:
        spec = source["random"]
        rng = random.Random(derive_seed(config.master_seed, index))
        r_lo, r_hi = spec.get("R_range", (0, 2))
        return random_code(rng, (r_lo, r_hi), spec.get("b", 2))
    return code_from_dict(source)


def _run_trial(config: ExperimentConfig, index: int) -> tuple[dict, float]:
    code = _trial_code(config, index)
    started = time.perf_counter()
    try:
        result = classify(code, config.params, config.budgets)
        record = {
            "index": index,
            "code_digest": digest(code_to_dict(code)),
            "R": code.R,
            "b": code.target_alphabet,
            "classification": result.to_dict(),
        }
        if config.revalidate:
            record["revalidated"] = revalidate(code, config.params, result, config.budgets)
    except InternalInconsistencyError as exc:
        raise ExperimentAbort(
            str(exc),
            {
                "trial": index,
                "params": params_to_dict(config.params),
                "code": code_to_dict(code),
                "budgets": budgets_to_dict(config.budgets),
            },
        ) from exc
    return record, time.perf_counter() - started


def run_experiment(config: ExperimentConfig, jobs: int = 1) -> dict:
    """Run all trials and assemble the report.

    Trials are independent; the report is ordered by trial index, so the
    worker count never changes the report body.
    """
    indices = range(config.trials)
    if jobs > 1:
        with ThreadPoolExecutor(max_workers=jobs) as pool:
            outcomes = list(pool.map(lambda i: _run_trial(config, i), indices))
    else:
        outcomes = [_run_trial(config, i) for i in indices]

    trials = [record for record, _ in outcomes]
    counts = {"finite": 0, "trivial": 0, "isomorphic": 0, "undetermined": 0}
    for record in trials:
        counts[record["classification"]["verdict"]] += 1

    body = {
        "schema": REPORT_SCHEMA,
        "tool_version": __version__,
        "config_digest": digest(config.to_dict()),
        "params_digest": digest(params_to_dict(config.params)),
        "trials": trials,
        "counts": counts,
        "corpus_hash": digest(trials),
    }
    return {
        "body": body,
        "body_hash": digest(body),
        "wall_times": {
            "per_trial": [round(seconds, 6) for _, seconds in outcomes],
            "total": round(sum(seconds for _, seconds in outcomes), 6),
        },
    }


def report_body_bytes(report: dict) -> bytes:
    """The canonical bytes of the hashed report body."""
    return canonical_json(report["body"]).encode()
