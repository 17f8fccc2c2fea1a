"""Bounded-deletion channel simulation and the end-to-end
encode / delete / re-encode / decode pipeline.

The channel contract is a global deletion budget: at most t <= r - 1
symbols are removed from a word whose runs all have length >= r, so the
run count survives and the decoder sees a vector of the original
dimension.  The pipeline re-derives the run count from the received word
rather than trusting metadata, so any hypothesis violation surfaces as a
recorded failure instead of a crash.
"""

from __future__ import annotations

import json
import random
from dataclasses import dataclass, field
from itertools import combinations

from .codebook import Codebook
from .decoder import decode
from .errors import HypothesisViolation, ParameterError
from .runlength import phi, phi_inverse


@dataclass(frozen=True)
class ChannelConfig:
    max_deletions: int
    model: str = "exhaustive"
    seed: int = 0
    trials: int = 1000  # random model only

    def __post_init__(self):
        if self.max_deletions < 0:
            raise ParameterError("deletion budget must be >= 0")
        if self.model not in ("exhaustive", "uniform_random"):
            raise ParameterError(f"unknown channel model {self.model!r}")


@dataclass
class SimulationReport:
    trials: int
    successes: int
    failures: int
    branch_counts: dict
    failure_examples: list = field(default_factory=list)
    params: dict = field(default_factory=dict)

    @property
    def success_rate(self) -> float:
        return self.successes / self.trials if self.trials else 1.0

    def to_json(self) -> str:
        payload = {
            "params": self.params,
            "trials": self.trials,
            "successes": self.successes,
            "failures": self.failures,
            "success_rate": self.success_rate,
            "branch_counts": self.branch_counts,
            "failure_examples": self.failure_examples,
        }
        return json.dumps(payload, indent=2, sort_keys=True)


def apply_deletions(word: str, positions) -> str:
    """Remove the given strictly increasing 0-based positions from a word."""
    positions = list(positions)
    if any(positions[i] >= positions[i + 1] for i in range(len(positions) - 1)):
        raise ParameterError("positions must be strictly increasing")
    if positions and not (0 <= positions[0] and positions[-1] < len(word)):
        raise ParameterError("deletion position out of range")
    keep = set(positions)
    return "".join(ch for i, ch in enumerate(word) if i not in keep)


def run_pipeline(codebook: Codebook, config: ChannelConfig) -> SimulationReport:
    """Push every trial through encode -> delete -> re-encode -> decode and
    tally the outcomes.  Exhaustive trials sweep every codeword against
    every deletion pattern of the budgeted size; random trials draw a
    pattern size uniformly on {0..t} and then a uniform position subset,
    deterministically from the seed."""
    if not codebook.words:
        raise ParameterError("empty codebook")
    t = config.max_deletions
    if t > codebook.r - 1:
        raise ParameterError(
            f"budget t={t} exceeds the correctable contract r-1={codebook.r - 1}"
        )
    report = SimulationReport(
        trials=0,
        successes=0,
        failures=0,
        branch_counts={},
        params={
            "n": codebook.n,
            "N": codebook.N,
            "r": codebook.r,
            "d": codebook.d,
            "codewords": codebook.size,
            "t": t,
            "model": config.model,
            "seed": config.seed,
        },
    )
    for word_index, pattern in _trials(codebook, config):
        _run_one(codebook, word_index, pattern, report)
    return report


def _trials(codebook, config):
    N = codebook.N
    if config.model == "exhaustive":
        for wi in range(codebook.size):
            for pattern in combinations(range(N), config.max_deletions):
                yield wi, pattern
    else:
        for trial in range(config.trials):
            rng = random.Random((config.seed * 0x9E3779B1 + trial) & 0xFFFFFFFFFFFF)
            wi = rng.randrange(codebook.size)
            size = rng.randint(0, config.max_deletions)
            pattern = tuple(sorted(rng.sample(range(N), size)))
            yield wi, pattern


def _run_one(codebook, word_index, pattern, report):
    sent = codebook.words[word_index]
    word = phi_inverse(sent)
    received_word = apply_deletions(word, pattern)
    report.trials += 1
    try:
        received = phi(received_word)
    except HypothesisViolation:
        _fail(report, sent, pattern, None, None, "run structure destroyed")
        return
    if received.n != codebook.n:
        _fail(report, sent, pattern, received.runs, None, "run count changed")
        return
    trace = decode(received.runs, codebook.N)
    report.branch_counts[trace.branch] = report.branch_counts.get(trace.branch, 0) + 1
    if trace.ok and trace.output == sent:
        report.successes += 1
    else:
        reason = trace.failure or "decoded to a different codeword"
        _fail(report, sent, pattern, received.runs, trace.output, reason)


def _fail(report, sent, pattern, received_runs, decoded, reason):
    report.failures += 1
    if len(report.failure_examples) < 5:
        report.failure_examples.append(
            {
                "sent": list(sent),
                "deleted_positions": list(pattern),
                "received_runs": list(received_runs) if received_runs else None,
                "decoded": list(decoded) if decoded else None,
                "reason": reason,
            }
        )
