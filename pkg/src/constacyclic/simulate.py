"""Monte-Carlo error injection.

Each trial draws a random message, encodes it, adds an error of the requested
weight (support uniform without replacement, values uniform over the nonzero
elements of GF(q)) and decodes.  Every trial owns a ``random.Random`` seeded
with the string ``"{seed}:{weight}:{trial}"``, so results do not depend on the
order or grouping in which trials run.
"""
from __future__ import annotations

import csv
import io
import random
from dataclasses import dataclass, field
from typing import Sequence

from .code import CodeSpec, systematic_encode
from .decoder import DEFAULT_BUDGET, decode
from .ring import ArrayMN

CSV_HEADER = ("weight", "trials", "corrected", "miscorrected", "failures", "mean_solve_ops")


@dataclass(frozen=True)
class SimConfig:
    trials: int
    weights: Sequence[int]
    seed: int = 0
    method: str = "auto"
    budget: int = DEFAULT_BUDGET

    def validate(self, code: CodeSpec) -> None:
        if self.trials < 1:
            raise ValueError("trials must be at least 1")
        area = code.m * code.n
        bad = [w for w in self.weights if not 0 <= w <= area]
        if bad:
            raise ValueError(f"weights {bad} outside 0..{area}")


@dataclass
class WeightResult:
    weight: int
    trials: int = 0
    corrected: int = 0
    miscorrected: int = 0
    failures: int = 0
    solve_ops: list[int] = field(default_factory=list)

    @property
    def mean_solve_ops(self) -> float:
        return sum(self.solve_ops) / len(self.solve_ops) if self.solve_ops else 0.0

    def row(self) -> tuple:
        return (self.weight, self.trials, self.corrected, self.miscorrected, self.failures,
                f"{self.mean_solve_ops:.2f}")


def trial_rng(seed: int, weight: int, trial: int) -> random.Random:
    return random.Random(f"{seed}:{weight}:{trial}")


def random_error(code: CodeSpec, weight: int, rng: random.Random) -> ArrayMN:
    cells = [(i, j) for i in range(code.m) for j in range(code.n)]
    support = rng.sample(cells, weight)
    return ArrayMN.from_dict(
        code.field, code.m, code.n, {pos: rng.randrange(1, code.q) for pos in support}
    )


def make_trial(code: CodeSpec, weight: int, rng: random.Random) -> tuple[ArrayMN, ArrayMN]:
    """A random codeword and a random error of the given weight."""
    msg = [rng.randrange(code.q) for _ in range(code.dimension)]
    return systematic_encode(code, msg), random_error(code, weight, rng)


def run_weight(code: CodeSpec, config: SimConfig, weight: int) -> WeightResult:
    res = WeightResult(weight)
    for trial in range(config.trials):
        c, e = make_trial(code, weight, trial_rng(config.seed, weight, trial))
        out = decode(code, c + e, config.method, config.budget)
        res.trials += 1
        res.solve_ops.append(out.solve_ops)
        if not out.ok:
            res.failures += 1
        elif out.codeword == c:
            res.corrected += 1
        else:
            res.miscorrected += 1
    return res


def simulate(code: CodeSpec, config: SimConfig) -> list[WeightResult]:
    config.validate(code)
    return [run_weight(code, config, w) for w in config.weights]


def to_csv(results: Sequence[WeightResult]) -> str:
    buf = io.StringIO()
    writer = csv.writer(buf, lineterminator="\n")
    writer.writerow(CSV_HEADER)
    for res in results:
        writer.writerow(res.row())
    return buf.getvalue()
