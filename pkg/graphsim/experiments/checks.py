"""
Empirical checks of the coarsening/refinement bias of PC_mn(G)

For a ground truth A, a coarsening B1 and a refinement B2 on planted graphs
G_A with densities p and q:
  lemma   (i)  E[PC_mn(A, B1; G)] >= PC_mn(A, B1)  when p >= q
          (ii) E[PC_mn(A, B2; G)] <= PC_mn(A, B2)  for all p, q
  theorem (i)  PC_mn(A, B1) < PC_mn(A, B2)         when |P_A|^2 < |P_B1| |P_B2|
          (ii) E[PC_mn(A, B1; G)] > E[PC_mn(A, B2; G)]
                                                   when p > q x1 / x2
with a = |P_A|, x1 = |P_B1 \\ P_A| and x2 = |P_A \\ P_B2|.
"""

import logging
import math
from dataclasses import dataclass
from fractions import Fraction
from typing import List, Optional

import numpy as np
import pandas as pd

from generators.models import PlantedSpec, planted_partition_graph
from generators.perturb import random_coarsening, random_refinement
from generators.seeds import CONFIG_STREAM, GRAPH_STREAM, Seed
from measures.aware import edge_counts, pc_from_counts
from measures.exceptions import DegenerateMeasureError
from measures.means import MeanKind
from partitions.partition import Partition, intra_pair_count, is_refinement

from .exceptions import HypothesisViolation
from .trials import run_tasks

logger = logging.getLogger(__name__)

CHECK_COLUMNS = [
    "check", "part", "relation", "left", "right", "std", "se",
    "trials", "degenerate", "bound", "margin", "applicable", "passed",
]


@dataclass(frozen=True)
class CheckConfig:
    """Ground truth, its coarsening B1 and refinement B2, and the planted
    graph model they are compared on"""
    a: Partition
    b1: Partition
    b2: Partition
    spec: PlantedSpec

    def __post_init__(self):
        if not is_refinement(self.a, self.b1):
            raise HypothesisViolation("A <= B1", "B1 must be a coarsening of A")
        if not is_refinement(self.b2, self.a):
            raise HypothesisViolation("B2 <= A", "B2 must be a refinement of A")

    @classmethod
    def draw(cls, a: Partition, p: float, q: float, coarse_k: int, fine_k: int, seed: Seed) -> "CheckConfig":
        """Random B1 with coarse_k parts and B2 with fine_k parts, drawn once"""
        b1 = random_coarsening(a, coarse_k, seed.rng(CONFIG_STREAM, 0))
        b2 = random_refinement(a, fine_k, seed.rng(CONFIG_STREAM, 1))
        return cls(a=a, b1=b1, b2=b2, spec=PlantedSpec.from_densities(a, p, q))

    @property
    def pairs_a(self) -> int:
        return intra_pair_count(self.a)

    @property
    def pairs_b1(self) -> int:
        return intra_pair_count(self.b1)

    @property
    def pairs_b2(self) -> int:
        return intra_pair_count(self.b2)

    @property
    def x1(self) -> int:
        """|P_B1 \\ P_A|"""
        return self.pairs_b1 - self.pairs_a

    @property
    def x2(self) -> int:
        """|P_A \\ P_B2|"""
        return self.pairs_a - self.pairs_b2

    @property
    def p(self) -> float:
        return self.spec.p

    @property
    def q(self) -> float:
        return self.spec.q


@dataclass(frozen=True)
class CheckRow:
    """One inequality "left relation right" with its evidence"""
    check: str
    part: str
    relation: str
    left: float
    right: float
    std: float
    se: float
    trials: int
    degenerate: int
    bound: float
    margin: float
    applicable: bool
    passed: Optional[bool]


@dataclass(frozen=True)
class CheckReport:
    config: CheckConfig
    rows: List[CheckRow]

    @property
    def passed(self) -> bool:
        return all(row.passed for row in self.rows if row.applicable)

    def frame(self) -> pd.DataFrame:
        return pd.DataFrame([row.__dict__ for row in self.rows], columns=CHECK_COLUMNS)


def nested_pc_mn(pairs_a: int, pairs_b: int) -> Fraction:
    """PC_mn for nested partitions, where N11 = min(|P_A|, |P_B|)"""
    if pairs_a + pairs_b == 0:
        raise DegenerateMeasureError("PC_mn", "neither partition groups any pair")
    return Fraction(2 * min(pairs_a, pairs_b), pairs_a + pairs_b)


def lower_bound_coarsening(config: CheckConfig) -> float:
    """Z1 = p a / (p a + q x1 / 2), below E[PC_mn(A, B1; G)]"""
    numerator = config.p * config.pairs_a
    denominator = numerator + 0.5 * config.q * config.x1
    return numerator / denominator if denominator > 0 else math.nan


def upper_bound_refinement(config: CheckConfig) -> float:
    """Z2 = (a - x2) / (a - x2 / 2), above E[PC_mn(A, B2; G)]"""
    denominator = config.pairs_a - 0.5 * config.x2
    return (config.pairs_a - config.x2) / denominator if denominator > 0 else math.nan


def _sample(config: CheckConfig, trials: int, seed: Seed, workers: Optional[int]) -> pd.DataFrame:
    """Per-trial PC_mn(A, B1; G) and PC_mn(A, B2; G), NaN where degenerate"""
    if trials < 1:
        raise ValueError(f"trial count must be positive, got {trials}")

    def value(g, b):
        try:
            return pc_from_counts(edge_counts(g, config.a, b), MeanKind.ARITHMETIC)
        except DegenerateMeasureError:
            return math.nan

    def trial(number):
        g = planted_partition_graph(config.spec, seed.rng(GRAPH_STREAM, 0, number))
        return number, value(g, config.b1), value(g, config.b2)

    return pd.DataFrame(run_tasks(trial, range(trials), workers), columns=["trial", "coarse", "fine"])


def _summary(series: pd.Series):
    valid = int(series.count())
    std = float(series.std(ddof=1)) if valid > 1 else (0.0 if valid == 1 else math.nan)
    se = std / math.sqrt(valid) if valid else math.nan
    return float(series.mean()), std, se, int(series.size - valid)


def lemma1_check(
    config: CheckConfig,
    trials: int,
    seed: Seed,
    margin: float = 2.0,
    workers: Optional[int] = None,
) -> CheckReport:
    """Both lemma inequalities, each passing within margin standard errors;
    part (i) is reported as not applicable when p < q"""
    samples = _sample(config, trials, seed, workers)
    rows = []
    for part, column, relation, pairs_b, bound in (
        ("i", "coarse", ">=", config.pairs_b1, lower_bound_coarsening(config)),
        ("ii", "fine", "<=", config.pairs_b2, upper_bound_refinement(config)),
    ):
        mean, std, se, degenerate = _summary(samples[column])
        agnostic = float(nested_pc_mn(config.pairs_a, pairs_b))
        applicable = part == "ii" or config.p >= config.q
        if not applicable:
            passed = None
        elif relation == ">=":
            passed = bool(mean >= agnostic - margin * se)
        else:
            passed = bool(mean <= agnostic + margin * se)
        rows.append(CheckRow(
            check="lemma", part=part, relation=relation, left=mean, right=agnostic,
            std=std, se=se, trials=trials, degenerate=degenerate, bound=bound,
            margin=margin, applicable=applicable, passed=passed,
        ))
        logger.info("lemma (%s): %.6g %s %.6g, se %.3g, passed=%s", part, mean, relation, agnostic, se, passed)
    return CheckReport(config=config, rows=rows)


def check_theorem_hypotheses(config: CheckConfig) -> None:
    a, b1, b2 = config.pairs_a, config.pairs_b1, config.pairs_b2
    if a * a >= b1 * b2:
        raise HypothesisViolation("|P_A|^2 >= |P_B1|*|P_B2|", f"{a}^2 >= {b1}*{b2}")
    if config.x2 == 0:
        raise HypothesisViolation("|P_A \\ P_B2| = 0", "B2 must split at least one intra pair of A")
    if not config.p * config.x2 > config.q * config.x1:
        raise HypothesisViolation(
            "p <= q*|P_B1 \\ P_A|/|P_A \\ P_B2|",
            f"p={config.p:.6g}, q={config.q:.6g}, x1={config.x1}, x2={config.x2}",
        )


def theorem1_part_one(config: CheckConfig) -> bool:
    """PC_mn(A, B1) < PC_mn(A, B2), evaluated exactly"""
    return nested_pc_mn(config.pairs_a, config.pairs_b1) < nested_pc_mn(config.pairs_a, config.pairs_b2)


def theorem1_check(
    config: CheckConfig,
    trials: int,
    seed: Seed,
    margin: float = 3.0,
    workers: Optional[int] = None,
) -> CheckReport:
    """Part (i) exactly, part (ii) as a strict ordering of Monte Carlo means
    separated by more than margin combined standard errors"""
    check_theorem_hypotheses(config)
    left = nested_pc_mn(config.pairs_a, config.pairs_b1)
    right = nested_pc_mn(config.pairs_a, config.pairs_b2)
    rows = [CheckRow(
        check="theorem", part="i", relation="<", left=float(left), right=float(right),
        std=0.0, se=0.0, trials=0, degenerate=0, bound=math.nan, margin=0.0,
        applicable=True, passed=bool(left < right),
    )]

    samples = _sample(config, trials, seed, workers)
    coarse_mean, _, coarse_se, coarse_degenerate = _summary(samples["coarse"])
    fine_mean, _, fine_se, fine_degenerate = _summary(samples["fine"])
    difference = samples["coarse"] - samples["fine"]
    se = math.hypot(coarse_se, fine_se)
    rows.append(CheckRow(
        check="theorem", part="ii", relation=">", left=coarse_mean, right=fine_mean,
        std=float(difference.std(ddof=1)) if difference.count() > 1 else 0.0,
        se=se, trials=trials, degenerate=max(coarse_degenerate, fine_degenerate),
        bound=lower_bound_coarsening(config) - upper_bound_refinement(config),
        margin=margin, applicable=True, passed=bool(coarse_mean - fine_mean > margin * se),
    ))
    for row in rows:
        logger.info("theorem (%s): %.6g %s %.6g, passed=%s", row.part, row.left, row.relation, row.right, row.passed)
    return CheckReport(config=config, rows=rows)


def random_theorem_config(
    rng: np.random.Generator,
    n_range=(8, 40),
    parts_range=(2, 6),
) -> Optional[CheckConfig]:
    """A random (A, B1, B2) with uniform p > q, or None when the draw breaks
    the size condition"""
    n = int(rng.integers(*n_range, endpoint=True))
    k = int(rng.integers(parts_range[0], min(parts_range[1], n // 2), endpoint=True))
    labels = np.concatenate((np.arange(k), rng.integers(k, size=n - k)))
    a = Partition.from_labels(rng.permutation(labels))
    coarse_k = int(rng.integers(1, k))
    fine_k = int(rng.integers(k + 1, n, endpoint=True))
    q, p = sorted(rng.uniform(0.0, 1.0, size=2).tolist())
    b1 = random_coarsening(a, coarse_k, rng)
    b2 = random_refinement(a, fine_k, rng)
    config = CheckConfig(a=a, b1=b1, b2=b2, spec=PlantedSpec.from_densities(a, p, q))
    if config.pairs_a ** 2 >= config.pairs_b1 * config.pairs_b2 or config.x2 == 0:
        return None
    return config
