"""
Similarity curve experiments
Each sweep compares a ground truth with random candidate partitions at a
series of sweep coordinates and averages every selected measure over trials.
Trial t at point i draws from the streams (GRAPH_STREAM, i, t) and
(CANDIDATE_STREAM, i, t) of the master seed.
"""

import logging
import math
from dataclasses import dataclass
from typing import Dict, List, Optional, Sequence, Tuple

from generators.models import PlantedSpec, planted_partition_graph
from generators.perturb import random_coarsening, random_refinement
from generators.processes import random_partition_process1, random_partition_process2
from generators.seeds import CANDIDATE_STREAM, GRAPH_STREAM, Seed
from measures.selectors import Comparison, MeasureSelector
from partitions.exceptions import PartitionError
from partitions.graph import Graph
from partitions.partition import Partition

from .records import CurvePoint, aggregate, curve, trial_records
from .trials import run_tasks

logger = logging.getLogger(__name__)

FINER = "finer:"
COARSER = "coarser:"


def _log_degenerate(name: str, points: List[CurvePoint]) -> None:
    for point in points:
        if point.degenerate:
            logger.warning(
                "%s: %s at x=%g degenerate in %d of %d trials",
                name, point.measure, point.x, point.degenerate, point.trials,
            )


def _tasks(xs: Sequence[float], trials: int) -> List[Tuple[int, float, int]]:
    if trials < 1:
        raise ValueError(f"trial count must be positive, got {trials}")
    return [(index, x, trial) for index, x in enumerate(xs) for trial in range(trials)]


def _baseline_sweep(name, g, ground_truth, ks, trials, measures, seed, workers, process):
    if ground_truth.n != g.n:
        raise PartitionError(f"ground truth has {ground_truth.n} vertices, graph has {g.n}")
    selectors = MeasureSelector.parse_list(measures)

    def trial(task):
        index, k, number = task
        candidate = process(g, int(k), seed.rng(CANDIDATE_STREAM, index, number))
        return trial_records(k, number, Comparison(ground_truth, candidate, g).values(selectors))

    logger.info("%s: %d points x %d trials", name, len(ks), trials)
    results = run_tasks(trial, _tasks(ks, trials), workers)
    points = aggregate(record for records in results for record in records)
    _log_degenerate(name, points)
    return points


def baseline_size_sweep(
    g: Graph,
    ground_truth: Partition,
    ks: Sequence[int],
    trials: int,
    measures: Sequence,
    seed: Seed,
    workers: Optional[int] = None,
) -> List[CurvePoint]:
    """Ground truth against Process-1 partitions with k parts, x = k"""
    return _baseline_sweep(
        "baseline size sweep", g, ground_truth, ks, trials, measures, seed, workers,
        random_partition_process1,
    )


def baseline_internal_edges_sweep(
    g: Graph,
    ground_truth: Partition,
    ks: Sequence[int],
    trials: int,
    measures: Sequence,
    seed: Seed,
    workers: Optional[int] = None,
) -> List[CurvePoint]:
    """Ground truth against Process-2 partitions from k class-one edges, x = k"""
    return _baseline_sweep(
        "baseline internal-edge sweep", g, ground_truth, ks, trials, measures, seed, workers,
        random_partition_process2,
    )


STRUCTURE_CANDIDATES = ("process1", "process2")


def structure_sweep(
    ground_truth: Partition,
    p: float,
    ratios: Sequence[float],
    trials: int,
    measures: Sequence,
    seed: Seed,
    candidates: str = "process1",
    internal_fraction: float = 0.25,
    workers: Optional[int] = None,
) -> List[CurvePoint]:
    """Planted graphs with q = ratio * p, x = q / p. The truth is compared
    with Process-1 partitions into as many parts as the truth has, or with
    Process-2 partitions whose class-one edge count is internal_fraction of
    the graph's edges. Process 1 needs every planted graph to be connected."""
    if candidates not in STRUCTURE_CANDIDATES:
        raise ValueError(f"candidates must be one of {', '.join(STRUCTURE_CANDIDATES)}, got {candidates!r}")
    if not 0.0 <= internal_fraction <= 1.0:
        raise ValueError(f"internal_fraction must lie in [0, 1], got {internal_fraction}")
    selectors = MeasureSelector.parse_list(measures)
    specs = [PlantedSpec.from_densities(ground_truth, p, ratio * p) for ratio in ratios]

    def candidate_of(g, rng):
        if candidates == "process1":
            return random_partition_process1(g, ground_truth.k, rng)
        return random_partition_process2(g, math.floor(internal_fraction * g.m + 0.5), rng)

    def trial(task):
        index, ratio, number = task
        g = planted_partition_graph(specs[index], seed.rng(GRAPH_STREAM, index, number))
        candidate = candidate_of(g, seed.rng(CANDIDATE_STREAM, index, number))
        return trial_records(ratio, number, Comparison(ground_truth, candidate, g).values(selectors))

    logger.info(
        "structure sweep: p=%g, %d ratios x %d trials, %s candidates",
        p, len(ratios), trials, candidates,
    )
    results = run_tasks(trial, _tasks(ratios, trials), workers)
    points = aggregate(record for records in results for record in records)
    _log_degenerate("structure sweep", points)
    return points


@dataclass(frozen=True)
class ResolutionFinding:
    """Preference gaps (finer minus coarser) at one q and whether the two
    families rank the candidates in opposite directions"""
    x: float
    agnostic_measure: str
    agnostic_gap: float
    agnostic_se: float
    aware_measure: str
    aware_gap: float
    aware_se: float
    margin: float

    @property
    def agnostic_prefers_finer(self) -> bool:
        return self.agnostic_gap > self.margin * self.agnostic_se

    @property
    def aware_prefers_coarser(self) -> bool:
        return -self.aware_gap > self.margin * self.aware_se

    @property
    def contradiction(self) -> bool:
        return self.agnostic_prefers_finer and self.aware_prefers_coarser


@dataclass(frozen=True)
class ResolutionReport:
    points: List[CurvePoint]
    findings: List[ResolutionFinding]

    @property
    def contradictions(self) -> List[float]:
        return [finding.x for finding in self.findings if finding.contradiction]


def _gap(points: List[CurvePoint], label: str, x: float) -> Tuple[float, float]:
    finer = next(p for p in points if p.measure == FINER + label and p.x == x)
    coarser = next(p for p in points if p.measure == COARSER + label and p.x == x)
    return finer.mean - coarser.mean, math.hypot(finer.se, coarser.se)


def resolution_findings(
    points: List[CurvePoint],
    agnostic_measure: str = "ARI",
    aware_measure: str = "ARI(G)",
    margin: float = 3.0,
) -> List[ResolutionFinding]:
    findings = []
    for point in curve(points, FINER + agnostic_measure):
        agnostic_gap, agnostic_se = _gap(points, agnostic_measure, point.x)
        aware_gap, aware_se = _gap(points, aware_measure, point.x)
        findings.append(ResolutionFinding(
            x=point.x,
            agnostic_measure=agnostic_measure,
            agnostic_gap=agnostic_gap,
            agnostic_se=agnostic_se,
            aware_measure=aware_measure,
            aware_gap=aware_gap,
            aware_se=aware_se,
            margin=margin,
        ))
    return findings


def resolution_experiment(
    ground_truth: Partition,
    p: float,
    qs: Sequence[float],
    finer_k: int,
    coarser_k: int,
    trials: int,
    measures: Sequence,
    seed: Seed,
    margin: float = 3.0,
    workers: Optional[int] = None,
) -> ResolutionReport:
    """Truth against a random refinement and a random coarsening on planted
    graphs across q; flags q values where an agnostic measure prefers the
    refinement while ARI(G) prefers the coarsening"""
    selectors = MeasureSelector.parse_list(measures)
    if not coarser_k <= ground_truth.k <= finer_k:
        raise PartitionError(
            f"need coarser_k <= {ground_truth.k} <= finer_k, got {coarser_k} and {finer_k}"
        )
    specs = [PlantedSpec.from_densities(ground_truth, p, q) for q in qs]

    def trial(task):
        index, q, number = task
        g = planted_partition_graph(specs[index], seed.rng(GRAPH_STREAM, index, number))
        finer = random_refinement(ground_truth, finer_k, seed.rng(CANDIDATE_STREAM, index, number, 0))
        coarser = random_coarsening(ground_truth, coarser_k, seed.rng(CANDIDATE_STREAM, index, number, 1))
        return (
            trial_records(q, number, Comparison(ground_truth, finer, g).values(selectors), FINER)
            + trial_records(q, number, Comparison(ground_truth, coarser, g).values(selectors), COARSER)
        )

    logger.info("resolution: p=%g, %d q values x %d trials", p, len(qs), trials)
    results = run_tasks(trial, _tasks(qs, trials), workers)
    points = aggregate(record for records in results for record in records)
    _log_degenerate("resolution", points)

    labels = {selector.label for selector in selectors}
    findings: List[ResolutionFinding] = []
    agnostic = next((label for label in ("ARI", "AMI") if label in labels), None)
    if agnostic and "ARI(G)" in labels:
        findings = resolution_findings(points, agnostic, "ARI(G)", margin)
        for finding in findings:
            if finding.contradiction:
                logger.info("resolution: contradicting rankings at q=%g", finding.x)
    return ResolutionReport(points=points, findings=findings)


def ingested_curve(
    instances: Sequence[Tuple[float, Graph, Partition, Partition]],
    measures: Sequence,
) -> List[CurvePoint]:
    """Curves over externally produced (x, graph, truth, candidate) instances;
    instances sharing an x are averaged. K[truth] is the truth part count."""
    selectors = MeasureSelector.parse_list(measures)
    records: List[Dict] = []
    for number, (x, g, truth, candidate) in enumerate(instances):
        values = Comparison(truth, candidate, g).values(selectors)
        values["K[truth]"] = float(truth.k)
        records.extend(trial_records(x, number, values))
    points = aggregate(records)
    _log_degenerate("curve", points)
    return points
