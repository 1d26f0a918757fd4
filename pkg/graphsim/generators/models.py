"""
Random graph models
Planted partition graphs with exact intra/inter edge counts, Erdős–Rényi
G(n, m) graphs, uniform random labelled trees and complete graphs.
"""

import heapq
import logging
import math
from dataclasses import dataclass
from itertools import combinations
from typing import List, Sequence

import numpy as np

from partitions.exceptions import GraphError, PartitionError
from partitions.graph import Graph, build_graph
from partitions.partition import Partition, inter_pair_count, intra_pair_count

from .seeds import SeedLike, as_rng

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class PlantedSpec:
    """Place k1 edges among intra-part pairs and k2 among inter-part pairs
    of ground_truth"""
    ground_truth: Partition
    k1: int
    k2: int

    def __post_init__(self):
        if self.k1 < 0 or self.k2 < 0:
            raise PartitionError("edge counts must be non-negative")
        if self.k1 > self.intra_pairs:
            raise PartitionError(f"k1 = {self.k1} exceeds |P_A| = {self.intra_pairs}")
        if self.k2 > self.inter_pairs:
            raise PartitionError(f"k2 = {self.k2} exceeds |P̄_A| = {self.inter_pairs}")

    @property
    def intra_pairs(self) -> int:
        return intra_pair_count(self.ground_truth)

    @property
    def inter_pairs(self) -> int:
        return inter_pair_count(self.ground_truth)

    @property
    def p(self) -> float:
        return self.k1 / self.intra_pairs if self.intra_pairs else 0.0

    @property
    def q(self) -> float:
        return self.k2 / self.inter_pairs if self.inter_pairs else 0.0

    @classmethod
    def from_densities(cls, ground_truth: Partition, p: float, q: float) -> "PlantedSpec":
        """k1 = round(p |P_A|), k2 = round(q |P̄_A|), halves rounded up"""
        for name, value in (("p", p), ("q", q)):
            if not 0.0 <= value <= 1.0:
                raise ValueError(f"{name} must lie in [0, 1], got {value}")
        k1 = math.floor(p * intra_pair_count(ground_truth) + 0.5)
        k2 = math.floor(q * inter_pair_count(ground_truth) + 0.5)
        return cls(ground_truth=ground_truth, k1=k1, k2=k2)


def _unrank_pairs(ranks: np.ndarray) -> np.ndarray:
    """Rank r of pair (x, y), x < y, in the order r = y(y-1)/2 + x"""
    ranks = ranks.astype(np.int64)
    y = np.floor((1 + np.sqrt(1 + 8 * ranks.astype(np.float64))) / 2).astype(np.int64)
    # float rounding can put y off by one either way
    y = np.where(y * (y - 1) // 2 > ranks, y - 1, y)
    y = np.where((y + 1) * y // 2 <= ranks, y + 1, y)
    x = ranks - y * (y - 1) // 2
    return np.column_stack((x, y))


def _members_by_part(a: Partition):
    order = np.argsort(a.labels, kind="stable")
    offsets = np.zeros(a.k + 1, dtype=np.int64)
    np.cumsum(a.sizes(), out=offsets[1:])
    return order, offsets


def _intra_pairs(a: Partition, ranks: np.ndarray) -> np.ndarray:
    members, offsets = _members_by_part(a)
    sizes = np.diff(offsets)
    block_ends = np.cumsum(sizes * (sizes - 1) // 2)
    parts = np.searchsorted(block_ends, ranks, side="right")
    local = ranks - (block_ends[parts] - sizes[parts] * (sizes[parts] - 1) // 2)
    pairs = _unrank_pairs(local)
    return members[offsets[parts][:, None] + pairs]


def _inter_pairs(a: Partition, ranks: np.ndarray) -> np.ndarray:
    members, offsets = _members_by_part(a)
    sizes = np.diff(offsets)
    first, second = np.triu_indices(a.k, 1)
    block_ends = np.cumsum(sizes[first] * sizes[second])
    blocks = np.searchsorted(block_ends, ranks, side="right")
    local = ranks - (block_ends[blocks] - sizes[first[blocks]] * sizes[second[blocks]])
    left, right = first[blocks], second[blocks]
    return np.column_stack((
        members[offsets[left] + local // sizes[right]],
        members[offsets[right] + local % sizes[right]],
    ))


def planted_partition_graph(spec: PlantedSpec, seed: SeedLike) -> Graph:
    """Exactly k1 intra-part and k2 inter-part edges, each set uniform
    without replacement over its implicit pair index space"""
    rng = as_rng(seed)
    truth = spec.ground_truth
    intra = rng.choice(spec.intra_pairs, size=spec.k1, replace=False) if spec.k1 else np.zeros(0, np.int64)
    inter = rng.choice(spec.inter_pairs, size=spec.k2, replace=False) if spec.k2 else np.zeros(0, np.int64)
    pairs = np.concatenate((
        _intra_pairs(truth, np.asarray(intra, dtype=np.int64)).reshape(-1, 2),
        _inter_pairs(truth, np.asarray(inter, dtype=np.int64)).reshape(-1, 2),
    ))
    logger.debug("planted graph n=%d k=%d k1=%d k2=%d", truth.n, truth.k, spec.k1, spec.k2)
    return build_graph(truth.n, pairs)


def erdos_renyi_graph(n: int, m: int, seed: SeedLike) -> Graph:
    """G(n, m): m distinct pairs chosen uniformly"""
    if n < 0:
        raise GraphError(f"vertex count must be non-negative, got {n}")
    total = n * (n - 1) // 2
    if not 0 <= m <= total:
        raise GraphError(f"edge count {m} outside [0, {total}] for n = {n}")
    rng = as_rng(seed)
    ranks = rng.choice(total, size=m, replace=False) if m else np.zeros(0, np.int64)
    logger.debug("erdos-renyi graph n=%d m=%d", n, m)
    return build_graph(n, _unrank_pairs(np.asarray(ranks, dtype=np.int64)))


def random_tree(n: int, seed: SeedLike) -> Graph:
    """Uniform labelled tree on n vertices from a random Prüfer sequence"""
    if n < 0:
        raise GraphError(f"vertex count must be non-negative, got {n}")
    if n <= 2:
        return build_graph(n, [(0, 1)] if n == 2 else [])
    rng = as_rng(seed)
    sequence = rng.integers(n, size=n - 2).tolist()
    degree = [1] * n
    for vertex in sequence:
        degree[vertex] += 1
    leaves = [vertex for vertex in range(n) if degree[vertex] == 1]
    heapq.heapify(leaves)
    edges = []
    for vertex in sequence:
        leaf = heapq.heappop(leaves)
        edges.append((leaf, vertex))
        degree[vertex] -= 1
        if degree[vertex] == 1:
            heapq.heappush(leaves, vertex)
    edges.append((heapq.heappop(leaves), heapq.heappop(leaves)))
    logger.debug("random tree n=%d", n)
    return build_graph(n, edges)


def complete_graph(n: int) -> Graph:
    return build_graph(n, combinations(range(n), 2))


def balanced_partition(sizes: Sequence[int]) -> Partition:
    """Consecutive vertex blocks with the given part sizes"""
    sizes = [int(size) for size in sizes]
    if any(size < 1 for size in sizes):
        raise PartitionError(f"part sizes must be positive, got {sizes}")
    return Partition.from_labels(np.repeat(np.arange(len(sizes)), sizes))


def even_sizes(n: int, k: int) -> List[int]:
    """k part sizes summing to n that differ by at most one"""
    if not 1 <= k <= n:
        raise PartitionError(f"cannot split {n} vertices into {k} non-empty parts")
    base, extra = divmod(n, k)
    return [base + 1] * extra + [base] * (k - extra)
