"""
Random connected partitions of a graph
Process 1 cuts a random depth-first spanning tree into k pieces; Process 2
picks k random class-one edges and takes the partition they induce.
"""

import logging
from typing import Iterator, Tuple

import numpy as np

from partitions.classification import EdgeClassification, class_representative, induced_partition
from partitions.exceptions import GraphError, PartitionError
from partitions.graph import Graph
from partitions.partition import Partition

from .seeds import SeedLike, as_rng

logger = logging.getLogger(__name__)


def _shuffled_incidence(g: Graph, vertex: int, rng: np.random.Generator) -> Iterator[Tuple[int, int]]:
    start, stop = g.indptr[vertex], g.indptr[vertex + 1]
    order = rng.permutation(stop - start)
    return zip(g.adjacent[start:stop][order].tolist(), g.incident_edges[start:stop][order].tolist())


def dfs_spanning_tree(g: Graph, seed: SeedLike) -> np.ndarray:
    """Sorted edge indices of a DFS tree from a uniform random root, visiting
    neighbors in a uniformly shuffled order"""
    rng = as_rng(seed)
    if g.n == 0:
        return np.zeros(0, dtype=np.int64)
    root = int(rng.integers(g.n))
    visited = np.zeros(g.n, dtype=bool)
    visited[root] = True
    tree = []
    stack = [_shuffled_incidence(g, root, rng)]
    while stack:
        for neighbor, edge in stack[-1]:
            if not visited[neighbor]:
                visited[neighbor] = True
                tree.append(edge)
                stack.append(_shuffled_incidence(g, neighbor, rng))
                break
        else:
            stack.pop()
    if len(tree) != g.n - 1:
        raise GraphError(f"graph is disconnected: a spanning tree needs {g.n - 1} edges, found {len(tree)}")
    return np.sort(np.asarray(tree, dtype=np.int64))


def _bits(m: int, chosen: np.ndarray) -> EdgeClassification:
    bits = np.zeros(m, dtype=bool)
    bits[chosen] = True
    return EdgeClassification.from_bits(bits)


def random_partition_process1(g: Graph, k: int, seed: SeedLike) -> Partition:
    """Exactly k connected parts: delete k-1 distinct tree edges"""
    if not 1 <= k <= g.n:
        raise PartitionError(f"part count {k} outside [1, {g.n}]")
    rng = as_rng(seed)
    tree = dfs_spanning_tree(g, rng)
    dropped = rng.choice(tree.size, size=k - 1, replace=False) if k > 1 else np.zeros(0, dtype=np.int64)
    kept = np.delete(tree, dropped)
    logger.debug("process 1: n=%d m=%d k=%d", g.n, g.m, k)
    return induced_partition(g, _bits(g.m, kept))


def random_classification(g: Graph, k: int, seed: SeedLike) -> EdgeClassification:
    """Uniform edge classification with exactly k class-one edges"""
    if not 0 <= k <= g.m:
        raise PartitionError(f"class-one edge count {k} outside [0, {g.m}]")
    rng = as_rng(seed)
    chosen = rng.choice(g.m, size=k, replace=False) if k else np.zeros(0, dtype=np.int64)
    return _bits(g.m, chosen)


def random_partition_process2(g: Graph, k: int, seed: SeedLike) -> Partition:
    """Partition induced by the representative of a uniform k-edge classification"""
    b = random_classification(g, k, seed)
    logger.debug("process 2: n=%d m=%d k=%d", g.n, g.m, k)
    return induced_partition(g, class_representative(g, b))
