"""
Random coarsenings and refinements of a partition
"""

import logging
import math

import numpy as np

from partitions.exceptions import PartitionError
from partitions.partition import Partition

from .seeds import SeedLike, as_rng

logger = logging.getLogger(__name__)


def random_coarsening(a: Partition, target_k: int, seed: SeedLike) -> Partition:
    """Merge two uniformly chosen parts until target_k remain"""
    if not 1 <= target_k <= a.k:
        raise PartitionError(f"cannot coarsen {a.k} parts into {target_k}")
    rng = as_rng(seed)
    labels = a.labels.copy()
    live = list(range(a.k))
    while len(live) > target_k:
        first, second = rng.choice(len(live), size=2, replace=False)
        keep, absorbed = live[first], live[second]
        labels[labels == absorbed] = keep
        live.pop(second)
    logger.debug("coarsened %d parts to %d", a.k, target_k)
    return Partition.from_labels(labels)


def random_refinement(a: Partition, target_k: int, seed: SeedLike) -> Partition:
    """Split a uniformly chosen part of size >= 2 into a random balanced
    bipartition until target_k parts exist"""
    if not a.k <= target_k <= a.n:
        raise PartitionError(f"cannot refine {a.k} parts into {target_k} with {a.n} vertices")
    rng = as_rng(seed)
    parts = [np.asarray(part, dtype=np.int64) for part in a.parts()]
    while len(parts) < target_k:
        splittable = [index for index, members in enumerate(parts) if members.size >= 2]
        index = splittable[int(rng.integers(len(splittable)))]
        shuffled = rng.permutation(parts[index])
        half = math.ceil(shuffled.size / 2)
        parts[index] = np.sort(shuffled[:half])
        parts.append(np.sort(shuffled[half:]))
    logger.debug("refined %d parts to %d", a.k, target_k)
    return Partition.from_parts([part.tolist() for part in parts], n=a.n)
