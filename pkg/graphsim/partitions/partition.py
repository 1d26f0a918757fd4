"""
Vertex partitions with canonical part identifiers
"""

from dataclasses import dataclass
from typing import Hashable, Iterable, List, Sequence

import numpy as np

from .exceptions import PartitionError, check_length


def _canonical_labels(raw: np.ndarray) -> np.ndarray:
    """Relabel parts 0..k-1 in order of first appearance"""
    if raw.size == 0:
        return np.zeros(0, dtype=np.int64)
    _, first, inverse = np.unique(raw, return_index=True, return_inverse=True)
    rank = np.empty(first.size, dtype=np.int64)
    rank[np.argsort(first, kind="stable")] = np.arange(first.size)
    return rank[inverse.reshape(-1)]


@dataclass(frozen=True, eq=False)
class Partition:
    """One part identifier per vertex, canonicalized so that equal set
    partitions have equal label sequences"""
    labels: np.ndarray

    @classmethod
    def from_labels(cls, labels: Iterable[Hashable]) -> "Partition":
        values = labels if isinstance(labels, np.ndarray) else list(labels)
        raw = np.asarray(values)
        if raw.ndim != 1:
            raise PartitionError("partition labels must be one-dimensional")
        canonical = _canonical_labels(raw)
        canonical.setflags(write=False)
        return cls(labels=canonical)

    @classmethod
    def from_parts(cls, parts: Iterable[Iterable[int]], n: int = None) -> "Partition":
        """Build from explicit vertex sets, e.g. [[0, 1], [2, 3]]"""
        parts = [list(part) for part in parts]
        size = n if n is not None else sum(len(part) for part in parts)
        labels = np.full(size, -1, dtype=np.int64)
        for part_id, part in enumerate(parts):
            for vertex in part:
                if not 0 <= vertex < size:
                    raise PartitionError(f"vertex {vertex} outside [0, {size})")
                if labels[vertex] != -1:
                    raise PartitionError(f"vertex {vertex} appears in two parts")
                labels[vertex] = part_id
        missing = np.flatnonzero(labels == -1)
        if missing.size:
            raise PartitionError(f"vertex {missing[0]} is in no part")
        return cls.from_labels(labels)

    @classmethod
    def singletons(cls, n: int) -> "Partition":
        return cls.from_labels(np.arange(n))

    @classmethod
    def whole(cls, n: int) -> "Partition":
        return cls.from_labels(np.zeros(n, dtype=np.int64))

    @property
    def n(self) -> int:
        return int(self.labels.size)

    @property
    def k(self) -> int:
        return int(self.labels.max()) + 1 if self.labels.size else 0

    def sizes(self) -> np.ndarray:
        return np.bincount(self.labels, minlength=self.k)

    def parts(self) -> List[List[int]]:
        members: List[List[int]] = [[] for _ in range(self.k)]
        for vertex, part in enumerate(self.labels.tolist()):
            members[part].append(vertex)
        return members

    def __len__(self) -> int:
        return self.n

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, Partition):
            return NotImplemented
        return np.array_equal(self.labels, other.labels)

    def __hash__(self) -> int:
        return hash(self.labels.tobytes())

    def __repr__(self) -> str:
        return f"Partition(n={self.n}, k={self.k})"


def pairs_within(sizes: Sequence[int]) -> int:
    """Number of unordered pairs inside parts of the given sizes"""
    counts = np.asarray(sizes, dtype=np.int64)
    return int((counts * (counts - 1) // 2).sum())


def intra_pair_count(a: Partition) -> int:
    """|P_A|: unordered vertex pairs sharing a part"""
    return pairs_within(a.sizes())


def inter_pair_count(a: Partition) -> int:
    """Complement of |P_A| among all C(n, 2) pairs"""
    return a.n * (a.n - 1) // 2 - intra_pair_count(a)


def is_refinement(b_part: Partition, a_part: Partition) -> bool:
    """True iff every part of B lies inside a single part of A (B <= A)"""
    check_length(a_part.n, b_part.n, "refining partition")
    if b_part.n == 0:
        return True
    # every B part must map to exactly one A label
    owner = np.full(b_part.k, -1, dtype=np.int64)
    owner[b_part.labels] = a_part.labels
    return bool(np.array_equal(owner[b_part.labels], a_part.labels))
