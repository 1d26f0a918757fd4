"""
Binary edge classifications, the partitions they induce and their class
representatives
"""

from dataclasses import dataclass
from typing import Iterable, Tuple, Union

import numpy as np

from .disjoint_set import DisjointSet
from .exceptions import PartitionError, check_length
from .graph import Graph
from .partition import Partition


@dataclass(frozen=True, eq=False)
class EdgeClassification:
    """One bit per edge of the owning graph, in its edge ordering"""
    bits: np.ndarray

    @classmethod
    def from_bits(cls, bits: Union[np.ndarray, Iterable[int], str]) -> "EdgeClassification":
        if isinstance(bits, str):
            if set(bits) - {"0", "1"}:
                raise PartitionError(f"classification string may only hold 0 and 1, got {bits!r}")
            bits = [character == "1" for character in bits]
        array = np.asarray(bits if isinstance(bits, np.ndarray) else list(bits)).astype(bool)
        if array.ndim != 1:
            raise PartitionError("edge classification must be one-dimensional")
        array.setflags(write=False)
        return cls(bits=array)

    @classmethod
    def from_edges(cls, g: Graph, class_one: Iterable[Tuple[int, int]]) -> "EdgeClassification":
        """Class one exactly on the listed edges of g"""
        bits = np.zeros(g.m, dtype=bool)
        for u, v in class_one:
            bits[g.edge_index(u, v)] = True
        return cls.from_bits(bits)

    @property
    def norm(self) -> int:
        """|b|, the number of class-one edges"""
        return int(np.count_nonzero(self.bits))

    def __len__(self) -> int:
        return int(self.bits.size)

    def __le__(self, other: "EdgeClassification") -> bool:
        check_length(len(self), len(other), "edge classification")
        return bool(np.all(~self.bits | other.bits))

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, EdgeClassification):
            return NotImplemented
        return np.array_equal(self.bits, other.bits)

    def __hash__(self) -> int:
        return hash(self.bits.tobytes())

    def __str__(self) -> str:
        return "".join("1" if bit else "0" for bit in self.bits.tolist())


def edge_classification(g: Graph, a: Partition) -> EdgeClassification:
    """b_A: 1 on edges whose endpoints share a part of A (A need not be
    connected on g)"""
    check_length(g.n, a.n, "partition")
    bits = a.labels[g.edges[:, 0]] == a.labels[g.edges[:, 1]]
    bits.setflags(write=False)
    return EdgeClassification(bits=bits)


def induced_partition(g: Graph, b: EdgeClassification) -> Partition:
    """Connected components of (V, b^-1(1)); isolated vertices are singletons"""
    check_length(g.m, len(b), "edge classification")
    components = DisjointSet(g.n)
    for u, v in g.edges[b.bits].tolist():
        components.union(u, v)
    return Partition.from_labels(components.component_roots())


def class_representative(g: Graph, b: EdgeClassification) -> EdgeClassification:
    """The elementwise-max member of b's equivalence class: every edge inside
    a component of the induced subgraph becomes class one"""
    return edge_classification(g, induced_partition(g, b))


def connected_components(g: Graph) -> Partition:
    return induced_partition(g, EdgeClassification.from_bits(np.ones(g.m, dtype=bool)))


def is_connected(g: Graph) -> bool:
    return g.n <= 1 or connected_components(g).k == 1


def is_connected_partition(g: Graph, a: Partition) -> bool:
    """True iff every part of A induces a connected subgraph of g"""
    check_length(g.n, a.n, "partition")
    # components of the intra-part edges can only split parts
    return induced_partition(g, edge_classification(g, a)).k == a.k
