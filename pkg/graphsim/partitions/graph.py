"""
Simple undirected graphs with a fixed edge ordering
The edge ordering is the index space of every edge classification.
"""

from dataclasses import dataclass
from functools import cached_property
from typing import Iterable, List, Sequence, Tuple, Union

import numpy as np

from .exceptions import GraphError

EdgePairs = Union[np.ndarray, Iterable[Sequence[int]]]


def _frozen(array: np.ndarray) -> np.ndarray:
    array.setflags(write=False)
    return array


@dataclass(frozen=True, eq=False)
class Graph:
    """Simple undirected graph; ``edges`` is an (m, 2) array of pairs u < v
    in lexicographic order"""
    n: int
    edges: np.ndarray

    @property
    def m(self) -> int:
        return int(self.edges.shape[0])

    @cached_property
    def _csr(self) -> Tuple[np.ndarray, np.ndarray, np.ndarray]:
        # each edge appears twice, once from each endpoint
        sources = np.concatenate((self.edges[:, 0], self.edges[:, 1]))
        targets = np.concatenate((self.edges[:, 1], self.edges[:, 0]))
        edge_ids = np.concatenate((np.arange(self.m), np.arange(self.m)))
        order = np.lexsort((targets, sources))
        indptr = np.zeros(self.n + 1, dtype=np.int64)
        np.cumsum(np.bincount(sources, minlength=self.n), out=indptr[1:])
        return _frozen(indptr), _frozen(targets[order]), _frozen(edge_ids[order])

    @property
    def indptr(self) -> np.ndarray:
        return self._csr[0]

    @property
    def adjacent(self) -> np.ndarray:
        """Concatenated neighbor lists, sliced per vertex by ``indptr``"""
        return self._csr[1]

    @property
    def incident_edges(self) -> np.ndarray:
        """Edge index of each entry of ``adjacent``"""
        return self._csr[2]

    def neighbors(self, vertex: int) -> List[int]:
        start, stop = self.indptr[vertex], self.indptr[vertex + 1]
        return self.adjacent[start:stop].tolist()

    def degree(self, vertex: int) -> int:
        return int(self.indptr[vertex + 1] - self.indptr[vertex])

    @cached_property
    def adjacency(self) -> Tuple[Tuple[int, ...], ...]:
        """Per-vertex neighbor lists derived from the edges"""
        return tuple(tuple(self.neighbors(v)) for v in range(self.n))

    def edge_index(self, u: int, v: int) -> int:
        """Position of edge {u, v} in the edge ordering"""
        u, v = min(u, v), max(u, v)
        keys = self.edges[:, 0] * max(self.n, 1) + self.edges[:, 1]
        position = int(np.searchsorted(keys, u * max(self.n, 1) + v))
        if position >= self.m or keys[position] != u * max(self.n, 1) + v:
            raise GraphError(f"({u}, {v}) is not an edge")
        return position

    def edge_list(self) -> List[Tuple[int, int]]:
        return [(int(u), int(v)) for u, v in self.edges]

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, Graph):
            return NotImplemented
        return self.n == other.n and np.array_equal(self.edges, other.edges)

    def __repr__(self) -> str:
        return f"Graph(n={self.n}, m={self.m})"


def build_graph(n: int, edge_pairs: EdgePairs) -> Graph:
    """Normalize pairs to u < v, reject invalid ones and fix the lexicographic
    edge ordering"""
    if n < 0:
        raise GraphError(f"vertex count must be non-negative, got {n}")

    pairs = np.asarray(
        edge_pairs if isinstance(edge_pairs, np.ndarray) else list(edge_pairs),
        dtype=np.int64,
    ).reshape(-1, 2)

    out_of_range = np.flatnonzero(((pairs < 0) | (pairs >= n)).any(axis=1))
    if out_of_range.size:
        u, v = pairs[out_of_range[0]]
        raise GraphError(f"edge ({u}, {v}) has an endpoint outside [0, {n})")

    loops = np.flatnonzero(pairs[:, 0] == pairs[:, 1])
    if loops.size:
        raise GraphError(f"self-loop at vertex {pairs[loops[0], 0]}")

    low = np.minimum(pairs[:, 0], pairs[:, 1])
    high = np.maximum(pairs[:, 0], pairs[:, 1])
    keys = low * n + high
    order = np.argsort(keys, kind="stable")
    sorted_keys = keys[order]

    duplicates = np.flatnonzero(sorted_keys[1:] == sorted_keys[:-1])
    if duplicates.size:
        first = order[duplicates[0] + 1]
        raise GraphError(f"duplicate edge ({low[first]}, {high[first]})")

    edges = np.column_stack((low[order], high[order])).astype(np.int64)
    return Graph(n=int(n), edges=_frozen(edges))
