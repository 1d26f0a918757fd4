"""
Union-find over vertices, used as the connected-components engine
"""

from typing import List

import numpy as np


class DisjointSet:
    """Path compression plus union by size"""

    def __init__(self, size: int):
        self.parents: List[int] = list(range(size))
        self.sizes: List[int] = [1] * size
        self.num_components = size

    def find(self, element: int) -> int:
        parents = self.parents
        root = element
        while root != parents[root]:
            root = parents[root]
        # point the whole path at the root
        while element != root:
            parents[element], element = root, parents[element]
        return root

    def union(self, a: int, b: int) -> bool:
        """Merge the sets of a and b; False when they were already joined"""
        root_a, root_b = self.find(a), self.find(b)
        if root_a == root_b:
            return False
        if self.sizes[root_a] < self.sizes[root_b]:
            root_a, root_b = root_b, root_a
        self.parents[root_b] = root_a
        self.sizes[root_a] += self.sizes[root_b]
        self.num_components -= 1
        return True

    def component_roots(self) -> np.ndarray:
        """Root of every element, fully compressed"""
        roots = np.asarray(self.parents, dtype=np.int64)
        following = roots[roots]
        while not np.array_equal(roots, following):
            roots = following
            following = roots[roots]
        return roots
