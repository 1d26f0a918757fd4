"""
Graph-aware clustering comparison measures
Binary classification measures applied to the edge classifications of two
partitions, their expectations under the fix-intra-edges null model and the
adjusted family built from them.
"""

from dataclasses import dataclass
from fractions import Fraction
from typing import Callable, Union

import numpy as np

from partitions.classification import EdgeClassification, class_representative, edge_classification
from partitions.exceptions import check_length
from partitions.graph import Graph
from partitions.partition import Partition

from .exceptions import DegenerateMeasureError
from .means import MeanKind, adjusted_pair_count, adjusted_similarity


@dataclass(frozen=True)
class EdgeCounts:
    """a_ij = number of edges where b_A takes value i and b_B takes value j"""
    a11: int
    a10: int
    a01: int
    a00: int

    @property
    def m(self) -> int:
        return self.a11 + self.a10 + self.a01 + self.a00

    @property
    def norm_a(self) -> int:
        """|b_A|"""
        return self.a11 + self.a10

    @property
    def norm_b(self) -> int:
        """|b_B|"""
        return self.a11 + self.a01


def edge_counts_from_bits(b1: EdgeClassification, b2: EdgeClassification) -> EdgeCounts:
    check_length(len(b1), len(b2), "second edge classification")
    x, y = b1.bits, b2.bits
    return EdgeCounts(
        a11=int(np.count_nonzero(x & y)),
        a10=int(np.count_nonzero(x & ~y)),
        a01=int(np.count_nonzero(~x & y)),
        a00=int(np.count_nonzero(~x & ~y)),
    )


def edge_counts(g: Graph, a: Partition, b: Partition) -> EdgeCounts:
    return edge_counts_from_bits(edge_classification(g, a), edge_classification(g, b))


def _require_edges(counts: EdgeCounts, measure: str) -> None:
    if counts.m == 0:
        raise DegenerateMeasureError(measure, "the graph has no edges")


# Count-based forms, shared by the partition and classification entry points

def rand_index_from_counts(counts: EdgeCounts) -> float:
    _require_edges(counts, "RI(G)")
    return float(Fraction(counts.a11 + counts.a00, counts.m))


def pc_from_counts(counts: EdgeCounts, kind: MeanKind) -> float:
    name = f"PC_{kind.value}(G)"
    _require_edges(counts, name)
    denominator = kind.of(counts.norm_a, counts.norm_b)
    if denominator == 0:
        raise DegenerateMeasureError(name, "no class-one edge in one or both classifications")
    return float(counts.a11 / denominator)


def apc_from_counts(counts: EdgeCounts, kind: MeanKind, measure: str = None) -> float:
    name = measure or f"APC_{kind.value}(G)"
    _require_edges(counts, name)
    try:
        return adjusted_pair_count(counts.a11, counts.norm_a, counts.norm_b, counts.m, kind)
    except ZeroDivisionError:
        raise DegenerateMeasureError(name, "mean class-one count equals its expectation") from None


def graph_rand_index(g: Graph, a: Partition, b: Partition) -> float:
    """RI(·;G): accuracy of b_B against b_A"""
    return rand_index_from_counts(edge_counts(g, a, b))


def graph_pc(g: Graph, a: Partition, b: Partition, f: Union[MeanKind, str]) -> float:
    """PC_f(·;G) = a11 / f(|b_A|, |b_B|)"""
    return pc_from_counts(edge_counts(g, a, b), MeanKind.parse(f))


def _expected_graph_ri_exact(nb_a: int, nb_b: int, m: int) -> Fraction:
    return 1 - Fraction(nb_a + nb_b, m) + Fraction(2 * nb_a * nb_b, m * m)


def expected_graph_ri(nb_a: int, nb_b: int, m: int) -> float:
    """E[RI(·;G)] with |b_A| and |b_B| fixed"""
    if m < 1:
        raise DegenerateMeasureError("E[RI(G)]", "the graph has no edges")
    return float(_expected_graph_ri_exact(nb_a, nb_b, m))


def expected_graph_pc(nb_a: int, nb_b: int, m: int, f: Union[MeanKind, str]) -> float:
    """E[PC_f(·;G)] = |b_A||b_B| / (|E| f(|b_A|, |b_B|))"""
    kind = MeanKind.parse(f)
    name = f"E[PC_{kind.value}(G)]"
    if m < 1:
        raise DegenerateMeasureError(name, "the graph has no edges")
    mean = kind.of(nb_a, nb_b)
    if mean == 0:
        raise DegenerateMeasureError(name, "no class-one edge in one or both classifications")
    return float(Fraction(nb_a * nb_b, m) / mean)


def adjusted_graph_pc(g: Graph, a: Partition, b: Partition, f: Union[MeanKind, str]) -> float:
    """APC_f(·;G)"""
    return apc_from_counts(edge_counts(g, a, b), MeanKind.parse(f))


def adjusted_graph_rand_index(g: Graph, a: Partition, b: Partition) -> float:
    """ARI(·;G), which coincides with APC_mn(·;G)"""
    return apc_from_counts(edge_counts(g, a, b), MeanKind.ARITHMETIC, measure="ARI(G)")


def adjusted_graph_rand_index_via_accuracy(g: Graph, a: Partition, b: Partition) -> float:
    """ARI(·;G) obtained by adjusting RI(·;G) with its fix-intra-edges expectation"""
    counts = edge_counts(g, a, b)
    _require_edges(counts, "ARI(G)")
    index = Fraction(counts.a11 + counts.a00, counts.m)
    expected = _expected_graph_ri_exact(counts.norm_a, counts.norm_b, counts.m)
    try:
        return adjusted_similarity(index, expected)
    except ZeroDivisionError:
        raise DegenerateMeasureError("ARI(G)", "expected accuracy equals one") from None


def classification_similarity(
    g: Graph,
    b1: EdgeClassification,
    b2: EdgeClassification,
    measure: Callable[[EdgeCounts], float],
) -> float:
    """S_G(b1, b2): a count-based measure evaluated on the class
    representatives, so equivalent classifications score identically"""
    return measure(edge_counts_from_bits(class_representative(g, b1), class_representative(g, b2)))
