"""
Graph-agnostic clustering comparison measures
Pair counting (RI, ARI, PC_f, APC_f) and information theoretic (MI, AMI)
measures computed from the contingency table of two vertex partitions.
"""

from dataclasses import dataclass
from fractions import Fraction
from typing import Union

import numpy as np
from scipy.special import gammaln
from sklearn.metrics.cluster import contingency_matrix, mutual_info_score

from partitions.exceptions import PartitionError, check_length
from partitions.partition import Partition, pairs_within

from .exceptions import DegenerateMeasureError
from .means import MeanKind, adjusted_pair_count

# |max(H) - E[MI]| below this counts as a vanished denominator
AMI_DEGENERACY_TOLERANCE = 1e-12


@dataclass(frozen=True)
class ContingencyTable:
    """counts[i, j] = |A_i ∩ B_j|"""
    counts: np.ndarray

    @property
    def row_sums(self) -> np.ndarray:
        return self.counts.sum(axis=1)

    @property
    def col_sums(self) -> np.ndarray:
        return self.counts.sum(axis=0)

    @property
    def n(self) -> int:
        return int(self.counts.sum())


@dataclass(frozen=True)
class PairCounts:
    n11: int
    n10: int
    n01: int
    n00: int

    @property
    def total(self) -> int:
        return self.n11 + self.n10 + self.n01 + self.n00

    @property
    def pairs_a(self) -> int:
        """|P_A|"""
        return self.n11 + self.n10

    @property
    def pairs_b(self) -> int:
        """|P_B|"""
        return self.n11 + self.n01


def contingency_table(a: Partition, b: Partition) -> ContingencyTable:
    check_length(a.n, b.n, "second partition")
    if a.n == 0:
        return ContingencyTable(counts=np.zeros((0, 0), dtype=np.int64))
    # canonical labels are 0..k-1, so rows and columns are part ids
    counts = contingency_matrix(a.labels, b.labels).astype(np.int64)
    return ContingencyTable(counts=counts)


def pair_counts(t: ContingencyTable) -> PairCounts:
    n11 = pairs_within(t.counts.ravel())
    pairs_a = pairs_within(t.row_sums)
    pairs_b = pairs_within(t.col_sums)
    total = t.n * (t.n - 1) // 2
    return PairCounts(
        n11=n11,
        n10=pairs_a - n11,
        n01=pairs_b - n11,
        n00=total - pairs_a - pairs_b + n11,
    )


def _pairs(a: Partition, b: Partition) -> PairCounts:
    return pair_counts(contingency_table(a, b))


def _require_pairs(counts: PairCounts, measure: str) -> None:
    if counts.total == 0:
        raise DegenerateMeasureError(measure, "fewer than two vertices, no vertex pairs")


def rand_index_from_pairs(counts: PairCounts) -> float:
    _require_pairs(counts, "RI")
    return float(Fraction(counts.n11 + counts.n00, counts.total))


def pc_from_pairs(counts: PairCounts, kind: MeanKind) -> float:
    name = f"PC_{kind.value}"
    _require_pairs(counts, name)
    denominator = kind.of(counts.pairs_a, counts.pairs_b)
    if denominator == 0:
        raise DegenerateMeasureError(name, "neither partition groups any pair")
    return float(counts.n11 / denominator)


def apc_from_pairs(counts: PairCounts, kind: MeanKind, measure: str = None) -> float:
    name = measure or f"APC_{kind.value}"
    _require_pairs(counts, name)
    try:
        return adjusted_pair_count(counts.n11, counts.pairs_a, counts.pairs_b, counts.total, kind)
    except ZeroDivisionError:
        raise DegenerateMeasureError(name, "mean pair count equals its expectation") from None


def rand_index(a: Partition, b: Partition) -> float:
    return rand_index_from_pairs(_pairs(a, b))


def adjusted_rand_index(a: Partition, b: Partition) -> float:
    """Permutation-model ARI; identical to APC_mn"""
    return apc_from_pairs(_pairs(a, b), MeanKind.ARITHMETIC, measure="ARI")


def pc(a: Partition, b: Partition, f: Union[MeanKind, str]) -> float:
    """N11 / f(|P_A|, |P_B|)"""
    return pc_from_pairs(_pairs(a, b), MeanKind.parse(f))


def adjusted_pc(a: Partition, b: Partition, f: Union[MeanKind, str]) -> float:
    """APC_f: PC_f adjusted with the expectation |P_A||P_B| / C(n, 2)"""
    return apc_from_pairs(_pairs(a, b), MeanKind.parse(f))


def entropy(a: Partition) -> float:
    """Natural-log entropy of the part size distribution"""
    if a.n == 0:
        return 0.0
    probabilities = a.sizes() / a.n
    return float(-(probabilities * np.log(probabilities)).sum())


def mutual_information(a: Partition, b: Partition) -> float:
    table = contingency_table(a, b)
    if table.n == 0:
        return 0.0
    return float(mutual_info_score(None, None, contingency=table.counts))


def expected_mutual_information(table: ContingencyTable) -> float:
    """Exact E[MI] under the hypergeometric model with the table's margins"""
    n = table.n
    rows = table.row_sums.astype(np.int64)
    cols = table.col_sums.astype(np.int64)
    # any labelling with zero entropy implies EMI = 0
    if rows.size <= 1 or cols.size <= 1:
        return 0.0

    log_cols = np.log(cols)[:, None]
    gln_cols = (gammaln(cols + 1) + gammaln(n - cols + 1))[:, None]
    emi = 0.0
    with np.errstate(divide="ignore", invalid="ignore", over="ignore"):
        for row in rows:
            nij = np.arange(1, min(row, cols.max()) + 1)[None, :]
            low = np.maximum(1, row - n + cols)[:, None]
            high = np.minimum(row, cols)[:, None]
            valid = (nij >= low) & (nij <= high)
            safe = np.where(valid, nij, 1)
            # factorials in log space to stop overflows
            log_probability = (
                gammaln(row + 1) + gammaln(n - row + 1) + gln_cols - gammaln(n + 1)
                - gammaln(safe + 1) - gammaln(row - safe + 1)
                - gammaln(cols[:, None] - safe + 1)
                - gammaln(n - row - cols[:, None] + safe + 1)
            )
            log_ratio = np.log(n * safe) - np.log(row) - log_cols
            terms = (safe / n) * log_ratio * np.exp(log_probability)
            emi += float(np.where(valid, terms, 0.0).sum())
    return emi


def ami(a: Partition, b: Partition) -> float:
    """Adjusted mutual information, max-entropy normalization"""
    table = contingency_table(a, b)
    if table.n == 0:
        raise PartitionError("AMI needs at least one vertex")
    mi = float(mutual_info_score(None, None, contingency=table.counts))
    emi = expected_mutual_information(table)
    denominator = max(entropy(a), entropy(b)) - emi
    if abs(denominator) <= AMI_DEGENERACY_TOLERANCE:
        raise DegenerateMeasureError("AMI", "maximum entropy equals the expected mutual information")
    return (mi - emi) / denominator
