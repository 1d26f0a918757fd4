"""
Textual measure identifiers shared by the command line and the experiments
Agnostic ids: RI, ARI, PC_<f>, APC_<f>, AMI, MI, K
Aware ids:    RI(G), ARI(G), PC_<f>(G), APC_<f>(G), A11(G)
"""

import re
from dataclasses import dataclass
from enum import Enum
from functools import cached_property
from typing import Dict, Iterable, List, Optional, Union

from partitions.graph import Graph
from partitions.partition import Partition

from . import agnostic, aware
from .exceptions import DegenerateMeasureError
from .means import MeanKind


class Family(Enum):
    AGNOSTIC = "agnostic"
    AWARE = "aware"


FAMILY_NAMES = {
    Family.AGNOSTIC: ("RI", "ARI", "PC", "APC", "AMI", "MI", "K"),
    Family.AWARE: ("RI", "ARI", "PC", "APC", "A11"),
}
MEAN_NAMES = ("PC", "APC")

_SELECTOR_RE = re.compile(r"^(?P<name>[A-Za-z0-9]+)(?:_(?P<kind>[A-Za-z_]+))?(?P<aware>\(G\))?$")


@dataclass(frozen=True)
class MeasureSelector:
    family: Family
    name: str
    kind: Optional[MeanKind] = None

    def __post_init__(self):
        if self.name not in FAMILY_NAMES[self.family]:
            raise ValueError(f"{self.name} is not a {self.family.value} measure")
        if (self.name in MEAN_NAMES) != (self.kind is not None):
            if self.kind is None:
                raise ValueError(f"{self.name} needs a mean kind, e.g. {self.name}_mn")
            raise ValueError(f"{self.name} takes no mean kind")

    @property
    def is_aware(self) -> bool:
        return self.family is Family.AWARE

    @property
    def label(self) -> str:
        text = self.name if self.kind is None else f"{self.name}_{self.kind.value}"
        return f"{text}(G)" if self.is_aware else text

    def __str__(self) -> str:
        return self.label

    @classmethod
    def parse(cls, text: Union[str, "MeasureSelector"]) -> "MeasureSelector":
        if isinstance(text, MeasureSelector):
            return text
        cleaned = text.strip().replace("(·;G)", "(G)").replace("(.;G)", "(G)")
        match = _SELECTOR_RE.match(cleaned)
        if match is None:
            raise ValueError(f"malformed measure id {text!r}")
        family = Family.AWARE if match.group("aware") else Family.AGNOSTIC
        kind = MeanKind.parse(match.group("kind")) if match.group("kind") else None
        return cls(family=family, name=match.group("name").upper(), kind=kind)

    @classmethod
    def parse_list(cls, text: Union[str, Iterable[str]]) -> List["MeasureSelector"]:
        """Comma-separated ids (or an iterable of ids), duplicates dropped;
        "all" selects every similarity measure"""
        if isinstance(text, str) and text.strip().lower() == "all":
            return all_selectors()
        items = text.split(",") if isinstance(text, str) else list(text)
        selectors: List[MeasureSelector] = []
        for item in items:
            if isinstance(item, str) and not item.strip():
                continue
            selector = cls.parse(item)
            if selector not in selectors:
                selectors.append(selector)
        if not selectors:
            raise ValueError("no measure selected")
        return selectors


def all_selectors() -> List[MeasureSelector]:
    """Every similarity measure with each mean variant; K is left out"""
    selectors = []
    for family, names in FAMILY_NAMES.items():
        for name in names:
            if name in MEAN_NAMES:
                selectors.extend(MeasureSelector(family, name, kind) for kind in MeanKind)
            elif name != "K":
                selectors.append(MeasureSelector(family, name))
    return selectors


class Comparison:
    """One (A, B) comparison, optionally on a graph; the contingency table
    and the edge counts are computed once for all selectors"""

    def __init__(self, a: Partition, b: Partition, g: Optional[Graph] = None):
        self.a = a
        self.b = b
        self.g = g

    @cached_property
    def table(self) -> agnostic.ContingencyTable:
        return agnostic.contingency_table(self.a, self.b)

    @cached_property
    def pairs(self) -> agnostic.PairCounts:
        return agnostic.pair_counts(self.table)

    @cached_property
    def edge_counts(self) -> aware.EdgeCounts:
        if self.g is None:
            raise ValueError("graph-aware measures need a graph")
        return aware.edge_counts(self.g, self.a, self.b)

    def value(self, selector: Union[str, MeasureSelector]) -> float:
        selector = MeasureSelector.parse(selector)
        name, kind = selector.name, selector.kind
        if selector.is_aware:
            counts = self.edge_counts
            if name == "RI":
                return aware.rand_index_from_counts(counts)
            if name == "ARI":
                return aware.apc_from_counts(counts, MeanKind.ARITHMETIC, measure="ARI(G)")
            if name == "PC":
                return aware.pc_from_counts(counts, kind)
            if name == "APC":
                return aware.apc_from_counts(counts, kind)
            return float(counts.a11)

        if name == "RI":
            return agnostic.rand_index_from_pairs(self.pairs)
        if name == "ARI":
            return agnostic.apc_from_pairs(self.pairs, MeanKind.ARITHMETIC, measure="ARI")
        if name == "PC":
            return agnostic.pc_from_pairs(self.pairs, kind)
        if name == "APC":
            return agnostic.apc_from_pairs(self.pairs, kind)
        if name == "AMI":
            return agnostic.ami(self.a, self.b)
        if name == "MI":
            return agnostic.mutual_information(self.a, self.b)
        return float(self.b.k)

    def values(self, selectors: Iterable[MeasureSelector]) -> Dict[str, Optional[float]]:
        """label -> value, None where the measure is degenerate"""
        results: Dict[str, Optional[float]] = {}
        for selector in selectors:
            try:
                results[selector.label] = self.value(selector)
            except DegenerateMeasureError:
                results[selector.label] = None
        return results
