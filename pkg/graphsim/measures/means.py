"""
The four means that turn pair counting into the PC_f family
"""

import math
from enum import Enum
from fractions import Fraction
from typing import Union

Number = Union[Fraction, float]


class MeanKind(Enum):
    ARITHMETIC = "mn"
    GEOMETRIC = "gmn"
    MIN = "min"
    MAX = "max"

    @classmethod
    def parse(cls, value: Union[str, "MeanKind"]) -> "MeanKind":
        if isinstance(value, MeanKind):
            return value
        key = value.strip().lower()
        if key in MEAN_ALIASES:
            return MEAN_ALIASES[key]
        raise ValueError(f"unknown mean kind {value!r}; expected one of {sorted(MEAN_ALIASES)}")

    def of(self, x: int, y: int) -> Number:
        """f(x, y); exact except for irrational geometric means"""
        if self is MeanKind.ARITHMETIC:
            return Fraction(x + y, 2)
        if self is MeanKind.MIN:
            return Fraction(min(x, y))
        if self is MeanKind.MAX:
            return Fraction(max(x, y))
        product = x * y
        root = math.isqrt(product)
        if root * root == product:
            return Fraction(root)
        return math.sqrt(product)


# binary classification measure each mean corresponds to
MEAN_ALIASES = {
    "mn": MeanKind.ARITHMETIC,
    "arithmetic": MeanKind.ARITHMETIC,
    "fscore": MeanKind.ARITHMETIC,
    "gmn": MeanKind.GEOMETRIC,
    "geometric": MeanKind.GEOMETRIC,
    "cosine": MeanKind.GEOMETRIC,
    "min": MeanKind.MIN,
    "simpson": MeanKind.MIN,
    "max": MeanKind.MAX,
    "braun_banquet": MeanKind.MAX,
}


def adjusted_similarity(index: Number, expected: Number, maximum: Number = 1) -> float:
    """(index - E[index]) / (max - E[index]); raises ZeroDivisionError when
    the maximum equals the expectation"""
    denominator = maximum - expected
    if denominator == 0:
        raise ZeroDivisionError("maximum equals expected value")
    return float((index - expected) / denominator)


def adjusted_pair_count(matches: int, size_a: int, size_b: int, universe: int, kind: MeanKind) -> float:
    """Adjust matches / f(size_a, size_b) under the null model where the
    expected number of matches is size_a * size_b / universe"""
    expected = Fraction(size_a * size_b, universe)
    return adjusted_similarity(matches, expected, kind.of(size_a, size_b))
