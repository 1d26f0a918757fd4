"""
Centered moving averages for similarity curves
"""

from dataclasses import replace
from typing import Iterable, List, Sequence

import pandas as pd

from .records import CurvePoint


def moving_average(values: Sequence[float], window: int) -> List[float]:
    """Centered window mean; at the ends the window is clipped to the
    available values"""
    if window < 1 or window % 2 == 0:
        raise ValueError(f"window must be a positive odd integer, got {window}")
    series = pd.Series(list(values), dtype=float)
    return series.rolling(window, center=True, min_periods=1).mean().tolist()


def smooth_points(points: Iterable[CurvePoint], window: int) -> List[CurvePoint]:
    """Smooth mean and std of every measure's curve along x"""
    points = list(points)
    if window == 1:
        return points
    smoothed: List[CurvePoint] = []
    for measure in sorted({p.measure for p in points}):
        series = sorted((p for p in points if p.measure == measure), key=lambda p: p.x)
        means = moving_average([p.mean for p in series], window)
        stds = moving_average([p.std for p in series], window)
        smoothed.extend(replace(p, mean=m, std=s) for p, m, s in zip(series, means, stds))
    return smoothed
