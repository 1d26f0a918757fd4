"""
Similarity curve records and their aggregation from per-trial values
"""

import math
from dataclasses import dataclass
from typing import Dict, Iterable, List, Optional

import pandas as pd

RECORD_COLUMNS = ["x", "trial", "measure", "value"]


@dataclass(frozen=True)
class CurvePoint:
    """Mean and sample deviation of one measure at one sweep coordinate;
    mean and std cover non-degenerate trials only"""
    x: float
    measure: str
    mean: float
    std: float
    trials: int
    degenerate: int = 0

    @property
    def valid(self) -> int:
        return self.trials - self.degenerate

    @property
    def se(self) -> float:
        return self.std / math.sqrt(self.valid) if self.valid else math.nan


def trial_records(x: float, trial: int, values: Dict[str, Optional[float]], prefix: str = "") -> List[dict]:
    return [
        {"x": x, "trial": trial, "measure": f"{prefix}{label}", "value": math.nan if value is None else value}
        for label, value in values.items()
    ]


def aggregate(records: Iterable[dict]) -> List[CurvePoint]:
    """One CurvePoint per (measure, x), sorted by measure then x"""
    frame = pd.DataFrame.from_records(list(records), columns=RECORD_COLUMNS)
    if frame.empty:
        return []
    frame = frame.sort_values(["trial"], kind="mergesort")
    summary = frame.groupby(["measure", "x"], sort=True)["value"].agg(
        mean="mean", std="std", valid="count", trials="size"
    )
    points = []
    for (measure, x), row in summary.iterrows():
        std = float(row["std"]) if row["valid"] > 1 else (0.0 if row["valid"] == 1 else math.nan)
        points.append(CurvePoint(
            x=float(x),
            measure=str(measure),
            mean=float(row["mean"]),
            std=std,
            trials=int(row["trials"]),
            degenerate=int(row["trials"] - row["valid"]),
        ))
    return points


def points_frame(points: Iterable[CurvePoint]) -> pd.DataFrame:
    frame = pd.DataFrame(
        [(p.x, p.measure, p.mean, p.std, p.trials, p.degenerate) for p in points],
        columns=["x", "measure", "mean", "std", "trials", "degenerate"],
    )
    return frame.sort_values(["measure", "x"], kind="mergesort").reset_index(drop=True)


def curve(points: Iterable[CurvePoint], measure: str) -> List[CurvePoint]:
    return sorted((p for p in points if p.measure == measure), key=lambda p: p.x)
