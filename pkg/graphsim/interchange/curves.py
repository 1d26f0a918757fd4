"""
CSV and SVG emission for similarity curves and check reports
Output is a pure function of the input: rows are sorted, floats carry 12
significant digits and the SVG has fixed ids and no timestamp.
"""

import io
import math
from typing import Iterable, Optional

import matplotlib

matplotlib.use("Agg")

from matplotlib.figure import Figure  # noqa: E402

from experiments.checks import CheckReport  # noqa: E402
from experiments.records import CurvePoint, curve, points_frame  # noqa: E402

FLOAT_FORMAT = "%.12g"
CURVE_COLUMNS = ["x", "measure", "mean", "std", "trials", "degenerate"]


def _csv(frame) -> str:
    return frame.to_csv(index=False, float_format=FLOAT_FORMAT, lineterminator="\n", na_rep="nan")


def emit_curve_csv(points: Iterable[CurvePoint]) -> str:
    frame = points_frame(points)
    if frame.empty:
        raise ValueError("no curve points to emit")
    return _csv(frame[CURVE_COLUMNS])


def emit_check_csv(report: CheckReport) -> str:
    return _csv(report.frame())


def emit_curve_svg(
    points: Iterable[CurvePoint],
    title: Optional[str] = None,
    xlabel: str = "x",
    ylabel: str = "similarity",
) -> str:
    """Line per measure with a translucent band of one standard deviation;
    the i-th measure in name order gets the ids curve-i and band-i"""
    points = list(points)
    if not points:
        raise ValueError("no curve points to emit")

    figure = Figure(figsize=(6.4, 4.0))
    axes = figure.add_subplot()
    for index, measure in enumerate(sorted({p.measure for p in points})):
        series = curve(points, measure)
        xs = [p.x for p in series]
        means = [p.mean for p in series]
        stds = [0.0 if math.isnan(p.std) else p.std for p in series]
        line, = axes.plot(xs, means, marker="." if len(xs) == 1 else None, label=measure, gid=f"curve-{index}")
        axes.fill_between(
            xs,
            [m - s for m, s in zip(means, stds)],
            [m + s for m, s in zip(means, stds)],
            color=line.get_color(),
            alpha=0.2,
            linewidth=0,
            gid=f"band-{index}",
        )
    axes.set_xlabel(xlabel)
    axes.set_ylabel(ylabel)
    if title:
        axes.set_title(title)
    axes.grid(True, alpha=0.3)
    axes.legend(loc="best", fontsize="small")

    buffer = io.StringIO()
    with matplotlib.rc_context({"svg.hashsalt": "graphsim", "svg.fonttype": "none"}):
        figure.savefig(buffer, format="svg", metadata={"Date": None})
    return buffer.getvalue()
