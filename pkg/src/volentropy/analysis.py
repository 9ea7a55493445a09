"""End-to-end pipeline: presentation text to volume entropy report."""

from __future__ import annotations

import time
from dataclasses import dataclass, field
from typing import Optional

from .kneading import EntropyResult, KneadingMatrix, build_matrix, entropy_from_matrix
from .ordering import CyclicOrder, compute_cyclic_order
from .presentation import Presentation, letter_name, occurrence_check, symmetrized_shifts, word_name
from .symbolic import MiddleChart
from .tiling import build_ball


@dataclass
class OracleSummary:
    """Sphere counts from the tiling ball and agreement with the kneading rate."""

    radius: int
    sigma: list
    ratio: float
    relative_gap: float
    agrees: bool


@dataclass
class AnalysisReport:
    """Everything the pipeline derives from one geometric presentation."""

    presentation: Presentation
    cyclic_order: CyclicOrder
    orientation: dict
    chart: MiddleChart
    matrix: KneadingMatrix
    result: EntropyResult
    oracle: Optional[OracleSummary] = None
    timings: dict = field(default_factory=dict)

    @property
    def geometric(self) -> bool:
        return True

    @property
    def entropy(self) -> float:
        return self.result.entropy

    @property
    def growth(self) -> float:
        return self.result.growth

    def bigons_json(self):
        out = []
        for i, bigon in enumerate(self.chart.bigons):
            out.append(
                {
                    "pair": [letter_name(x) for x in bigon.pair],
                    "left": word_name(bigon.left),
                    "right": word_name(bigon.right),
                    "length": bigon.length,
                }
            )
        return out

    def itineraries_json(self):
        out = {}
        for i in range(self.cyclic_order.size):
            name = letter_name(self.cyclic_order.letter(i))
            out[f"theta_{name}"] = {
                "minus": [lap.label(self.cyclic_order) for lap in self.chart.side_itinerary(i, "-")],
                "plus": [lap.label(self.cyclic_order) for lap in self.chart.side_itinerary(i, "+")],
                "ray_minus": str(self.chart.ray(i, "-")),
                "ray_plus": str(self.chart.ray(i, "+")),
            }
        return out

    def to_json(self, *, with_matrix=False, with_bigons=False, with_itineraries=False):
        order = self.cyclic_order
        data = {
            "geometric": True,
            "n_generators": self.presentation.n_generators,
            "relators": [list(r) for r in self.presentation.relators],
            "cyclic_order": order.to_json(),
            "cyclic_order_letters": [letter_name(x) for x in order.letters],
            "orientation": {
                letter_name(x): self.orientation[x] for x in order.letters
            },
            "splits": sorted(
                letter_name(order.letter(i)) for i in self.chart.splits
            ),
            "laps": list(self.chart.lap_labels()),
            "determinant": self.result.determinant.to_list(),
            "polynomial": str(self.result.determinant),
            "root": self.result.root,
            "growth": self.result.growth,
            "entropy": self.result.entropy,
            "timings": dict(self.timings),
        }
        if with_bigons:
            data["bigons"] = self.bigons_json()
        if with_matrix:
            data["matrix"] = self.matrix.to_json(order)
        if with_itineraries:
            data["itineraries"] = self.itineraries_json()
        if self.oracle is not None:
            data["oracle"] = {
                "radius": self.oracle.radius,
                "sigma": list(self.oracle.sigma),
                "ratio": self.oracle.ratio,
                "relative_gap": self.oracle.relative_gap,
                "agrees": self.oracle.agrees,
            }
        return data


def analyze_presentation(
    p: Presentation,
    *,
    tol: float = 1e-12,
    oracle_radius: Optional[int] = None,
) -> AnalysisReport:
    """Run the full pipeline; raises NotGeometricError when it is not.

    With oracle_radius set, additionally grows a tiling ball and compares
    the sphere-size ratio against the kneading growth rate.
    """
    timings = {}
    start = time.perf_counter()
    occurrence_check(p)
    order = compute_cyclic_order(p)
    timings["ordering"] = time.perf_counter() - start

    stage = time.perf_counter()
    shifts = symmetrized_shifts(p)
    chart = MiddleChart.build(order, shifts)
    timings["bigons_and_laps"] = time.perf_counter() - stage

    stage = time.perf_counter()
    matrix = build_matrix(chart)
    timings["matrix"] = time.perf_counter() - stage

    stage = time.perf_counter()
    result = entropy_from_matrix(matrix, tol)
    timings["determinant_and_root"] = time.perf_counter() - stage

    oracle = None
    if oracle_radius is not None:
        stage = time.perf_counter()
        ball = build_ball(p, order, oracle_radius - 1)
        sigma = ball.sphere_counts(oracle_radius)
        ratio = sigma[-1] / sigma[-2]
        gap = abs(ratio - result.growth) / result.growth
        oracle = OracleSummary(oracle_radius, sigma, ratio, gap, gap < 0.02)
        timings["oracle"] = time.perf_counter() - stage

    timings["total"] = time.perf_counter() - start
    return AnalysisReport(
        presentation=p,
        cyclic_order=order,
        orientation=chart.orientation,
        chart=chart,
        matrix=matrix,
        result=result,
        oracle=oracle,
        timings=timings,
    )
