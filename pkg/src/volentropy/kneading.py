"""Kneading invariants, the kneading matrix, and the growth polynomial.

At the middle parameter every jump series is a polynomial of degree below
the bigon length, so the matrix of invariant coefficients over the lap
basis has exact integer polynomial entries.  Deleting one column and taking
the determinant yields a polynomial whose smallest root in (0, 1) is the
reciprocal of the growth rate.
"""

from __future__ import annotations

from dataclasses import dataclass
from math import log

from .errors import InternalInconsistencyError, NoRootInUnitIntervalError
from .polyalg import Poly, bareiss_determinant, smallest_root_in_unit_interval
from .symbolic import Lap, MiddleChart


def jump_at_cutting_point(chart: MiddleChart, i: int) -> dict:
    """Jump polynomial at cutting point i as a map Lap -> Poly.

    Coefficient m is the signed address difference of the two one-sided
    m-th iterates; signs are the running products of lap slopes.
    """
    k = chart.bigons[i].length
    minus = chart.side_itinerary(i, "-")
    plus = chart.side_itinerary(i, "+")
    coeffs = {}
    eps_minus = 1
    eps_plus = 1
    for m in range(k):
        lap_p = plus[m]
        lap_m = minus[m]
        row = coeffs.setdefault(lap_p, [0] * k)
        row[m] += eps_plus
        row = coeffs.setdefault(lap_m, [0] * k)
        row[m] -= eps_minus
        eps_plus *= chart.eps(lap_p.interval)
        eps_minus *= chart.eps(lap_m.interval)
    if eps_plus != eps_minus:
        # Both k-th iterates are the same point, so the accumulated slopes
        # must agree for the later terms of the series to cancel.
        raise InternalInconsistencyError(
            f"slope products disagree at cutting point {i}; "
            "the jump series does not truncate"
        )
    return {lap: Poly(c) for lap, c in coeffs.items() if any(c)}


def jump_at_preimage(chart: MiddleChart, i: int, base_jump: dict) -> dict:
    """Jump polynomial at the preimage of the cut inside split interval i.

    The two sub-laps differ by their address, and after one step both sides
    continue as the two sides of the base cutting point, so the jump is
    (i_r - i_l) + t * (jump at the base cutting point).  The slope sign and
    the side swap cancel, so the formula holds for decreasing intervals too.
    """
    out = {lap: poly.shift(1) for lap, poly in base_jump.items()}
    for part, delta in (("r", 1), ("l", -1)):
        lap = Lap(i, part)
        out[lap] = out.get(lap, Poly.zero()) + Poly.const(delta)
    return {lap: poly for lap, poly in out.items() if not poly.is_zero()}


@dataclass(frozen=True)
class KneadingMatrix:
    """Invariant coefficients over the lap basis.

    Rows run through the turning points in circular order, excluding the
    base cutting point; columns through the laps starting at the base cut.
    """

    laps: tuple
    lap_eps: tuple
    row_labels: tuple
    rows: tuple  # tuple of tuples of Poly

    @property
    def shape(self):
        return (len(self.rows), len(self.laps))

    def column_deleted_determinant(self, col: int) -> Poly:
        reduced = [
            [entry for j, entry in enumerate(row) if j != col] for row in self.rows
        ]
        return bareiss_determinant(reduced)

    def to_json(self, order):
        return {
            "laps": [lap.label(order) for lap in self.laps],
            "rows": list(self.row_labels),
            "entries": [[list(p.coeffs) for p in row] for row in self.rows],
        }


def build_matrix(chart: MiddleChart) -> KneadingMatrix:
    """Assemble the kneading matrix of the middle-parameter circle map."""
    n = chart.order.size
    cut_jumps = {i: jump_at_cutting_point(chart, i) for i in range(n)}
    jumps = []
    labels = []
    for i in range(n):
        if i != 0:
            jumps.append(cut_jumps[i])
            labels.append(f"theta_{_letter_tag(chart, i)}")
        if i in chart.splits:
            jumps.append(jump_at_preimage(chart, i, cut_jumps[0]))
            labels.append(f"m_{_letter_tag(chart, i)}")
    rows = tuple(
        tuple(jump.get(lap, Poly.zero()) for lap in chart.laps) for jump in jumps
    )
    lap_eps = tuple(chart.eps(lap.interval) for lap in chart.laps)
    if len(rows) + 1 != len(chart.laps):
        raise InternalInconsistencyError(
            f"{len(rows)} turning points against {len(chart.laps)} laps"
        )
    return KneadingMatrix(chart.laps, lap_eps, tuple(labels), rows)


def _letter_tag(chart: MiddleChart, i: int) -> str:
    from .presentation import letter_name

    return letter_name(chart.order.letter(i))


@dataclass(frozen=True)
class EntropyResult:
    determinant: Poly
    root: float
    growth: float
    entropy: float


def entropy_from_matrix(matrix: KneadingMatrix, tol: float = 1e-12) -> EntropyResult:
    """Delete the first column, take the exact determinant, find its first
    zero in (0, 1); the growth rate is the reciprocal of that root.

    The undeleted determinant differs from the kneading power series by the
    unit factor (1 - eps*t), whose roots sit on the unit circle and cannot
    disturb the smallest root inside it.
    """
    det = matrix.column_deleted_determinant(0)
    root = smallest_root_in_unit_interval(det, tol)
    if root is None:
        raise NoRootInUnitIntervalError(
            "kneading determinant has no zero in (0, 1); "
            "input is not a hyperbolic surface presentation"
        )
    growth = 1.0 / root
    return EntropyResult(det, root, growth, log(growth))
