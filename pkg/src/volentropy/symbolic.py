"""Symbolic structure of the boundary circle map at the middle parameter.

The circle is cut at the cutting point of the pair (last letter, first
letter), every position is handled symbolically through eventually periodic
rays, and each of the 2N basic intervals may split into a left and right
lap at a preimage of the cut.  All split and refinement decisions reduce to
integer comparisons of interval indices.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import NamedTuple, Optional

from .bigons import Bigon, EPRay, all_minimal_bigons, centered_continuation
from .errors import (
    AddressUndecidableError,
    InternalInconsistencyError,
    TieUnresolvedError,
)
from .ordering import CyclicOrder, orientation_of
from .presentation import ShiftTable, letter_name


class Lap(NamedTuple):
    """A maximal monotonicity interval: a basic interval or half of one."""

    interval: int  # 0-based position in the cyclic order
    part: str  # "whole", "l" or "r"

    def label(self, order: CyclicOrder) -> str:
        name = letter_name(order.letter(self.interval))
        return name if self.part == "whole" else f"{name}_{self.part}"


@dataclass(frozen=True)
class LapImages:
    """Per interval: image intervals of its two endpoints, and the slope sign.

    z[i] is the interval holding the right image of the left endpoint of
    interval i, w[i] the one holding the left image of its right endpoint;
    eps[i] is +1 on orientation preserving intervals and -1 otherwise.
    """

    z: tuple
    w: tuple
    eps: tuple


def lap_images(order: CyclicOrder, bigons_by_interval, orientation) -> LapImages:
    n = order.size
    z = []
    w = []
    eps = []
    for i in range(n):
        z.append(order.index(bigons_by_interval[i].right[1]))
        w.append(order.index(bigons_by_interval[(i + 1) % n].left[1]))
        eps.append(1 if orientation[order.letter(i)] == "preserving" else -1)
    return LapImages(tuple(z), tuple(w), tuple(eps))


def compare_rays(ray_a: EPRay, ray_b: EPRay, li: LapImages, order: CyclicOrder,
                 depth: int = 64) -> int:
    """Twisted-lexicographic comparison of two boundary points by circle position.

    Walks both itineraries until the base intervals differ, flipping the
    comparison each time a reversing interval is traversed.
    """
    sign = 1
    for d in range(depth):
        ia = order.index(ray_a.letter(d))
        ib = order.index(ray_b.letter(d))
        if ia != ib:
            return sign if ia > ib else -sign
        sign *= li.eps[ia]
    raise TieUnresolvedError(f"rays coincide through depth {depth}")


def split_laps(li: LapImages, order: CyclicOrder = None, rays=None) -> frozenset:
    """Intervals whose image arc strictly contains the base cut point.

    On an increasing interval the image wraps past the cut iff z > w, on a
    decreasing one iff z < w.  Equality falls back to a symbolic comparison
    of the two endpoint images, which needs the cutting point rays.
    """
    splits = set()
    n = len(li.z)
    for i in range(n):
        z, w, eps = li.z[i], li.w[i], li.eps[i]
        if z != w:
            wraps = z > w if eps == 1 else z < w
        else:
            if rays is None or order is None:
                raise TieUnresolvedError(
                    f"interval {i} has both endpoint images in the same interval"
                )
            image_left = rays[i][1].shift(1)
            image_right = rays[(i + 1) % n][0].shift(1)
            cmp = compare_rays(image_left, image_right, li, order)
            wraps = cmp > 0 if eps == 1 else cmp < 0
        if wraps:
            splits.add(i)
    return frozenset(splits)


def refine_address(current: int, next_image: int, li: LapImages, splits) -> Lap:
    """Which lap of `current` holds a point whose image lies in `next_image`."""
    if current not in splits:
        return Lap(current, "whole")
    n = len(li.z)
    z, w, eps = li.z[current], li.w[current], li.eps[current]
    if eps == 1:
        if not z > w:
            raise InternalInconsistencyError("split interval with non-wrapping images")
        if next_image >= z:
            return Lap(current, "l")
        if next_image <= w:
            return Lap(current, "r")
    else:
        if not z < w:
            raise InternalInconsistencyError("split interval with non-wrapping images")
        if next_image <= z:
            return Lap(current, "l")
        if next_image >= w:
            return Lap(current, "r")
    raise AddressUndecidableError(
        f"image interval {next_image} lies outside both laps of interval {current}"
    )


@dataclass(frozen=True)
class MiddleChart:
    """Everything the kneading computation needs about one circle map.

    Holds the cyclic order, the minimal bigon at every cutting point, both
    side rays of every cutting point, endpoint image data, the split set,
    and the lap basis in circular order.
    """

    order: CyclicOrder
    orientation: dict
    bigons: tuple  # bigons[i] = minimal bigon at cutting point i
    rays: tuple  # rays[i] = (left ray, right ray) of cutting point i
    images: LapImages
    splits: frozenset
    laps: tuple

    @classmethod
    def build(cls, order: CyclicOrder, shifts: ShiftTable) -> "MiddleChart":
        n = order.size
        orientation = {x: orientation_of(order, x) for x in order.letters}
        by_pair = all_minimal_bigons(order, shifts)
        by_interval = {
            i: by_pair[(order.letter(i - 1), order.letter(i))] for i in range(n)
        }
        rays = []
        for i in range(n):
            bigon = by_interval[i]
            left_ray = centered_continuation(bigon.left, order)
            right_ray = left_ray.shift(bigon.length).prepend(bigon.right)
            rays.append((left_ray, right_ray))
        images = lap_images(order, by_interval, orientation)
        splits = split_laps(images, order, rays)
        laps = []
        for i in range(n):
            if i in splits:
                laps.append(Lap(i, "l"))
                laps.append(Lap(i, "r"))
            else:
                laps.append(Lap(i, "whole"))
        return cls(
            order,
            orientation,
            tuple(by_interval[i] for i in range(n)),
            tuple(rays),
            images,
            splits,
            tuple(laps),
        )

    def ray(self, i: int, side: str) -> EPRay:
        left, right = self.rays[i]
        return left if side == "-" else right

    def eps(self, interval: int) -> int:
        return self.images.eps[interval]

    def side_itinerary(self, i: int, side: str):
        """Lap addresses of the first k one-sided iterates of cutting point i.

        The base letters are the letters of the bigon side; split intervals
        are refined by where the next letter sends the point.
        """
        k = self.bigons[i].length
        ray = self.ray(i, side)
        out = []
        for m in range(k):
            base = self.order.index(ray.letter(m))
            nxt = self.order.index(ray.letter(m + 1))
            out.append(refine_address(base, nxt, self.images, self.splits))
        return tuple(out)

    def lap_labels(self):
        return tuple(lap.label(self.order) for lap in self.laps)

    def verify_no_cut_returns(self) -> None:
        """Check no cutting point orbit ever lands on a cutting point.

        Beyond the bigon prefix each ray is eventually periodic, so testing
        one full period of shifts against every cutting point ray settles
        the whole orbit.
        """
        cut_rays = {r for pair in self.rays for r in pair}
        for i in range(self.order.size):
            tail = self.ray(i, "-").shift(self.bigons[i].length)
            horizon = len(tail.preperiod) + len(tail.period)
            for m in range(horizon):
                if tail.shift(m) in cut_rays:
                    raise InternalInconsistencyError(
                        f"orbit of cutting point {i} returns to a cutting point "
                        f"after {self.bigons[i].length + m} steps"
                    )


def build_middle_chart(order: CyclicOrder, shifts: ShiftTable) -> MiddleChart:
    return MiddleChart.build(order, shifts)
