"""Minimal bigons, their extensions, and eventually periodic boundary rays.

For each pair of cyclically adjacent letters (x, y) there is a unique
shortest pair of disjoint geodesics from the identity with a common
endpoint, one starting with x and one with y.  It is found by taking the
cell between x and y and, while the boundary has odd length, gluing the
non-folding cell onto the central edge; the first even boundary splits into
the two geodesic sides.
"""

from __future__ import annotations

from dataclasses import dataclass

from .errors import InternalInconsistencyError, IterationCapExceededError
from .ordering import CyclicOrder, word_chirality
from .presentation import ShiftTable, inverse_word, letter_name, rotate_word, word_name


@dataclass(frozen=True)
class Bigon:
    """Two equal-length geodesic words with a common endpoint.

    `left` starts with the clockwise predecessor letter of the pair,
    `right` with its successor.
    """

    left: tuple
    right: tuple

    def __post_init__(self):
        if len(self.left) != len(self.right):
            raise InternalInconsistencyError("bigon sides differ in length")

    @property
    def length(self) -> int:
        return len(self.left)

    @property
    def pair(self):
        return (self.left[0], self.right[0])

    def __str__(self):
        return f"{{{word_name(self.left)}, {word_name(self.right)}}}"


@dataclass(frozen=True)
class EPRay:
    """An eventually periodic infinite word: preperiod then repeating period.

    Instances are kept canonical (primitive period, shortest preperiod), so
    structural equality is equality of infinite words.
    """

    preperiod: tuple
    period: tuple

    @staticmethod
    def make(preperiod, period) -> "EPRay":
        pre = tuple(preperiod)
        per = tuple(period)
        if not per:
            raise ValueError("period must be nonempty")
        for d in range(1, len(per)):
            if len(per) % d == 0 and per == per[:d] * (len(per) // d):
                per = per[:d]
                break
        while pre and pre[-1] == per[-1]:
            pre = pre[:-1]
            per = (per[-1],) + per[:-1]
        return EPRay(pre, per)

    def letter(self, n: int) -> int:
        if n < len(self.preperiod):
            return self.preperiod[n]
        return self.period[(n - len(self.preperiod)) % len(self.period)]

    def prefix(self, n: int):
        return tuple(self.letter(i) for i in range(n))

    def shift(self, k: int) -> "EPRay":
        """Drop the first k letters."""
        if k <= len(self.preperiod):
            return EPRay.make(self.preperiod[k:], self.period)
        r = (k - len(self.preperiod)) % len(self.period)
        return EPRay.make((), self.period[r:] + self.period[:r])

    def prepend(self, word) -> "EPRay":
        return EPRay.make(tuple(word) + self.preperiod, self.period)

    def __str__(self):
        return f"{word_name(self.preperiod)}({word_name(self.period)})^inf"


def minimal_bigon(order: CyclicOrder, shifts: ShiftTable, x: int, y: int = None) -> Bigon:
    """The unique minimal bigon for the adjacent pair (x, y = succ(x))."""
    if y is None:
        y = order.succ(x)
    elif y != order.succ(x):
        raise ValueError(
            f"{letter_name(x)} and {letter_name(y)} are not adjacent in the cyclic order"
        )
    boundary = list(order.cell_word(x))
    # Each boundary edge remembers which cell shift it came from, so the
    # fold-back word at the central edge can be reconstructed after gluing.
    darts = [(tuple(boundary), i) for i in range(len(boundary))]
    cap = 4 * shifts.relator_length_sum
    steps = 0
    while len(boundary) % 2 == 1:
        steps += 1
        if steps > cap:
            raise IterationCapExceededError(
                f"bigon boundary for ({letter_name(x)}, {letter_name(y)}) "
                f"stayed odd after {cap} gluings"
            )
        c = len(boundary) // 2
        letter = boundary[c]
        cell, idx = darts[c]
        # Boundary word of the same cell read from the far end of the
        # central edge; gluing it would fold the complex onto itself.
        folded = rotate_word(inverse_word(cell), len(cell) - 1 - idx)
        glued = shifts.partner(-letter, folded)
        boundary[c : c + 1] = list(glued[1:])
        darts[c : c + 1] = [(glued, j) for j in range(1, len(glued))]
    k = len(boundary) // 2
    return Bigon(tuple(boundary[:k]), inverse_word(boundary[k:]))


def all_minimal_bigons(order: CyclicOrder, shifts: ShiftTable) -> dict:
    """Minimal bigons for every adjacent pair, keyed by (x, succ(x))."""
    return {(x, order.succ(x)): minimal_bigon(order, shifts, x) for x in order.letters}


def centered_continuation(word, order: CyclicOrder) -> EPRay:
    """Extend a geodesic word by always taking the opposite of the backtrack.

    Each added letter is opposite(inverse(previous letter)).  The successor
    rule is a function on 2N letters, so the tail closes into a cycle of
    length at most 2N.
    """
    w = tuple(word)
    if not w:
        raise ValueError("cannot continue an empty word")
    seen = {}
    tail = []
    current = order.opposite(-w[-1])
    while current not in seen:
        seen[current] = len(tail)
        tail.append(current)
        current = order.opposite(-current)
    start = seen[current]
    return EPRay.make(w + tuple(tail[:start]), tuple(tail[start:]))


def middle_ray(order: CyclicOrder, bigons: dict, i: int) -> EPRay:
    """Symbolic position of the i-th cutting point under the middle choice.

    This is the centered continuation of the left word of the minimal bigon
    between letters i-1 and i (indices into the cyclic order).
    """
    x = order.letter(i - 1)
    bigon = bigons[(x, order.letter(i))]
    return centered_continuation(bigon.left, order)


def _sub_bigon(order, bigons, reversing, attach_letter, chirality, side):
    """Minimal bigon hanging off `attach_letter` at a vertex of given chirality.

    side 0 attaches on the left of the edge, side 1 on the right.  At a
    mirrored vertex left and right swap relative to the reference cycle, and
    the bigon's own sides swap as well.
    """
    use_predecessor = (side == 0) == (chirality == 0)
    if use_predecessor:
        pair = (order.pred(attach_letter), attach_letter)
    else:
        pair = (attach_letter, order.succ(attach_letter))
    sub = bigons[pair]
    if chirality:
        return sub.right, sub.left
    return sub.left, sub.right


def extend(order: CyclicOrder, bigons: dict, reversing, bigon: Bigon, bit: int) -> Bigon:
    """Concatenate a further minimal bigon along the last shared edge.

    bit 0 grows through the penultimate vertex of the left side, bit 1
    through the right; either way the result is a bigon of length
    k + k' - 1 where k' is the attached bigon's length.
    """
    if bit == 0:
        prefix = bigon.left[:-1]
        last = bigon.left[-1]
        chirality = word_chirality(prefix, reversing)
        sub_left, sub_right = _sub_bigon(order, bigons, reversing, last, chirality, 0)
        if sub_right[0] != last:
            raise InternalInconsistencyError("left extension does not share its edge")
        return Bigon(prefix + sub_left, bigon.right + sub_right[1:])
    if bit == 1:
        prefix = bigon.right[:-1]
        last = bigon.right[-1]
        chirality = word_chirality(prefix, reversing)
        sub_left, sub_right = _sub_bigon(order, bigons, reversing, last, chirality, 1)
        if sub_left[0] != last:
            raise InternalInconsistencyError("right extension does not share its edge")
        return Bigon(bigon.left + sub_left[1:], prefix + sub_right)
    raise ValueError(f"bit must be 0 or 1, got {bit!r}")
