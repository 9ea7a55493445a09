"""Planar cyclic ordering of the generating set, and orientation behaviour.

A presentation is geometric exactly when the 2N letters admit a cyclic
(clockwise) ordering compatible with gluing one 2-cell into each corner at
the base vertex.  The ordering is found by walking corner to corner: each
step adopts the unique cell boundary that does not fold back onto the
previous cell, and reads off the next letter as the inverse of that
boundary's last letter.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import cached_property

from .errors import InternalInconsistencyError, NotGeometricError
from .presentation import (
    Presentation,
    ShiftTable,
    inverse_word,
    letter_name,
    occurrence_check,
    symmetrized_shifts,
    word_name,
)


@dataclass(frozen=True)
class CyclicOrder:
    """Clockwise order of the 2N letters, with one cell word per corner.

    cell_words[i] is the clockwise boundary of the 2-cell between letters[i]
    and letters[i+1] at the base vertex; it starts with letters[i] and its
    last letter is the inverse of letters[i+1].
    """

    letters: tuple
    cell_words: tuple

    @cached_property
    def _pos(self):
        return {x: i for i, x in enumerate(self.letters)}

    @property
    def size(self) -> int:
        return len(self.letters)

    def index(self, x: int) -> int:
        return self._pos[x]

    def letter(self, i: int) -> int:
        return self.letters[i % self.size]

    def succ(self, x: int) -> int:
        return self.letter(self.index(x) + 1)

    def pred(self, x: int) -> int:
        return self.letter(self.index(x) - 1)

    def opposite(self, x: int) -> int:
        """The letter halfway around the circle: index + N mod 2N."""
        return self.letter(self.index(x) + self.size // 2)

    def cell_word(self, x: int):
        return self.cell_words[self.index(x)]

    def rotated(self, k: int) -> "CyclicOrder":
        k %= self.size
        return CyclicOrder(
            self.letters[k:] + self.letters[:k],
            self.cell_words[k:] + self.cell_words[:k],
        )

    def mirror(self) -> "CyclicOrder":
        """The reflected structure: reversed cycle, inverted cell words."""
        n = self.size
        letters = tuple(self.letters[(-i) % n] for i in range(n))
        cells = tuple(
            inverse_word(self.cell_word(self.pred(x))) for x in letters
        )
        return CyclicOrder(letters, cells)

    def to_json(self):
        return list(self.letters)

    def __str__(self):
        return " ".join(letter_name(x) for x in self.letters)


def _walk(p: Presentation, shifts: ShiftTable, seed) -> CyclicOrder:
    two_n = 2 * p.n_generators
    letters = [seed[0]]
    cells = [tuple(seed)]
    while True:
        current = -cells[-1][-1]
        # The fold-back cell is the previous boundary read backwards; it
        # starts with `current` and adopting it would create a cancellation.
        folded = inverse_word(cells[-1])
        adopted = shifts.partner(current, folded)
        if current == letters[0]:
            if len(letters) != two_n:
                raise NotGeometricError(
                    f"walk returned to {letter_name(current)} after only "
                    f"{len(letters)} of {two_n} letters"
                )
            if adopted != cells[0]:
                raise NotGeometricError(
                    f"walk closed on cell {word_name(adopted)!r} instead of "
                    f"the seed cell {word_name(cells[0])!r}"
                )
            break
        if current in letters:
            raise NotGeometricError(
                f"letter {letter_name(current)} repeats before the round completes"
            )
        letters.append(current)
        cells.append(adopted)
    order = CyclicOrder(tuple(letters), tuple(cells))
    _check_shift_consumption(order, shifts)
    return order


def _check_shift_consumption(order: CyclicOrder, shifts: ShiftTable) -> None:
    # Around the full round, the two shifts at each letter are consumed
    # exactly once each: one as the cell word there, one as the fold-back
    # of the previous cell.
    for i, x in enumerate(order.letters):
        used = sorted((order.cell_words[i], inverse_word(order.cell_words[i - 1])))
        expected = sorted(shifts.starting_with(x))
        if used != expected:
            raise InternalInconsistencyError(
                f"shifts at {letter_name(x)} not consumed exactly once each"
            )


def compute_cyclic_order(p: Presentation, seed_index: int = 0) -> CyclicOrder:
    """Find the planar cyclic ordering, or prove there is none.

    The walk is seeded with relators[seed_index] read as the first clockwise
    cell, which fixes the chirality; the result is then rotated so the
    smallest positive generator comes first.  Different seeds can only give
    the same cycle up to rotation, or its mirror.
    """
    occurrence_check(p)
    shifts = symmetrized_shifts(p)
    order = _walk(p, shifts, p.relators[seed_index])
    return order.rotated(order.index(1))


def orientation_of(order: CyclicOrder, x: int) -> str:
    """Whether the boundary map is orientation preserving on the interval of x.

    Equivalently, whether the rotation of edge labels at the vertex x is the
    reference clockwise cycle or its reverse.  The corner of the cell word
    W = x w2 ... wm at the vertex x forces: clockwise at x, the inverse of x
    follows w2.  Testing that adjacency against the cycle and against its
    reverse decides the chirality; exactly one must hold.
    """
    w2 = order.cell_word(x)[1]
    xbar = -x
    preserving = order.succ(w2) == xbar
    reversing = order.pred(w2) == xbar
    if preserving == reversing:
        raise InternalInconsistencyError(
            f"orientation of {letter_name(x)} is not decidable; "
            "the structure is not planar"
        )
    return "reversing" if reversing else "preserving"


def orientation_map(order: CyclicOrder) -> dict:
    return {x: orientation_of(order, x) for x in order.letters}


def reversing_set(order: CyclicOrder) -> frozenset:
    return frozenset(x for x in order.letters if orientation_of(order, x) == "reversing")


def word_chirality(word, reversing) -> int:
    """Parity of orientation-reversing letters along a word (0 or 1)."""
    chi = 0
    for x in word:
        if x in reversing:
            chi ^= 1
    return chi
