"""Planar Cayley 2-complex ball: the independent growth oracle.

Vertices carry a chirality flag and a rotation of 2N edge slots, clockwise
the reference cycle on standard vertices and its reverse on mirrored ones.
Faces are closed one dart-orbit at a time from a precomputed corner table,
and crossing an edge flips chirality exactly when the edge label acts
orientation-reversingly.  Construction never merges vertices; any conflict
surfaces as an InconsistentClosureError.

Sphere sizes are trusted one shell beyond the face-completion radius: once
every vertex at distance <= r is face-complete, no later gluing can attach
a new edge below distance r + 1, so the counts through r + 1 are final.
"""

from __future__ import annotations

from collections import deque

from .errors import InconsistentClosureError, OutOfBuiltRegionError
from .ordering import CyclicOrder, reversing_set
from .presentation import Presentation, inverse_word, letter_name, symmetrized_shifts, word_name

STANDARD = 0
MIRRORED = 1


class PlanarComplex:
    """Growable rotation-system ball of the Cayley 2-complex."""

    def __init__(self, presentation: Presentation, order: CyclicOrder):
        self.presentation = presentation
        self.order = order
        self.two_n = order.size
        self.reversing = reversing_set(order)
        self.shifts = symmetrized_shifts(presentation)
        self.max_face = max(len(r) for r in presentation.relators)
        # Clockwise slot labels per chirality, and label -> slot lookup.
        self._slot_letters = (
            tuple(order.letters),
            tuple(reversed(order.letters)),
        )
        self._slot_index = (
            {x: i for i, x in enumerate(self._slot_letters[STANDARD])},
            {x: i for i, x in enumerate(self._slot_letters[MIRRORED])},
        )
        # Face word spelled clockwise from a dart, by chirality and letter.
        std_corner = {x: order.cell_word(x) for x in order.letters}
        mir_corner = {
            x: inverse_word(order.cell_word(order.pred(x))) for x in order.letters
        }
        self._corner = (std_corner, mir_corner)
        self.slots = [[-1] * self.two_n]
        self.chirality = bytearray([STANDARD])
        self._dart_done = [0]
        self.root = 0
        self.completed_radius = -1

    def __len__(self):
        return len(self.slots)

    def letter_at(self, v: int, slot: int) -> int:
        return self._slot_letters[self.chirality[v]][slot]

    def slot_of(self, v: int, letter: int) -> int:
        return self._slot_index[self.chirality[v]][letter]

    def neighbor(self, v: int, letter: int) -> int:
        """Existing neighbor across the edge labeled `letter`, or -1."""
        return self.slots[v][self.slot_of(v, letter)]

    def _new_vertex(self, chirality: int) -> int:
        self.slots.append([-1] * self.two_n)
        self.chirality.append(chirality)
        self._dart_done.append(0)
        return len(self.slots) - 1

    def _link(self, v: int, letter: int, w: int) -> None:
        for a, b, lab in ((v, w, letter), (w, v, -letter)):
            s = self.slot_of(a, lab)
            existing = self.slots[a][s]
            if existing == -1:
                self.slots[a][s] = b
            elif existing != b:
                raise InconsistentClosureError(
                    f"edge {letter_name(lab)} at vertex {a} already leads to "
                    f"{existing}, face closure wants {b}"
                )

    def _step_vertex(self, v: int, letter: int, create: bool) -> int:
        w = self.neighbor(v, letter)
        want_chir = self.chirality[v] ^ (letter in self.reversing)
        if w != -1:
            if self.chirality[w] != want_chir:
                raise InconsistentClosureError(
                    f"vertex {w} has the wrong chirality across {letter_name(letter)}"
                )
            return w
        if not create:
            raise OutOfBuiltRegionError(
                f"no edge {letter_name(letter)} at vertex {v}"
            )
        w = self._new_vertex(want_chir)
        self._link(v, letter, w)
        return w

    def is_face_complete(self, v: int) -> bool:
        return self._dart_done[v] == (1 << self.two_n) - 1

    def close_face(self, v: int, letter: int) -> None:
        """Attach the face whose clockwise boundary leaves v along `letter`."""
        word = self._corner[self.chirality[v]][letter]
        if len(word) > self.max_face:
            raise InconsistentClosureError("corner word exceeds relator length")
        cur = v
        for i, step in enumerate(word):
            self._dart_done[cur] |= 1 << self.slot_of(cur, step)
            if i < len(word) - 1:
                cur = self._step_vertex(cur, step, create=True)
            else:
                # Last edge must close back to the start vertex.
                existing = self.neighbor(cur, step)
                if existing == -1:
                    self._link(cur, step, v)
                elif existing != v:
                    raise InconsistentClosureError(
                        f"face {word_name(word)!r} does not close at vertex {v}"
                    )
                want = self.chirality[cur] ^ (step in self.reversing)
                if self.chirality[v] != want:
                    raise InconsistentClosureError(
                        f"face {word_name(word)!r} closes with wrong chirality"
                    )
        if word not in self.shifts:
            raise InconsistentClosureError(
                f"face word {word_name(word)!r} is not a relator shift"
            )

    def complete_vertex(self, v: int) -> None:
        for s in range(self.two_n):
            if not self._dart_done[v] & (1 << s):
                self.close_face(v, self.letter_at(v, s))

    def distances(self):
        """BFS distance from the root along existing edges."""
        dist = [-1] * len(self.slots)
        dist[self.root] = 0
        queue = deque([self.root])
        while queue:
            v = queue.popleft()
            d = dist[v] + 1
            for w in self.slots[v]:
                if w != -1 and dist[w] == -1:
                    dist[w] = d
                    queue.append(w)
        return dist

    def build_to_radius(self, radius: int) -> None:
        """Face-complete every vertex within `radius` of the root.

        Shells are processed strictly inward to outward; closing a face is
        always triggered by its innermost incomplete vertex, which keeps the
        closed faces around any far vertex contiguous and so never creates
        two copies of one group element.
        """
        for shell in range(max(self.completed_radius + 1, 0), radius + 1):
            while True:
                dist = self.distances()
                pending = [
                    v
                    for v in range(len(self.slots))
                    if dist[v] == shell and not self.is_face_complete(v)
                ]
                if not pending:
                    break
                for v in pending:
                    self.complete_vertex(v)
        self.completed_radius = max(self.completed_radius, radius)

    def trace(self, word, create: bool = False) -> int:
        """Follow labeled slots from the root; the terminal vertex.

        With create=True, vertices along the way are face-completed on
        demand, which also builds every cell incident to the path.
        """
        cur = self.root
        for letter in word:
            if create and not self.is_face_complete(cur):
                self.complete_vertex(cur)
            nxt = self.neighbor(cur, letter)
            if nxt == -1:
                raise OutOfBuiltRegionError(
                    f"path {word_name(word)!r} leaves the built region"
                )
            cur = nxt
        return cur

    def sphere_counts(self, max_distance: int):
        """Sphere sizes sigma_0..sigma_max_distance; exact one shell beyond
        the completion radius."""
        if max_distance > self.completed_radius + 1:
            raise ValueError(
                f"sphere counts valid up to {self.completed_radius + 1}, "
                f"asked for {max_distance}"
            )
        counts = [0] * (max_distance + 1)
        for d in self.distances():
            if 0 <= d <= max_distance:
                counts[d] += 1
        return counts

    def face_words(self):
        """Boundary words of all closed faces, one per face orbit."""
        seen = set()
        words = []
        for v in range(len(self.slots)):
            for s in range(self.two_n):
                if not self._dart_done[v] & (1 << s):
                    continue
                if (v, s) in seen:
                    continue
                letter = self.letter_at(v, s)
                word = self._corner[self.chirality[v]][letter]
                cur = v
                ok = True
                orbit = []
                for i, step in enumerate(word):
                    orbit.append((cur, self.slot_of(cur, step)))
                    nxt = self.neighbor(cur, step)
                    if nxt == -1:
                        ok = False
                        break
                    cur = nxt
                if ok and cur == v and all(self._dart_done[a] & (1 << b) for a, b in orbit):
                    seen.update(orbit)
                    words.append(word)
        return words


def build_ball(p: Presentation, order: CyclicOrder, radius: int) -> PlanarComplex:
    """Face-complete ball of the given radius around the identity."""
    complex_ = PlanarComplex(p, order)
    complex_.build_to_radius(radius)
    return complex_


def sphere_sizes(complex_: PlanarComplex, max_distance: int):
    return complex_.sphere_counts(max_distance)


def trace_path(complex_: PlanarComplex, word) -> int:
    return complex_.trace(word)
