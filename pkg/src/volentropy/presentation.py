"""Surface-group presentations over signed integer letters.

A letter is a nonzero int: generator k is written k, its inverse -k.  Words
are tuples of letters.  Relators are stored exactly as entered, with no free
reduction; all downstream machinery works on literal cyclic words.

Two text forms are accepted: integers ("1 2 1 -2 4") and letters ("abaBd",
uppercase meaning inverse, so only N <= 26 fits the letter form).  Relators
are separated by newlines or "/", with "#" comments and blank lines ignored.
A JSON array-of-arrays of integers is accepted as well.
"""

from __future__ import annotations

import json
from collections import Counter
from dataclasses import dataclass

from .errors import InternalInconsistencyError, NotGeometricError, PresentationSyntaxError

Word = tuple  # tuple of nonzero ints


def inverse_letter(x: int) -> int:
    return -x


def inverse_word(w) -> Word:
    """Inverse of a word: reverse order, invert every letter."""
    return tuple(-x for x in reversed(w))


def rotate_word(w, k: int) -> Word:
    k %= len(w)
    return tuple(w[k:] + w[:k])


def letter_name(x: int) -> str:
    """Printable name: a..z for generators 1..26, uppercase for inverses."""
    a = abs(x)
    if a == 0:
        raise ValueError("letter 0 is invalid")
    if a <= 26:
        ch = chr(ord("a") + a - 1)
        return ch.upper() if x < 0 else ch
    return str(x)


def word_name(w) -> str:
    if all(abs(x) <= 26 for x in w):
        return "".join(letter_name(x) for x in w)
    return " ".join(str(x) for x in w)


def parse_word(token: str) -> Word:
    """Parse a single relator written in letter form ("abaBd")."""
    letters = []
    for ch in token:
        if ch.isspace():
            continue
        if not ch.isalpha() or not ch.isascii():
            raise PresentationSyntaxError(f"invalid character {ch!r} in relator {token!r}")
        if ch.islower():
            letters.append(ord(ch) - ord("a") + 1)
        else:
            letters.append(-(ord(ch) - ord("A") + 1))
    if not letters:
        raise PresentationSyntaxError(f"empty relator in {token!r}")
    return tuple(letters)


def _parse_int_relator(token: str) -> Word:
    try:
        letters = tuple(int(t) for t in token.split())
    except ValueError as exc:
        raise PresentationSyntaxError(f"invalid integer relator {token!r}") from exc
    return letters


@dataclass(frozen=True)
class Presentation:
    """A validated presentation: N generators plus a list of relators."""

    n_generators: int
    relators: tuple

    def __post_init__(self):
        _validate(self.n_generators, self.relators)

    @classmethod
    def from_relators(cls, relators) -> "Presentation":
        rels = tuple(tuple(r) for r in relators)
        if not rels:
            raise PresentationSyntaxError("no relators given")
        for rel in rels:
            for x in rel:
                if not isinstance(x, int) or isinstance(x, bool) or x == 0:
                    raise PresentationSyntaxError(f"letters must be nonzero integers, got {x!r}")
        n = max(abs(x) for rel in rels for x in rel)
        return cls(n, rels)

    @property
    def alphabet(self):
        """All 2N letters, generators then inverses."""
        gens = range(1, self.n_generators + 1)
        return tuple(gens) + tuple(-g for g in gens)

    def text(self, form: str = "letters") -> str:
        """Render in a form that parse() accepts (round-trips)."""
        if form == "letters":
            if self.n_generators > 26:
                raise ValueError("letter form only covers up to 26 generators")
            return "\n".join(word_name(rel) for rel in self.relators)
        if form == "ints":
            return "\n".join(" ".join(str(x) for x in rel) for rel in self.relators)
        raise ValueError(f"unknown form {form!r}")

    def __str__(self):
        try:
            return self.text("letters").replace("\n", " / ")
        except ValueError:
            return self.text("ints").replace("\n", " / ")


def _validate(n: int, relators) -> None:
    if not relators:
        raise PresentationSyntaxError("no relators given")
    seen = set()
    for rel in relators:
        if len(rel) < 3:
            raise PresentationSyntaxError(
                f"relator {word_name(rel)!r} has length {len(rel)} < 3"
            )
        for x in rel:
            if x == 0:
                raise PresentationSyntaxError("letter 0 is invalid")
        if rel in seen:
            raise PresentationSyntaxError(f"duplicate relator {word_name(rel)!r}")
        seen.add(rel)
    used = {abs(x) for rel in relators for x in rel}
    if used != set(range(1, n + 1)):
        missing = sorted(set(range(1, n + 1)) - used)
        raise PresentationSyntaxError(
            f"generator indices must cover 1..{n} with no gaps; missing {missing}"
        )
    if n < 3:
        raise PresentationSyntaxError(f"need at least 3 generators, got {n}")
    lengths = sorted(len(r) for r in relators)
    if n == 3 and lengths == [3, 3]:
        # With 3 generators the only geometric shape is one relator of
        # length 6; two length-3 relators give a torus or Klein bottle.
        raise PresentationSyntaxError(
            "3 generators with two length-3 relators is not a hyperbolic surface"
        )


def parse(text: str) -> Presentation:
    """Parse integer form, letter form, or a JSON array of arrays."""
    stripped = text.strip()
    if not stripped:
        raise PresentationSyntaxError("empty input")
    if stripped.startswith("["):
        try:
            data = json.loads(stripped)
        except json.JSONDecodeError as exc:
            raise PresentationSyntaxError(f"invalid JSON input: {exc}") from exc
        if not isinstance(data, list) or not all(isinstance(r, list) for r in data):
            raise PresentationSyntaxError("JSON input must be an array of arrays")
        return Presentation.from_relators(data)

    relators = []
    for line in stripped.splitlines():
        line = line.split("#", 1)[0]
        for chunk in line.split("/"):
            chunk = chunk.strip()
            if not chunk:
                continue
            if any(ch.isdigit() or ch == "-" for ch in chunk):
                relators.append(_parse_int_relator(chunk))
            else:
                relators.append(parse_word(chunk))
    return Presentation.from_relators(relators)


def occurrence_counts(p: Presentation) -> Counter:
    return Counter(abs(x) for rel in p.relators for x in rel)


def occurrence_check(p: Presentation) -> None:
    """Each generator must occur exactly twice across all relators.

    Occurrences are counted without regard to sign.  Raises
    NotGeometricError naming the first offending generator.
    """
    counts = occurrence_counts(p)
    for g in range(1, p.n_generators + 1):
        if counts[g] != 2:
            raise NotGeometricError(
                f"generator {letter_name(g)} appears {counts[g]} times, expected 2",
                generator=g,
                count=counts[g],
            )


class ShiftTable:
    """All cyclic shifts of every relator and every inverted relator.

    After occurrence_check passes, exactly two shifts start with each
    letter; those two are the boundary words of the two 2-cells incident
    to that directed edge.
    """

    def __init__(self, p: Presentation):
        self.presentation = p
        by_first = {}
        for rel in p.relators:
            for word in (rel, inverse_word(rel)):
                for k in range(len(word)):
                    shift = rotate_word(word, k)
                    by_first.setdefault(shift[0], []).append(shift)
        self.by_first = {x: tuple(v) for x, v in by_first.items()}
        self.relator_length_sum = sum(len(r) for r in p.relators)
        self._all = frozenset(w for v in self.by_first.values() for w in v)

    def starting_with(self, letter: int):
        return self.by_first.get(letter, ())

    def __contains__(self, word) -> bool:
        return tuple(word) in self._all

    def total(self) -> int:
        return sum(len(v) for v in self.by_first.values())

    def partner(self, letter: int, excluded) -> Word:
        """The shift starting with `letter` other than `excluded`.

        `excluded` is removed once (multiset semantics); exactly one word
        must remain.
        """
        candidates = list(self.starting_with(letter))
        try:
            candidates.remove(tuple(excluded))
        except ValueError:
            raise InternalInconsistencyError(
                f"expected shift {word_name(excluded)!r} among shifts starting "
                f"with {letter_name(letter)}"
            ) from None
        if len(candidates) != 1:
            raise InternalInconsistencyError(
                f"{len(candidates) + 1} shifts start with {letter_name(letter)}, expected 2"
            )
        return candidates[0]


def symmetrized_shifts(p: Presentation) -> ShiftTable:
    return ShiftTable(p)
