"""Canonical descriptors for non-elliptic braided webs in a punctured annulus.

The annulus has one marked point removed from each boundary circle; both
circles are oriented the same way as the core curve.  A non-elliptic braided
web in it is determined by its twist tuple ``(n1, n2, t1, t2)`` together with
the two boundary words, so the descriptor below is a faithful normal form and
no planar diagram is ever drawn.

* ``n1`` / ``n2`` count increasing / decreasing strands (arcs crossing the
  annulus left-to-right / right-to-left).
* When strands of both directions are present the web is a strict braid and
  ``t1`` / ``t2`` are the total twist numbers of the increasing / decreasing
  strands.  When only one direction occurs, the slot of the missing direction
  instead records a count of parallel closed circles, so ``t2`` (resp. ``t1``)
  is that circle count in the left (resp. right) line-circle picture; with no
  strands at all, ``(t1, t2)`` is a pair of circle counts, one per
  orientation.
* Realizable tuples are exactly those with ``ti >= 0`` whenever ``ni == 0``.

Boundary words record the strand direction (``+`` increasing, ``-``
decreasing) at each intersection point, read along the boundary orientation
starting from the puncture.  Reconstruction from bare tuples uses the
block-form convention: all ``+`` before all ``-`` on both boundaries.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass
from typing import Iterable

from .errors import ImageViolation, WordMismatch

_WORD_ALPHABET = frozenset("+-")


class WebKind(enum.Enum):
    STRICT_BRAID = "strict-braid"
    LINE_CIRCLE_LEFT = "line-circle-left"
    LINE_CIRCLE_RIGHT = "line-circle-right"
    PURE_CIRCLES = "pure-circles"


@dataclass(frozen=True, slots=True)
class TwistTuple:
    """Twist coordinates ``(n1, n2, t1, t2)`` of an annulus web."""

    n1: int
    n2: int
    t1: int
    t2: int

    def __post_init__(self) -> None:
        if self.n1 < 0 or self.n2 < 0:
            raise ImageViolation(f"strand counts must be nonnegative: ({self.n1}, {self.n2})")

    @classmethod
    def from_strands(cls, increasing: Iterable[int], decreasing: Iterable[int]) -> "TwistTuple":
        """Tuple of a strict braid given the individual strand twist numbers."""
        inc = list(increasing)
        dec = list(decreasing)
        return cls(len(inc), len(dec), sum(inc), sum(dec))

    def in_image(self) -> bool:
        """True iff some annulus web has this tuple: ``ti >= 0`` when ``ni == 0``."""
        return (self.n1 > 0 or self.t1 >= 0) and (self.n2 > 0 or self.t2 >= 0)

    @classmethod
    def from_dict(cls, data: dict) -> "TwistTuple":
        values = []
        for key in ("n1", "n2", "t1", "t2"):
            value = data[key]
            if isinstance(value, bool) or not isinstance(value, int):
                raise TypeError(f"field {key!r} must be an integer, got {value!r}")
            values.append(value)
        return cls(*values)

    def to_dict(self) -> dict:
        return {"n1": self.n1, "n2": self.n2, "t1": self.t1, "t2": self.t2}


def _check_word(word: str, n1: int, n2: int, which: str) -> None:
    if not _WORD_ALPHABET.issuperset(word):
        raise WordMismatch(f"{which} contains symbols other than '+'/'-': {word!r}")
    plus = word.count("+")
    minus = len(word) - plus
    if plus != n1 or minus != n2:
        raise WordMismatch(
            f"{which} has {plus} '+' and {minus} '-', expected {n1} and {n2}"
        )


@dataclass(frozen=True, slots=True)
class AnnulusDescriptor:
    """A twist tuple plus its two boundary words; always valid once built.

    Structural equality is semantic equality: two webs with equal tuples and
    equal words are the same web.
    """

    twists: TwistTuple
    word0: str
    word1: str

    def __post_init__(self) -> None:
        if not self.twists.in_image():
            raise ImageViolation(
                f"twist {self.twists.to_dict()} has ti < 0 with ni = 0"
            )
        _check_word(self.word0, self.twists.n1, self.twists.n2, "word0")
        _check_word(self.word1, self.twists.n1, self.twists.n2, "word1")

    @property
    def kind(self) -> WebKind:
        t = self.twists
        if t.n1 == 0 and t.n2 == 0:
            return WebKind.PURE_CIRCLES
        if t.n2 == 0 and t.t2 > 0:
            return WebKind.LINE_CIRCLE_LEFT
        if t.n1 == 0 and t.t1 > 0:
            return WebKind.LINE_CIRCLE_RIGHT
        return WebKind.STRICT_BRAID

    @classmethod
    def from_dict(cls, data: dict) -> "AnnulusDescriptor":
        twists = TwistTuple.from_dict(data)
        word0 = data["word0"]
        word1 = data["word1"]
        if not isinstance(word0, str) or not isinstance(word1, str):
            raise TypeError("word0/word1 must be strings over '+'/'-'")
        return cls(twists, word0, word1)

    def to_dict(self) -> dict:
        out = self.twists.to_dict()
        out["word0"] = self.word0
        out["word1"] = self.word1
        return out


def twist_coords(d: AnnulusDescriptor) -> TwistTuple:
    """The twist tuple of a descriptor (descriptors are coordinate-native)."""
    return d.twists


def validate(twists: TwistTuple, word0: str, word1: str) -> AnnulusDescriptor:
    """Build a descriptor, or raise ImageViolation / WordMismatch."""
    return AnnulusDescriptor(twists, word0, word1)


def canonical_descriptor(twists: TwistTuple) -> AnnulusDescriptor:
    """Descriptor with block-form words (all ``+`` before all ``-``)."""
    word = "+" * twists.n1 + "-" * twists.n2
    return AnnulusDescriptor(twists, word, word)
