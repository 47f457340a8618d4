"""Dehn twists on slopes of the once-punctured torus.

Twist letters reuse the braid alphabet: 1 = Ta, -1 = Ta^-1, 2 = Tb, -2 = Tb^-1.
Words act right to left, like composition of functions.
"""

from __future__ import annotations

from dataclasses import dataclass
from math import gcd
from typing import Union

from .braid_core import BraidWord

_NAMES = {1: "Ta", 2: "Tb"}


@dataclass(frozen=True)
class Slope:
    p: int
    q: int

    def __post_init__(self):
        if gcd(self.p, self.q) != 1:
            raise ValueError(f"slope ({self.p},{self.q}) is not primitive")

    def canonical(self) -> "Slope":
        """Representative with q > 0, or (1, 0)."""
        if self.q < 0 or (self.q == 0 and self.p < 0):
            return Slope(-self.p, -self.q)
        return self

    def as_tuple(self) -> tuple[int, int]:
        return (self.p, self.q)


@dataclass(frozen=True)
class TwistWord:
    letters: tuple[int, ...] = ()

    def __post_init__(self):
        if any(g not in (1, -1, 2, -2) for g in self.letters):
            raise ValueError("twist letters are +-1 (Ta) and +-2 (Tb)")

    def __mul__(self, other: "TwistWord") -> "TwistWord":
        return TwistWord(self.letters + other.letters)

    def inverse(self) -> "TwistWord":
        return TwistWord(tuple(-g for g in reversed(self.letters)))

    def blocks(self) -> list[tuple[int, int]]:
        """Maximal runs as (generator, signed exponent)."""
        out: list[tuple[int, int]] = []
        for g in self.letters:
            s = 1 if g > 0 else -1
            if out and out[-1][0] == abs(g) and (out[-1][1] > 0) == (s > 0):
                out[-1] = (abs(g), out[-1][1] + s)
            else:
                out.append((abs(g), s))
        return out

    def __str__(self) -> str:
        if not self.letters:
            return "1"
        return "·".join(_NAMES[g] + ("" if e == 1 else f"^{e}")
                        for g, e in self.blocks())


def _act(g: int, p: int, q: int) -> tuple[int, int]:
    if g == 1:
        return p + abs(q), q
    if g == -1:
        return p - abs(q), q
    if g == 2:
        return p, q - abs(p)
    return p, q + abs(p)


def apply_twist(tw: TwistWord, s: Slope) -> Slope:
    p, q = s.p, s.q
    for g in reversed(tw.letters):
        p, q = _act(g, p, q)
    return Slope(p, q)


def braid_to_twistword(B: BraidWord) -> TwistWord:
    if B.strands != 3:
        raise ValueError("the slope calculus needs a 3-strand braid")
    return TwistWord(B.letters)


@dataclass(frozen=True)
class Normalized:
    p: int
    q: int
    k: int


@dataclass(frozen=True)
class NotQHS:
    pass


@dataclass(frozen=True)
class UnknotSlope:
    pass


SlopeOutcome = Union[Normalized, NotQHS, UnknotSlope]


def normalize_slope(s: Slope) -> SlopeOutcome:
    """Shift p by a multiple of q into 0 < p' < q."""
    c = s.canonical()
    if c.q == 0:
        return NotQHS()
    if c.q == 1:
        return UnknotSlope()
    k = -(c.p // c.q)
    return Normalized(c.p + k * c.q, c.q, k)


def slope_to_twistword(s: Slope) -> TwistWord:
    """Greedy Euclid in {Ta, Tb^-1} with apply_twist(result, (1,0)) == s."""
    p, q = s.p, s.q
    if not 0 < p < q:
        raise ValueError("expected 0 < p < q")
    blocks: list[tuple[int, int]] = []
    while (p, q) != (1, 0):
        if q >= p:
            n = q // p
            if q - n * p == 0 and p > 1:
                n -= 1
            blocks.append((-2, n))
            q -= n * p
        else:
            n = p // q
            if p - n * q == 0:
                # only when q = 1: stop at (1, 1) and let a final Tb^-1 finish
                n -= 1
            blocks.append((1, n))
            p -= n * q
    letters: list[int] = []
    for g, n in blocks:
        letters += [g] * n
    return TwistWord(tuple(letters))
