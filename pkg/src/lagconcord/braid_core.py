"""Braid words on n strands, the text grammar, and 3-braid normal forms.

Letters are signed generator indices: ``g > 0`` is sigma_g and ``g < 0`` its
inverse.  Words are kept freely reduced; braid relations are applied only by the
explicit rewrite functions below.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from typing import Iterable, Sequence, Union


class BraidSyntaxError(ValueError):
    """Malformed braid text; ``offset`` is the byte offset of the problem."""

    def __init__(self, message: str, offset: int):
        super().__init__(f"{message} (at byte {offset})")
        self.offset = offset


def free_reduce(letters: Iterable[int]) -> tuple[int, ...]:
    out: list[int] = []
    for g in letters:
        if out and out[-1] == -g:
            out.pop()
        else:
            out.append(g)
    return tuple(out)


def cyclic_reduce(letters: Sequence[int]) -> tuple[int, ...]:
    w = list(free_reduce(letters))
    while len(w) >= 2 and w[0] == -w[-1]:
        w = w[1:-1]
    return tuple(w)


@dataclass(frozen=True)
class BraidWord:
    strands: int
    letters: tuple[int, ...] = ()

    def __post_init__(self):
        if self.strands < 1:
            raise ValueError("strand count must be positive")
        letters = tuple(int(g) for g in self.letters)
        for g in letters:
            if g == 0 or abs(g) >= self.strands:
                raise ValueError(
                    f"generator {g} out of range for {self.strands} strands")
        object.__setattr__(self, "letters", free_reduce(letters))

    @classmethod
    def of(cls, strands: int, *letters: int) -> "BraidWord":
        return cls(strands, tuple(letters))

    def __len__(self) -> int:
        return len(self.letters)

    def __iter__(self):
        return iter(self.letters)

    def __mul__(self, other: "BraidWord") -> "BraidWord":
        self._check_same(other)
        return BraidWord(self.strands, self.letters + other.letters)

    def __pow__(self, k: int) -> "BraidWord":
        if k < 0:
            return self.inverse() ** (-k)
        return BraidWord(self.strands, self.letters * k)

    def _check_same(self, other: "BraidWord") -> None:
        if other.strands != self.strands:
            raise ValueError("strand counts differ")

    def inverse(self) -> "BraidWord":
        return BraidWord(self.strands, tuple(-g for g in reversed(self.letters)))

    def mirror(self) -> "BraidWord":
        return BraidWord(self.strands, tuple(-g for g in self.letters))

    def permutation(self) -> tuple[int, ...]:
        """Image of each starting position after reading the word left to right."""
        pos = list(range(self.strands))
        for g in self.letters:
            i = abs(g) - 1
            pos[i], pos[i + 1] = pos[i + 1], pos[i]
        # pos[k] is the strand now at position k; invert to strand -> position
        perm = [0] * self.strands
        for k, s in enumerate(pos):
            perm[s] = k
        return tuple(perm)

    def __str__(self) -> str:
        return format_braid(self)


def sigma(strands: int, *letters: int) -> BraidWord:
    return BraidWord(strands, tuple(letters))


def full_twist(k: int = 1) -> BraidWord:
    """(sigma1 sigma2)^(3k) on 3 strands."""
    return BraidWord(3, (1, 2) * 3) ** k


# ---------------------------------------------------------------- grammar

_TOKEN = re.compile(r"([+-]?\d+)(?:\^([+-]?\d+))?")
_PREFIX = re.compile(r"\s*strands\s*=\s*(\d+)\s*;")


def parse_braid(text: str, strands: int | None = None) -> BraidWord:
    """Parse ``[strands=n;] tok tok ...`` where ``tok`` is ``[-]g[^e]``.

    Tokens are separated by whitespace or commas.  A negative exponent inverts
    the letter.  Without an explicit strand count the word lives on
    ``1 + max|g|`` strands (or ``strands`` when given by the caller).
    """
    pos = 0
    m = _PREFIX.match(text)
    if m:
        strands = int(m.group(1))
        pos = m.end()
    letters: list[int] = []
    n = len(text)
    while pos < n:
        if text[pos] in " \t\r\n,":
            pos += 1
            continue
        m = _TOKEN.match(text, pos)
        if not m:
            raise BraidSyntaxError("expected a generator token",
                                   len(text[:pos].encode()))
        g = int(m.group(1))
        e = int(m.group(2)) if m.group(2) is not None else 1
        if g == 0:
            raise BraidSyntaxError("generator index 0", len(text[:pos].encode()))
        if e == 0:
            raise BraidSyntaxError("zero exponent", len(text[:pos].encode()))
        end = m.end()
        if end < n and text[end] not in " \t\r\n,":
            raise BraidSyntaxError("expected a separator", len(text[:end].encode()))
        letters.extend([g if e > 0 else -g] * abs(e))
        pos = end
    top = max((abs(g) for g in letters), default=0)
    if strands is None:
        strands = max(top + 1, 1)
    elif top >= strands:
        raise ValueError(f"generator {top} needs more than {strands} strands")
    return BraidWord(strands, tuple(letters))


def format_braid(w: BraidWord, prefix: bool = True) -> str:
    """Inverse of ``parse_braid``, grouping runs into ``g^e`` tokens."""
    toks: list[str] = []
    i = 0
    L = w.letters
    while i < len(L):
        j = i
        while j < len(L) and L[j] == L[i]:
            j += 1
        g, e = abs(L[i]), (j - i) * (1 if L[i] > 0 else -1)
        toks.append(str(g) if e == 1 else f"{g}^{e}")
        i = j
    body = " ".join(toks)
    return f"strands={w.strands}; {body}".rstrip() if prefix else body


# ---------------------------------------------------------------- closures

def closure_components(w: BraidWord) -> int:
    perm = w.permutation()
    seen = [False] * w.strands
    cycles = 0
    for s in range(w.strands):
        if not seen[s]:
            cycles += 1
            while not seen[s]:
                seen[s] = True
                s = perm[s]
    return cycles


def algebraic_length(w: BraidWord) -> int:
    return sum(1 if g > 0 else -1 for g in w.letters)


def cyclically_equal(u: BraidWord, v: BraidWord) -> bool:
    """True when the cyclic reductions of u and v agree up to rotation."""
    if u.strands != v.strands:
        return False
    a, b = cyclic_reduce(u.letters), cyclic_reduce(v.letters)
    if len(a) != len(b):
        return False
    if not a:
        return True
    doubled = a + a
    return any(doubled[i:i + len(b)] == b for i in range(len(a)))


# Laurent polynomials in t as {exponent: coefficient}; 2x2 matrices of them.
_Laurent = dict
_BURAU3 = {
    1: (({1: -1}, {0: 1}), ({}, {0: 1})),
    -1: (({-1: -1}, {-1: 1}), ({}, {0: 1})),
    2: (({0: 1}, {}), ({1: 1}, {1: -1})),
    -2: (({0: 1}, {}), ({0: 1}, {-1: -1})),
}


def _lmul(f: _Laurent, g: _Laurent) -> _Laurent:
    out: dict[int, int] = {}
    for a, x in f.items():
        for b, y in g.items():
            out[a + b] = out.get(a + b, 0) + x * y
    return {e: c for e, c in out.items() if c}


def _ladd(f: _Laurent, g: _Laurent) -> _Laurent:
    out = dict(f)
    for e, c in g.items():
        out[e] = out.get(e, 0) + c
    return {e: c for e, c in out.items() if c}


def burau3(w: BraidWord) -> tuple[tuple[_Laurent, ...], ...]:
    """Reduced Burau matrix of a 3-braid; faithful, so it decides equality."""
    if w.strands != 3:
        raise ValueError("burau3 needs a 3-strand braid")
    M = (({0: 1}, {}), ({}, {0: 1}))
    for g in w.letters:
        S = _BURAU3[g]
        M = tuple(tuple(_ladd(_lmul(M[i][0], S[0][j]), _lmul(M[i][1], S[1][j]))
                        for j in range(2)) for i in range(2))
    return M


def braids_equal(u: BraidWord, v: BraidWord) -> bool:
    """Equality in B_3 (not just as words)."""
    return u.strands == v.strands == 3 and burau3(u) == burau3(v)


def conjugate_by_rotation(u: BraidWord, v: BraidWord) -> bool:
    """True when v equals, in B_3, some cyclic rotation of u."""
    if u.strands != v.strands:
        return False
    target = burau3(v)
    a = u.letters
    return burau3(u) == target or any(
        burau3(BraidWord(3, a[i:] + a[:i])) == target for i in range(1, len(a)))


# ---------------------------------------------------------------- Murasugi forms

@dataclass(frozen=True)
class Type1Form:
    d: int
    a: tuple[int, ...]

    def __post_init__(self):
        object.__setattr__(self, "a", tuple(int(x) for x in self.a))
        if any(x < 0 for x in self.a):
            raise ValueError("type 1 exponents must be nonnegative")

    def expansion(self) -> BraidWord:
        body: list[int] = []
        for ai in self.a:
            body += [1] + [-2] * ai
        return full_twist(self.d) * BraidWord(3, tuple(body))


@dataclass(frozen=True)
class Type2:
    d: int
    m: int

    def expansion(self) -> BraidWord:
        return full_twist(self.d) * BraidWord(3, (2 if self.m > 0 else -2,) * abs(self.m))


@dataclass(frozen=True)
class Type3:
    d: int
    k: int

    def expansion(self) -> BraidWord:
        return full_twist(self.d) * BraidWord(3, (-1,) * -self.k + (-2,))


@dataclass(frozen=True)
class Unrecognized:
    word: BraidWord


@dataclass(frozen=True)
class ErleForm:
    """(sigma1 sigma2)^(3d) sigma1^-a1 sigma2^b1 ... sigma1^-am sigma2^bm."""

    d: int
    pairs: tuple[tuple[int, int], ...]

    def __post_init__(self):
        pairs = tuple((int(a), int(b)) for a, b in self.pairs)
        if any(a < 0 or b < 0 for a, b in pairs):
            raise ValueError("Erle exponents must be nonnegative")
        object.__setattr__(self, "pairs", pairs)

    def expansion(self) -> BraidWord:
        body: list[int] = []
        for a, b in self.pairs:
            body += [-1] * a + [2] * b
        return full_twist(self.d) * BraidWord(3, tuple(body))

    def is_strict(self) -> bool:
        return bool(self.pairs) and all(a >= 1 and b >= 1 for a, b in self.pairs)

    def reduced(self) -> "ErleForm":
        """Merge blocks with a zero exponent into their cyclic neighbours.

        The expansion changes only by conjugation, so closure invariants agree.
        """
        pairs = [list(p) for p in self.pairs]
        if not any(a for a, _ in pairs) or not any(b for _, b in pairs):
            raise ValueError("cannot reduce: a torus-type word has no Erle form")
        # rotate so the list starts with a nonzero sigma1 block
        while pairs[0][0] == 0:
            pairs = pairs[1:] + pairs[:1]
        out: list[list[int]] = []
        for a, b in pairs:
            if a == 0:
                out[-1][1] += b
            elif out and out[-1][1] == 0:
                out[-1][0] += a
                out[-1][1] = b
            else:
                out.append([a, b])
        if out[-1][1] == 0:
            # trailing sigma1 block wraps into the first one
            a_last = out.pop()[0]
            out[0][0] += a_last
        return ErleForm(self.d, tuple((a, b) for a, b in out))


Classification = Union[Type1Form, Type2, Type3, Unrecognized]


def _strip_twist(letters: tuple[int, ...], d: int) -> tuple[int, ...]:
    return free_reduce(full_twist(-d).letters + letters)


def _match_type3(r: tuple[int, ...]) -> int | None:
    if len(r) in (2, 3, 4) and r[-1] == -2 and all(g == -1 for g in r[:-1]):
        return -(len(r) - 1)
    return None


def _match_type2(r: tuple[int, ...]) -> int | None:
    if all(g == 2 for g in r):
        return len(r)
    if all(g == -2 for g in r):
        return -len(r)
    return None


def _match_type1(r: tuple[int, ...]) -> tuple[int, ...] | None:
    if not r or r[0] != 1 or any(g not in (1, -2) for g in r):
        return None
    a: list[int] = []
    for g in r:
        if g == 1:
            a.append(0)
        else:
            a[-1] += 1
    return tuple(a)


def murasugi_classify(w: BraidWord) -> Classification:
    """Syntactic match against the three Murasugi templates.

    The word is cyclically reduced, then every rotation and every plausible
    full-twist exponent is tried.  Conjugacy is not solved.
    """
    if w.strands != 3:
        raise ValueError("Murasugi classification needs a 3-strand word")
    base = cyclic_reduce(w.letters)
    rotations = [base[i:] + base[:i] for i in range(len(base))] or [()]
    bound = len(base) // 6 + 2
    ds = sorted(range(-bound, bound + 1), key=lambda d: (abs(d), -d))
    for matcher, build in (
        (_match_type3, lambda d, v: Type3(d, v)),
        (_match_type2, lambda d, v: Type2(d, v)),
        (_match_type1, lambda d, v: Type1Form(d, v)),
    ):
        for d in ds:
            for rot in rotations:
                v = matcher(_strip_twist(rot, d))
                if v is not None:
                    return build(d, v)
    return Unrecognized(w)


# ---------------------------------------------------------------- rewrites

@dataclass(frozen=True)
class QuasipositiveFactorization:
    strands: int
    bands: tuple[tuple[BraidWord, int], ...]

    def __post_init__(self):
        for conj, g in self.bands:
            if conj.strands != self.strands or not 1 <= g < self.strands:
                raise ValueError("band does not fit the strand count")

    def flatten(self) -> BraidWord:
        out = BraidWord(self.strands)
        for conj, g in self.bands:
            out = out * conj * BraidWord(self.strands, (g,)) * conj.inverse()
        return out


def to_sigma1_form(f: QuasipositiveFactorization) -> BraidWord:
    """B with sigma1 B sigma1 B^-1 conjugate to the two-band product."""
    if f.strands != 3:
        raise ValueError("expected a 3-strand factorization")
    if len(f.bands) != 2:
        raise ValueError("expected exactly two bands")
    tail = BraidWord(3, (-1, -2))
    primed = [conj * tail if g == 2 else conj for conj, g in f.bands]
    return primed[0].inverse() * primed[1]


@dataclass(frozen=True)
class PositiveWord:
    word: BraidWord


@dataclass(frozen=True)
class NegativeWord:
    word: BraidWord


@dataclass(frozen=True)
class UnknotOutcome:
    pass


def type3_rewrite(d: int, k: int):
    """Rewrite of the type 3 braid into a word of one sign, or the unknot."""
    if k not in (-1, -2, -3):
        raise ValueError("k must be -1, -2 or -3")
    if d <= 0:
        return NegativeWord(Type3(d, k).expansion())
    if k == -1:
        return PositiveWord(full_twist(d - 1) * sigma(3, 1, 2, 1, 1))
    if k == -2:
        return PositiveWord(full_twist(d - 1) * sigma(3, 2, 1, 1))
    if d == 1:
        return UnknotOutcome()
    return PositiveWord(full_twist(d - 2) * sigma(3, 1, 2, 1, 1, 2, 2, 1, 1))


def type1_to_erle_form(t: Type1Form) -> ErleForm:
    if not any(t.a):
        raise ValueError("all exponents vanish; the word has no Erle form")
    return ErleForm(t.d, tuple((ai, 1) for ai in t.a))
