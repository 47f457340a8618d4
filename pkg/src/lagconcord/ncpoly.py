"""Noncommutative polynomials over Z[t, t^-1] with t central.

A term is keyed by (t_power, word) where ``word`` is a tuple of generator names.
The empty word is the unit (the idempotent e1 of a one-component link).
"""

from __future__ import annotations

from typing import Iterable, Iterator, Mapping

Word = tuple[str, ...]
Key = tuple[int, Word]


class NCPoly:
    __slots__ = ("_terms",)

    def __init__(self, terms: Mapping[Key, int] | Iterable[tuple[Key, int]] = ()):
        acc: dict[Key, int] = {}
        items = terms.items() if isinstance(terms, Mapping) else terms
        for key, c in items:
            if c:
                acc[key] = acc.get(key, 0) + c
        self._terms = {k: c for k, c in acc.items() if c}

    @classmethod
    def gen(cls, name: str, coeff: int = 1, t_power: int = 0) -> "NCPoly":
        return cls({(t_power, (name,)): coeff})

    @classmethod
    def unit(cls, coeff: int = 1) -> "NCPoly":
        return cls({(0, ()): coeff})

    @classmethod
    def monomial(cls, word: Iterable[str], coeff: int = 1, t_power: int = 0) -> "NCPoly":
        return cls({(t_power, tuple(word)): coeff})

    def terms(self) -> list[tuple[int, int, Word]]:
        """(coeff, t_power, word) in canonical order."""
        return [(c, tp, w) for (tp, w), c in sorted(self._terms.items())]

    def items(self) -> Iterator[tuple[Key, int]]:
        return iter(self._terms.items())

    def __len__(self) -> int:
        return len(self._terms)

    def __bool__(self) -> bool:
        return bool(self._terms)

    def is_zero(self) -> bool:
        return not self._terms

    def __eq__(self, other) -> bool:
        if isinstance(other, int) and other == 0:
            return self.is_zero()
        return isinstance(other, NCPoly) and self._terms == other._terms

    def __hash__(self):
        return hash(frozenset(self._terms.items()))

    def __add__(self, other: "NCPoly") -> "NCPoly":
        acc = dict(self._terms)
        for k, c in other._terms.items():
            acc[k] = acc.get(k, 0) + c
        return NCPoly(acc)

    def __neg__(self) -> "NCPoly":
        return NCPoly({k: -c for k, c in self._terms.items()})

    def __sub__(self, other: "NCPoly") -> "NCPoly":
        return self + (-other)

    def __mul__(self, other) -> "NCPoly":
        if isinstance(other, int):
            return NCPoly({k: c * other for k, c in self._terms.items()})
        acc: dict[Key, int] = {}
        for (tp1, w1), c1 in self._terms.items():
            for (tp2, w2), c2 in other._terms.items():
                k = (tp1 + tp2, w1 + w2)
                acc[k] = acc.get(k, 0) + c1 * c2
        return NCPoly(acc)

    def __rmul__(self, other: int) -> "NCPoly":
        return self * other

    def shift_t(self, k: int) -> "NCPoly":
        return NCPoly({(tp + k, w): c for (tp, w), c in self._terms.items()})

    def mod2(self) -> "NCPoly":
        return NCPoly({k: c % 2 for k, c in self._terms.items()})

    def letters(self) -> set[str]:
        return {g for (_, w) in self._terms for g in w}

    def __repr__(self) -> str:
        return f"NCPoly({self})"

    def __str__(self) -> str:
        if not self._terms:
            return "0"
        parts: list[str] = []
        for c, tp, w in self.terms():
            body = "*".join(w) if w else "e1"
            if tp:
                body = ("t" if tp == 1 else f"t^{tp}") + ("*" + body if w else "")
                if not w:
                    body = "t" if tp == 1 else f"t^{tp}"
            mag = abs(c)
            term = body if mag == 1 else f"{mag}*{body}"
            if not parts:
                parts.append(term if c > 0 else f"-{term}")
            else:
                parts.append(("+ " if c > 0 else "- ") + term)
        return " ".join(parts)
