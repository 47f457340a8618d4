"""Classical invariants of braid closures from the Bennequin surface.

The Seifert matrix uses one H_1 loop per pair of consecutive letters in the
same column.  Signatures are exact: rational Schur complements for omega = -1,
cyclotomic arithmetic for other roots of unity.  The reduced Burau
representation at t = -1 gives an independent determinant.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import gcd

from .braid_core import (BraidWord, ErleForm, Type1Form, algebraic_length,
                         closure_components, type1_to_erle_form)
from .cyclotomic import CycElem, hermitian_signature


class NotAKnotError(ValueError):
    """An invariant that is only defined for knots was asked of a link."""


@dataclass(frozen=True)
class SeifertMatrix:
    entries: tuple[tuple[int, ...], ...]
    components: int = 1
    connected: bool = True  # False when some column is unused: a split closure

    @property
    def size(self) -> int:
        return len(self.entries)

    def symmetrized(self) -> list[list[int]]:
        A = self.entries
        n = len(A)
        return [[A[i][j] + A[j][i] for j in range(n)] for i in range(n)]


@dataclass(frozen=True)
class RootOfUnity:
    """omega = exp(2 pi i k / p)."""

    k: int
    p: int

    def __post_init__(self):
        if self.p < 1:
            raise ValueError("order must be positive")
        g = gcd(self.k % self.p, self.p)
        object.__setattr__(self, "k", (self.k % self.p) // g)
        object.__setattr__(self, "p", self.p // g)


def _loops(w: BraidWord) -> list[tuple[int, int, int]]:
    cols: dict[int, list[int]] = {}
    for pos, g in enumerate(w.letters):
        cols.setdefault(abs(g), []).append(pos)
    out = []
    for col in sorted(cols):
        ks = cols[col]
        out += [(col, ks[r], ks[r + 1]) for r in range(len(ks) - 1)]
    return out


def seifert_matrix(w: BraidWord) -> SeifertMatrix:
    eps = [1 if g > 0 else -1 for g in w.letters]
    loops = _loops(w)
    n = len(loops)
    A = [[0] * n for _ in range(n)]
    for x, (col, k, kk) in enumerate(loops):
        A[x][x] = -(eps[k] + eps[kk]) // 2
        for y, (col2, l, ll) in enumerate(loops):
            if col2 == col and l == kk:
                # consecutive loops sharing band kk
                if eps[kk] > 0:
                    A[x][y] += 1
                else:
                    A[y][x] -= 1
            elif col2 == col + 1:
                if k < l < kk < ll:
                    A[x][y] += 1
                elif l < k < ll < kk:
                    A[x][y] -= 1
    used = {abs(g) for g in w.letters}
    connected = all(i in used for i in range(1, w.strands))
    return SeifertMatrix(tuple(tuple(r) for r in A), closure_components(w), connected)


# ---------------------------------------------------------------- exact algebra

def int_determinant(M: list[list[int]]) -> int:
    """Fraction-free Bareiss elimination."""
    n = len(M)
    if n == 0:
        return 1
    A = [list(r) for r in M]
    sign, prev = 1, 1
    for k in range(n - 1):
        if A[k][k] == 0:
            swap = next((i for i in range(k + 1, n) if A[i][k] != 0), None)
            if swap is None:
                return 0
            A[k], A[swap] = A[swap], A[k]
            sign = -sign
        for i in range(k + 1, n):
            for j in range(k + 1, n):
                A[i][j] = (A[i][j] * A[k][k] - A[i][k] * A[k][j]) // prev
        prev = A[k][k]
    return sign * A[n - 1][n - 1]


def symmetric_signature(M: list[list[int]]) -> int:
    F = [[Fraction(x) for x in row] for row in M]
    sig, _ = hermitian_signature(F, lambda x: x, lambda x: (x > 0) - (x < 0),
                                 lambda x: x == 0)
    return sig


def signature(A: SeifertMatrix) -> int:
    return symmetric_signature(A.symmetrized())


def determinant(A: SeifertMatrix) -> int:
    if not A.connected:
        return 0
    return abs(int_determinant(A.symmetrized()))


def tristram_levine(A: SeifertMatrix, omega: RootOfUnity) -> int:
    if omega.k == 0:
        return 0
    if omega.p == 2:
        return signature(A)
    n = A.size
    z = CycElem.zeta(omega.p, omega.k)
    u, ub = 1 - z, 1 - z.conj()
    E = A.entries
    H = [[u * E[i][j] + ub * E[j][i] for j in range(n)] for i in range(n)]
    sig, _ = hermitian_signature(H, lambda x: x.conj(), lambda x: x.real_sign(),
                                 lambda x: x.is_zero())
    return sig


# ---------------------------------------------------------------- Burau oracle

def burau_determinant(w: BraidWord) -> int:
    """|Delta(-1)| from the reduced Burau matrix at t = -1.

    det(I - rho(beta)) = (1 + t + ... + t^(n-1)) Delta(t); an even strand
    count is stabilized once so the prefactor is 1 at t = -1.
    """
    n, letters = w.strands, w.letters
    if n % 2 == 0:
        letters = letters + (n,)
        n += 1
    m = n - 1
    M = [[int(i == j) for j in range(m)] for i in range(m)]
    for g in letters:
        r = abs(g) - 1
        row = (-1, 1, 1) if g > 0 else (1, 1, -1)
        # right-multiply by a matrix that differs from I only in row r
        for i in range(m):
            mr = M[i][r]
            for off, c in zip((-1, 0, 1), row):
                j = r + off
                if 0 <= j < m:
                    M[i][j] = (M[i][j] if j != r else 0) + mr * c
    D = [[int(i == j) - M[i][j] for j in range(m)] for i in range(m)]
    return abs(int_determinant(D))


# ---------------------------------------------------------------- formulas

def erle_signature(e: ErleForm) -> int:
    """-4d + sum(a_i - b_i); zero-exponent blocks are merged first."""
    if not e.is_strict():
        e = e.reduced()
    return -4 * e.d + sum(a - b for a, b in e.pairs)


def _require_knot(w: BraidWord) -> None:
    c = closure_components(w)
    if c != 1:
        raise NotAKnotError(f"closure has {c} components")


def self_linking(w: BraidWord) -> int:
    _require_knot(w)
    return algebraic_length(w) - w.strands


def d3_branched_cover(w: BraidWord, p: int = 2) -> Fraction:
    """Ito's formula for d3 of the contact structure on the p-fold cover.

    p = 2 is the case used by the obstruction; larger p goes through exact
    cyclotomic arithmetic with numerically certified signs.
    """
    if p < 2:
        raise ValueError("cover degree must be at least 2")
    sl = self_linking(w)
    A = seifert_matrix(w)
    total = sum(tristram_levine(A, RootOfUnity(k, p)) for k in range(1, p))
    return Fraction(-3, 4) * total - Fraction(p - 1, 2) * sl - Fraction(p, 2)


@dataclass(frozen=True)
class ObstructionPredicates:
    sum_condition: bool
    d_condition: bool
    length_condition: bool
    signature_zero: bool

    @property
    def consistent(self) -> bool:
        """The sum and d conditions hold together exactly when the other two do."""
        return ((self.sum_condition and self.d_condition)
                == (self.length_condition and self.signature_zero))


def obstruction_predicates(t: Type1Form) -> ObstructionPredicates:
    w = t.expansion()
    if any(t.a):
        sig = erle_signature(type1_to_erle_form(t))
    else:
        sig = signature(seifert_matrix(w))
    return ObstructionPredicates(
        sum_condition=sum(t.a) == len(t.a) + 4,
        d_condition=t.d == 1,
        length_condition=algebraic_length(w) == 2,
        signature_zero=sig == 0,
    )


@dataclass(frozen=True)
class InvariantReport:
    determinant: int
    signature: int
    self_linking: int | None
    d3: Fraction | None
    components: int
    algebraic_length: int


def invariant_report(w: BraidWord) -> InvariantReport:
    A = seifert_matrix(w)
    comps = closure_components(w)
    knot = comps == 1
    return InvariantReport(
        determinant=determinant(A),
        signature=signature(A),
        self_linking=self_linking(w) if knot else None,
        d3=d3_branched_cover(w, 2) if knot else None,
        components=comps,
        algebraic_length=algebraic_length(w),
    )
