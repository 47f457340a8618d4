"""Exact arithmetic in cyclotomic fields Q(zeta_N) and Hermitian signatures.

Elements are coefficient vectors in the power basis modulo the N-th cyclotomic
polynomial.  Signs of real elements are certified numerically: a nonzero field
element is evaluated at rising precision until the error bound is beaten.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from typing import Callable, Sequence

import mpmath


def _poly_divmod(num: list, den: list) -> tuple[list, list]:
    """Coefficient lists, lowest degree first; ``den`` must be nonzero."""
    num = list(num)
    out = [Fraction(0)] * max(len(num) - len(den) + 1, 1)
    lead = den[-1]
    while len(num) >= len(den) and any(num):
        shift = len(num) - len(den)
        c = Fraction(num[-1]) / lead
        out[shift] = c
        for i, d in enumerate(den):
            num[shift + i] -= c * d
        while num and num[-1] == 0:
            num.pop()
    return out, num


def _trim(p: list) -> list:
    p = list(p)
    while p and p[-1] == 0:
        p.pop()
    return p


@lru_cache(maxsize=None)
def cyclotomic_poly(n: int) -> tuple[int, ...]:
    """Integer coefficients of Phi_n, lowest degree first."""
    num = [Fraction(-1)] + [Fraction(0)] * (n - 1) + [Fraction(1)]
    for d in range(1, n):
        if n % d == 0:
            num, rem = _poly_divmod(num, [Fraction(c) for c in cyclotomic_poly(d)])
            assert not _trim(rem)
    return tuple(int(c) for c in _trim(num))


@dataclass(frozen=True)
class CycElem:
    n: int
    coeffs: tuple[Fraction, ...]

    @classmethod
    def make(cls, n: int, coeffs: Sequence) -> "CycElem":
        phi = cyclotomic_poly(n)
        deg = len(phi) - 1
        c = [Fraction(x) for x in coeffs]
        if len(c) > deg:
            _, c = _poly_divmod(c, [Fraction(x) for x in phi])
        c = list(c) + [Fraction(0)] * (deg - len(c))
        return cls(n, tuple(c))

    @classmethod
    def zeta(cls, n: int, k: int = 1) -> "CycElem":
        k %= n
        return cls.make(n, [0] * k + [1])

    @classmethod
    def const(cls, n: int, value) -> "CycElem":
        return cls.make(n, [value])

    def _lift(self, other) -> "CycElem":
        if isinstance(other, CycElem):
            return other
        return CycElem.const(self.n, other)

    def __add__(self, other):
        o = self._lift(other)
        return CycElem(self.n, tuple(a + b for a, b in zip(self.coeffs, o.coeffs)))

    __radd__ = __add__

    def __neg__(self):
        return CycElem(self.n, tuple(-a for a in self.coeffs))

    def __sub__(self, other):
        return self + (-self._lift(other))

    def __rsub__(self, other):
        return self._lift(other) - self

    def __mul__(self, other):
        o = self._lift(other)
        prod = [Fraction(0)] * (2 * len(self.coeffs))
        for i, a in enumerate(self.coeffs):
            if a:
                for j, b in enumerate(o.coeffs):
                    if b:
                        prod[i + j] += a * b
        return CycElem.make(self.n, prod)

    __rmul__ = __mul__

    def inverse(self) -> "CycElem":
        if self.is_zero():
            raise ZeroDivisionError("inverse of zero")
        # extended Euclid over Q[x] against Phi_n
        r0, r1 = [Fraction(c) for c in cyclotomic_poly(self.n)], _trim(self.coeffs)
        s0, s1 = [Fraction(0)], [Fraction(1)]
        while len(r1) > 1:
            qt, rem = _poly_divmod(r0, r1)
            r0, r1 = r1, _trim(rem)
            s0, s1 = s1, _poly_sub(s0, _poly_mul(qt, s1))
        c = r1[0]
        return CycElem.make(self.n, [x / c for x in s1])

    def __truediv__(self, other):
        return self * self._lift(other).inverse()

    def conj(self) -> "CycElem":
        out = [Fraction(0)] * self.n
        for k, a in enumerate(self.coeffs):
            out[(-k) % self.n] += a
        return CycElem.make(self.n, out)

    def is_zero(self) -> bool:
        return not any(self.coeffs)

    def __eq__(self, other):
        if isinstance(other, CycElem):
            return self.n == other.n and self.coeffs == other.coeffs
        return self == self._lift(other)

    def __hash__(self):
        return hash((self.n, self.coeffs))

    def numeric(self, dps: int = 30) -> mpmath.mpc:
        with mpmath.workdps(dps):
            z = mpmath.exp(2j * mpmath.pi / self.n)
            return mpmath.fsum(mpmath.mpf(a.numerator) / a.denominator * z ** k
                               for k, a in enumerate(self.coeffs) if a)

    def real_sign(self) -> int:
        """Certified sign of a real element."""
        if self.is_zero():
            return 0
        scale = sum(abs(a) for a in self.coeffs)
        for dps in (30, 60, 120, 240, 480, 960):
            with mpmath.workdps(dps):
                v = self.numeric(dps).real
                bound = mpmath.mpf(float(scale) + 1) * mpmath.mpf(10) ** (8 - dps)
                if abs(v) > bound:
                    return 1 if v > 0 else -1
        raise ArithmeticError("could not certify the sign of a field element")


def _poly_mul(a: list, b: list) -> list:
    out = [Fraction(0)] * (len(a) + len(b) - 1) if a and b else []
    for i, x in enumerate(a):
        for j, y in enumerate(b):
            out[i + j] += x * y
    return out


def _poly_sub(a: list, b: list) -> list:
    n = max(len(a), len(b))
    a = list(a) + [Fraction(0)] * (n - len(a))
    b = list(b) + [Fraction(0)] * (n - len(b))
    return _trim([x - y for x, y in zip(a, b)]) or [Fraction(0)]


def hermitian_signature(H: list[list], conj: Callable, sign: Callable,
                        is_zero: Callable) -> tuple[int, int]:
    """(signature, rank) of a Hermitian matrix by exact Schur complements."""
    H = [list(row) for row in H]
    pos = neg = 0
    while H:
        n = len(H)
        p = next((i for i in range(n) if not is_zero(H[i][i])), None)
        if p is None:
            pair = next(((i, j) for i in range(n) for j in range(n)
                         if not is_zero(H[i][j])), None)
            if pair is None:
                break
            i, j = pair
            c = H[j][i]
            # e_i <- e_i + c e_j makes the (i, i) entry 2|H_ij|^2
            for r in range(n):
                H[r][i] = H[r][i] + H[r][j] * c
            cc = conj(c)
            for col in range(n):
                H[i][col] = H[i][col] + cc * H[j][col]
            p = i
        d = H[p][p]
        s = sign(d)
        if s > 0:
            pos += 1
        else:
            neg += 1
        rest = [k for k in range(n) if k != p]
        H = [[H[k][l] - H[k][p] * H[p][l] / d for l in rest] for k in rest]
    return pos - neg, pos + neg
