"""Contact homology DGA of D(p, q): internal handle algebra plus disk counts.

Disk model.  Strands are x-monotone, so an admissible disk has its positive
corner in the left (W) or right (E) quadrant of a crossing.  Two boundary
paths leave it in the same horizontal direction.  The top path may turn only
into a south quadrant and the bottom path only into a north quadrant.  These
are the Reeb-negative quadrants.  Both paths end together on the handle wall,
where the disk has exactly one chord corner c0_{i,j}.

Boundary words are read counterclockwise from the positive corner.  t is a
central coefficient: the bottom path runs with the knot orientation (left to
right) and the top path against it.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable

from .diagram_builder import DiagramD
from .ncpoly import NCPoly, Word

# Orientation sign of each quadrant; every crossing here has even degree, so
# the south and east quadrants carry -1.  Handle corners carry +1 since all
# Maslov potentials vanish.  Among the 16 uniform quadrant tables only this
# one and its negative give d^2 = 0 across the family (checked in the tests).
QUADRANT_SIGNS = {"N": 1, "S": -1, "E": -1, "W": 1}

NODE_LIMIT = 10 ** 6


class DiskSearchLimit(RuntimeError):
    pass


def c0(i: int, j: int) -> str:
    return f"c0_{i}_{j}"


def c1(i: int, j: int) -> str:
    return f"c1_{i}_{j}"


@dataclass(frozen=True)
class Generator:
    name: str
    kind: str  # "external", "c0" or "c1"
    grading: int


@dataclass
class DGA:
    q: int
    generators: tuple[Generator, ...]
    differential: dict[str, NCPoly]

    def __post_init__(self):
        self._grading = {g.name: g.grading for g in self.generators}

    def grading(self, name: str) -> int:
        return self._grading[name]

    def word_grading(self, word: Word) -> int:
        return sum(self._grading[g] for g in word)

    def external(self) -> list[str]:
        return [g.name for g in self.generators if g.kind == "external"]

    def d(self, name: str) -> NCPoly:
        return self.differential.get(name, NCPoly())

    def d_word(self, word: Word) -> NCPoly:
        """Signed Leibniz rule."""
        acc: dict = {}
        deg = 0
        for i, g in enumerate(word):
            sign = -1 if deg % 2 else 1
            left, right = word[:i], word[i + 1:]
            for (tp, w), c in self.d(g).items():
                key = (tp, left + w + right)
                acc[key] = acc.get(key, 0) + sign * c
            deg += self._grading[g]
        return NCPoly(acc)

    def d_poly(self, f: NCPoly) -> NCPoly:
        acc: dict = {}
        for (tp, w), c in f.items():
            for (tp2, w2), c2 in self.d_word(w).items():
                key = (tp + tp2, w2)
                acc[key] = acc.get(key, 0) + c * c2
        return NCPoly(acc)

    def d_squared(self, name: str) -> NCPoly:
        return self.d_poly(self.d(name))


def internal_dga(q: int) -> DGA:
    if q < 1:
        raise ValueError("need at least one strand")
    gens = [Generator(c0(i, j), "c0", -1)
            for i in range(1, q + 1) for j in range(i + 1, q + 1)]
    gens += [Generator(c1(i, j), "c1", 1)
             for i in range(1, q + 1) for j in range(1, q + 1)]
    diff: dict[str, NCPoly] = {}
    for i in range(1, q + 1):
        for j in range(i + 1, q + 1):
            diff[c0(i, j)] = NCPoly({(0, (c0(i, m), c0(m, j))): 1
                                     for m in range(i + 1, j)})
    for i in range(1, q + 1):
        for j in range(1, q + 1):
            terms = {}
            if i == j:
                terms[(0, ())] = 1
            for m in range(i + 1, q + 1):
                terms[(0, (c0(i, m), c1(m, j)))] = 1
            for m in range(1, j):
                terms[(0, (c1(i, m), c0(m, j)))] = 1
            diff[c1(i, j)] = NCPoly(terms)
    return DGA(q, tuple(gens), diff)


# ---------------------------------------------------------------- disks

@dataclass(frozen=True)
class Disk:
    positive_corner: str
    side: str  # "left" or "right": where the disk lies relative to its corner
    word: Word  # negative corners, counterclockwise from the positive corner
    chord: tuple[int, int]
    sign: int
    t_power: int
    top_path: tuple[int, ...]  # levels crossed, in the direction of travel
    bottom_path: tuple[int, ...]

    @property
    def negative_corners(self) -> Word:
        return self.word


class _Search:
    """Memoized completions of a path pair from a position to the wall."""

    def __init__(self, D: DiagramD, quad: dict[str, int]):
        self.D = D
        self.quad = quad
        self.memo: dict = {}
        self.nodes = 0

    def _tick(self):
        self.nodes += 1
        if self.nodes > NODE_LIMIT:
            raise DiskSearchLimit("disk search exceeded its node budget")

    def _t(self, position: int, top: int, bottom: int) -> int:
        mp = self.D.marked_point
        if mp.column != position:
            return 0
        return (bottom == mp.level) - (top == mp.level)

    def _steps(self, M: int, top: int, bottom: int, label: str):
        """Options (new_top, top_turn, new_bottom, bottom_turn) at one crossing.

        The rules are the same in both directions once levels are read on the
        near side of the crossing: a path on level M (top) or M + 1 (bottom)
        may stay put by turning onto the other strand.
        """
        if M == bottom and M + 1 == top:
            return []
        if M == top:
            tops = [(M + 1, None), (M, label)]
        elif M + 1 == top:
            tops = [(M, None)]
        else:
            tops = [(top, None)]
        if M + 1 == bottom:
            bots = [(M, None), (M + 1, label)]
        elif M == bottom:
            bots = [(M + 1, None)]
        else:
            bots = [(bottom, None)]
        return [(t, tc, b, bc) for t, tc in tops for b, bc in bots if t > b]

    def complete(self, direction: int, j: int, top: int, bottom: int):
        """Completions from just before column j (right) or just after it (left).

        Each completion is (top corners, bottom corners, t, sign, chord,
        top levels, bottom levels) with corners in order of travel.
        """
        key = (direction, j, top, bottom)
        hit = self.memo.get(key)
        if hit is not None:
            return hit
        self._tick()
        D = self.D
        position = j if direction > 0 else j + 1
        t_here = self._t(position, top, bottom)
        out = []
        if (direction > 0 and j == D.columns) or (direction < 0 and j < 0):
            if direction > 0:
                chord = (D.right_label(bottom), D.right_label(top))
            else:
                chord = (D.left_label(top), D.left_label(bottom))
            out.append(((), (), t_here, 1, chord, (top,), (bottom,)))
        else:
            c = D.crossings[j]
            for nt, tc, nb, bc in self._steps(c.level, top, bottom, c.label):
                s = (self.quad["S"] if tc else 1) * (self.quad["N"] if bc else 1)
                for tcs, bcs, tp, sg, chord, tl, bl in self.complete(
                        direction, j + direction, nt, nb):
                    out.append(((tc,) + tcs if tc else tcs,
                                (bc,) + bcs if bc else bcs,
                                tp + t_here, sg * s, chord,
                                (top,) + tl, (bottom,) + bl))
        res = tuple(out)
        self.memo[key] = res
        return res


def enumerate_disks(D: DiagramD, x: str,
                    quadrant_signs: dict[str, int] | None = None) -> list[Disk]:
    search = _Search(D, quadrant_signs or QUADRANT_SIGNS)
    return _disks_for(search, D.crossing(x))


def _disks_for(search: _Search, cr) -> list[Disk]:
    quad = search.quad
    out: list[Disk] = []
    M, j = cr.level, cr.column
    for side, direction, start in (("left", -1, j - 1), ("right", 1, j + 1)):
        pos_sign = quad["W"] if side == "left" else quad["E"]
        for tcs, bcs, tp, sg, chord, tl, bl in search.complete(direction, start, M + 1, M):
            name = c0(*chord)
            if side == "right":
                word = bcs + (name,) + tuple(reversed(tcs))
            else:
                word = tcs + (name,) + tuple(reversed(bcs))
            out.append(Disk(cr.label, side, word, chord, pos_sign * sg, tp, tl, bl))
    return out


def external_generators(D: DiagramD) -> list[str]:
    a = sorted((c for c in D.crossings if c.kind == "A"), key=lambda c: c.index)
    b = sorted((c for c in D.crossings if c.kind == "B"), key=lambda c: c.index)
    return [c.label for c in a + b]


def build_dga(D: DiagramD, quadrant_signs: dict[str, int] | None = None) -> DGA:
    base = internal_dga(D.q)
    search = _Search(D, quadrant_signs or QUADRANT_SIGNS)
    ext = external_generators(D)
    diff = dict(base.differential)
    for name in ext:
        terms: dict = {}
        for disk in _disks_for(search, D.crossing(name)):
            key = (disk.t_power, disk.word)
            terms[key] = terms.get(key, 0) + disk.sign
        diff[name] = NCPoly(terms)
    gens = tuple(Generator(n, "external", 0) for n in ext) + base.generators
    return DGA(D.q, gens, diff)


# ---------------------------------------------------------------- checks

@dataclass(frozen=True)
class DSquaredReport:
    failures: dict  # name -> nonzero d^2 over Z
    failures_gf2: dict  # name -> nonzero d^2 mod 2
    grading_failures: tuple[str, ...]

    @property
    def ok(self) -> bool:
        return not self.failures and not self.grading_failures

    @property
    def ok_gf2(self) -> bool:
        return not self.failures_gf2


def check_d_squared(G: DGA, names: Iterable[str] | None = None) -> DSquaredReport:
    bad, bad2, badg = {}, {}, []
    for name in (names if names is not None else [g.name for g in G.generators]):
        dd = G.d_squared(name)
        if not dd.is_zero():
            bad[name] = dd
        if not dd.mod2().is_zero():
            bad2[name] = dd.mod2()
        want = G.grading(name) - 1
        if any(G.word_grading(w) != want for _, _, w in G.d(name).terms()):
            badg.append(name)
    return DSquaredReport(bad, bad2, tuple(badg))


def dga_to_dict(G: DGA, d_squared_ok: bool | None = None) -> dict:
    out = {
        "generators": [{"name": g.name, "grading": g.grading} for g in G.generators],
        "differentials": {
            g.name: [{"coeff": c, "t_power": tp, "word": list(w)}
                     for c, tp, w in G.d(g.name).terms()]
            for g in G.generators
        },
    }
    if d_squared_ok is not None:
        out["d_squared_ok"] = d_squared_ok
    return out
