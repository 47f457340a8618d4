"""The Lagrangian-resolved handle diagram D(p, q).

Model: q x-monotone strands run left to right between the two attaching walls
of a single 1-handle.  Levels are counted bottom-up from 1.  The left wall
labels strands 1..q from the top, the right wall labels them 1..q from the
bottom, and a strand leaving the right wall at label i re-enters on the left
at label i.

Two regions, read left to right:

* A-region: the p top strands cross, as a band, over the q - p strands below.
  Crossing (k, j) is where the k-th band strand (counted from the lowest,
  left label p) meets the j-th lower strand.  It is labelled a, a1, a2, ...
  in the order (k, j) = (1, 1), (1, 2), ...
* B-region: the positive half twist that the Lagrangian resolution inserts at
  the handle.  Row r swaps levels r and r + 1 and has q - r crossings; rows
  are interleaved as a pyramid and labelled b1, b2, ... row by row from the
  bottom.

At every crossing one strand rises and one falls.  The falling strand has the
more negative slope and is the overstrand.  The marked point t sits on the
strand with left label 1, at its lowest segment.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from math import gcd
from typing import Sequence


@dataclass(frozen=True)
class Crossing:
    label: str
    kind: str    # "A" or "B"
    index: int   # 0 for a, i for a_i or b_i
    column: int
    level: int   # lower of the two swapped levels

    def name(self) -> str:
        return self.label


@dataclass(frozen=True)
class MarkedPoint:
    column: int  # t lies just left of this column
    level: int


@dataclass(frozen=True)
class DiagramD:
    p: int
    q: int
    crossings: tuple[Crossing, ...]
    marked_point: MarkedPoint
    rotation: int = 0
    maslov: tuple[int, ...] = field(default=())

    @property
    def columns(self) -> int:
        return len(self.crossings)

    def left_label(self, level: int) -> int:
        return self.q + 1 - level

    def right_label(self, level: int) -> int:
        return level

    @property
    def left_labels(self) -> tuple[int, ...]:
        """Labels on the left wall, top to bottom."""
        return tuple(range(1, self.q + 1))

    @property
    def right_labels(self) -> tuple[int, ...]:
        """Labels on the right wall, bottom to top."""
        return tuple(range(1, self.q + 1))

    def crossing(self, label: str) -> Crossing:
        for c in self.crossings:
            if c.label == label:
                return c
        raise KeyError(label)

    def strands_at(self, position: int) -> tuple[int, ...]:
        """Left labels of the strands on levels 1..q just left of ``position``."""
        at = [self.left_label(lv) for lv in range(1, self.q + 1)]
        for c in self.crossings[:position]:
            i = c.level - 1
            at[i], at[i + 1] = at[i + 1], at[i]
        return tuple(at)

    def handle_permutation(self) -> dict[int, int]:
        """Left label -> right label, through the diagram."""
        at = self.strands_at(self.columns)
        return {s: self.right_label(lv) for lv, s in enumerate(at, start=1)}


def _label(kind: str, index: int) -> str:
    if kind == "A":
        return "a" if index == 0 else f"a{index}"
    return f"b{index}"


def build_diagram(p: int, q: int) -> DiagramD:
    if not (0 < p < q and gcd(p, q) == 1):
        raise ValueError("need coprime 0 < p < q")
    r = q - p
    a_cells = []
    for k in range(1, p + 1):
        for j in range(1, r + 1):
            a_cells.append(((k + j, k), "A", (k - 1) * r + (j - 1), r + k - j))
    b_cells = []
    idx = 0
    for row in range(1, q):
        for c in range(1, q - row + 1):
            idx += 1
            b_cells.append(((2 * c + row - 1, row), "B", idx, row))
    cells = sorted(a_cells) + sorted(b_cells)
    crossings = tuple(Crossing(_label(kind, i), kind, i, col, lv)
                      for col, (_, kind, i, lv) in enumerate(cells))
    draft = DiagramD(p, q, crossings, MarkedPoint(0, 1), 0, (0,) * q)
    return DiagramD(p, q, crossings, _marked_point(draft), 0, (0,) * q)


def _marked_point(D: DiagramD) -> MarkedPoint:
    """Lowest segment of the strand with left label 1, rightmost end."""
    best = None
    level = D.q
    for col, c in enumerate(D.crossings):
        if c.level in (level, level - 1):
            # strand 1 is involved: the segment ending here is complete
            if best is None or level <= best[1]:
                best = (col, level)
            level = c.level if level == c.level + 1 else c.level + 1
    if best is None or level < best[1]:
        best = (D.columns, level)
    return MarkedPoint(*best)


# ---------------------------------------------------------------- validation

@dataclass(frozen=True)
class ValidationReport:
    violations: tuple[str, ...]
    components: int
    crossings: int

    @property
    def ok(self) -> bool:
        return not self.violations


def validate_diagram(D: DiagramD) -> ValidationReport:
    bad: list[str] = []
    p, q = D.p, D.q
    A = [c for c in D.crossings if c.kind == "A"]
    B = [c for c in D.crossings if c.kind == "B"]
    if len(D.crossings) != p * (q - p) + q * (q - 1) // 2:
        bad.append("crossing count")
    if sorted(c.index for c in A) != list(range(p * (q - p))):
        bad.append("A-class labels")
    if sorted(c.index for c in B) != list(range(1, q * (q - 1) // 2 + 1)):
        bad.append("B-class labels")
    if any(c.column != i for i, c in enumerate(D.crossings)):
        bad.append("column order")
    if any(not 1 <= c.level < q for c in D.crossings):
        bad.append("crossing level out of range")
    if A and B and max(c.column for c in A) > min(c.column for c in B):
        bad.append("A-region must precede the half twist")
    rows = [sum(1 for c in B if c.level == r) for r in range(1, q)]
    if rows != [q - r for r in range(1, q)]:
        bad.append("half-twist shape")
    else:
        # the half twist must reverse the order of the strands it receives
        start = len(A)
        before = D.strands_at(start)
        after = D.strands_at(D.columns)
        if after != tuple(reversed(before)):
            bad.append("half-twist shape")
        # labels run left to right within each row, rows bottom-up
        expect = 0
        for r in range(1, q):
            for c in sorted((c for c in B if c.level == r), key=lambda c: c.column):
                expect += 1
                if c.index != expect:
                    bad.append("half-twist labels")
                    break
    if D.rotation != 0:
        bad.append("rotation number")
    if tuple(D.maslov) != (0,) * q:
        bad.append("Maslov potentials")
    perm = D.handle_permutation()
    comps = _cycles(perm)
    if comps != 1:
        bad.append("single component")
    mp = D.marked_point
    if not (0 <= mp.column <= D.columns and 1 <= mp.level <= q):
        bad.append("marked point position")
    elif D.strands_at(mp.column)[mp.level - 1] != 1:
        bad.append("marked point strand")
    return ValidationReport(tuple(dict.fromkeys(bad)), comps, len(D.crossings))


def _cycles(perm: dict[int, int]) -> int:
    seen: set[int] = set()
    n = 0
    for s in perm:
        if s not in seen:
            n += 1
            while s not in seen:
                seen.add(s)
                s = perm[s]
    return n


# ---------------------------------------------------------------- drawing

def emit_svg(D: DiagramD) -> str:
    """A deterministic SVG drawing: walls, strands, crossing labels, t."""
    dx, dy, x0, y0 = 48, 36, 70, 40
    width = x0 * 2 + dx * D.columns
    height = y0 * 2 + dy * (D.q - 1)

    def X(pos: float) -> float:
        return x0 + dx * pos

    def Y(level: int) -> float:
        return y0 + dy * (D.q - level)

    out = [
        f'<svg xmlns="http://www.w3.org/2000/svg" width="{width}" height="{height}" '
        f'viewBox="0 0 {width} {height}" font-family="sans-serif" font-size="11">',
        '<rect width="100%" height="100%" fill="white"/>',
    ]
    top, bot = y0 - 18, Y(1) + 18
    for xw in (X(0) - 14, X(D.columns) + 6):
        out.append(f'<rect x="{xw:.1f}" y="{top:.1f}" width="8" height="{bot - top:.1f}" '
                   'fill="#ccc" stroke="black"/>')
    for lv in range(1, D.q + 1):
        out.append(f'<text x="{X(0) - 30:.1f}" y="{Y(lv) + 4:.1f}">{D.left_label(lv)}</text>')
        out.append(f'<text x="{X(D.columns) + 20:.1f}" y="{Y(lv) + 4:.1f}">'
                   f'{D.right_label(lv)}</text>')
    for c in D.crossings:
        xa, xb = X(c.column), X(c.column + 1)
        for lv in range(1, D.q + 1):
            if lv not in (c.level, c.level + 1):
                out.append(_line(xa, Y(lv), xb, Y(lv)))
        lo, hi = Y(c.level), Y(c.level + 1)
        xm, ym = (xa + xb) / 2, (lo + hi) / 2
        # the rising strand passes under: draw it with a gap
        gap = 0.22
        out.append(_line(xa, lo, xm - gap * (xb - xa) / 2, ym + gap * (lo - hi) / 2))
        out.append(_line(xm + gap * (xb - xa) / 2, ym - gap * (lo - hi) / 2, xb, hi))
        out.append(_line(xa, hi, xb, lo))
        out.append(f'<text x="{xm - 6:.1f}" y="{ym - 8:.1f}" fill="#a00">{c.label}</text>')
    if D.columns == 0:
        for lv in range(1, D.q + 1):
            out.append(_line(X(0), Y(lv), X(0), Y(lv)))
    mp = D.marked_point
    xm = X(mp.column) - 6 if mp.column > 0 else X(0) + 6
    out.append(f'<circle cx="{xm:.1f}" cy="{Y(mp.level):.1f}" r="3.5" fill="black"/>')
    out.append(f'<text x="{xm - 3:.1f}" y="{Y(mp.level) + 16:.1f}">t</text>')
    out.append("</svg>")
    return "\n".join(out) + "\n"


def _line(x1: float, y1: float, x2: float, y2: float) -> str:
    return (f'<line x1="{x1:.1f}" y1="{y1:.1f}" x2="{x2:.1f}" y2="{y2:.1f}" '
            'stroke="black" stroke-width="1.6"/>')


def diagram_to_dict(D: DiagramD) -> dict:
    return {
        "p": D.p,
        "q": D.q,
        "crossings": [{"label": c.label, "column": c.column, "level": c.level}
                      for c in D.crossings],
        "marked_point": {"column": D.marked_point.column,
                         "level": D.marked_point.level},
    }


def hand_built(p: int, q: int, crossings: Sequence[Crossing],
               marked: MarkedPoint) -> DiagramD:
    """Assemble a diagram from explicit parts (used for negative tests)."""
    return DiagramD(p, q, tuple(crossings), marked, 0, (0,) * q)
