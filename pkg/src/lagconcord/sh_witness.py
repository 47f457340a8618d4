"""The witness cycle c = t^s a + sum eps_i t^(s_i) b_i and its checks.

The cycle runs over a and the bottom row b_1..b_{q-1} of the half twist.  Each
of these has a differential made of single-chord monomials, and consecutive
members of the chain cancel one shared chord.  Coefficients are solved along
that chain from the engine's own signs, then checked against the full
differential.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass

from .braid_core import BraidWord
from .diagram_builder import DiagramD, build_diagram, validate_diagram
from .dga_engine import DGA, build_dga
from .invariants import determinant, int_determinant, seifert_matrix
from .ncpoly import NCPoly, Word


class WitnessError(RuntimeError):
    """The chain could not be built or solved: a diagram or sign bug."""


def witness_support(q: int) -> list[str]:
    return ["a"] + [f"b{i}" for i in range(1, q)]


def _chord_coefficients(G: DGA, name: str) -> dict[Word, tuple[int, int]]:
    """word -> (sign, t_power) for a differential that is linear in chords."""
    out: dict[Word, tuple[int, int]] = {}
    for c, tp, w in G.d(name).terms():
        if w in out or abs(c) != 1:
            raise WitnessError(f"d{name} has a non-monomial coefficient on {' '.join(w)}")
        out[w] = (c, tp)
    return out


def cycle_chain(G: DGA, support: list[str]) -> list[tuple[str, int, int]]:
    """Solve the matching constraints; (generator, sign, t_power) in chain order."""
    coeffs = {g: _chord_coefficients(G, g) for g in support}
    holders: dict[Word, list[str]] = {}
    for g in support:
        for w in coeffs[g]:
            holders.setdefault(w, []).append(g)
    start = support[0]
    solved: dict[str, tuple[int, int]] = {start: (1, 0)}
    order = [start]
    queue = deque([start])
    while queue:
        g = queue.popleft()
        sg, tg = solved[g]
        for w, (cg, kg) in coeffs[g].items():
            for h in holders[w]:
                if h == g:
                    continue
                ch, kh = coeffs[h][w]
                # x_g c_g + x_h c_h = 0 on the shared chord
                val = (-sg * cg * ch, tg + kg - kh)
                if h in solved:
                    if solved[h] != val:
                        raise WitnessError(f"sign/t-power system unsolvable at {h}")
                    continue
                solved[h] = val
                order.append(h)
                queue.append(h)
    missing = [g for g in support if g not in solved]
    if missing:
        raise WitnessError("matching chain disconnected at " + ", ".join(missing))
    low = min(t for _, t in solved.values())
    return [(g, solved[g][0], solved[g][1] - low) for g in order]


def construct_cycle(G: DGA, p: int, q: int) -> NCPoly:
    if G.q != q:
        raise ValueError("DGA does not match the diagram size")
    chain = cycle_chain(G, witness_support(q))
    c = NCPoly({(t, (g,)): s for g, s, t in chain})
    if not verify_cycle(G, c):
        raise WitnessError("sign/t-power system unsolvable: residual differential")
    return c


def verify_cycle(G: DGA, c: NCPoly) -> bool:
    return G.d_poly(c).is_zero()


def linear_monomial_scan(G: DGA) -> set[str]:
    """External generators that occur alone as a monomial of some differential."""
    ext = set(G.external())
    hits: set[str] = set()
    for g in G.generators:
        for _, _, w in G.d(g.name).terms():
            if len(w) == 1 and w[0] in ext:
                hits.add(w[0])
    return hits


def render_cycle(chain: list[tuple[str, int, int]]) -> str:
    parts = []
    for g, s, t in chain:
        body = g if t == 0 else (f"t*{g}" if t == 1 else f"t^{t}*{g}")
        if not parts:
            parts.append(body if s > 0 else f"-{body}")
        else:
            parts.append(("+ " if s > 0 else "- ") + body)
    return " ".join(parts)


def strands_monotone(D: DiagramD) -> bool:
    """Every strand advances one column per crossing and only swaps adjacent levels."""
    if not validate_diagram(D).ok:
        return False
    prev = D.strands_at(0)
    for col, c in enumerate(D.crossings, start=1):
        now = D.strands_at(col)
        moved = [lv for lv in range(D.q) if now[lv] != prev[lv]]
        if moved != [c.level - 1, c.level]:
            return False
        prev = now
    return sorted(prev) == list(range(1, D.q + 1))


@dataclass(frozen=True)
class WitnessReport:
    p: int
    q: int
    cycle: NCPoly
    rendered: str
    closed: bool
    not_in_image: bool
    delta_ho_zero: bool

    @property
    def verdict(self) -> bool:
        return self.closed and self.not_in_image and self.delta_ho_zero

    def to_dict(self) -> dict:
        return {
            "p": self.p,
            "q": self.q,
            "cycle": self.rendered,
            "terms": [{"coeff": c, "t_power": tp, "generator": w[0]}
                      for c, tp, w in self.cycle.terms()],
            "closed": self.closed,
            "not_in_image": self.not_in_image,
            "delta_ho_zero": self.delta_ho_zero,
            "verdict": self.verdict,
        }


def witness_report(p: int, q: int) -> WitnessReport:
    D = build_diagram(p, q)
    G = build_dga(D)
    support = witness_support(q)
    chain = cycle_chain(G, support)
    c = NCPoly({(t, (g,)): s for g, s, t in chain})
    closed = verify_cycle(G, c)
    # a linear cycle avoiding every linear monomial cannot be a boundary; the
    # Hochschild part vanishes on linear words and on x-monotone strands
    not_in_image = not (linear_monomial_scan(G) & set(support))
    linear = all(len(w) == 1 for _, _, w in c.terms())
    return WitnessReport(p, q, c, render_cycle(chain), closed, not_in_image,
                         linear and strands_monotone(D))


# ---------------------------------------------------------------- H_1 orders

def h1_order(w: BraidWord) -> int:
    """|H_1| of the branched double cover, i.e. the determinant of the closure.

    Links are accepted: the family sigma1 sigma2^-k sigma1 sigma2^k has three
    components for even k.  A zero result means H_1 is infinite.
    """
    return determinant(seifert_matrix(w))


def linking_matrix_h1(k: int, framing: int) -> int:
    if k < 1:
        raise ValueError("k must be positive")
    return abs(int_determinant([[0, k], [k, framing]]))
