"""End-to-end obstruction pipeline for a 3-braid, stopping at the first failed gate.

Gates, in order: strand count (input error), closure components, algebraic
length 2, d3 = -1/2, signature 0.  With a band factorization the run goes on:
two-band reduction to sigma1 B sigma1 B^-1, twist word, slope, normalization,
diagram, DGA (d^2 = 0 is a consistency check) and witness.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from typing import Any

from .braid_core import (BraidWord, QuasipositiveFactorization, algebraic_length,
                         braids_equal, closure_components, conjugate_by_rotation,
                         format_braid, to_sigma1_form)
from .dga_engine import build_dga, check_d_squared
from .diagram_builder import build_diagram, validate_diagram
from .invariants import invariant_report
from .sh_witness import WitnessError, witness_report
from .slope_calculus import (Normalized, NotQHS, Slope, apply_twist,
                             braid_to_twistword, normalize_slope)

TARGET_D3 = Fraction(-1, 2)


class InputError(ValueError):
    """Malformed input: exit code 2."""


class ConsistencyError(RuntimeError):
    """A computed object violated an identity it must satisfy: exit code 3."""


@dataclass(frozen=True)
class Conclusion:
    kind: str  # "Unknot", "ObstructedBy", "WitnessCertified", "NotApplicable"
    detail: str = ""

    def __str__(self) -> str:
        return f"{self.kind}({self.detail})" if self.detail else self.kind


@dataclass
class ObstructionReport:
    word: str
    stages: dict[str, Any] = field(default_factory=dict)
    conclusion: Conclusion = Conclusion("NotApplicable", "pipeline did not run")

    def to_dict(self) -> dict:
        return {"word": self.word, "stages": self.stages,
                "conclusion": {"kind": self.conclusion.kind,
                               "detail": self.conclusion.detail}}


def _band_relation(w: BraidWord, f: QuasipositiveFactorization) -> str | None:
    """How the band product relates to w, or None if it provably differs."""
    flat = f.flatten()
    if braids_equal(flat, w):
        return "equal"
    if conjugate_by_rotation(w, flat):
        return "conjugate"
    a, b = invariant_report(flat), invariant_report(w)
    same = (a.determinant, a.signature, a.components, a.algebraic_length) == \
           (b.determinant, b.signature, b.components, b.algebraic_length)
    return "invariants agree" if same else None


def obstruct(w: BraidWord, bands: QuasipositiveFactorization | None = None) -> ObstructionReport:
    if w.strands != 3:
        raise InputError("the obstruction applies to 3-strand braids only")
    if bands is not None and bands.strands != 3:
        raise InputError("band factorization must be on 3 strands")
    rep = ObstructionReport(format_braid(w))
    st = rep.stages

    def stop(kind: str, detail: str = "") -> ObstructionReport:
        rep.conclusion = Conclusion(kind, detail)
        return rep

    comps = closure_components(w)
    st["components"] = comps
    if comps != 1:
        return stop("ObstructedBy", "components")
    length = algebraic_length(w)
    st["length"] = length
    if length != 2:
        return stop("ObstructedBy", "length")
    inv = invariant_report(w)
    st["invariants"] = {"determinant": inv.determinant, "signature": inv.signature,
                        "self_linking": inv.self_linking, "d3": str(inv.d3)}
    if inv.d3 != TARGET_D3:
        return stop("ObstructedBy", "d3")
    if inv.signature != 0:
        return stop("ObstructedBy", "signature")
    if bands is None:
        return stop("NotApplicable", "no band factorization supplied")

    if len(bands.bands) != 2:
        raise InputError("expected exactly two bands")
    relation = _band_relation(w, bands)
    if relation is None:
        raise InputError("band product is not conjugate to the input word")
    B = to_sigma1_form(bands)
    tw = braid_to_twistword(B)
    slope = apply_twist(tw, Slope(1, 0))
    outcome = normalize_slope(slope)
    st["slope"] = {"bands": relation, "B": format_braid(B, prefix=False),
                   "twist_word": str(tw), "slope": list(slope.as_tuple()),
                   "outcome": type(outcome).__name__}
    if isinstance(outcome, NotQHS):
        return stop("ObstructedBy", "slope")
    if not isinstance(outcome, Normalized):
        return stop("Unknot")
    p, q = outcome.p, outcome.q
    st["slope"]["normalized"] = [p, q]
    st["slope"]["shift"] = outcome.k

    D = build_diagram(p, q)
    check = validate_diagram(D)
    if not check.ok:
        raise ConsistencyError("diagram invalid: " + ", ".join(check.violations))
    G = build_dga(D)
    dd = check_d_squared(G)
    st["dga"] = {"generators": len(G.generators), "d_squared_ok": dd.ok}
    if not dd.ok:
        raise ConsistencyError("d^2 != 0 on " + ", ".join(sorted(dd.failures)))
    try:
        wr = witness_report(p, q)
    except WitnessError as exc:
        raise ConsistencyError(str(exc)) from exc
    st["witness"] = wr.to_dict()
    if not wr.verdict:
        raise ConsistencyError("witness cycle failed its checks")
    return stop("WitnessCertified", f"slope ({p},{q})")
