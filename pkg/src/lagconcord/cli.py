"""Command-line front end: one subcommand per module, JSON or plain text out.

Exit codes: 0 report produced, 2 input error, 3 internal consistency failure.
"""

from __future__ import annotations

import argparse
import json
import sys
from concurrent.futures import ProcessPoolExecutor
from dataclasses import asdict

from .braid_core import (BraidWord, QuasipositiveFactorization,
                         format_braid, murasugi_classify, parse_braid)
from .dga_engine import DiskSearchLimit, build_dga, check_d_squared, dga_to_dict
from .diagram_builder import build_diagram, diagram_to_dict, emit_svg, validate_diagram
from .invariants import burau_determinant, invariant_report
from .pipeline import ConsistencyError, InputError, obstruct
from .sh_witness import WitnessError, h1_order, linking_matrix_h1, witness_report
from .slope_calculus import (Normalized, Slope, apply_twist, braid_to_twistword,
                             normalize_slope, slope_to_twistword)

EXIT_OK, EXIT_INPUT, EXIT_CONSISTENCY = 0, 2, 3


# ---------------------------------------------------------------- input parsing

def _word(text: str, strands: int | None = None) -> BraidWord:
    try:
        return parse_braid(text, strands)
    except ValueError as exc:  # BraidSyntaxError included; it carries the offset
        raise InputError(str(exc)) from exc


def parse_band(text: str) -> tuple[BraidWord, int]:
    """``CONJ:GEN``; the conjugator may be empty."""
    conj, sep, gen = text.rpartition(":")
    if not sep or gen.strip() not in ("1", "2"):
        raise InputError(f"band {text!r} is not CONJ:GEN with GEN 1 or 2")
    return _word(conj, 3), int(gen)


def parse_batch_obstruct(line: str) -> tuple[str, list[str]]:
    """``WORD | CONJ:GEN ; CONJ:GEN`` (the band part is optional)."""
    word, _, rest = line.partition("|")
    bands = [b.strip() for b in rest.split(";") if b.strip()]
    return word.strip(), bands


def _pq(values: list[str]) -> tuple[int, int]:
    try:
        p, q = (int(v) for v in values)
    except ValueError as exc:
        raise InputError("expected two integers p q") from exc
    return p, q


# ---------------------------------------------------------------- subcommands

def cmd_classify(text: str, opts: dict) -> dict:
    w = _word(text, 3)
    form = murasugi_classify(w)
    out = {"word": format_braid(w), "type": type(form).__name__}
    if hasattr(form, "word"):
        out["form"] = {}
    else:
        out["form"] = {k: list(v) if isinstance(v, tuple) else v
                       for k, v in asdict(form).items()}
    return out


def cmd_invariants(text: str, opts: dict) -> dict:
    w = _word(text)
    r = invariant_report(w)
    return {
        "word": format_braid(w),
        "strands": w.strands,
        "components": r.components,
        "length": r.algebraic_length,
        "sl": r.self_linking,
        "determinant": r.determinant,
        "signature": r.signature,
        "d3_p2": None if r.d3 is None else f"{r.d3.numerator}/{r.d3.denominator}",
        "burau_determinant": burau_determinant(w) if r.components == 1 else None,
    }


def cmd_slope(text: str, opts: dict) -> dict:
    if opts.get("slope"):
        p, q = _pq(text.replace("/", " ").split())
        try:
            tw = slope_to_twistword(Slope(p, q))
        except ValueError as exc:
            raise InputError(str(exc)) from exc
        return {"slope": [p, q], "twist_word": str(tw), "letters": list(tw.letters)}
    w = _word(text, 3)
    tw = braid_to_twistword(w)
    s = apply_twist(tw, Slope(1, 0))
    outcome = normalize_slope(s)
    out = {"word": format_braid(w), "twist_word": str(tw), "slope": list(s.as_tuple()),
           "outcome": type(outcome).__name__}
    if isinstance(outcome, Normalized):
        out["normalized"] = [outcome.p, outcome.q]
        out["shift"] = outcome.k
    return out


def _diagram(text: str):
    p, q = _pq(text.split())
    try:
        return build_diagram(p, q)
    except ValueError as exc:
        raise InputError(str(exc)) from exc


def cmd_diagram(text: str, opts: dict) -> dict:
    D = _diagram(text)
    rep = validate_diagram(D)
    if not rep.ok:
        raise ConsistencyError("diagram invalid: " + ", ".join(rep.violations))
    if opts.get("emit_svg"):
        with open(opts["emit_svg"], "w", encoding="utf-8") as fh:
            fh.write(emit_svg(D))
    out = diagram_to_dict(D)
    out["valid"] = rep.ok
    return out


def cmd_dga(text: str, opts: dict) -> dict:
    D = _diagram(text)
    G = build_dga(D)
    rep = check_d_squared(G)
    if not rep.ok:
        raise ConsistencyError("d^2 != 0 on " + ", ".join(sorted(rep.failures)))
    out = dga_to_dict(G, rep.ok)
    if opts.get("external_only"):
        ext = set(G.external())
        out["generators"] = [g for g in out["generators"] if g["name"] in ext]
        out["differentials"] = {k: v for k, v in out["differentials"].items() if k in ext}
    out["p"], out["q"] = D.p, D.q
    return out


def cmd_witness(text: str, opts: dict) -> dict:
    if opts.get("braid"):
        w = _word(text, 3)
        outcome = normalize_slope(apply_twist(braid_to_twistword(w), Slope(1, 0)))
        if not isinstance(outcome, Normalized):
            raise InputError(f"braid gives no normalized slope ({type(outcome).__name__})")
        p, q = outcome.p, outcome.q
    else:
        p, q = _pq(text.split())
        if not (0 < p < q):
            raise InputError("need 0 < p < q")
    try:
        rep = witness_report(p, q)
    except WitnessError as exc:
        raise ConsistencyError(str(exc)) from exc
    except ValueError as exc:
        raise InputError(str(exc)) from exc
    return rep.to_dict()


def cmd_h1(text: str, opts: dict) -> dict:
    if opts.get("linking"):
        k, framing = _pq(text.split())
        try:
            return {"k": k, "framing": framing, "h1_order": linking_matrix_h1(k, framing)}
        except ValueError as exc:
            raise InputError(str(exc)) from exc
    w = _word(text)
    return {"word": format_braid(w), "h1_order": h1_order(w)}


def cmd_obstruct(text: str, opts: dict) -> dict:
    bands_text = list(opts.get("band") or [])
    if opts.get("batch_line"):
        text, bands_text = parse_batch_obstruct(text)
    w = _word(text, 3)
    bands = None
    if bands_text:
        try:
            bands = QuasipositiveFactorization(3, tuple(parse_band(b) for b in bands_text))
        except ValueError as exc:
            raise InputError(str(exc)) from exc
    return obstruct(w, bands).to_dict()


COMMANDS = {
    "classify": cmd_classify,
    "invariants": cmd_invariants,
    "slope": cmd_slope,
    "diagram": cmd_diagram,
    "dga": cmd_dga,
    "witness": cmd_witness,
    "h1": cmd_h1,
    "obstruct": cmd_obstruct,
}


# ---------------------------------------------------------------- driver

def run_one(command: str, text: str, opts: dict) -> tuple[int, dict]:
    try:
        return EXIT_OK, COMMANDS[command](text, opts)
    except InputError as exc:
        return EXIT_INPUT, {"input": text, "error": str(exc)}
    except (ConsistencyError, DiskSearchLimit) as exc:
        return EXIT_CONSISTENCY, {"input": text, "error": str(exc)}


def dumps(obj: dict) -> str:
    return json.dumps(obj, sort_keys=True, ensure_ascii=False)


def render_text(obj, prefix: str = "") -> list[str]:
    lines: list[str] = []
    if isinstance(obj, dict):
        for k in sorted(obj):
            v = obj[k]
            key = f"{prefix}.{k}" if prefix else k
            if isinstance(v, dict):
                lines += render_text(v, key)
            else:
                lines.append(f"{key}: {dumps(v) if isinstance(v, list) else v}")
    return lines


def _batch_worker(job: tuple[str, str, dict]) -> tuple[int, dict]:
    return run_one(*job)


def run_batch(command: str, path: str, opts: dict, workers: int | None = None) -> tuple[int, list[dict]]:
    if path == "-":
        lines = sys.stdin.read().splitlines()
    else:
        with open(path, encoding="utf-8") as fh:
            lines = fh.read().splitlines()
    items = [ln.strip() for ln in lines if ln.strip() and not ln.lstrip().startswith("#")]
    jobs = [(command, ln, dict(opts, batch_line=True, emit_svg=None)) for ln in items]
    if len(jobs) > 1:
        with ProcessPoolExecutor(max_workers=workers) as pool:
            results = list(pool.map(_batch_worker, jobs))
    else:
        results = [_batch_worker(j) for j in jobs]
    code = max((c for c, _ in results), default=EXIT_OK)
    return code, [r for _, r in results]


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--json", action="store_true", default=argparse.SUPPRESS,
                        help="machine-readable output")
    common.add_argument("--batch", metavar="FILE", default=argparse.SUPPRESS,
                        help="one input per line ('-' for stdin), processed in parallel")
    common.add_argument("--emit-svg", metavar="FILE", default=argparse.SUPPRESS,
                        help="write the diagram as SVG")

    parser = argparse.ArgumentParser(
        prog="lagconcord", parents=[common],
        description="3-braid invariants, slopes, handle diagrams, DGAs and witness cycles.")
    sub = parser.add_subparsers(dest="command", required=True)

    def add(name, help_, nargs="*", metavar="INPUT"):
        sp = sub.add_parser(name, parents=[common], help=help_)
        sp.add_argument("input", nargs=nargs, metavar=metavar,
                        help="braid word or numbers; read from stdin when omitted")
        return sp

    add("classify", "Murasugi normal form of a 3-braid")
    add("invariants", "determinant, signature, sl, d3 of the closure")
    sp = add("slope", "twist word and slope of a braid B, or Euclid word of a slope")
    sp.add_argument("--slope", action="store_true", help="input is p/q; print its twist word")
    add("diagram", "build and validate D(p,q)", metavar="P Q")
    sp = add("dga", "DGA of D(p,q) with the d^2 check", metavar="P Q")
    sp.add_argument("--external-only", action="store_true")
    sp = add("witness", "witness cycle report for D(p,q)", metavar="P Q")
    sp.add_argument("--braid", action="store_true", help="input is a braid B instead of p q")
    sp = add("h1", "order of H_1 of the branched double cover")
    sp.add_argument("--linking", action="store_true", help="input is k framing")
    sp = add("obstruct", "run the full obstruction pipeline")
    sp.add_argument("--band", action="append", metavar="CONJ:GEN",
                    help="one band CONJ sigma_GEN CONJ^-1; give twice")
    return parser


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    # the option actions are shared with every subparser, so defaults stay SUPPRESS
    for name in ("json", "batch", "emit_svg"):
        if not hasattr(args, name):
            setattr(args, name, False if name == "json" else None)
    opts = {k: v for k, v in vars(args).items() if k not in ("command", "input", "json", "batch")}
    if args.batch:
        code, results = run_batch(args.command, args.batch, opts)
        for r in results:
            print(dumps(r))
        return code
    text = " ".join(args.input) if args.input else sys.stdin.read().strip()
    code, result = run_one(args.command, text, opts)
    if args.json:
        print(dumps(result))
    else:
        out = sys.stdout if code == EXIT_OK else sys.stderr
        print("\n".join(render_text(result)), file=out)
    return code


if __name__ == "__main__":
    sys.exit(main())
