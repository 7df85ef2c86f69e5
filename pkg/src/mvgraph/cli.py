"""Command line interface: ``mvgraph {eval,check,analyze,casestudy,concepts}``.

Every command taking a frame accepts a JSON frame file path or the word
``casestudy`` for the embedded three-database frame.
"""

from __future__ import annotations

import argparse
import json
import sys
from typing import Sequence

from .casestudy import case_study, case_study_document, reproduce
from .correspondence import AxiomId, check_condition
from .formula import ParseError, parse, parse_sequent, print_formula
from .frame_io import FrameFileError, LoadedFrame, load_frame, load_frame_document
from .graph import UnknownLabelError, check_E_compatibility, check_E_reflexive
from .model import UnknownAtomError, evaluate, sequent_true, sequent_valid_on_frame
from .polarity import BudgetExceeded, enumerate_concepts
from .render import intent_table, render_extent, render_intent

DEFAULT_BUDGET = 10**6


def _load(path: str, close: bool = False) -> LoadedFrame:
    if path == "casestudy":
        doc = case_study_document()
    else:
        if not close:
            return load_frame(path)
        with open(path, encoding="utf-8") as fh:
            doc = json.load(fh)
    if close:
        doc["close"] = True
    return load_frame_document(doc)


def _numerators(loaded: LoadedFrame) -> dict:
    A = loaded.algebra
    out = {"carrier": list(A.labels)}
    if A.denominator is not None:
        out["denominator"] = A.denominator
    return out


def cmd_eval(args) -> int:
    loaded = _load(args.frame, args.close)
    phi = parse(args.formula)
    c = evaluate(loaded.model, phi)
    G = loaded.graph
    if args.format == "json":
        doc = {
            "formula": print_formula(phi),
            "nodes": list(G.nodes),
            **_numerators(loaded),
            "extent": G.as_table(c.extent).tolist(),
            "intent": c.intent.values.tolist(),
        }
        print(json.dumps(doc))
    else:
        text = print_formula(phi)
        print(render_extent(G, c.extent, f"[[ {text} ]]"))
        print()
        print(render_intent(G, c.intent, f"(| {text} |)"))
    return 0


def cmd_check(args) -> int:
    loaded = _load(args.frame, args.close)
    lhs, rhs = parse_sequent(args.sequent)
    text = f"{print_formula(lhs)} |- {print_formula(rhs)}"
    if args.mode == "model":
        verdict = sequent_true(loaded.model, lhs, rhs)
        print(f"{text}: {'true' if verdict else 'false'} in model")
        return 0 if verdict else 1
    result = sequent_valid_on_frame(loaded.frame, lhs, rhs, args.budget)
    if result.valid:
        print(f"{text}: valid on frame ({result.checked} valuations checked)")
        return 0
    print(f"{text}: not valid on frame; counterexample:")
    for atom, concept in (result.counterexample or {}).items():
        print(render_extent(loaded.graph, concept.extent, f"[[ {atom} ]]"))
    return 1


def analyze_rows(loaded: LoadedFrame) -> list[tuple[str, str, bool, str]]:
    """``(label, check, passed, detail)`` for every applicable frame check."""
    F = loaded.frame
    rows = [("-", "E reflexive", True, "")]
    for label, pair in F.relations.items():
        report = check_E_compatibility(F.graph, pair.box, pair.dia)
        detail = "" if report.ok else str(report.failures[0])
        rows.append((label, f"E-compatible ({report.checked} images)", report.ok, detail))
        if pair.box is not None:
            rows.append((label, "E-reflexive (E <= R_box)", check_E_reflexive(F, label), ""))
        for axiom in AxiomId:
            if (axiom.role == "box" and pair.box is None) or (axiom.role == "dia" and pair.dia is None):
                continue
            res = check_condition(F, label, axiom)
            rows.append((label, f"{axiom.value} condition", res.holds,
                         "" if res.holds else f"witness {res.witness}"))
    return rows


def cmd_analyze(args) -> int:
    loaded = _load(args.frame, args.close)
    rows = analyze_rows(loaded)
    if args.format == "json":
        print(json.dumps([{"label": l, "check": c, "pass": p, "detail": d} for l, c, p, d in rows]))
    else:
        width = max(len(c) for _, c, _, _ in rows)
        for label, check, passed, detail in rows:
            line = f"{label:>6}  {check.ljust(width)}  {'pass' if passed else 'FAIL'}"
            print(f"{line}  {detail}".rstrip())
    return 0 if all(p for _, _, p, _ in rows) else 1


def cmd_casestudy(args) -> int:
    report = reproduce(case_study())
    print(report)
    return 0 if report.ok else 1


def cmd_concepts(args) -> int:
    loaded = _load(args.frame, args.close)
    G = loaded.graph
    concepts = enumerate_concepts(G.polarity, args.budget)
    if args.format == "json":
        doc = {
            "nodes": list(G.nodes),
            **_numerators(loaded),
            "concepts": [
                {"extent": G.as_table(c.extent).tolist(), "intent": c.intent.values.tolist()}
                for c in concepts
            ],
        }
        print(json.dumps(doc))
    else:
        print(f"{len(concepts)} concepts")
        for i, c in enumerate(concepts):
            print(f"#{i}  intent: {' '.join(intent_table(G, c.intent))}")
    return 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="mvgraph", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="command", required=True)

    def frame_cmd(name, help_):
        p = sub.add_parser(name, help=help_)
        p.add_argument("frame", help="frame JSON file, or 'casestudy'")
        p.add_argument("--close", action="store_true",
                       help="replace valuation tables by their closures instead of rejecting them")
        return p

    p = frame_cmd("eval", "print the extension and intension of a formula")
    p.add_argument("formula")
    p.add_argument("--format", choices=["table", "json"], default="table")
    p.set_defaults(func=cmd_eval)

    p = frame_cmd("check", "check a sequent in the model or on the frame")
    p.add_argument("sequent", help="e.g. '[]_M psi |- phi'")
    p.add_argument("--mode", choices=["model", "frame"], default="model")
    p.add_argument("--budget", type=int, default=DEFAULT_BUDGET)
    p.set_defaults(func=cmd_check)

    p = frame_cmd("analyze", "compatibility, E-reflexivity and correspondence conditions")
    p.add_argument("--format", choices=["table", "json"], default="table")
    p.set_defaults(func=cmd_analyze)

    p = sub.add_parser("casestudy", help="recompute the embedded case-study tables")
    p.set_defaults(func=cmd_casestudy)

    p = frame_cmd("concepts", "list the concept lattice of the induced polarity")
    p.add_argument("--budget", type=int, default=DEFAULT_BUDGET)
    p.add_argument("--format", choices=["table", "json"], default="table")
    p.set_defaults(func=cmd_concepts)
    return parser


def main(argv: Sequence[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except ParseError as exc:
        print(f"error: {exc}", file=sys.stderr)
        if exc.text:
            print(exc.caret(), file=sys.stderr)
        return 2
    except (FrameFileError, BudgetExceeded, UnknownAtomError, UnknownLabelError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
