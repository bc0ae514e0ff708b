"""Command-line front end: parse multisegment notation, run one operation,
print a table or stable JSON.

Exit codes: 0 success, 1 parse error, 2 semantic error, 3 undecided
verdict, 4 internal invariant failure.
"""

from __future__ import annotations

import argparse
import json
import sys
from typing import Any, List, Optional

from . import __version__
from .classify import (
    Verdict,
    asymmetry_check,
    is_generic_St,
    is_one_dimensional,
    is_relatively_projective,
    restriction_components,
)
from .core import Multisegment
from .derivatives import (
    Side,
    derivative_candidates,
    highest_derivative,
    level,
    shifted,
)
from .moves import generic_from_csupp, ui_closure
from .parser import ParseError, SemanticError, SessionInput, parse, print_session
from .speh import CertificationError, is_speh, prefix_candidates, speh_decompose

EXIT_OK = 0
EXIT_PARSE = 1
EXIT_SEMANTIC = 2
EXIT_UNDECIDED = 3
EXIT_INTERNAL = 4


def _side(name: str) -> Side:
    return Side.RIGHT if name == "right" else Side.LEFT


def _sorted_msegs(msegs) -> List[str]:
    return [str(n) for n in sorted(msegs, key=lambda n: n.sort_key)]


def _cmd_normalize(m: Multisegment, args) -> str:
    return str(m)


def _cmd_level(m: Multisegment, args) -> int:
    return level(m)


def _cmd_derive(m: Multisegment, args) -> str:
    side = _side(args.side)
    if args.order == level(m):
        out, _ = highest_derivative(m, side)
    else:
        block = is_speh(m)
        out = None
        if block is not None:
            from .speh import speh_derivative_at_order

            out = speh_derivative_at_order(block, args.order, side)
        if out is None:
            raise SemanticError(
                f"derivative at order {args.order} is only exact at the level "
                f"({level(m)}) or for a Speh multisegment"
            )
    if args.shifted:
        out = shifted(out, side)
    return str(out)


def _cmd_candidates(m: Multisegment, args) -> List[str]:
    side = _side(args.side)
    if args.refined:
        cands = prefix_candidates(m, args.order, side)
    else:
        cands = derivative_candidates(m, args.order, side)
    return _sorted_msegs(cands)


def _cmd_speh_decompose(m: Multisegment, args) -> dict:
    decomp = speh_decompose(m)
    return {
        "blocks": [
            {"top": str(b.top), "count": b.count} for b in decomp.blocks
        ],
        "certified": decomp.certify(),
    }


def _cmd_ui_closure(m: Multisegment, args) -> List[str]:
    return _sorted_msegs(ui_closure(m))


def _cmd_generic_from_csupp(m: Multisegment, args) -> str:
    return str(generic_from_csupp(m.csupp()))


def _cmd_classify(m: Multisegment, args) -> bool:
    if args.what == "projectivity":
        return is_relatively_projective(m)
    if args.what == "generic":
        return is_generic_St(m)
    return is_one_dimensional(m)


def _cmd_components(m: Multisegment, args) -> dict:
    spec = restriction_components(m)
    return {
        "mandatory": [[line_id, size] for line_id, size in spec.mandatory],
        "free_budget": spec.free_budget,
        "ambient": spec.ambient,
    }


def _cmd_asymmetry(m: Multisegment, args) -> dict:
    report = asymmetry_check(m, args.order)
    return {
        "order": report.order,
        "verdict": report.verdict.value,
        "naive_pairs": len(report.naive_pairs),
        "eliminations": [
            {"pair": [list(e.pair[0]), list(e.pair[1])], "reason": e.reason.value}
            for e in report.eliminations
        ],
        "survivors": [
            [list(e), list(f)] for e, f in report.survivors
        ],
    }


_COMMANDS = {
    "normalize": _cmd_normalize,
    "derive": _cmd_derive,
    "level": _cmd_level,
    "candidates": _cmd_candidates,
    "speh-decompose": _cmd_speh_decompose,
    "ui-closure": _cmd_ui_closure,
    "generic-from-csupp": _cmd_generic_from_csupp,
    "classify": _cmd_classify,
    "components": _cmd_components,
    "asymmetry": _cmd_asymmetry,
}


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument(
        "text",
        nargs="?",
        help="session text; read from stdin when omitted",
    )
    common.add_argument("--json", action="store_true", help="emit stable JSON")
    common.add_argument("--out", metavar="FILE", help="write output to FILE")

    top = argparse.ArgumentParser(
        prog="multiseg",
        description="segment and multisegment calculus for smooth GL(n) representations",
    )
    sub = top.add_subparsers(dest="command", required=True)

    sub.add_parser("normalize", parents=[common])
    sub.add_parser("level", parents=[common])

    p = sub.add_parser("derive", parents=[common])
    p.add_argument("--side", choices=["right", "left"], required=True)
    p.add_argument("--order", type=int, required=True)
    p.add_argument("--shifted", action="store_true")

    p = sub.add_parser("candidates", parents=[common])
    p.add_argument("--side", choices=["right", "left"], required=True)
    p.add_argument("--order", type=int, required=True)
    p.add_argument("--refined", action="store_true")

    sub.add_parser("speh-decompose", parents=[common])
    sub.add_parser("ui-closure", parents=[common])
    sub.add_parser("generic-from-csupp", parents=[common])

    p = sub.add_parser("classify", parents=[common])
    p.add_argument(
        "--what", choices=["projectivity", "generic", "one-dim"], required=True
    )

    p = sub.add_parser("asymmetry", parents=[common])
    p.add_argument("--order", type=int, required=True)

    p = sub.add_parser("components", parents=[common])
    return top


def _render_table(result: Any, out) -> None:
    if isinstance(result, list):
        for item in result:
            _render_table(item, out)
    elif isinstance(result, dict):
        for key, value in result.items():
            print(f"{key}: {json.dumps(value, sort_keys=True)}", file=out)
    elif isinstance(result, bool):
        print("true" if result else "false", file=out)
    else:
        print(result, file=out)


def run(argv: Optional[List[str]] = None) -> int:
    args = build_parser().parse_args(argv)
    text = args.text if args.text is not None else sys.stdin.read()
    try:
        session = parse(text)
    except ParseError as exc:
        print(f"parse error: {exc}", file=sys.stderr)
        return EXIT_PARSE
    except SemanticError as exc:
        print(f"semantic error: {exc}", file=sys.stderr)
        return EXIT_SEMANTIC

    handler = _COMMANDS[args.command]
    undecided = False
    try:
        results = [handler(m, args) for m in session.multisegments]
    except SemanticError as exc:
        print(f"semantic error: {exc}", file=sys.stderr)
        return EXIT_SEMANTIC
    except (CertificationError, AssertionError) as exc:
        print(f"internal error: {exc}", file=sys.stderr)
        return EXIT_INTERNAL

    if args.command == "asymmetry":
        undecided = any(r["verdict"] == Verdict.UNDECIDED.value for r in results)

    result: Any = results[0] if len(results) == 1 else results
    out = open(args.out, "w") if args.out else sys.stdout
    try:
        if args.json:
            payload = {
                "command": args.command,
                "input": print_session(session),
                "result": result,
                "version": 1,
            }
            print(json.dumps(payload, sort_keys=True), file=out)
        else:
            _render_table(result, out)
    finally:
        if args.out:
            out.close()
    return EXIT_UNDECIDED if undecided else EXIT_OK


def main() -> None:
    sys.exit(run())


if __name__ == "__main__":
    main()
