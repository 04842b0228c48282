"""Command line interface.

    singknot compute FILE [--invariant jones] [--mode singleB] [--identify-B]
                          [--at B1=1 ...] [--format text|structured] [--jobs N]
    singknot invertible FILE [--format ...] [--jobs N]
    singknot fuzz FILE [--steps 100] [--seed 0] [--format ...]

Exit codes: 0 success, 2 parse or validation error, 3 precondition error,
4 invariance violation found by ``fuzz``.
"""

from __future__ import annotations

import argparse
import json
import re
import sys
import time
from pathlib import Path

from singknot.alexander import alexander_s, invertibility_certificate_alex
from singknot.bracket import (
    INDEXED,
    SINGLE,
    invertibility_certificate_v,
    jones_vs,
    singular_bracket,
)
from singknot.diagram import SingularDiagram, parse_diagram, writhe
from singknot.errors import DiagramError, PolyParseError, PreconditionError
from singknot.moves import fuzz_invariance
from singknot.poly import LaurentPoly, identify_b_variables, substitute_b

EXIT_OK, EXIT_PARSE, EXIT_PRECONDITION, EXIT_VIOLATION = 0, 2, 3, 4


def _poly_payload(p: LaurentPoly) -> dict:
    return {
        "arity": p.arity,
        "text": p.to_text(),
        "records": [[c, a, list(bs)] for c, a, bs in p.to_records()],
    }


def _stats(D: SingularDiagram) -> dict:
    return {
        "crossings": D.n_crossings,
        "double_points": D.n_double_points,
        "writhe": writhe(D),
        "faces": len(D.faces),
        "long": D.long is not None,
    }


def _parse_at(items: list[str]) -> list[tuple[int, int]]:
    out = []
    for item in items:
        m = re.fullmatch(r"B(\d*)=(-?\d+)", item.strip())
        if not m:
            raise argparse.ArgumentTypeError(f"--at expects Bi=k, got {item!r}")
        out.append((int(m.group(1) or 1), int(m.group(2))))
    return out


def _load(path: str) -> SingularDiagram:
    try:
        text = Path(path).read_text(encoding="utf-8")
    except OSError as exc:
        raise DiagramError(f"{path}: {exc.strerror}") from None
    try:
        return parse_diagram(text)
    except DiagramError as exc:
        raise type(exc)(f"{path}: {exc}") from None


def _emit(args, payload: dict, text_lines: list[str]) -> None:
    if args.format == "structured":
        print(json.dumps(payload, sort_keys=True))
    else:
        print("\n".join(text_lines))


def compute_invariant(D: SingularDiagram, invariant: str, mode: str, jobs: int = 1) -> LaurentPoly:
    if invariant == "bracket":
        return singular_bracket(D, mode, jobs)
    if invariant == "jones":
        return jones_vs(D, mode, jobs)
    if invariant == "alexander":
        return alexander_s(D, mode)
    raise ValueError(invariant)


def cmd_compute(args) -> int:
    D = _load(args.file)
    t0 = time.perf_counter()
    p = compute_invariant(D, args.invariant, args.mode, args.jobs)
    if args.identify_B:
        p = identify_b_variables(p)
    for i, k in _parse_at(args.at):
        p = substitute_b(p, i, k)
    elapsed = time.perf_counter() - t0
    payload = {
        "request": {"file": args.file, "invariant": args.invariant, "mode": args.mode,
                    "identify_B": args.identify_B, "at": args.at},
        "diagram": _stats(D),
        "result": _poly_payload(p),
    }
    _emit(args, payload, [p.to_text()])
    # timing stays off stdout so structured output is reproducible byte for byte
    if args.verbose:
        print(f"{args.invariant} in {elapsed:.3f}s", file=sys.stderr)
    return EXIT_OK


def cmd_invertible(args) -> int:
    D = _load(args.file)
    certs = [invertibility_certificate_v(D, args.jobs), invertibility_certificate_alex(D)]
    payload = {"file": args.file, "certificates": []}
    lines = []
    for c in certs:
        entry = {
            "invariant": c.invariant,
            "verdict": c.verdict,
            "forward": c.forward.to_text(),
            "backward": c.backward.to_text(),
            "witness": [list(w) for w in c.witness],
            "swap": None if c.swap is None else list(c.swap),
        }
        payload["certificates"].append(entry)
        line = f"{c.invariant}: {c.verdict}"
        if c.not_invertible:
            line += f" (differs on B-patterns {entry['witness']}"
            if c.swap is not None:
                line += f"; related by B permutation {entry['swap']}"
            line += ")"
        lines.append(line)
    _emit(args, payload, lines)
    return EXIT_OK


def cmd_fuzz(args) -> int:
    D = _load(args.file)
    report = fuzz_invariance(D, args.steps, args.seed)
    payload = report.to_dict()
    if report.ok:
        lines = [f"ok: {len(report.records)} moves, no invariant changed"]
    else:
        f = report.first_failure
        changed = sorted(k for k in f.before if f.before[k] != f.after.get(k))
        lines = [f"violation at step {f.step}: {f.kind} ({f.variant}) changed {', '.join(changed)}"]
    _emit(args, payload, lines)
    return EXIT_OK if report.ok else EXIT_VIOLATION


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="singknot",
                                     description="Singular Jones and Alexander polynomials.")
    sub = parser.add_subparsers(dest="command", required=True)

    def common(p):
        p.add_argument("file")
        p.add_argument("--format", choices=("text", "structured"), default="text")
        p.add_argument("--jobs", type=int, default=1, help="worker processes for the bracket")

    p = sub.add_parser("compute", help="compute an invariant")
    common(p)
    p.add_argument("--invariant", choices=("bracket", "jones", "alexander"), default="jones")
    p.add_argument("--mode", choices=(SINGLE, INDEXED), default=SINGLE)
    p.add_argument("--identify-B", dest="identify_B", action="store_true",
                   help="set every B_i equal to B")
    p.add_argument("--at", action="append", default=[], metavar="Bi=k",
                   help="substitute an integer for B_i (repeatable)")
    p.add_argument("-v", "--verbose", action="store_true")
    p.set_defaults(func=cmd_compute)

    p = sub.add_parser("invertible", help="test a long knot against its inverse")
    common(p)
    p.set_defaults(func=cmd_invertible)

    p = sub.add_parser("fuzz", help="random move sequence checking invariance")
    common(p)
    p.add_argument("--steps", type=int, default=100)
    p.add_argument("--seed", type=int, default=0)
    p.set_defaults(func=cmd_fuzz)
    return parser


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        if getattr(args, "at", None):
            _parse_at(args.at)
        return args.func(args)
    except (DiagramError, PolyParseError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_PARSE
    except argparse.ArgumentTypeError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_PARSE
    except PreconditionError as exc:
        print(f"error: {type(exc).__name__}: {exc}", file=sys.stderr)
        return EXIT_PRECONDITION


if __name__ == "__main__":  # pragma: no cover
    sys.exit(main())
