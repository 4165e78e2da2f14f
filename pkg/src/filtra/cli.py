"""Command-line interface.

Subcommands::

    filtra gb          --input FILE        reduced Groebner basis of a task ideal
    filtra hilbert     --input FILE        Hilbert summary of the task filtration
    filtra superficial --input FILE        certify the task's sequence
    filtra verify THM  --input FILE        run a bound verifier (upper|difference|lower,
                                           or a theorem alias like 3.1/4.1/3.4/4.6/3.7/4.7)
    filtra example ID                      run a bundled example and check its
                                           expected quantities (3.2, 3.3, 3.6, 4.2)

Exit codes: 0 for verdicts BoundHolds/EqualityHolds (and plain successes),
2 for hypothesis failures, 1 for errors.
"""

from __future__ import annotations

import argparse
import hashlib
import json
import sys
from pathlib import Path

from . import __version__
from .errors import FiltraError, NotSuperficialError, ParseError
from .field import QQ, CoeffField, GF
from .hilbert import filtration_hilbert_exact, filtration_hilbert_sampled, summaries_agree
from .registry import EXAMPLE_IDS, build_example, check_expected
from .ring import grevlex, lex
from .superficial import certify_superficial_sequence
from .taskfile import TaskFile, parse_task
from .theorems import TheoremReport, verify_difference_bound, verify_lower_bound, verify_upper_bound

VERIFY_ALIASES = {
    "upper": "upper", "3.1": "upper", "4.1": "upper", "thm3.1": "upper", "thm4.1": "upper",
    "difference": "difference", "3.4": "difference", "4.6": "difference",
    "thm3.4": "difference", "thm4.6": "difference",
    "lower": "lower", "3.7": "lower", "4.7": "lower", "thm3.7": "lower", "prop4.7": "lower",
}

OK_VERDICTS = ("BoundHolds", "EqualityHolds")


def _parse_field(text: str) -> CoeffField:
    if text == "QQ":
        return QQ
    if text.startswith("GF:"):
        return GF(int(text[3:]))
    if text.startswith("GF(") and text.endswith(")"):
        return GF(int(text[3:-1]))
    raise FiltraError(f"bad field {text!r}; use QQ or GF:p")


def _load_task(args, expect_kind: str | None) -> TaskFile:
    if not args.input:
        raise FiltraError("this subcommand needs --input PATH")
    text = Path(args.input).read_text()
    if args.field:
        # the flag overrides the file's field declaration
        lines = [l for l in text.splitlines() if not l.strip().startswith("field")]
        text = f"field {_parse_field(args.field)}\n" + "\n".join(lines)
    tf = parse_task(text)
    if expect_kind and tf.task != expect_kind:
        raise FiltraError(f"task file declares task {tf.task!r}, expected {expect_kind!r}")
    return tf


def _emit(args, payload: dict, human: str) -> None:
    print(human)
    if args.json:
        body = json.dumps(payload, indent=2, sort_keys=True)
        if args.json == "-":
            print(body)
        else:
            Path(args.json).write_text(body + "\n")


def _payload(tf_source: str, field: str, kind: str, body: dict) -> dict:
    return {
        "tool": "filtra",
        "version": __version__,
        "inputFingerprint": hashlib.sha256(tf_source.encode()).hexdigest()[:16],
        "field": field,
        "task": kind,
        **body,
    }


def _report_text(report: TheoremReport) -> str:
    lines = [f"theorem {report.theorem}  [field {report.field}]"]
    for h in report.hypotheses:
        mark = "ok " if h.ok else "FAIL"
        lines.append(f"  hypothesis [{mark}] {h.name}" + (f"  ({h.evidence})" if h.evidence else ""))
    for k in sorted(report.quantities):
        lines.append(f"  {k} = {report.quantities[k]}")
    for note in report.notes:
        lines.append(f"  note: {note}")
    lines.append(f"  verdict: {report.verdict}")
    return "\n".join(lines)


def _verdict_exit(verdict: str) -> int:
    return 0 if verdict in OK_VERDICTS else 2


def cmd_gb(args) -> int:
    tf = _load_task(args, "gb")
    order = lex() if args.order == "lex" else grevlex()
    gb = tf.ideals[tf.gb_name].groebner(order)
    human = "\n".join(str(p) for p in gb.polys) or "0"
    _emit(args, _payload(tf.source, str(tf.field), "gb", {
        "ideal": tf.gb_name,
        "order": args.order,
        "basis": [str(p) for p in gb.polys],
    }), human)
    return 0


def cmd_hilbert(args) -> int:
    tf = _load_task(args, "hilbert")
    spec = tf.filtration()
    if args.route == "A":
        summaries = {"A": filtration_hilbert_exact(spec)}
    elif args.route == "B":
        summaries = {"B": filtration_hilbert_sampled(spec, window=args.window, max_n=args.max_n)}
    else:
        exact, sampled = summaries_agree(spec, window=args.window, max_n=args.max_n)
        summaries = {"A": exact, "B": sampled}
    lines = []
    for route, s in summaries.items():
        lines.append(
            f"route {route}: h={list(s.h)} e={list(s.e)} d={s.d} postulation={s.postulation}"
        )
    _emit(args, _payload(tf.source, str(tf.field), "hilbert", {
        "summaries": {route: s.to_json_dict() for route, s in summaries.items()},
    }), "\n".join(lines))
    return 0


def cmd_superficial(args) -> int:
    tf = _load_task(args, "superficial")
    spec = tf.filtration()
    seq = tf.sequence()
    try:
        certs, maximal = certify_superficial_sequence(spec, seq, seed=args.seed)
    except NotSuperficialError as exc:
        _emit(args, _payload(tf.source, str(tf.field), "superficial", {
            "certified": False, "reason": str(exc),
        }), f"NOT certified: {exc}")
        return 2
    human = "\n".join(
        f"certified [{c.method}] {c.element}" for c in certs
    ) + f"\nmaximal: {maximal}"
    _emit(args, _payload(tf.source, str(tf.field), "superficial", {
        "certified": True,
        "maximal": maximal,
        "certificates": [c.to_json_dict() for c in certs],
    }), human)
    return 0


def cmd_verify(args) -> int:
    kind = VERIFY_ALIASES.get(args.theorem.lower())
    if kind is None:
        raise FiltraError(f"unknown theorem {args.theorem!r}; use upper|difference|lower")
    tf = _load_task(args, "verify")
    if VERIFY_ALIASES.get(tf.verify_kind) != kind:
        raise FiltraError(f"task file verifies {tf.verify_kind!r}, requested {kind!r}")
    spec = tf.filtration()
    seq = tf.sequence()
    runner = {
        "upper": verify_upper_bound,
        "difference": verify_difference_bound,
        "lower": verify_lower_bound,
    }[kind]
    report = runner(spec, seq, max_n=args.max_n)
    report.seed = args.seed
    _emit(args, _payload(tf.source, str(tf.field), f"verify {kind}", {
        "report": report.to_json_dict(),
    }), _report_text(report))
    return _verdict_exit(report.verdict)


def cmd_example(args) -> int:
    field = _parse_field(args.field) if args.field else None
    entry = build_example(args.id, field)
    tf = parse_task(entry.task_text)
    spec = tf.filtration()
    print(f"example {entry.id}: {entry.description}")
    if tf.task == "hilbert":
        exact, sampled = summaries_agree(spec, max_n=args.max_n)
        quantities = {
            "h": list(exact.h), "e": list(exact.e), "d": exact.d,
            "postulation": exact.postulation, "e2": exact.e_at(2),
        }
        verdict = None
        body = {"summaries": {"A": exact.to_json_dict(), "B": sampled.to_json_dict()}}
        print(f"h = {list(exact.h)}, e = {list(exact.e)} (routes agree)")
        code = 0
    else:
        report = verify_upper_bound(spec, tf.sequence(), max_n=args.max_n)
        quantities = report.quantities
        verdict = report.verdict
        body = {"report": report.to_json_dict()}
        print(_report_text(report))
        code = _verdict_exit(report.verdict)
    problems = check_expected(entry.expected, quantities, verdict)
    if problems:
        for p in problems:
            print(f"EXPECTATION MISMATCH: {p}", file=sys.stderr)
        return 1
    print("expected quantities reproduced")
    _emit(args, _payload(entry.task_text, str(tf.field), f"example {entry.id}", body), "")
    return code


def main(argv=None) -> int:
    parser = argparse.ArgumentParser(
        prog="filtra",
        description="exact Hilbert coefficients of good filtrations and bound checks on e2",
    )
    parser.add_argument("--version", action="version", version=f"filtra {__version__}")
    sub = parser.add_subparsers(dest="command", required=True)

    def common(p):
        p.add_argument("--input", help="task file path")
        p.add_argument("--json", help="write a JSON report to this path ('-' for stdout)")
        p.add_argument("--field", help="override the field: QQ or GF:p")
        p.add_argument("--order", choices=("grevlex", "lex"), default="grevlex")
        p.add_argument("--max-n", type=int, default=50, dest="max_n")
        p.add_argument("--window", type=int, default=None)
        p.add_argument("--max-k", type=int, default=20, dest="max_k")
        p.add_argument("--seed", type=int, default=None)
        p.add_argument("--route", choices=("A", "B", "both"), default="both")

    for name, fn in (("gb", cmd_gb), ("hilbert", cmd_hilbert), ("superficial", cmd_superficial)):
        p = sub.add_parser(name)
        common(p)
        p.set_defaults(fn=fn)
    p = sub.add_parser("verify")
    p.add_argument("theorem", help="upper|difference|lower or 3.1/4.1/3.4/4.6/3.7/4.7")
    common(p)
    p.set_defaults(fn=cmd_verify)
    p = sub.add_parser("example")
    p.add_argument("id", choices=EXAMPLE_IDS)
    common(p)
    p.set_defaults(fn=cmd_example)

    args = parser.parse_args(argv)
    try:
        return args.fn(args)
    except ParseError as exc:
        print(f"parse error: {exc}", file=sys.stderr)
        return 1
    except FiltraError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1


if __name__ == "__main__":
    sys.exit(main())
