"""Command-line front end.

    seifert-network vertex em1 --l 1 --n 1 --p 0
    seifert-network path em2 --l 3 --m 2 --n 0 --p 0 --format text
    seifert-network graph em1 --l 1 --n -2:2 --p 0 --format dot
    seifert-network verify

Exit status: 0 on success, 1 on domain errors (a violated precondition),
2 on malformed arguments.
"""
from __future__ import annotations

import argparse
import json
import os
import re
import sys
from typing import Sequence

from .checks import CHECKS, run_checks
from .families import (
    PreconditionError,
    em1_vertex,
    em2_vertex,
    em3_conditions,
    em3_surgery_description,
    em3_vertex,
    torus_reducible_surgery,
)
from .network import em1_path, em2_path, em3_path, export_graph, build_graph
from .rational import ExtendedRational
from .seifert import DegenerateSpaceError, recognize

PARAMS = {
    "em1": ("l", "n", "p"),
    "em2": ("l", "m", "n", "p"),
    "em3": ("a1", "a2", "a3"),
    "torus": ("p", "q"),
}


# lets "-1/3", "-2:2" and "-1,-1/2" through as values rather than options
_NEGATIVE_VALUE = re.compile(r"^-\d+(/\d+)?([:,].*)?$")


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def __init__(self, *args, **kwargs):
        super().__init__(*args, **kwargs)
        self._negative_number_matcher = _NEGATIVE_VALUE


def _int_arg(text: str) -> int:
    try:
        return int(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"not an integer: {text!r}") from None


def _rational_arg(text: str) -> ExtendedRational:
    try:
        return ExtendedRational.parse(text)
    except (ValueError, ZeroDivisionError):
        raise argparse.ArgumentTypeError(f"not a rational 'p/q': {text!r}") from None


def _range_arg(text: str) -> tuple[int, int]:
    """``"k"`` or ``"lo:hi"`` (inclusive)."""
    parts = text.split(":")
    try:
        if len(parts) == 1:
            k = int(parts[0])
            return (k, k)
        if len(parts) == 2:
            return (int(parts[0]), int(parts[1]))
    except ValueError:
        pass
    raise argparse.ArgumentTypeError(f"not an integer or lo:hi range: {text!r}")


def _rational_list_arg(text: str) -> list[ExtendedRational]:
    return [_rational_arg(t) for t in text.split(",") if t]


def _add_output(sub: argparse.ArgumentParser, formats: Sequence[str], default: str):
    sub.add_argument("--format", choices=formats, default=default)
    sub.add_argument("--output", "-o", metavar="PATH", help="write here instead of standard output")


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(
        prog="seifert-network",
        description="Seifert surgeries of the EM families and their paths to torus knot surgeries.")
    subs = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)

    vertex = subs.add_parser("vertex", help="slope and Seifert space of one surgery")
    vertex.add_argument("family", choices=sorted(PARAMS))
    for name in ("l", "m", "n", "p", "q"):
        vertex.add_argument(f"--{name}", type=_int_arg)
    for name in ("a1", "a2", "a3"):
        vertex.add_argument(f"--{name}", type=_rational_arg)
    vertex.add_argument("--minus-one", action="store_true", help="use the slope gamma - 1")
    _add_output(vertex, ("json", "text"), "json")

    path = subs.add_parser("path", help="path to a torus knot or unknot surgery")
    path.add_argument("family", choices=("em1", "em2", "em3"))
    for name in ("l", "m", "n", "p"):
        path.add_argument(f"--{name}", type=_int_arg)
    for name in ("a1", "a2", "a3"):
        path.add_argument(f"--{name}", type=_rational_arg)
    path.add_argument("--minus-one", action="store_true")
    _add_output(path, ("json", "text"), "json")

    graph = subs.add_parser("graph", help="subgraph spanned by the paths over parameter ranges")
    graph.add_argument("family", choices=("em1", "em2", "em3"))
    for name in ("l", "m", "n", "p"):
        graph.add_argument(f"--{name}", type=_range_arg, help="k or lo:hi")
    for name in ("a1", "a2", "a3"):
        graph.add_argument(f"--{name}", type=_rational_list_arg, help="comma-separated p/q list")
    variant = graph.add_mutually_exclusive_group()
    variant.add_argument("--minus-one", action="store_true", help="only gamma - 1 surgeries")
    variant.add_argument("--both", action="store_true", help="gamma and gamma - 1 surgeries")
    _add_output(graph, ("json", "dot", "text"), "json")

    verify = subs.add_parser("verify", help="run the cross-consistency suite")
    verify.add_argument("--check", action="append", choices=sorted(CHECKS), metavar="NAME",
                        help="run only this check (repeatable)")
    verify.add_argument("--list", action="store_true", help="list check names and exit")
    verify.add_argument("--output", "-o", metavar="PATH")
    return parser


def _params(args, family: str) -> list:
    values = []
    missing = []
    for name in PARAMS[family]:
        value = getattr(args, name, None)
        if value is None:
            missing.append(f"--{name}")
        values.append(value)
    if missing:
        raise UsageError(f"{family} needs {' '.join(missing)}")
    return values


def _dump(doc) -> str:
    return json.dumps(doc, indent=2) + "\n"


def _vertex(args) -> str:
    values = _params(args, args.family)
    if args.family == "torus":
        result = torus_reducible_surgery(*values)
    elif args.family == "em1":
        result = em1_vertex(*values, minus_one=args.minus_one)
    elif args.family == "em2":
        result = em2_vertex(*values, minus_one=args.minus_one)
    else:
        if args.minus_one:
            raise UsageError("--minus-one does not apply to em3")
        result = em3_vertex(*values)
    kind = recognize(result.space)
    if args.format == "text":
        lines = [result.vertex.id(), f"space: {result.space}", f"kind: {kind.kind.value}"]
        if kind.lens:
            lines.append("lens: " + " # ".join(f"L({p},{q})" for p, q in kind.lens))
        return "\n".join(lines) + "\n"
    doc = result.to_json()
    doc["id"] = result.vertex.id()
    doc["classification"] = kind.to_json()
    if args.family == "em3":
        doc["trivializations"] = [
            {"case": t.case, "parameter": t.parameter, "swapped": t.swapped}
            for t in em3_conditions(*values)]
        doc["surgery_description"] = em3_surgery_description(*values).to_json()
    return _dump(doc)


def _path(args) -> str:
    values = _params(args, args.family)
    if args.family == "em1":
        path = em1_path(*values, minus_one=args.minus_one)
    elif args.family == "em2":
        path = em2_path(*values, minus_one=args.minus_one)
    else:
        if args.minus_one:
            raise UsageError("--minus-one does not apply to em3")
        path = em3_path(*values)
    if args.format == "text":
        return path.to_text() + "\n"
    return _dump(path.to_json())


def _graph(args) -> str:
    names = PARAMS[args.family]
    ranges = {}
    for name in names:
        value = getattr(args, name, None)
        if value is None:
            raise UsageError(f"{args.family} graph needs --{name}")
        ranges[name] = value
    variant = "both" if args.both else "minus-one" if args.minus_one else "gamma"
    if args.format == "text":
        graph = build_graph(args.family, ranges, variant)
        lines = [f"{a} --[{move.label()}]--> {b}" for a, b, move in graph.edges]
        isolated = sorted(set(graph.nodes) - {a for a, _, _ in graph.edges} - {b for _, b, _ in graph.edges})
        return "\n".join(lines + isolated) + "\n"
    return export_graph(args.family, ranges, args.format, variant)


def _use_color(stream) -> bool:
    return "NO_COLOR" not in os.environ and hasattr(stream, "isatty") and stream.isatty()


def _verify(args, stream) -> tuple[str, int]:
    if args.list:
        return "\n".join(sorted(CHECKS)) + "\n", 0
    color = args.output is None and _use_color(stream)
    ok_tag, fail_tag = ("\033[32mok\033[0m", "\033[31mFAIL\033[0m") if color else ("ok", "FAIL")
    results = run_checks(args.check)
    lines = []
    failed = 0
    for res in results:
        if res.ok:
            lines.append(f"{ok_tag:4} {res.name} ({res.cases} cases)")
        else:
            failed += 1
            lines.append(f"{fail_tag} {res.name} ({len(res.failures)} of {res.cases} cases)")
            lines.extend(f"    {msg}" for msg in res.failures)
    lines.append(f"{len(results) - failed} passed, {failed} failed")
    return "\n".join(lines) + "\n", 1 if failed else 0


def main(argv: Sequence[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    status = 0
    try:
        if args.command == "vertex":
            text = _vertex(args)
        elif args.command == "path":
            text = _path(args)
        elif args.command == "graph":
            text = _graph(args)
        else:
            text, status = _verify(args, sys.stdout)
    except UsageError as exc:
        parser.error(str(exc))
    except (PreconditionError, DegenerateSpaceError, ValueError) as exc:
        print(f"seifert-network: error: {exc}", file=sys.stderr)
        return 1

    if args.output:
        with open(args.output, "w", encoding="utf-8", newline="\n") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)
    return status


if __name__ == "__main__":
    sys.exit(main())
