"""Command-line interface: validate machines, run words, emit DOT graphs.

Machines live in JSON files; words are given as whitespace-separated
symbols, with the literal EMP (or no symbols at all) standing for the
empty word. Exit codes: 0 accept, 1 reject, 2 usage or validation error.
"""

from __future__ import annotations

import argparse
import json
import os
import sys
from collections.abc import Sequence

from .compgraph import build_computation_graph
from .dot import cgraph_summary, cgraph_to_dot, machine_to_dot
from .execution import ACCEPT, WordError, apply, show_transitions
from .machines import DFA, EMP, NDFA, Machine, ValidationError, make_dfa, make_ndfa


class MachineFileError(ValueError):
    """A machine document that cannot be turned into a Machine."""

    def __init__(self, code: str, message: str) -> None:
        super().__init__(message)
        self.code = code


def parse_machine_text(text: str, where: str = "<machine>") -> Machine:
    """Build a Machine from JSON document text.

    Expected keys: kind ("dfa"/"ndfa"), states, sigma, start, finals,
    rules as [from, label, to] triples with "EMP" for a reading-nothing
    label, and an optional no_dead boolean (dfa only).
    """
    try:
        doc = json.loads(text)
    except json.JSONDecodeError as err:
        raise MachineFileError(
            "malformed-document", f"{where}:{err.lineno}:{err.colno}: not valid JSON: {err.msg}"
        ) from err
    if not isinstance(doc, dict):
        raise MachineFileError("malformed-document", f"{where}: expected a JSON object at top level")
    kind = doc.get("kind")
    if kind is None:
        raise MachineFileError("malformed-document", f"{where}: missing key 'kind'")
    if kind not in (DFA, NDFA):
        raise MachineFileError("unknown-kind", f"{where}: kind must be 'dfa' or 'ndfa', got {kind!r}")
    for key in ("states", "sigma", "start", "finals", "rules"):
        if key not in doc:
            raise MachineFileError("malformed-document", f"{where}: missing key {key!r}")
    for key in ("states", "sigma", "finals", "rules"):
        if not isinstance(doc[key], list):
            raise MachineFileError("malformed-document", f"{where}: {key!r} must be a list")
    for triple in doc["rules"]:
        if not isinstance(triple, list) or len(triple) != 3:
            raise MachineFileError(
                "malformed-document", f"{where}: rule {triple!r} is not a [from, label, to] triple"
            )
    no_dead = doc.get("no_dead", False)
    if not isinstance(no_dead, bool):
        raise MachineFileError("malformed-document", f"{where}: no_dead must be a boolean")
    if "no_dead" in doc and kind != DFA:
        raise MachineFileError("malformed-document", f"{where}: no_dead is only valid for a dfa")
    try:
        if kind == DFA:
            return make_dfa(doc["states"], doc["sigma"], doc["start"], doc["finals"], doc["rules"], no_dead)
        return make_ndfa(doc["states"], doc["sigma"], doc["start"], doc["finals"], doc["rules"])
    except ValidationError as err:
        raise MachineFileError(err.code, f"{where}: {err}") from err


def parse_machine_file(path: str) -> Machine:
    """Read and build a Machine from a JSON file on disk."""
    try:
        with open(path, encoding="utf-8") as handle:
            text = handle.read()
    except OSError as err:
        raise MachineFileError("unreadable-file", f"cannot read {path}: {err.strerror}") from err
    return parse_machine_text(text, where=path)


def machine_to_document(machine: Machine) -> dict:
    """JSON-ready document for a Machine; parsing it back yields an equal machine."""
    return {
        "kind": machine.kind,
        "states": list(machine.states),
        "sigma": list(machine.sigma),
        "start": machine.start,
        "finals": list(machine.finals),
        "rules": [list(r) for r in machine.rules],
    }


def parse_word_args(tokens: Sequence[str]) -> tuple[str, ...]:
    """Turn CLI word tokens into a symbol tuple; EMP or nothing means the empty word."""
    symbols = [part for token in tokens for part in token.split()]
    if not symbols or symbols == [EMP]:
        return ()
    if EMP in symbols:
        raise WordError("EMP denotes the empty word and cannot be mixed with symbols")
    return tuple(symbols)


def _write_dot(text: str, out: str | None) -> None:
    if out:
        with open(out, "w", encoding="utf-8", newline="\n") as handle:
            handle.write(text)
        print(out)
    else:
        sys.stdout.write(text)


def _want_color() -> bool:
    return os.environ.get("FA_COLOR") == "always"


def _cmd_validate(args) -> int:
    machine = parse_machine_file(args.machine)
    print(
        f"ok: {machine.kind} with {len(machine.states)} states, "
        f"{len(machine.sigma)} symbols, {len(machine.rules)} rules"
    )
    return 0


def _cmd_apply(args) -> int:
    machine = parse_machine_file(args.machine)
    verdict = apply(machine, parse_word_args(args.word))
    print(verdict)
    return 0 if verdict == ACCEPT else 1


def _cmd_trace(args) -> int:
    machine = parse_machine_file(args.machine)
    trace = show_transitions(machine, parse_word_args(args.word))
    if trace is None:
        print("no trace: word rejected by ndfa")
        return 1
    for config in trace.steps:
        print(f"({' '.join(config.unconsumed)}) {config.state}")
    print(trace.verdict)
    return 0 if trace.verdict == ACCEPT else 1


def _cmd_graph(args) -> int:
    machine = parse_machine_file(args.machine)
    _write_dot(machine_to_dot(machine), args.out)
    return 0


def _cmd_compgraph(args) -> int:
    machine = parse_machine_file(args.machine)
    cg = build_computation_graph(machine, parse_word_args(args.word))
    _write_dot(cgraph_to_dot(cg), args.out)
    if args.summary:
        print(cgraph_summary(cg, color=_want_color()))
    return 0 if cg.verdict == ACCEPT else 1


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="fa", description="Run finite automata and draw their computation graphs."
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def command(name, func, help_text, word=False, out=False):
        p = sub.add_parser(name, help=help_text)
        p.add_argument("machine", help="path to a machine JSON file")
        if word:
            p.add_argument("word", nargs="*", help="word symbols, or EMP for the empty word")
        if out:
            p.add_argument("--out", metavar="FILE", help="write DOT here instead of stdout")
        p.set_defaults(func=func)
        return p

    command("validate", _cmd_validate, "check that a machine file is well-formed")
    command("apply", _cmd_apply, "print accept or reject for a word", word=True)
    command("trace", _cmd_trace, "print one computation, configuration by configuration", word=True)
    command("graph", _cmd_graph, "emit the machine's transition diagram as DOT", out=True)
    cg = command(
        "compgraph",
        _cmd_compgraph,
        "emit the computation graph for a word as DOT",
        word=True,
        out=True,
    )
    cg.add_argument("--summary", action="store_true", help="also print a plain-text summary")
    return parser


def main(argv: Sequence[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except (MachineFileError, ValidationError, WordError) as err:
        print(f"fa: {err}", file=sys.stderr)
        return 2
    except OSError as err:
        print(f"fa: {err}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
