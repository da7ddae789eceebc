"""Immutable finite-state machine values and their validating constructors."""

from __future__ import annotations

import re
from collections.abc import Iterable, Sequence
from dataclasses import dataclass
from typing import NamedTuple

EMP = "EMP"

DFA = "dfa"
NDFA = "ndfa"

Word = tuple[str, ...]

_STATE_NAME = re.compile(r"[A-Za-z][A-Za-z0-9]*\Z")
_SYMBOL = re.compile(r"[a-z0-9]\Z")


class ValidationError(ValueError):
    """A machine description that does not define a well-formed automaton.

    ``code`` carries a stable kebab-case identifier for the violation,
    e.g. ``"start-not-in-states"``.
    """

    def __init__(self, code: str, message: str) -> None:
        super().__init__(message)
        self.code = code


class Rule(NamedTuple):
    src: str
    read: str  # an alphabet symbol, or EMP to move without consuming input
    dst: str


@dataclass(frozen=True)
class Machine:
    """A deterministic or nondeterministic finite-state automaton.

    Component order is preserved from construction (after duplicates are
    dropped), so everything downstream iterates deterministically.
    Instances are immutable and safe to share across threads.
    """

    kind: str
    states: tuple[str, ...]
    sigma: tuple[str, ...]
    start: str
    finals: tuple[str, ...]
    rules: tuple[Rule, ...]


def _dedup(items: Iterable) -> list:
    seen = set()
    out = []
    for item in items:
        if item not in seen:
            seen.add(item)
            out.append(item)
    return out


def _checked_components(states, sigma, start, finals, rules):
    states = _dedup(states)
    if not states:
        raise ValidationError("empty-state-set", "a machine needs at least one state")
    for name in states:
        if not isinstance(name, str) or not _STATE_NAME.match(name):
            raise ValidationError(
                "bad-state-name",
                f"bad state name {name!r}: need a letter followed by letters/digits",
            )
    sigma = list(sigma)
    for sym in sigma:
        if not isinstance(sym, str) or not _SYMBOL.match(sym):
            raise ValidationError(
                "bad-symbol",
                f"bad alphabet symbol {sym!r}: need a single lowercase letter or digit",
            )
    if len(set(sigma)) != len(sigma):
        extra = sorted({s for s in sigma if sigma.count(s) > 1})
        raise ValidationError(
            "duplicate-symbol-in-sigma", f"alphabet lists {', '.join(extra)} more than once"
        )
    clash = set(states) & set(sigma)
    if clash:
        raise ValidationError(
            "state-symbol-clash",
            f"{', '.join(sorted(clash))} appears both as a state and as an alphabet symbol",
        )
    if start not in states:
        raise ValidationError("start-not-in-states", f"start state {start!r} is not in the state set")
    finals = _dedup(finals)
    for q in finals:
        if q not in states:
            raise ValidationError("final-not-in-states", f"final state {q!r} is not in the state set")
    checked_rules = []
    for r in rules:
        if not isinstance(r, Rule):
            parts = tuple(r)
            if len(parts) != 3:
                raise ValidationError(
                    "malformed-rule", f"transition {r!r} is not a (from, read, to) triple"
                )
            r = Rule(*parts)
        checked_rules.append(r)
    checked_rules = _dedup(checked_rules)
    state_set = set(states)
    for r in checked_rules:
        if r.src not in state_set or r.dst not in state_set:
            raise ValidationError(
                "rule-references-unknown-state", f"transition {tuple(r)} mentions an unknown state"
            )
        if r.read != EMP and r.read not in sigma:
            raise ValidationError(
                "rule-reads-unknown-symbol", f"transition {tuple(r)} reads a symbol outside the alphabet"
            )
    return tuple(states), tuple(sigma), start, tuple(finals), tuple(checked_rules)


def make_ndfa(
    states: Sequence[str],
    sigma: Sequence[str],
    start: str,
    finals: Sequence[str],
    rules: Iterable,
) -> Machine:
    """Build a nondeterministic machine.

    Rules are (from, read, to) triples; ``read`` may be EMP for a move that
    consumes no input. Duplicate states, finals and rules are silently
    dropped (first occurrence wins). Raises ValidationError if any
    component is ill-formed.
    """
    return Machine(NDFA, *_checked_components(states, sigma, start, finals, rules))


def make_dfa(
    states: Sequence[str],
    sigma: Sequence[str],
    start: str,
    finals: Sequence[str],
    rules: Iterable,
    no_dead: bool = False,
) -> Machine:
    """Build a deterministic machine with a total transition function.

    The given rules must contain no EMP labels and at most one rule per
    (state, symbol) pair. With ``no_dead`` set they must already cover
    every pair; otherwise any missing pairs are routed to a fresh
    non-final dead state, which loops to itself on every symbol.
    """
    states, sigma, start, finals, rules = _checked_components(states, sigma, start, finals, rules)
    covered = set()
    for r in rules:
        if r.read == EMP:
            raise ValidationError(
                "nondeterministic-rules", f"EMP transition {tuple(r)} is not allowed in a dfa"
            )
        if (r.src, r.read) in covered:
            raise ValidationError(
                "nondeterministic-rules", f"more than one transition from {r.src} on {r.read}"
            )
        covered.add((r.src, r.read))
    missing = [(q, s) for q in states for s in sigma if (q, s) not in covered]
    if missing:
        if no_dead:
            raise ValidationError(
                "incomplete-with-no-dead",
                f"no_dead was set but {len(missing)} transitions are missing, e.g. {missing[0]}",
            )
        dead = _fresh_dead_name(states)
        states = states + (dead,)
        rules = (
            rules
            + tuple(Rule(q, s, dead) for q, s in missing)
            + tuple(Rule(dead, s, dead) for s in sigma)
        )
    return Machine(DFA, states, sigma, start, finals, rules)


def _fresh_dead_name(states: Sequence[str]) -> str:
    if "ds" not in states:
        return "ds"
    n = 0
    while f"ds{n}" in states:
        n += 1
    return f"ds{n}"


def fresh_dead_state(machine: Machine) -> str:
    """Deterministic dead-state name that collides with none of the machine's states."""
    return _fresh_dead_name(machine.states)
