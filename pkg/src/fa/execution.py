"""Running machines on words: verdicts, configuration traces, single steps."""

from __future__ import annotations

from collections import deque
from collections.abc import Sequence
from dataclasses import dataclass

from .machines import DFA, EMP, Machine, Rule, Word

ACCEPT = "accept"
REJECT = "reject"


class WordError(ValueError):
    """The input word contains a symbol outside the machine's alphabet."""


@dataclass(frozen=True)
class Config:
    """A machine state together with the input suffix still to be consumed."""

    state: str
    unconsumed: Word


@dataclass(frozen=True)
class Trace:
    """One computation, as the configurations it passes through, plus its verdict."""

    steps: tuple[Config, ...]
    verdict: str


def check_word(machine: Machine, word: Sequence[str]) -> Word:
    """Normalize ``word`` to a symbol tuple, rejecting out-of-alphabet symbols."""
    w = tuple(word)
    for sym in w:
        if sym not in machine.sigma:
            raise WordError(f"word symbol {sym!r} is not in the machine's alphabet")
    return w


def step(machine: Machine, config: Config) -> list[tuple[Rule, Config]]:
    """All (rule, successor) pairs applicable at ``config``, in machine rule order.

    A rule applies when it leaves ``config.state`` and either reads nothing
    (EMP) or reads the first unconsumed symbol. An empty suffix admits only
    EMP rules.
    """
    u = config.unconsumed
    out = []
    for r in machine.rules:
        if r.src != config.state:
            continue
        if r.read == EMP:
            out.append((r, Config(r.dst, u)))
        elif u and r.read == u[0]:
            out.append((r, Config(r.dst, u[1:])))
    return out


def apply(machine: Machine, word: Sequence[str]) -> str:
    """Decide the word: ACCEPT iff some computation consumes all of it and
    ends in a final state.

    Breadth-first search over configurations; a visited set keeps any
    configuration from being explored twice, so EMP-only loops terminate.
    """
    w = check_word(machine, word)
    first = Config(machine.start, w)
    seen = {first}
    queue = deque([first])
    while queue:
        config = queue.popleft()
        if not config.unconsumed and config.state in machine.finals:
            return ACCEPT
        for _, succ in step(machine, config):
            if succ not in seen:
                seen.add(succ)
                queue.append(succ)
    return REJECT


def show_transitions(machine: Machine, word: Sequence[str]) -> Trace | None:
    """Trace of one computation on ``word``.

    For a dfa this is the unique run, whatever the verdict. For an ndfa a
    trace exists only on acceptance: the first accepting computation found
    by breadth-first search (ties broken by rule order) is returned, and
    None stands for "rejected, no trace".
    """
    w = check_word(machine, word)
    if machine.kind == DFA:
        return _dfa_trace(machine, w)
    first = Config(machine.start, w)
    parent: dict[Config, Config | None] = {first: None}
    queue = deque([first])
    while queue:
        config = queue.popleft()
        if not config.unconsumed and config.state in machine.finals:
            steps = []
            at: Config | None = config
            while at is not None:
                steps.append(at)
                at = parent[at]
            return Trace(tuple(reversed(steps)), ACCEPT)
        for _, succ in step(machine, config):
            if succ not in parent:
                parent[succ] = config
                queue.append(succ)
    return None


def _dfa_trace(machine: Machine, w: Word) -> Trace:
    # total function by construction, so the lookup below never misses
    delta = {(r.src, r.read): r.dst for r in machine.rules}
    config = Config(machine.start, w)
    steps = [config]
    while config.unconsumed:
        config = Config(delta[config.state, config.unconsumed[0]], config.unconsumed[1:])
        steps.append(config)
    verdict = ACCEPT if config.state in machine.finals else REJECT
    return Trace(tuple(steps), verdict)
