"""Brute-force reference implementations and machine generators for tests.

The oracles here work directly off a machine's rule list with their own
plain traversals, so they share no code with the library paths they check.
"""

import re

from hypothesis import strategies as st

from fa import EMP, make_dfa, make_ndfa

STATE_POOL = ("S", "A", "B", "C", "D", "E")


def brute_force_accepts(machine, word):
    """Enumerate every computation, cutting repeats along each path."""
    finals = set(machine.finals)

    def run(state, suffix, on_path):
        if not suffix and state in finals:
            return True
        for src, read, dst in machine.rules:
            if src != state:
                continue
            if read == EMP:
                succ = (dst, suffix)
            elif suffix and read == suffix[0]:
                succ = (dst, suffix[1:])
            else:
                continue
            if succ in on_path:
                continue
            if run(succ[0], succ[1], on_path | {succ}):
                return True
        return False

    w = tuple(word)
    return run(machine.start, w, frozenset({(machine.start, w)}))


def computation_census(machine, word):
    """Every configuration reachable from (start, word), summarized.

    Returns (end_states, used_rules, stuck) where end_states holds states
    reached with nothing left to consume, used_rules the rule triples some
    computation applies, and stuck the (state, next symbol) pairs where a
    computation cannot consume the next symbol.
    """
    w = tuple(word)
    todo = [(machine.start, w)]
    seen = {(machine.start, w)}
    end_states, used_rules, stuck = set(), set(), set()
    while todo:
        state, suffix = todo.pop()
        if not suffix:
            end_states.add(state)
        consuming = False
        for src, read, dst in machine.rules:
            if src != state:
                continue
            if read == EMP:
                succ = (dst, suffix)
            elif suffix and read == suffix[0]:
                succ = (dst, suffix[1:])
                consuming = True
            else:
                continue
            used_rules.add((src, read, dst))
            if succ not in seen:
                seen.add(succ)
                todo.append(succ)
        if suffix and not consuming:
            stuck.add((state, suffix[0]))
    return end_states, used_rules, stuck


def random_ndfa(rng, max_states=6, max_rules=12):
    states = list(STATE_POOL[: rng.randint(1, max_states)])
    sigma = list("abc"[: rng.randint(1, 3)])
    labels = sigma + [EMP]
    rules = [
        (rng.choice(states), rng.choice(labels), rng.choice(states))
        for _ in range(rng.randint(0, max_rules))
    ]
    finals = [q for q in states if rng.random() < 0.4]
    return make_ndfa(states, sigma, rng.choice(states), finals, rules)


def random_word(rng, machine, max_len=6):
    return tuple(rng.choice(machine.sigma) for _ in range(rng.randint(0, max_len)))


@st.composite
def ndfas(draw, max_states=6, max_rules=12):
    states = list(STATE_POOL[: draw(st.integers(1, max_states))])
    sigma = list("abc"[: draw(st.integers(1, 3))])
    labels = sigma + [EMP]
    rules = draw(
        st.lists(
            st.tuples(st.sampled_from(states), st.sampled_from(labels), st.sampled_from(states)),
            max_size=max_rules,
        )
    )
    start = draw(st.sampled_from(states))
    finals = draw(st.lists(st.sampled_from(states), unique=True, max_size=len(states)))
    return make_ndfa(states, sigma, start, finals, rules)


@st.composite
def ndfa_with_word(draw, max_states=6, max_rules=12, max_word=6):
    machine = draw(ndfas(max_states=max_states, max_rules=max_rules))
    word = tuple(draw(st.lists(st.sampled_from(list(machine.sigma)), max_size=max_word)))
    return machine, word


@st.composite
def dfas(draw, max_states=4):
    states = list(STATE_POOL[: draw(st.integers(1, max_states))])
    sigma = list("ab"[: draw(st.integers(1, 2))])
    partial = draw(
        st.dictionaries(
            st.tuples(st.sampled_from(states), st.sampled_from(sigma)), st.sampled_from(states)
        )
    )
    rules = [(q, s, dst) for (q, s), dst in partial.items()]
    start = draw(st.sampled_from(states))
    finals = draw(st.lists(st.sampled_from(states), unique=True, max_size=len(states)))
    return make_dfa(states, sigma, start, finals, rules)


_NODE_LINE = re.compile(r'^  "([^"]+)"(?: \[(.*)\])?;$')
_EDGE_LINE = re.compile(r'^  "([^"]+)" -> "([^"]+)" \[label="([^"]*)"(, style=dashed)?\];$')


def parse_dot(text):
    """Read back our DOT output: (node -> attr text, (src, dst) -> (labels, dashed))."""
    nodes, edges = {}, {}
    for line in text.splitlines():
        match = _EDGE_LINE.match(line)
        if match:
            src, dst, label, dashed = match.groups()
            edges[src, dst] = (set(label.split(", ")), bool(dashed))
            continue
        match = _NODE_LINE.match(line)
        if match:
            nodes[match.group(1)] = match.group(2) or ""
    return nodes, edges
