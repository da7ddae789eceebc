"""Computation graphs: state-level summaries of every possible run on a word.

Unlike a computation tree, whose nodes are configurations, a computation
graph reuses the machine's own states as nodes and keeps only the
transitions some run could take. States where a run ends with the whole
word consumed are the graph's highlighted set; where a run gets stuck
mid-word, a dashed edge to a fresh dead state consumes the next symbol, so
nominally every run consumes its entire input. If the word is accepted the
graph is pruned down to a single accepting run.
"""

from __future__ import annotations

from collections.abc import Iterable, Sequence
from dataclasses import dataclass

from .execution import ACCEPT, REJECT, Config, apply, check_word, show_transitions, step
from .machines import EMP, Machine, Word, fresh_dead_state


@dataclass(frozen=True)
class CGEdge:
    """One computation-graph edge.

    ``special`` marks an edge whose application leaves the unconsumed input
    empty (its destination gets highlighted); ``to_dead`` marks the dashed
    edge into the fresh dead state, taken when a run cannot consume the
    next symbol. Every non-dead edge is one of the machine's own rules.
    """

    src: str
    read: str
    dst: str
    special: bool
    to_dead: bool = False

    @property
    def triple(self) -> tuple[str, str, str]:
        return (self.src, self.read, self.dst)


@dataclass(frozen=True)
class ComputationGraph:
    machine: Machine
    word: Word
    edges: tuple[CGEdge, ...]
    highlighted: frozenset[str]
    dead: str | None
    verdict: str


def edges_for_configuration(machine: Machine, config: Config, dead: str) -> list[CGEdge]:
    """Edges contributed by one configuration.

    With an empty suffix only EMP rules apply and every resulting edge is
    special. With one symbol left, consuming rules give special edges and
    EMP rules regular ones. With more than one symbol left every applicable
    rule gives a regular edge. Then, on a nonempty suffix: no applicable
    rule at all yields just the dead edge, and only-EMP rules get the dead
    edge prepended, since such runs never consume the next symbol here.
    """
    u = config.unconsumed
    applicable = [r for r, _ in step(machine, config)]
    if not u:
        return [CGEdge(r.src, r.read, r.dst, special=True) for r in applicable]
    if len(u) == 1:
        edges = [CGEdge(r.src, r.read, r.dst, special=True) for r in applicable if r.read != EMP]
        edges += [CGEdge(r.src, r.read, r.dst, special=False) for r in applicable if r.read == EMP]
    else:
        edges = [CGEdge(r.src, r.read, r.dst, special=False) for r in applicable]
    if not edges:
        return [CGEdge(config.state, u[0], dead, special=True, to_dead=True)]
    if all(e.read == EMP for e in edges):
        return [CGEdge(config.state, u[0], dead, special=True, to_dead=True)] + edges
    return edges


def next_configurations(
    edges: Sequence[CGEdge], frontier: Sequence[Config], visited: Iterable[Config]
) -> list[Config]:
    """Configurations to explore next, given one level's edges and frontier.

    Successors are read off the edges (dead edges excluded: the dead state
    consumes the rest of the input by construction and needs no visit). A
    frontier configuration contributes nothing when every successor has
    been seen already; contributed successors count as seen for the rest of
    the same call.
    """
    seen = set(visited)
    out = []
    for config in frontier:
        u = config.unconsumed
        succs = []
        for e in edges:
            if e.to_dead or e.src != config.state:
                continue
            if e.read == EMP:
                succs.append(Config(e.dst, u))
            elif u and e.read == u[0]:
                succs.append(Config(e.dst, u[1:]))
        if succs and not all(s in seen for s in succs):
            out.extend(succs)
            seen.update(succs)
    return out


def computation_tree_to_cg_edges(
    machine: Machine, frontier: Sequence[Config], visited: Sequence[Config]
) -> list[CGEdge]:
    """Collect edges by breadth-first traversal of the computation tree.

    Level by level: every frontier configuration contributes its edges
    (deduplicated within the level), the next frontier is derived from
    those edges, and the old frontier joins the visited accumulator. Stops
    when no new configurations remain. The result may still contain
    cross-level duplicates and regular/special twins; make_cg_edges cleans
    those up.
    """
    dead = fresh_dead_state(machine)
    frontier = list(frontier)
    visited = list(visited)
    collected: list[CGEdge] = []
    while frontier:
        level = _dedup(
            edge for config in frontier for edge in edges_for_configuration(machine, config, dead)
        )
        collected.extend(level)
        nxt = next_configurations(level, frontier, visited)
        if not nxt:
            break
        visited = frontier + visited
        frontier = nxt
    return collected


def make_cg_edges(machine: Machine, word: Sequence[str]) -> list[CGEdge]:
    """Final edge set of the computation graph for ``machine`` on ``word``.

    Traverses the computation tree, removes duplicates, drops any regular
    edge whose triple also occurs as a special edge (the special one is
    needed for highlighting), and prunes to a single accepting run when the
    word is accepted.
    """
    w = check_word(machine, word)
    raw = computation_tree_to_cg_edges(machine, [Config(machine.start, w)], [])
    edges = _dedup(raw)
    special_triples = {e.triple for e in edges if e.special}
    edges = [e for e in edges if e.special or e.triple not in special_triples]
    return prune_on_accept(machine, w, edges)


def prune_on_accept(machine: Machine, word: Sequence[str], edges: Sequence[CGEdge]) -> list[CGEdge]:
    """On acceptance, keep only the edges of one accepting run.

    The run is the trace show_transitions returns; only its last step stays
    special, so exactly the state where it ends is highlighted. Dead edges
    never survive (an accepting run consumes everything). On rejection the
    edges pass through unchanged.
    """
    if apply(machine, word) == REJECT:
        return list(edges)
    trace = show_transitions(machine, word)
    used = []
    for a, b in zip(trace.steps, trace.steps[1:]):
        read = EMP if len(a.unconsumed) == len(b.unconsumed) else a.unconsumed[0]
        used.append((a.state, read, b.state))
    if not used:
        return []
    last = used[-1]
    kept = set(used)
    return [
        CGEdge(e.src, e.read, e.dst, special=(e.triple == last))
        for e in edges
        if not e.to_dead and e.triple in kept
    ]


def build_computation_graph(machine: Machine, word: Sequence[str]) -> ComputationGraph:
    """Computation graph of ``machine`` on ``word``.

    Highlights every special-edge destination; on the empty word the start
    state is highlighted too, since that is where the empty run ends. The
    verdict always agrees with apply: accepted iff a highlighted state is
    final.
    """
    w = check_word(machine, word)
    edges = make_cg_edges(machine, w)
    highlighted = {e.dst for e in edges if e.special}
    if not w:
        highlighted.add(machine.start)
    dead = fresh_dead_state(machine) if any(e.to_dead for e in edges) else None
    return ComputationGraph(machine, w, tuple(edges), frozenset(highlighted), dead, apply(machine, w))


def _dedup(items: Iterable[CGEdge]) -> list[CGEdge]:
    seen = set()
    out = []
    for item in items:
        if item not in seen:
            seen.add(item)
            out.append(item)
    return out
