"""Alternating graphs, alternating reachability, and sliced instances.

Sink convention: a node without successors reaches ``y`` only if it *is*
``y``, whatever its kind.  ``apath(..., literal_sinks=True)`` gives the
other reading, where a universal sink reaches everything vacuously; it
exists only so diagnostics can flag instances on which the two differ.
"""

from __future__ import annotations

import enum
import itertools
from dataclasses import dataclass, field
from functools import cached_property
from typing import Iterable, Optional, Union

__all__ = [
    "Kind", "AlternatingGraph", "SliceGraph", "AgapInstance", "GraphFormatError",
    "apath", "apath_fixpoint", "validate_slice_graph", "agap_to_asagap",
    "parse_graph", "dump_graph", "RESERVED_CHARS",
]

# characters used in synthesised state names; rejected in user node names
RESERVED_CHARS = "@^"


class Kind(enum.Enum):
    EXISTS = "exists"
    FORALL = "forall"


@dataclass(frozen=True)
class AlternatingGraph:
    nodes: tuple[str, ...]
    kinds: dict[str, Kind]
    edges: frozenset[tuple[str, str]]

    def __post_init__(self):
        object.__setattr__(self, "nodes", tuple(self.nodes))
        object.__setattr__(self, "edges", frozenset(self.edges))
        if len(set(self.nodes)) != len(self.nodes):
            raise ValueError("duplicate node names")
        if set(self.kinds) != set(self.nodes):
            raise ValueError("every node needs exactly one kind")
        for u, v in self.edges:
            if u not in self.kinds or v not in self.kinds:
                raise ValueError(f"edge ({u},{v}) mentions an unknown node")
            if self.kinds[u] is self.kinds[v]:
                raise ValueError(f"edge ({u},{v}) joins two nodes of the same kind")

    def kind(self, v: str) -> Kind:
        return self.kinds[v]

    @cached_property
    def succ(self) -> dict[str, tuple[str, ...]]:
        out: dict[str, list[str]] = {v: [] for v in self.nodes}
        for u, v in sorted(self.edges):
            out[u].append(v)
        return {v: tuple(s) for v, s in out.items()}


@dataclass(frozen=True)
class SliceGraph:
    """Slices ``V_1 .. V_m``; odd slices existential, even slices universal."""

    slices: tuple[tuple[str, ...], ...]
    edges: frozenset[tuple[str, str]]

    def __post_init__(self):
        object.__setattr__(self, "slices", tuple(tuple(s) for s in self.slices))
        object.__setattr__(self, "edges", frozenset(self.edges))

    @property
    def m(self) -> int:
        return len(self.slices)

    @cached_property
    def nodes(self) -> tuple[str, ...]:
        return tuple(v for s in self.slices for v in s)

    @cached_property
    def index(self) -> dict[str, int]:
        return {v: i for i, v in enumerate(self.nodes)}

    @cached_property
    def slice_of(self) -> dict[str, int]:
        """1-based slice number of each node."""
        return {v: i for i, s in enumerate(self.slices, 1) for v in s}

    @cached_property
    def succ(self) -> dict[str, tuple[str, ...]]:
        out: dict[str, list[str]] = {v: [] for v in self.nodes}
        for u, v in sorted(self.edges):
            if u in out:
                out[u].append(v)
        return {v: tuple(s) for v, s in out.items()}

    def kind(self, v: str) -> Kind:
        return Kind.EXISTS if self.slice_of[v] % 2 == 1 else Kind.FORALL

    def upto(self, i: int) -> list[str]:
        """Nodes of ``V_1 .. V_i``."""
        return [v for s in self.slices[:max(i, 0)] for v in s]

    def from_slice(self, i: int) -> list[str]:
        """Nodes of ``V_i .. V_m``."""
        return [v for s in self.slices[max(i, 1) - 1:] for v in s]


Graph = Union[AlternatingGraph, SliceGraph]


@dataclass(frozen=True)
class AgapInstance:
    graph: Graph
    source: str
    target: str

    @property
    def sliced(self) -> bool:
        return isinstance(self.graph, SliceGraph)

    def check(self) -> Optional[str]:
        """First violated instance invariant, or None."""
        g = self.graph
        for v in (self.source, self.target):
            if v not in g.succ:
                return f"unknown node {v!r}"
        if isinstance(g, SliceGraph):
            problem = validate_slice_graph(g)
            if problem:
                return problem
            if g.slice_of[self.source] != 1:
                return "source must lie in the first slice"
            if g.slice_of[self.target] != g.m:
                return "target must lie in the last slice"
        return None

    def answer(self) -> bool:
        return apath(self.graph, self.source, self.target)


# ---------------------------------------------------------------- apath

def apath_fixpoint(g: Graph, y: str, literal_sinks: bool = False) -> frozenset[str]:
    """All ``x`` with ``apath(x, y)``, by Kleene iteration from ``{y}``."""
    succ = g.succ
    if y not in succ:
        raise KeyError(f"unknown node {y!r}")
    won = {y}
    changed = True
    while changed:
        changed = False
        for x in g.nodes:
            if x in won:
                continue
            out = succ[x]
            if g.kind(x) is Kind.EXISTS:
                ok = any(z in won for z in out)
            else:
                ok = (bool(out) or literal_sinks) and all(z in won for z in out)
            if ok:
                won.add(x)
                changed = True
    return frozenset(won)


def _apath_sliced(g: SliceGraph, y: str, literal_sinks: bool) -> set[str]:
    # edges only go forward one slice, so one backward sweep suffices
    succ = g.succ
    won: set[str] = set()
    for layer in reversed(g.slices):
        for x in layer:
            out = succ[x]
            if x == y:
                ok = True
            elif g.kind(x) is Kind.EXISTS:
                ok = any(z in won for z in out)
            else:
                ok = (bool(out) or literal_sinks) and all(z in won for z in out)
            if ok:
                won.add(x)
    return won


def apath(g: Graph, x: str, y: str, literal_sinks: bool = False) -> bool:
    """Alternating reachability of ``y`` from ``x``."""
    if x not in g.succ:
        raise KeyError(f"unknown node {x!r}")
    if y not in g.succ:
        raise KeyError(f"unknown node {y!r}")
    if isinstance(g, SliceGraph) and validate_slice_graph(g) is None:
        return x in _apath_sliced(g, y, literal_sinks)
    return x in apath_fixpoint(g, y, literal_sinks)


# ---------------------------------------------------------------- slices

def validate_slice_graph(g: SliceGraph) -> Optional[str]:
    """Return a description of the first violated slice-graph invariant, or None."""
    if g.m < 2:
        return "a slice graph needs at least two slices"
    if g.m % 2:
        return f"the number of slices must be even, got {g.m}"
    seen: set[str] = set()
    for i, layer in enumerate(g.slices, 1):
        if not layer:
            return f"slice {i} is empty"
        for v in layer:
            if v in seen:
                return f"node {v!r} occurs in more than one slice"
            seen.add(v)
    where = g.slice_of
    for u, v in sorted(g.edges):
        if u not in where or v not in where:
            return f"edge ({u},{v}) mentions an unknown node"
        if where[v] != where[u] + 1:
            return f"edge ({u},{v}) does not go from slice {where[u]} to slice {where[u] + 1}"
    for v in g.upto(g.m - 1):
        if not g.succ[v]:
            return f"node {v!r} in slice {where[v]} has outdegree 0"
    return None


def agap_to_asagap(inst: AgapInstance) -> AgapInstance:
    """Unroll a general alternating graph with ``n`` nodes into ``2n`` slices.

    Node ``<v,i>`` is named ``v@i``.  In an existential slice, existential
    nodes other than the target follow their edges and all other nodes copy
    themselves to the next slice; universal slices are dual.  Nodes without
    any successor also copy themselves, so every non-final node keeps an
    outgoing edge; such a copy can only end in ``<v,m> != <t,m>``, which
    matches the sink convention.
    """
    g = inst.graph
    if not isinstance(g, AlternatingGraph):
        raise TypeError("agap_to_asagap expects an AlternatingGraph instance")
    problem = inst.check()
    if problem:
        raise ValueError(problem)
    for v in g.nodes:
        if any(c in v for c in RESERVED_CHARS):
            raise ValueError(f"node name {v!r} contains a reserved character")
    n = len(g.nodes)
    m = 2 * n
    t = inst.target

    def name(v: str, i: int) -> str:
        return f"{v}@{i}"

    slices = [tuple(name(v, i) for v in g.nodes) for i in range(1, m + 1)]
    edges = set()
    for i in range(1, m):
        mover = Kind.EXISTS if i % 2 == 1 else Kind.FORALL
        for u in g.nodes:
            out = g.succ[u]
            if g.kinds[u] is mover and u != t and out:
                edges.update((name(u, i), name(v, i + 1)) for v in out)
            else:
                edges.add((name(u, i), name(u, i + 1)))
    sg = SliceGraph(tuple(slices), frozenset(edges))
    return AgapInstance(sg, name(inst.source, 1), name(t, m))


# ---------------------------------------------------------------- text format

class GraphFormatError(ValueError):
    pass


def _check_name(v: str, lineno: int) -> str:
    if any(c in v for c in RESERVED_CHARS):
        raise GraphFormatError(f"line {lineno}: node name {v!r} contains a reserved character")
    return v


def parse_graph(text: str) -> AgapInstance:
    """Read a slice graph (``slice i:`` lines) or a general alternating graph
    (``exists:`` / ``forall:`` lines), plus ``edge:``, ``source:``, ``target:``."""
    slices: dict[int, list[str]] = {}
    kinds: dict[str, Kind] = {}
    order: list[str] = []
    edges: list[tuple[str, str]] = []
    source = target = None
    for lineno, raw in enumerate(text.splitlines(), 1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        head, sep, rest = line.partition(":")
        if not sep:
            raise GraphFormatError(f"line {lineno}: missing ':'")
        head, items = head.strip(), rest.split()
        if head.startswith("slice"):
            try:
                i = int(head[5:])
            except ValueError:
                raise GraphFormatError(f"line {lineno}: bad slice number in {head!r}") from None
            slices.setdefault(i, []).extend(_check_name(v, lineno) for v in items)
        elif head in ("exists", "forall"):
            for v in items:
                kinds[_check_name(v, lineno)] = Kind(head)
                order.append(v)
        elif head == "edge":
            if len(items) != 2:
                raise GraphFormatError(f"line {lineno}: an edge line needs exactly two nodes")
            edges.append((items[0], items[1]))
        elif head in ("source", "target"):
            if len(items) != 1:
                raise GraphFormatError(f"line {lineno}: {head} takes exactly one node")
            if head == "source":
                source = items[0]
            else:
                target = items[0]
        else:
            raise GraphFormatError(f"line {lineno}: unknown directive {head!r}")
    if source is None or target is None:
        raise GraphFormatError("source and target are required")
    if slices and kinds:
        raise GraphFormatError("mixing slice lines with exists/forall lines")
    if slices:
        if sorted(slices) != list(range(1, len(slices) + 1)):
            raise GraphFormatError("slices must be numbered 1..m without gaps")
        g: Graph = SliceGraph(tuple(tuple(slices[i]) for i in sorted(slices)), frozenset(edges))
    elif kinds:
        try:
            g = AlternatingGraph(tuple(order), kinds, frozenset(edges))
        except ValueError as exc:
            raise GraphFormatError(str(exc)) from None
    else:
        raise GraphFormatError("no nodes declared")
    inst = AgapInstance(g, source, target)
    problem = inst.check()
    if problem:
        raise GraphFormatError(problem)
    return inst


def dump_graph(inst: AgapInstance) -> str:
    g = inst.graph
    lines = []
    if isinstance(g, SliceGraph):
        lines += [f"slice {i}: " + " ".join(layer) for i, layer in enumerate(g.slices, 1)]
        order = g.nodes
    else:
        # runs of equal kind, so node order survives a round trip
        for kind, run in itertools.groupby(g.nodes, key=g.kind):
            lines.append(f"{kind.value}: " + " ".join(run))
        order = g.nodes
    pos = {v: i for i, v in enumerate(order)}
    lines += [f"edge: {u} {v}" for u, v in sorted(g.edges, key=lambda e: (pos[e[0]], pos[e[1]]))]
    lines += [f"source: {inst.source}", f"target: {inst.target}"]
    return "\n".join(lines) + "\n"
