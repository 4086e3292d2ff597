"""Seeded random and exhaustive instance generators.

Everything takes an explicit :class:`random.Random`, so a seed fixes the
whole stream of instances.
"""

from __future__ import annotations

import itertools
import random
from typing import Iterator, Optional, Sequence

import numpy as np

from .agap import AgapInstance, AlternatingGraph, Kind, SliceGraph
from .formula import BOT, And, Box, Formula, Impl, Or, Var
from .kripke import KripkeModel, LogicClass, reflexive_closure, transitive_closure

__all__ = [
    "random_slice_instance", "enumerate_slice_instances", "enumerate_alternating_instances",
    "random_model", "random_formula", "random_int_formula", "random_modal_formula",
    "random_ipc_instance",
]


def _slice_names(sizes: Sequence[int]) -> tuple[tuple[str, ...], ...]:
    return tuple(tuple(f"v{i}_{j}" for j in range(k)) for i, k in enumerate(sizes, 1))


def random_slice_instance(rng: random.Random, max_slices: int = 6, max_width: int = 5,
                          m: Optional[int] = None) -> AgapInstance:
    """Even ``m`` in ``[2, max_slices]``, widths uniform in ``[1, max_width]``;
    each non-final node gets 1 to 3 distinct successors in the next slice."""
    if m is None:
        m = rng.choice(range(2, max_slices + 1, 2))
    slices = _slice_names([rng.randint(1, max_width) for _ in range(m)])
    edges = set()
    for here, nxt in zip(slices, slices[1:]):
        for u in here:
            k = rng.randint(1, min(3, len(nxt)))
            edges.update((u, v) for v in rng.sample(nxt, k))
    g = SliceGraph(slices, frozenset(edges))
    return AgapInstance(g, rng.choice(slices[0]), rng.choice(slices[-1]))


def _compositions(total: int, parts: int) -> Iterator[tuple[int, ...]]:
    for cuts in itertools.combinations(range(1, total), parts - 1):
        bounds = (0,) + cuts + (total,)
        yield tuple(b - a for a, b in zip(bounds, bounds[1:]))


def _nonempty_subsets(items: Sequence[str]) -> list[tuple[str, ...]]:
    return [c for r in range(1, len(items) + 1) for c in itertools.combinations(items, r)]


def enumerate_slice_instances(max_nodes: int = 6, ms: Sequence[int] = (2, 4)) -> Iterator[AgapInstance]:
    """Every valid slice graph with at most ``max_nodes`` nodes, with every
    choice of source in ``V_1`` and target in ``V_m``."""
    for m in ms:
        for total in range(m, max_nodes + 1):
            for sizes in _compositions(total, m):
                slices = _slice_names(sizes)
                choices = [_nonempty_subsets(slices[i + 1]) for i in range(m - 1)]
                per_node = [choices[i] for i in range(m - 1) for _ in slices[i]]
                movers = [u for i in range(m - 1) for u in slices[i]]
                for pick in itertools.product(*per_node):
                    edges = frozenset((u, v) for u, outs in zip(movers, pick) for v in outs)
                    g = SliceGraph(slices, edges)
                    for s in slices[0]:
                        for t in slices[-1]:
                            yield AgapInstance(g, s, t)


def enumerate_alternating_instances(max_nodes: int = 4) -> Iterator[AgapInstance]:
    """Every bipartite alternating graph on ``1 .. max_nodes`` nodes with every ``(x, y)``."""
    for n in range(1, max_nodes + 1):
        nodes = tuple(f"n{i}" for i in range(n))
        for kinds in itertools.product((Kind.EXISTS, Kind.FORALL), repeat=n):
            kmap = dict(zip(nodes, kinds))
            possible = [(u, v) for u in nodes for v in nodes if kmap[u] is not kmap[v]]
            for mask in range(1 << len(possible)):
                edges = frozenset(e for b, e in enumerate(possible) if mask >> b & 1)
                g = AlternatingGraph(nodes, kmap, edges)
                for x in nodes:
                    for y in nodes:
                        yield AgapInstance(g, x, y)


# ---------------------------------------------------------------- models

def random_model(rng: random.Random, logic: LogicClass, n_states: int,
                 variables: Sequence[str] = ("p", "q"), density: float = 0.35) -> KripkeModel:
    """A random model admissible for ``logic``.

    A random DAG is transitively closed; reflexive classes close it
    reflexively, irreflexive ones leave it, and BPL/K4/K loop a random subset
    of states.  Directed classes get a common top.  Intuitionistic classes
    get valuations that are upward closures of random seed sets.
    """
    n = n_states
    rel = np.zeros((n, n), dtype=bool)
    for i in range(n):
        for j in range(i + 1, n):
            rel[i, j] = rng.random() < density
    req = logic.requirements
    if "directed" in req:
        rel[:, n - 1] = True
        rel[n - 1, n - 1] = False
    rel = transitive_closure(rel)
    if "reflexive" in req:
        rel = reflexive_closure(rel)
    elif "irreflexive" not in req:
        for i in range(n):
            rel[i, i] = rng.random() < 0.3
    states = tuple(f"w{i}" for i in range(n))
    val = {}
    for v in variables:
        seed = np.array([rng.random() < 0.3 for _ in range(n)], dtype=bool)
        if logic.intuitionistic:
            seed = seed | (seed.astype(np.int64) @ rel.astype(np.int64) > 0)
        val[v] = frozenset(int(i) for i in np.flatnonzero(seed))
    return KripkeModel(states, rel, val)


# ---------------------------------------------------------------- formulas

def random_formula(rng: random.Random, size: int, leaves: Sequence[Formula],
                   binary: Sequence[type], unary: Sequence[type] = ()) -> Formula:
    """A formula with ``size`` tree nodes, or a leaf when ``size`` is 2 and there
    are no unary operators."""
    if size < 1:
        raise ValueError("size must be positive")
    if size == 1:
        return rng.choice(list(leaves))
    if unary and (size == 2 or not binary or rng.random() < 0.3):
        return rng.choice(list(unary))(random_formula(rng, size - 1, leaves, binary, unary))
    if size == 2:
        return random_formula(rng, 1, leaves, binary, unary)
    left = rng.randint(1, size - 2)
    op = rng.choice(list(binary))
    return op(random_formula(rng, left, leaves, binary, unary),
              random_formula(rng, size - 1 - left, leaves, binary, unary))


def random_int_formula(rng: random.Random, size: int, variables: Sequence[str] = ("p", "q"),
                       implicational: bool = False) -> Formula:
    leaves = [BOT] + [Var(v) for v in variables]
    ops = [Impl] if implicational else [And, Or, Impl]
    return random_formula(rng, size, leaves, ops)


def random_modal_formula(rng: random.Random, size: int, variables: Sequence[str] = ()) -> Formula:
    leaves = [BOT] + [Var(v) for v in variables]
    return random_formula(rng, size, leaves, [Impl], [Box])


def random_ipc_instance(rng: random.Random, max_vars: int = 4, max_states: int = 6,
                        max_size: int = 12):
    """An implicational IPC instance."""
    from .reductions import McInstance

    names = [f"v{i}" for i in range(1, rng.randint(1, max_vars) + 1)]
    model = random_model(rng, LogicClass.IPC, rng.randint(1, max_states), names)
    phi = random_int_formula(rng, rng.randint(1, max_size), names, implicational=True)
    return McInstance(phi, model, rng.choice(model.states), LogicClass.IPC)
