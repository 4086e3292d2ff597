"""Checking variable-free formulas on irreflexive transitive frames.

Over FPL frames a variable-free intuitionistic formula is equivalent to one
of ``alpha_0 = false``, ``alpha_{i+1} = true -> alpha_i`` or
``alpha_omega = true``, and ``alpha_i`` holds at ``w`` exactly when the
longest path from ``w`` is shorter than ``i``.  Checking therefore needs
only the formula's index and one longest-path length.  For PrL the model
collapses to the linear frame ``L_n`` with ``n`` the longest-path length.
"""

from __future__ import annotations

import functools
from dataclasses import dataclass
from typing import Hashable, Iterable, Mapping, Optional, Union

import numpy as np

from .formula import BOT, TOP, And, Bot, Box, Formula, Impl, Or, Var, subformulas
from .kripke import KripkeModel, LogicClass, validate
from .semantics import AdmissibilityError, eval_modal

__all__ = [
    "FormulaIndex", "OMEGA", "formula_index", "visser_alpha", "lp", "lp_all",
    "linear_model", "check_fpl0", "check_prl0", "longest_path_instance", "dag_model",
]


@functools.total_ordering
@dataclass(frozen=True)
class FormulaIndex:
    """A natural number, or omega when ``value`` is None."""

    value: Optional[int]

    def __post_init__(self):
        if self.value is not None and self.value < 0:
            raise ValueError("formula index must be non-negative")

    @property
    def is_omega(self) -> bool:
        return self.value is None

    def __lt__(self, other):
        if isinstance(other, int):
            other = FormulaIndex(other)
        if not isinstance(other, FormulaIndex):
            return NotImplemented
        if self.is_omega:
            return False
        return other.is_omega or self.value < other.value

    def __eq__(self, other):
        if isinstance(other, int):
            return self.value == other
        if not isinstance(other, FormulaIndex):
            return NotImplemented
        return self.value == other.value

    def __hash__(self):
        return hash(self.value)

    def exceeds(self, n: int) -> bool:
        """``n < self`` with omega above every natural."""
        return self.is_omega or n < self.value

    def __str__(self):
        return "omega" if self.is_omega else str(self.value)


OMEGA = FormulaIndex(None)


def formula_index(phi: Formula) -> FormulaIndex:
    """The ``i`` with ``phi`` equivalent over FPL frames to ``alpha_i``."""
    memo: dict[Formula, FormulaIndex] = {}
    for node in subformulas(phi):
        if isinstance(node, Bot):
            idx = FormulaIndex(0)
        elif isinstance(node, And):
            idx = min(memo[node.left], memo[node.right])
        elif isinstance(node, Or):
            idx = max(memo[node.left], memo[node.right])
        elif isinstance(node, Impl):
            a, b = memo[node.left], memo[node.right]
            idx = OMEGA if a <= b else FormulaIndex(b.value + 1)
        elif isinstance(node, Var):
            raise ValueError(f"formula contains variable {node.name!r}")
        else:
            raise TypeError("formula_index takes intuitionistic formulas")
        memo[node] = idx
    return memo[phi]


def visser_alpha(i: Union[int, FormulaIndex]) -> Formula:
    if isinstance(i, FormulaIndex):
        if i.is_omega:
            return TOP
        i = i.value
    phi: Formula = BOT
    for _ in range(i):
        phi = Impl(TOP, phi)
    return phi


# ---------------------------------------------------------------- longest paths

def lp_all(model: KripkeModel) -> dict[str, int]:
    """Longest outgoing path length of every state.

    Iterative depth-first search with colouring; raises ValueError when a
    cycle (including a self-loop) is found.
    """
    R = model.rel
    n = len(model)
    succ = [np.flatnonzero(R[i]) for i in range(n)]
    depth = [-1] * n
    state = [0] * n  # 0 new, 1 on stack, 2 done
    for root in range(n):
        if state[root]:
            continue
        stack = [(root, 0)]
        state[root] = 1
        while stack:
            v, k = stack[-1]
            if k < len(succ[v]):
                stack[-1] = (v, k + 1)
                w = int(succ[v][k])
                if state[w] == 1:
                    raise ValueError(f"cycle through state {model.states[w]!r}")
                if state[w] == 0:
                    state[w] = 1
                    stack.append((w, 0))
            else:
                stack.pop()
                state[v] = 2
                depth[v] = 1 + max((depth[int(w)] for w in succ[v]), default=-1)
    return {model.states[i]: depth[i] for i in range(n)}


def lp(model: KripkeModel, w: str) -> int:
    model.index(w)
    return lp_all(model)[w]


def linear_model(n: int) -> KripkeModel:
    """``L_n``: states ``0 .. n`` with ``i`` seeing every ``j < i``."""
    idx = np.arange(n + 1)
    return KripkeModel(tuple(str(i) for i in range(n + 1)), idx[:, None] > idx[None, :])


def _require(model: KripkeModel, logic: LogicClass) -> None:
    report = validate(model, logic)
    if not report.admissible:
        raise AdmissibilityError(
            f"model is not admissible for {logic.value}: fails {', '.join(report.failures)}",
            report)


def check_fpl0(phi: Formula, model: KripkeModel, w: str) -> bool:
    """Deterministic form of the index-and-longest-path FPL_0 algorithm."""
    _require(model, LogicClass.FPL)
    return formula_index(phi).exceeds(lp(model, w))


def check_prl0(phi: Formula, model: KripkeModel, w: str) -> bool:
    _require(model, LogicClass.PrL)
    if any(isinstance(node, Var) for node in subformulas(phi)):
        raise ValueError("check_prl0 takes variable-free formulas")
    n = lp(model, w)
    return eval_modal(linear_model(n), phi).holds(phi, str(n))


# ---------------------------------------------------------------- NL-hardness

def dag_model(graph: Mapping[Hashable, Iterable[Hashable]]) -> KripkeModel:
    """Transitive closure of an acyclic digraph as a variable-free FPL model."""
    from .kripke import transitive_closure

    nodes = list(graph)
    for targets in graph.values():
        for v in targets:
            if v not in graph:
                nodes.append(v)
    nodes = list(dict.fromkeys(nodes))
    names = tuple(str(v) for v in nodes)
    index = {v: i for i, v in enumerate(nodes)}
    rel = np.zeros((len(nodes), len(nodes)), dtype=bool)
    for u, targets in graph.items():
        for v in targets:
            rel[index[u], index[v]] = True
    closed = transitive_closure(rel)
    if np.diag(closed).any():
        raise ValueError("graph has a cycle")
    return KripkeModel(names, closed)


def longest_path_instance(graph: Mapping[Hashable, Iterable[Hashable]], v: Hashable,
                          n: int) -> tuple[Formula, Formula]:
    """Formulas ``(alpha_{n+1}, alpha_n)``: the longest path from ``v`` has
    length ``n`` iff ``v`` satisfies the first and refutes the second in
    :func:`dag_model` of ``graph``."""
    model = dag_model(graph)
    model.index(str(v))
    return visser_alpha(n + 1), visser_alpha(n)
